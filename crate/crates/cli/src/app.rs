use crate::problem::{ParseError, ProblemFile};
use crate::report::Report;
use clap::{Parser, Subcommand, ValueEnum};
use noether::field::{Rational, Rationals};
use noether::groebner::{saturate, Ideal};
use noether::join::{join, symbolic_power};
use noether::poly::{parse_polynomial, MonomialOrder, PolyRing};
use noether::primary::{
    noetherian_operators, reconstruct, verify_noetherian, Scene, SolutionFamily, DEFAULT_MAX_DEGREE,
};
use noether::weyl::DiffOp;
use std::path::PathBuf;
use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_STABILIZATION: i32 = 3;
pub const EXIT_BIMODULE: i32 = 4;
pub const EXIT_POST_VERIFICATION: i32 = 5;
pub const EXIT_POINT: i32 = 6;
pub const EXIT_TIMEOUT: i32 = 7;

#[derive(Parser, Debug)]
#[command(name = "noether", version, about = "Primary ideals, Noetherian operators and PDE solutions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Term order for printed ideals.
    #[arg(long, global = true, value_enum, default_value_t = OrderArg::Grevlex)]
    pub order: OrderArg,

    /// Largest truncation degree tried while computing multiplicities.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_DEGREE)]
    pub max_degree: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Lex,
    Grevlex,
}

impl OrderArg {
    fn order(self) -> MonomialOrder {
        match self {
            OrderArg::Lex => MonomialOrder::Lex,
            OrderArg::Grevlex => MonomialOrder::GrevLex,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Noetherian operators of the P-primary component of an ideal.
    NoethOps {
        file: PathBuf,
        #[arg(long, default_value = "Q")]
        ideal: String,
        #[arg(long, default_value = "P")]
        prime: String,
        /// Saturate the ideal by this polynomial first.
        #[arg(long)]
        saturate: Option<String>,
    },
    /// The P-primary ideal described by a list of operators.
    IdealFromOps {
        file: PathBuf,
        #[arg(long, default_value = "L")]
        ops: String,
        #[arg(long, default_value = "P")]
        prime: String,
    },
    /// Noetherian multipliers and the integral form of all solutions.
    Solve {
        file: PathBuf,
        #[arg(long, default_value = "Q")]
        ideal: String,
        #[arg(long, default_value = "P")]
        prime: String,
        #[arg(long)]
        saturate: Option<String>,
        /// A rational point of V(P), comma separated.
        #[arg(long, requires = "index")]
        point: Option<String>,
        /// Which multiplier to sample, counting from 1.
        #[arg(long, requires = "point")]
        index: Option<usize>,
    },
    /// Operator counts for the k-th powers of the twisted cubic equations.
    BenchTable1 {
        #[arg(long, default_value_t = 4)]
        kmax: u32,
    },
    /// The join of two ideals.
    Join {
        file: PathBuf,
        #[arg(long, default_value = "J")]
        left: String,
        #[arg(long, default_value = "K")]
        right: String,
    },
    /// The symbolic power P^(r), computed as the join with the r-th power of the maximal ideal.
    SymbolicPower {
        file: PathBuf,
        #[arg(long, default_value = "P")]
        ideal: String,
        #[arg(long)]
        power: u32,
    },
    /// Checks whether operators describe a P-primary ideal.
    VerifyOps {
        file: PathBuf,
        #[arg(long, default_value = "L")]
        ops: String,
        #[arg(long, default_value = "P")]
        prime: String,
    },
}

#[derive(Debug)]
pub enum CliError {
    Io(String),
    Usage(String),
    Parse { file: String, error: ParseError },
    Algebra(noether::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use noether::Error as E;
        match self {
            CliError::Io(_) | CliError::Usage(_) => EXIT_FAILURE,
            CliError::Parse { .. } => EXIT_PARSE,
            CliError::Algebra(e) => match e {
                E::Parse { .. } => EXIT_PARSE,
                E::StabilizationFailed { .. } => EXIT_STABILIZATION,
                E::BimoduleCheckFailed | E::IndependentDerivative(_) | E::NotClosedUnderDifferentiation => {
                    EXIT_BIMODULE
                }
                E::PostVerificationFailed(_) => EXIT_POST_VERIFICATION,
                E::PointNotOnVariety => EXIT_POINT,
                _ => EXIT_FAILURE,
            },
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Io(m) | CliError::Usage(m) => f.write_str(m),
            CliError::Parse { file, error } => write!(f, "{file}:{error}"),
            CliError::Algebra(e) => write!(f, "{e}"),
        }
    }
}

impl From<noether::Error> for CliError {
    fn from(e: noether::Error) -> Self {
        CliError::Algebra(e)
    }
}

fn load(path: &PathBuf) -> Result<ProblemFile, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    ProblemFile::parse(&text).map_err(|error| CliError::Parse {
        file: path.display().to_string(),
        error,
    })
}

fn ideal<'a>(p: &'a ProblemFile, name: &str) -> Result<&'a Ideal<Rationals>, CliError> {
    p.ideal(name).ok_or_else(|| CliError::Usage(format!("no ideal named `{name}` in the file")))
}

fn ops<'a>(p: &'a ProblemFile, name: &str) -> Result<&'a [DiffOp], CliError> {
    p.ops(name).ok_or_else(|| CliError::Usage(format!("no operator list named `{name}` in the file")))
}

fn maybe_saturate(
    p: &ProblemFile,
    q: &Ideal<Rationals>,
    by: Option<&str>,
    report: &mut Report,
) -> Result<Ideal<Rationals>, CliError> {
    let Some(text) = by else {
        return Ok(q.clone());
    };
    let g = parse_polynomial(text, p.ring())?;
    report.field("saturated_by", &g);
    Ok(saturate(q, &g)?)
}

fn ideal_lines(report: &mut Report, ideal: &Ideal<Rationals>, order: MonomialOrder) -> usize {
    let gb = ideal.groebner_in(order);
    for g in gb.elems() {
        report.line(g.to_string());
    }
    gb.elems().len()
}

fn seconds(start: Instant) -> String {
    format!("{:.3}", start.elapsed().as_secs_f64())
}

fn parse_point(text: &str) -> Result<Vec<Rational>, CliError> {
    text.split(',')
        .map(|s| {
            Rational::from_str(s.trim()).map_err(|_| CliError::Usage(format!("`{}` is not a rational number", s.trim())))
        })
        .collect()
}

fn scene_report(report: &mut Report, scene: &Scene) {
    let names = scene.x_ring().names();
    let indep: Vec<&str> = scene.independent().iter().map(|&i| names[i].as_str()).collect();
    report.field("codimension", scene.codim());
    report.field("independent", indep.join(" "));
}

/// The twisted cubic equations raised to the k-th power, saturated by the
/// product of the variables.
pub fn power_ideal(k: u32) -> Result<(Ideal<Rationals>, Ideal<Rationals>), CliError> {
    let r = PolyRing::with_prefix(Rationals, "x", 4, MonomialOrder::GrevLex);
    let p = Ideal::new(&r, noether::poly::parse_polynomial_list("x1^2-x2*x3, x1*x2-x3*x4, x2^2-x1*x4", &r)?)?;
    let j = Ideal::new(&r, p.gens().iter().map(|g| g.pow(k)))?;
    let q = saturate(&j, &parse_polynomial("x1*x2*x3*x4", &r)?)?;
    Ok((q, p))
}

/// Runs one command. Returns the report and the exit code it should end with.
pub fn run(cli: &Cli) -> Result<(Report, i32), CliError> {
    let start = Instant::now();
    let order = cli.order.order();
    let cap = cli.max_degree;
    match &cli.command {
        Command::NoethOps {
            file,
            ideal: qn,
            prime: pn,
            saturate: sat,
        } => {
            let p = load(file)?;
            let mut report = Report::new("noeth-ops");
            report.field("file", file.display());
            report.field("ideal", qn);
            report.field("prime", pn);
            let q = maybe_saturate(&p, ideal(&p, qn)?, sat.as_deref(), &mut report)?;
            let scene = Arc::new(Scene::new(ideal(&p, pn)?)?);
            scene_report(&mut report, &scene);
            let rep = noetherian_operators(&q, scene, cap)?;
            for a in &rep.operators {
                report.line(a.to_string());
            }
            report.field("multiplicity", rep.multiplicity);
            report.field("operators", rep.operators.len());
            report.field("seconds", seconds(start));
            Ok((report, EXIT_OK))
        }
        Command::IdealFromOps {
            file,
            ops: on,
            prime: pn,
        } => {
            let p = load(file)?;
            let mut report = Report::new("ideal-from-ops");
            report.field("file", file.display());
            report.field("ops", on);
            report.field("prime", pn);
            let scene = Scene::new(ideal(&p, pn)?)?;
            scene_report(&mut report, &scene);
            let rec = reconstruct(ops(&p, on)?, &scene, cap)?;
            let n = ideal_lines(&mut report, &rec.ideal, order);
            report.field("generators", n);
            report.field("multiplicity", rec.multiplicity);
            report.field("saturated_by", &rec.witness);
            report.field("seconds", seconds(start));
            Ok((report, EXIT_OK))
        }
        Command::Solve {
            file,
            ideal: qn,
            prime: pn,
            saturate: sat,
            point,
            index,
        } => {
            let p = load(file)?;
            let mut report = Report::new("solve");
            report.field("file", file.display());
            report.field("ideal", qn);
            report.field("prime", pn);
            let q = maybe_saturate(&p, ideal(&p, qn)?, sat.as_deref(), &mut report)?;
            let scene = Arc::new(Scene::new(ideal(&p, pn)?)?);
            scene_report(&mut report, &scene);
            let rep = noetherian_operators(&q, scene, cap)?;
            let family = SolutionFamily::from_operators(&rep);
            for (l, b) in family.multipliers.iter().enumerate() {
                report.line(format!("B{} = {b}", l + 1));
            }
            report.line(family.template());
            report.field("multiplicity", rep.multiplicity);
            if let (Some(point), Some(l)) = (point, index) {
                let pt = parse_point(point)?;
                let s = family.sample(&pt, *l)?;
                report.line(format!("sample = {s}"));
                report.field("point", point);
                report.field("index", l);
                report.field("sample", s);
            }
            report.field("seconds", seconds(start));
            Ok((report, EXIT_OK))
        }
        Command::BenchTable1 { kmax } => {
            if *kmax < 1 {
                return Err(CliError::Usage("kmax must be at least 1".into()));
            }
            let mut report = Report::new("bench-table1");
            report.field("kmax", kmax);
            report.line(format!("{:>3} {:>6} {:>10} {:>10}", "k", "pde", "operators", "seconds"));
            for k in 1..=*kmax {
                let t = Instant::now();
                let (q, p) = power_ideal(k)?;
                let pde = q.minimal_generators().gens().len();
                let rep = noetherian_operators(&q, Arc::new(Scene::new(&p)?), cap)?;
                let secs = seconds(t);
                report.line(format!("{k:>3} {pde:>6} {:>10} {secs:>10}", rep.operators.len()));
                report.field(&format!("k{k}"), format!("pde={pde} operators={} seconds={secs}", rep.operators.len()));
            }
            report.field("seconds", seconds(start));
            Ok((report, EXIT_OK))
        }
        Command::Join { file, left, right } => {
            let p = load(file)?;
            let mut report = Report::new("join");
            report.field("file", file.display());
            report.field("left", left);
            report.field("right", right);
            let j = join(ideal(&p, left)?, ideal(&p, right)?)?;
            let n = ideal_lines(&mut report, &j, order);
            report.field("generators", n);
            report.field("seconds", seconds(start));
            Ok((report, EXIT_OK))
        }
        Command::SymbolicPower { file, ideal: pn, power } => {
            let p = load(file)?;
            let mut report = Report::new("symbolic-power");
            report.field("file", file.display());
            report.field("ideal", pn);
            report.field("power", power);
            let j = symbolic_power(ideal(&p, pn)?, *power)?;
            let n = ideal_lines(&mut report, &j, order);
            report.field("generators", n);
            report.field("seconds", seconds(start));
            Ok((report, EXIT_OK))
        }
        Command::VerifyOps {
            file,
            ops: on,
            prime: pn,
        } => {
            let p = load(file)?;
            let mut report = Report::new("verify-ops");
            report.field("file", file.display());
            report.field("ops", on);
            report.field("prime", pn);
            let scene = Scene::new(ideal(&p, pn)?)?;
            scene_report(&mut report, &scene);
            let ok = verify_noetherian(ops(&p, on)?, &scene)?;
            report.line(if ok { "true" } else { "false" });
            report.field("noetherian", ok);
            report.field("seconds", seconds(start));
            Ok((report, if ok { EXIT_OK } else { EXIT_BIMODULE }))
        }
    }
}
