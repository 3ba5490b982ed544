use clap::Parser;
use noether_cli::app::{run, Cli, EXIT_TIMEOUT};
use std::time::Duration;

fn start_watchdog() {
    let Ok(v) = std::env::var("NOETHER_TIMEOUT_SECS") else {
        return;
    };
    let Ok(secs) = v.trim().parse::<f64>() else {
        eprintln!("noether: ignoring NOETHER_TIMEOUT_SECS={v}: not a number");
        return;
    };
    if secs <= 0.0 {
        return;
    }
    std::thread::spawn(move || {
        std::thread::sleep(Duration::from_secs_f64(secs));
        eprintln!("noether: time limit of {secs} s exceeded");
        std::process::exit(EXIT_TIMEOUT);
    });
}

fn main() {
    let cli = Cli::parse();
    start_watchdog();
    match run(&cli) {
        Ok((report, code)) => {
            print!("{}", report.render());
            std::process::exit(code);
        }
        Err(e) => {
            eprintln!("noether: error: {e}");
            std::process::exit(e.exit_code());
        }
    }
}
