//! Exact Gaussian elimination over any [`Field`].

use super::Field;

/// Reduced row echelon form of `rows`, returned as (rows, pivot columns).
/// Every returned row has a 1 in its pivot column and zeros in the pivot
/// columns of all other rows; rows are sorted by pivot.
fn rref<F: Field>(field: &F, rows: &[Vec<F::Elem>], ncols: usize) -> (Vec<Vec<F::Elem>>, Vec<usize>) {
    let mut m: Vec<Vec<F::Elem>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == m.len() {
            break;
        }
        // The RREF is unique, so choosing the lightest pivot row only affects
        // intermediate sizes, never the result.
        let Some(p) = (r..m.len())
            .filter(|&i| !field.is_zero(&m[i][col]))
            .min_by_key(|&i| field.weight(&m[i][col]))
        else {
            continue;
        };
        m.swap(r, p);
        let inv = field.inv(&m[r][col]).expect("nonzero pivot");
        let pivot_row: Vec<F::Elem> = m[r].iter().map(|x| field.mul(x, &inv)).collect();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || field.is_zero(&row[col]) {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                if !field.is_zero(p) {
                    *x = field.sub(x, &field.mul(&f, p));
                }
            }
        }
        m[r] = pivot_row;
        pivots.push(col);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank<F: Field>(field: &F, rows: &[Vec<F::Elem>], ncols: usize) -> usize {
    rref(field, rows, ncols).1.len()
}

/// Basis of `{v : M v = 0}`, one vector per non-pivot column `j`, having a 1
/// at `j` and zeros at every other non-pivot column. Vectors are ordered by
/// their free column.
pub fn solve_nullspace<F: Field>(field: &F, rows: &[Vec<F::Elem>], ncols: usize) -> Vec<Vec<F::Elem>> {
    let (m, pivots) = rref(field, rows, ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for j in (0..ncols).filter(|&j| !is_pivot[j]) {
        let mut v = vec![field.zero(); ncols];
        v[j] = field.one();
        for (row, &p) in m.iter().zip(&pivots) {
            if !field.is_zero(&row[j]) {
                v[p] = field.neg(&row[j]);
            }
        }
        basis.push(v);
    }
    basis
}

/// A linear system `M v = b`.
#[derive(Debug, Clone)]
pub struct LinearSystem<F: Field> {
    pub field: F,
    pub ncols: usize,
    pub rows: Vec<Vec<F::Elem>>,
    pub rhs: Vec<F::Elem>,
}

impl<F: Field> LinearSystem<F> {
    pub fn new(field: F, ncols: usize) -> Self {
        LinearSystem {
            field,
            ncols,
            rows: Vec::new(),
            rhs: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<F::Elem>, b: F::Elem) {
        assert_eq!(row.len(), self.ncols, "row length");
        self.rows.push(row);
        self.rhs.push(b);
    }

    pub fn nullspace(&self) -> Vec<Vec<F::Elem>> {
        solve_nullspace(&self.field, &self.rows, self.ncols)
    }

    /// One solution (free variables set to zero), or `None` if inconsistent.
    pub fn solve(&self) -> Option<Vec<F::Elem>> {
        let f = &self.field;
        let aug: Vec<Vec<F::Elem>> = self
            .rows
            .iter()
            .zip(&self.rhs)
            .map(|(r, b)| {
                let mut r = r.clone();
                r.push(b.clone());
                r
            })
            .collect();
        let (m, pivots) = rref(f, &aug, self.ncols + 1);
        if pivots.last() == Some(&self.ncols) {
            return None;
        }
        let mut x = vec![f.zero(); self.ncols];
        for (row, &p) in m.iter().zip(&pivots) {
            x[p] = row[self.ncols].clone();
        }
        Some(x)
    }
}

/// Incrementally maintained reduced echelon basis of a subspace.
#[derive(Debug, Clone)]
pub struct RowEchelon<F: Field> {
    field: F,
    ncols: usize,
    /// Rows normalized to 1 at their pivot, fully inter-reduced.
    rows: Vec<(usize, Vec<F::Elem>)>,
}

impl<F: Field> RowEchelon<F> {
    pub fn new(field: F, ncols: usize) -> Self {
        RowEchelon {
            field,
            ncols,
            rows: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Remainder of `v` after eliminating every pivot column.
    pub fn reduce(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            if f.is_zero(&v[*p]) {
                continue;
            }
            let c = v[*p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !f.is_zero(r) {
                    *x = f.sub(x, &f.mul(&c, r));
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        self.reduce(v).iter().all(|x| self.field.is_zero(x))
    }

    /// Adds `v` to the span; returns false if it was already there.
    pub fn insert(&mut self, v: &[F::Elem]) -> bool {
        let f = self.field.clone();
        let r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&r[p]).expect("nonzero");
        let r: Vec<F::Elem> = r.iter().map(|x| f.mul(x, &inv)).collect();
        for (_, row) in self.rows.iter_mut() {
            if f.is_zero(&row[p]) {
                continue;
            }
            let c = row[p].clone();
            for (x, y) in row.iter_mut().zip(&r) {
                if !f.is_zero(y) {
                    *x = f.sub(x, &f.mul(&c, y));
                }
            }
        }
        let at = self.rows.partition_point(|(q, _)| *q < p);
        self.rows.insert(at, (p, r));
        true
    }

    /// Reduced basis rows, sorted by pivot column.
    pub fn rows(&self) -> impl Iterator<Item = &[F::Elem]> {
        self.rows.iter().map(|(_, r)| r.as_slice())
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|(p, _)| *p)
    }
}
