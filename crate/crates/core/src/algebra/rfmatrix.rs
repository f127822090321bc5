//! Square matrices with rational-function entries.

use std::fmt;

use num_traits::Zero;

use super::linalg::{Matrix, Vector};
use super::monomial::default_names;
use super::poly::Poly;
use super::ratfunc::{RationalFunction, ResidueConvention};
use super::scalar::Scalar;
use crate::error::{structural, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RfMatrix {
    nvars: usize,
    rows: Vec<Vec<RationalFunction>>,
}

pub type RfVector = Vec<RationalFunction>;

impl RfMatrix {
    pub fn zero(n: usize, nvars: usize) -> Self {
        RfMatrix { nvars, rows: vec![vec![RationalFunction::zero(nvars); n]; n] }
    }

    pub fn identity(n: usize, nvars: usize) -> Self {
        let mut m = RfMatrix::zero(n, nvars);
        for k in 0..n {
            m.rows[k][k] = RationalFunction::one(nvars);
        }
        m
    }

    pub fn from_rows(nvars: usize, rows: Vec<Vec<RationalFunction>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(structural("matrix is not square"));
        }
        if rows.iter().flatten().any(|x| x.nvars() != nvars) {
            return Err(structural("matrix entries use a different variable count"));
        }
        Ok(RfMatrix { nvars, rows })
    }

    /// Matrix with the given columns.
    pub fn from_cols(nvars: usize, cols: &[RfVector]) -> Result<Self> {
        let n = cols.len();
        let mut m = RfMatrix::zero(n, nvars);
        for (j, c) in cols.iter().enumerate() {
            if c.len() != n {
                return Err(structural("matrix is not square"));
            }
            for (i, x) in c.iter().enumerate() {
                m.rows[i][j] = x.clone();
            }
        }
        Ok(m)
    }

    pub fn from_scalar(m: &Matrix, nvars: usize) -> Self {
        RfMatrix {
            nvars,
            rows: (0..m.rows())
                .map(|i| (0..m.cols()).map(|j| RationalFunction::constant(nvars, m.get(i, j).clone())).collect())
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn get(&self, i: usize, j: usize) -> &RationalFunction {
        &self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RationalFunction) {
        self.rows[i][j] = v;
    }

    pub fn rows(&self) -> &[Vec<RationalFunction>] {
        &self.rows
    }

    pub fn col(&self, j: usize) -> RfVector {
        self.rows.iter().map(|r| r[j].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(RationalFunction::is_zero)
    }

    pub fn mul(&self, o: &RfMatrix) -> RfMatrix {
        let n = self.dim();
        let mut out = RfMatrix::zero(n, self.nvars);
        for i in 0..n {
            for k in 0..n {
                let a = &self.rows[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &o.rows[k][j];
                    if !b.is_zero() {
                        out.rows[i][j] = &out.rows[i][j] + &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, o: &RfMatrix) -> RfMatrix {
        self.zip(o, |a, b| a + b)
    }

    pub fn sub(&self, o: &RfMatrix) -> RfMatrix {
        self.zip(o, |a, b| a - b)
    }

    fn zip(&self, o: &RfMatrix, f: impl Fn(&RationalFunction, &RationalFunction) -> RationalFunction) -> RfMatrix {
        RfMatrix {
            nvars: self.nvars,
            rows: self.rows.iter().zip(&o.rows).map(|(r, s)| r.iter().zip(s).map(|(a, b)| f(a, b)).collect()).collect(),
        }
    }

    pub fn scale_rf(&self, c: &RationalFunction) -> RfMatrix {
        self.map(|x| x * c)
    }

    pub fn map(&self, f: impl Fn(&RationalFunction) -> RationalFunction) -> RfMatrix {
        RfMatrix { nvars: self.nvars, rows: self.rows.iter().map(|r| r.iter().map(&f).collect()).collect() }
    }

    pub fn try_map(&self, f: impl Fn(&RationalFunction) -> Result<RationalFunction>) -> Result<RfMatrix> {
        let rows =
            self.rows.iter().map(|r| r.iter().map(&f).collect::<Result<Vec<_>>>()).collect::<Result<Vec<_>>>()?;
        Ok(RfMatrix { nvars: self.nvars, rows })
    }

    pub fn mul_vec(&self, v: &[RationalFunction]) -> RfVector {
        self.rows
            .iter()
            .map(|r| {
                r.iter().zip(v).fold(RationalFunction::zero(self.nvars), |acc, (a, b)| {
                    if a.is_zero() || b.is_zero() {
                        acc
                    } else {
                        &acc + &(a * b)
                    }
                })
            })
            .collect()
    }

    /// Entrywise substitution of one variable.
    pub fn substitute(&self, var: usize, value: &Scalar) -> Result<RfMatrix> {
        let names = default_names("q", self.nvars);
        self.try_map(|x| x.substitute(var, value, &names))
    }

    /// Several variables at once.
    pub fn substitute_all(&self, point: &[(usize, Scalar)]) -> Result<RfMatrix> {
        let names = default_names("q", self.nvars);
        self.try_map(|x| x.substitute_all(point, &names))
    }

    pub fn residue(&self, var: usize, convention: ResidueConvention) -> Result<RfMatrix> {
        let names = default_names("q", self.nvars);
        self.try_map(|x| x.residue_at_one(var, convention, &names))
    }

    /// Scalar matrix if every entry is constant.
    pub fn to_scalar(&self) -> Option<Matrix> {
        let rows: Option<Vec<Vector>> =
            self.rows.iter().map(|r| r.iter().map(RationalFunction::as_scalar).collect()).collect();
        rows.map(Matrix::from_rows)
    }

    /// Gauss-Jordan inverse; pivots must not vanish at the origin.
    pub fn inverse(&self) -> Option<RfMatrix> {
        let n = self.dim();
        let mut a = self.rows.clone();
        let mut b = RfMatrix::identity(n, self.nvars).rows;
        for c in 0..n {
            let p = (c..n).find(|&r| !a[r][c].numerator().constant_term().is_zero())?;
            a.swap(c, p);
            b.swap(c, p);
            let inv = a[c][c].inv()?;
            for j in 0..n {
                a[c][j] = &a[c][j] * &inv;
                b[c][j] = &b[c][j] * &inv;
            }
            for r in 0..n {
                if r == c || a[r][c].is_zero() {
                    continue;
                }
                let f = a[r][c].clone();
                for j in 0..n {
                    let (x, y) = (&a[c][j] * &f, &b[c][j] * &f);
                    a[r][j] = &a[r][j] - &x;
                    b[r][j] = &b[r][j] - &y;
                }
            }
        }
        Some(RfMatrix { nvars: self.nvars, rows: b })
    }

    pub fn commutes_with(&self, o: &RfMatrix) -> bool {
        self.mul(o) == o.mul(self)
    }

    pub fn format_with(&self, names: &[String]) -> String {
        let cells: Vec<Vec<String>> =
            self.rows.iter().map(|r| r.iter().map(|x| x.format_with(names)).collect()).collect();
        let n = self.dim();
        let widths: Vec<usize> = (0..n).map(|j| cells.iter().map(|r| r[j].len()).max().unwrap_or(1)).collect();
        let mut out = String::new();
        for r in cells {
            let padded: Vec<String> = r.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
            out.push_str(&format!("[ {} ]\n", padded.join("  ")));
        }
        out
    }
}

impl fmt::Display for RfMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with(&default_names("q", self.nvars)))
    }
}

pub fn rf_vec_zero(n: usize, nvars: usize) -> RfVector {
    vec![RationalFunction::zero(nvars); n]
}

pub fn rf_vec_from_scalar(v: &[Scalar], nvars: usize) -> RfVector {
    v.iter().map(|x| RationalFunction::constant(nvars, x.clone())).collect()
}

/// `y += a·x`
pub fn rf_axpy(y: &mut [RationalFunction], a: &RationalFunction, x: &[RationalFunction]) {
    if a.is_zero() {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi = &*yi + &(a * xi);
        }
    }
}

/// Multiply every entry of an RF vector by a common polynomial multiple of all denominators
/// and return the coefficient vectors of the resulting polynomial vector, one per monomial.
pub fn rf_vec_monomial_parts(v: &[RationalFunction]) -> Vec<Vector> {
    let nvars = v.first().map_or(0, |x| x.nvars());
    let mut den = Poly::one(nvars);
    let mut factors: std::collections::BTreeMap<Poly, u32> = Default::default();
    for x in v {
        for (f, k) in x.denominator() {
            let e = factors.entry(f.clone()).or_insert(0);
            *e = (*e).max(*k);
        }
    }
    for (f, k) in &factors {
        den = &den * &f.pow(*k);
    }
    let mut parts: std::collections::BTreeMap<super::monomial::MultiIndex, Vector> = Default::default();
    for (i, x) in v.iter().enumerate() {
        let lifted = x.mul_poly(&den);
        let p = lifted.as_poly().expect("common denominator clears").clone();
        for (m, c) in p.terms() {
            parts.entry(m.clone()).or_insert_with(|| vec![Scalar::zero(); v.len()])[i] = c.clone();
        }
    }
    parts.into_values().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_neutral() {
        let mut m = RfMatrix::zero(2, 1);
        m.set(0, 1, RationalFunction::from_poly(Poly::var(1, 0)));
        m.set(1, 0, RationalFunction::one(1));
        let id = RfMatrix::identity(2, 1);
        assert_eq!(m.mul(&id), m);
        assert!(m.commutes_with(&id));
        // [[0,q],[1,0]]^2 = q·I
        let sq = m.mul(&m);
        assert_eq!(sq.get(0, 0), &RationalFunction::from_poly(Poly::var(1, 0)));
        assert!(sq.get(0, 1).is_zero());
        let mut a = RfMatrix::identity(2, 1);
        a.set(0, 1, RationalFunction::from_poly(Poly::var(1, 0)));
        a.set(1, 0, RationalFunction::from_poly(Poly::var(1, 0)));
        assert_eq!(a.mul(&a.inverse().unwrap()), RfMatrix::identity(2, 1));
        assert_eq!(RationalFunction::one(1).scale(&Scalar::from_int(1)), RationalFunction::one(1));
    }
}
