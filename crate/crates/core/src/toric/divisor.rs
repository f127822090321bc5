use crate::algebra::{Matrix, MultiIndex, Poly, Scalar};
use crate::error::{structural, Result};

use super::fan::Fan;

/// Ray divisor classes `R_i` written in a nef basis `m_j`, with `β_j` the dual curve classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorClassData {
    nef_names: Vec<String>,
    coefficients: Vec<Vec<i64>>,
}

impl DivisorClassData {
    /// Checks the linear relations `Σ_i (R_i·β_j) r_i = 0` and that the classes span `H^2`.
    pub fn new(fan: &Fan, nef_names: Vec<String>, coefficients: Vec<Vec<i64>>) -> Result<Self> {
        let k = nef_names.len();
        if coefficients.len() != fan.rays().len() || coefficients.iter().any(|c| c.len() != k) {
            return Err(structural("one coefficient row per ray expected"));
        }
        for j in 0..k {
            for t in 0..fan.dim() {
                let s: i64 = fan.rays().iter().zip(&coefficients).map(|(r, c)| r[t] * c[j]).sum();
                if s != 0 {
                    return Err(structural(format!("curve class {} is not a relation among the rays", j + 1)));
                }
            }
        }
        let m =
            Matrix::from_rows(coefficients.iter().map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect()).collect());
        if m.rank() != k || k + fan.dim() != fan.rays().len() {
            return Err(structural("nef basis does not match the Picard rank"));
        }
        Ok(DivisorClassData { nef_names, coefficients })
    }

    pub fn nef_names(&self) -> &[String] {
        &self.nef_names
    }

    pub fn rank(&self) -> usize {
        self.nef_names.len()
    }

    pub fn coefficients(&self) -> &[Vec<i64>] {
        &self.coefficients
    }

    /// `c_1 = Σ_i R_i` in the nef basis.
    pub fn c1(&self) -> Vec<i64> {
        (0..self.rank()).map(|j| self.coefficients.iter().map(|c| c[j]).sum()).collect()
    }

    /// Real degrees `2 c_1·β_j` of the Novikov variables.
    pub fn novikov_degrees(&self) -> Vec<i64> {
        self.c1().iter().map(|c| 2 * c).collect()
    }

    /// `R_i·β` for `β = Σ n_j β_j`.
    pub fn intersection_degrees(&self, beta: &MultiIndex) -> Vec<i64> {
        self.coefficients.iter().map(|c| c.iter().zip(&beta.0).map(|(a, &n)| a * n as i64).sum()).collect()
    }

    /// `R_i` as a linear form in the nef generators.
    pub fn ray_class(&self, i: usize) -> Poly {
        let k = self.rank();
        Poly::from_terms(
            k,
            self.coefficients[i].iter().enumerate().map(|(j, &c)| (MultiIndex::unit(k, j), Scalar::from_int(c))),
        )
    }
}
