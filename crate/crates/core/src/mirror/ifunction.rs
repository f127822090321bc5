use num_traits::Zero;

use crate::algebra::linalg::{is_zero_vec, unit_vec};
use crate::algebra::{Matrix, MultiIndex, Poly, Scalar, TruncatedSeries, Truncation, Vector, ZExpansion};
use crate::error::{structural, Result};
use crate::ring::GradedRing;
use crate::toric::DivisorClassData;

/// A cohomology-valued Laurent polynomial in `z`.
pub type ZVec = ZExpansion<Vector>;

/// The I-function with the `e^{m log q / z}` prefactor stripped, `Ĩ = Σ_β q^β Ĩ_β(z)`.
#[derive(Clone, Debug)]
pub struct IFunction {
    ring: GradedRing,
    data: DivisorClassData,
    /// Classical cup product by each nef generator.
    cup: Vec<Matrix>,
    /// Complex degree of each basis element.
    degrees: Vec<i32>,
    terms: TruncatedSeries<ZVec>,
}

/// Classical multiplication matrix of a class.
pub(crate) fn cup_matrix(ring: &GradedRing, v: &[Scalar]) -> Result<Matrix> {
    ring.mul_matrix(&ring.lift(v)).to_scalar().ok_or_else(|| structural("ring is not classical"))
}

/// `Π_{c=1}^{d} (C + c)^{-1} u` for nilpotent `C`.
fn apply_inverse_factors(c: &Matrix, d: i64, u: &Vector) -> Vector {
    let mut u = u.clone();
    for k in 1..=d {
        let inv = Scalar::from_int(k).inv();
        // (C + k)^{-1} = Σ_j (-1)^j C^j / k^{j+1}
        let mut term: Vector = u.iter().map(|x| x * &inv).collect();
        let mut acc = term.clone();
        while !is_zero_vec(&term) {
            term = c.mul_vec(&term).iter().map(|x| -(x * &inv)).collect();
            for (a, t) in acc.iter_mut().zip(&term) {
                *a += t.clone();
            }
        }
        u = acc;
    }
    u
}

/// `C Π_{c=1}^{|d|-1} (C - c) u` for `d < 0`.
fn apply_numerator_factors(c: &Matrix, d: i64, u: &Vector) -> Vector {
    let mut u = c.mul_vec(u);
    for k in 1..-d {
        if is_zero_vec(&u) {
            break;
        }
        let cu = c.mul_vec(&u);
        let kk = Scalar::from_int(k);
        u = cu.iter().zip(&u).map(|(a, b)| a - &(b * &kk)).collect();
    }
    u
}

impl IFunction {
    /// All terms with `β` in the truncation box (`β_j ≥ 0`, the Mori cone in the nef-dual basis).
    pub fn compute(ring: &GradedRing, data: &DivisorClassData, truncation: Truncation) -> Result<Self> {
        if truncation.bounds.len() != data.rank() {
            return Err(structural("one truncation bound per Novikov variable expected"));
        }
        if ring.nvars() != 0 {
            return Err(structural("the I-function needs the classical ring"));
        }
        let n = ring.dim();
        let unit = ring.unit().ok_or_else(|| structural("ring has no unit"))?;
        let rays: Vec<Matrix> = (0..data.coefficients().len())
            .map(|i| cup_matrix(ring, &ring.reduce(&data.ray_class(i))?))
            .collect::<Result<_>>()?;
        let cup: Vec<Matrix> = (0..data.rank())
            .map(|j| cup_matrix(ring, &ring.reduce(&Poly::var(data.rank(), j))?))
            .collect::<Result<_>>()?;
        let degrees: Vec<i32> = ring.degrees().iter().map(|d| (*d / 2) as i32).collect();
        let c1 = data.c1();
        let mut terms = TruncatedSeries::zero(truncation.clone());
        for beta in truncation.lattice_points() {
            let d = data.intersection_degrees(&beta);
            let mut u = unit_vec(n, unit);
            for (i, &di) in d.iter().enumerate() {
                if di > 0 {
                    u = apply_inverse_factors(&rays[i], di, &u);
                } else if di < 0 {
                    u = apply_numerator_factors(&rays[i], di, &u);
                }
                if is_zero_vec(&u) {
                    break;
                }
            }
            if is_zero_vec(&u) {
                continue;
            }
            let shift: i64 = c1.iter().zip(&beta.0).map(|(c, &b)| c * b as i64).sum();
            let mut z = ZVec::new();
            for (k, x) in u.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let mut v = vec![Scalar::zero(); n];
                v[k] = x.clone();
                z.add_at(-(shift as i32) - degrees[k], &v);
            }
            terms.add_term(beta, &z);
        }
        Ok(IFunction { ring: ring.clone(), data: data.clone(), cup, degrees, terms })
    }

    pub fn ring(&self) -> &GradedRing {
        &self.ring
    }

    pub fn data(&self) -> &DivisorClassData {
        &self.data
    }

    pub fn truncation(&self) -> &Truncation {
        self.terms.truncation()
    }

    pub fn terms(&self) -> &TruncatedSeries<ZVec> {
        &self.terms
    }

    pub fn term(&self, beta: &MultiIndex) -> Option<&ZVec> {
        self.terms.get(beta)
    }

    pub fn basis_degrees(&self) -> &[i32] {
        &self.degrees
    }

    /// `zD_j (q^β z^k v) = q^β (z^{k+1} β_j v + z^k m_j ∪ v)`.
    pub fn apply_zd(&self, j: usize, s: &TruncatedSeries<ZVec>) -> TruncatedSeries<ZVec> {
        let mut out = TruncatedSeries::zero(s.truncation().clone());
        for (beta, zexp) in s.terms() {
            let mut r = ZVec::new();
            let bj = Scalar::from_int(beta.0[j] as i64);
            for (&k, v) in zexp.coeffs() {
                if !bj.is_zero() {
                    r.add_at(k + 1, &v.iter().map(|x| x * &bj).collect());
                }
                r.add_at(k, &self.cup[j].mul_vec(v));
            }
            out.add_term(beta.clone(), &r);
        }
        out
    }
}

/// Coefficient of `z^k` as a vector of scalar series, one per basis element.
pub fn z_coefficient(s: &TruncatedSeries<ZVec>, k: i32, dim: usize) -> Vec<TruncatedSeries<Scalar>> {
    let mut out = vec![TruncatedSeries::zero(s.truncation().clone()); dim];
    for (beta, zexp) in s.terms() {
        if let Some(v) = zexp.coeff(k) {
            for (t, x) in v.iter().enumerate() {
                out[t].add_term(beta.clone(), x);
            }
        }
    }
    out
}

/// Largest power of `z` occurring.
pub fn max_z_power(s: &TruncatedSeries<ZVec>) -> Option<i32> {
    s.terms().values().filter_map(ZVec::max_power).max()
}
