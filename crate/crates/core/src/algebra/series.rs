//! Multivariate power series truncated to a box (optionally intersected with a simplex).

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::monomial::MultiIndex;
use super::poly::Poly;
use super::scalar::Scalar;
use crate::error::{structural, Result};

/// Coefficient domain of a truncated series: an additive group with a ℚ(i) action.
pub trait Coeff: Clone + PartialEq + std::fmt::Debug {
    fn is_null(&self) -> bool;
    fn add_assign_ref(&mut self, other: &Self);
    fn scaled(&self, s: &Scalar) -> Self;
}

impl Coeff for Scalar {
    fn is_null(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn scaled(&self, s: &Scalar) -> Self {
        self * s
    }
}

/// Ring vectors in a fixed basis.
impl Coeff for Vec<Scalar> {
    fn is_null(&self) -> bool {
        self.iter().all(Zero::is_zero)
    }
    fn add_assign_ref(&mut self, other: &Self) {
        for (a, b) in self.iter_mut().zip(other) {
            *a += b;
        }
    }
    fn scaled(&self, s: &Scalar) -> Self {
        self.iter().map(|a| a * s).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Truncation {
    pub bounds: Vec<u32>,
    pub total: Option<u32>,
}

impl Truncation {
    pub fn boxed(bounds: Vec<u32>) -> Self {
        Truncation { bounds, total: None }
    }

    pub fn contains(&self, m: &MultiIndex) -> bool {
        m.0.iter().zip(&self.bounds).all(|(e, b)| e <= b) && self.total.is_none_or(|t| m.total() <= t)
    }

    pub fn meet(&self, o: &Truncation) -> Truncation {
        Truncation {
            bounds: self.bounds.iter().zip(&o.bounds).map(|(a, b)| *a.min(b)).collect(),
            total: match (self.total, o.total) {
                (Some(a), Some(b)) => Some(a.min(b)),
                (a, b) => a.or(b),
            },
        }
    }

    /// Every exponent vector inside the truncation, in lex order.
    pub fn lattice_points(&self) -> Vec<MultiIndex> {
        let mut out = vec![MultiIndex(Vec::new())];
        for &b in &self.bounds {
            out = out
                .into_iter()
                .flat_map(|m| {
                    (0..=b).map(move |e| {
                        let mut v = m.0.clone();
                        v.push(e);
                        MultiIndex(v)
                    })
                })
                .collect();
        }
        out.retain(|m| self.contains(m));
        out
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries<C> {
    truncation: Truncation,
    terms: BTreeMap<MultiIndex, C>,
}

impl<C: Coeff> TruncatedSeries<C> {
    pub fn zero(truncation: Truncation) -> Self {
        TruncatedSeries { truncation, terms: BTreeMap::new() }
    }

    pub fn variable_count(&self) -> usize {
        self.truncation.bounds.len()
    }

    pub fn truncation(&self) -> &Truncation {
        &self.truncation
    }

    pub fn terms(&self) -> &BTreeMap<MultiIndex, C> {
        &self.terms
    }

    pub fn get(&self, m: &MultiIndex) -> Option<&C> {
        self.terms.get(m)
    }

    /// Add `c·q^m`, silently dropping terms outside the truncation.
    pub fn add_term(&mut self, m: MultiIndex, c: &C) {
        if c.is_null() || !self.truncation.contains(&m) {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(x) => {
                x.add_assign_ref(c);
                if x.is_null() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check_vars(o)?;
        let mut out = TruncatedSeries::zero(self.truncation.meet(&o.truncation));
        for (m, c) in self.terms.iter().chain(&o.terms) {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn scaled(&self, s: &Scalar) -> Self {
        let mut out = TruncatedSeries::zero(self.truncation.clone());
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &c.scaled(s));
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scaled(&Scalar::from_int(-1))
    }

    /// Product with a scalar series; the result lives in the meet of both truncations.
    pub fn mul_scalar_series(&self, s: &TruncatedSeries<Scalar>) -> Result<Self> {
        if s.variable_count() != self.variable_count() {
            return Err(structural(format!(
                "variable count mismatch: {} vs {}",
                s.variable_count(),
                self.variable_count()
            )));
        }
        let mut out = TruncatedSeries::zero(self.truncation.meet(&s.truncation));
        for (m1, a) in &s.terms {
            for (m2, c) in &self.terms {
                let m = m1 + m2;
                if out.truncation.contains(&m) {
                    out.add_term(m, &c.scaled(a));
                }
            }
        }
        Ok(out)
    }

    /// Multiply by a polynomial; exact on the whole truncation.
    pub fn mul_poly(&self, p: &Poly) -> Self {
        let mut out = TruncatedSeries::zero(self.truncation.clone());
        for (m1, a) in p.terms() {
            for (m2, c) in &self.terms {
                out.add_term(m1 + m2, &c.scaled(a));
            }
        }
        out
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> TruncatedSeries<D> {
        let mut out = TruncatedSeries::zero(self.truncation.clone());
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &f(c));
        }
        out
    }

    fn check_vars(&self, o: &Self) -> Result<()> {
        if self.variable_count() != o.variable_count() {
            return Err(structural(format!(
                "variable count mismatch: {} vs {}",
                self.variable_count(),
                o.variable_count()
            )));
        }
        Ok(())
    }
}

impl TruncatedSeries<Scalar> {
    pub fn from_poly(p: &Poly, truncation: Truncation) -> Self {
        let mut out = TruncatedSeries::zero(truncation);
        for (m, c) in p.terms() {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn to_poly(&self) -> Poly {
        Poly::from_terms(self.variable_count(), self.terms.iter().map(|(m, c)| (m.clone(), c.clone())))
    }

    pub fn coeff(&self, m: &MultiIndex) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Inverse of a polynomial with nonzero constant term, expanded inside the truncation.
    pub fn inverse_of(p: &Poly, truncation: Truncation) -> Result<Self> {
        let c0 = p.constant_term();
        if c0.is_zero() {
            return Err(structural("series inverse needs a nonzero constant term"));
        }
        let inv0 = Scalar::from_int(1) / &c0;
        let mut out = TruncatedSeries::zero(truncation.clone());
        // points in lex order: every proper divisor of m precedes m
        for m in truncation.lattice_points() {
            let mut acc = if m.is_zero() { Scalar::from_int(1) } else { Scalar::zero() };
            for (pm, pc) in p.terms() {
                if pm.is_zero() {
                    continue;
                }
                if let Some(rest) = m.checked_sub(pm) {
                    acc -= &(pc * &out.coeff(&rest));
                }
            }
            out.add_term(m, &(&acc * &inv0));
        }
        Ok(out)
    }
}

/// Exact truncated product.
pub fn series_mul(a: &TruncatedSeries<Scalar>, b: &TruncatedSeries<Scalar>) -> Result<TruncatedSeries<Scalar>> {
    a.mul_scalar_series(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: usize, k: usize) -> Poly {
        Poly::var(n, k)
    }

    #[test]
    fn difference_of_squares() {
        let t = Truncation::boxed(vec![2]);
        let one = Poly::one(1);
        let a = TruncatedSeries::from_poly(&(&one + &q(1, 0)), t.clone());
        let b = TruncatedSeries::from_poly(&(&one - &q(1, 0)), t.clone());
        let p = series_mul(&a, &b).unwrap();
        assert_eq!(p.to_poly(), &one - &q(1, 0).pow(2));
    }

    #[test]
    fn geometric_telescopes() {
        let t = Truncation::boxed(vec![3]);
        let one = Poly::one(1);
        let geo = TruncatedSeries::inverse_of(&(&one - &q(1, 0)), t).unwrap().mul_poly(&q(1, 0));
        assert_eq!(geo.mul_poly(&(&one - &q(1, 0))).to_poly(), q(1, 0));
    }

    #[test]
    fn variable_mismatch_is_structural() {
        let a = TruncatedSeries::<Scalar>::zero(Truncation::boxed(vec![2]));
        let b = TruncatedSeries::<Scalar>::zero(Truncation::boxed(vec![2, 2]));
        assert!(series_mul(&a, &b).is_err());
    }

    fn arb_poly() -> impl Strategy<Value = Poly> {
        proptest::collection::vec((0u32..3, 0u32..3, -4i64..5), 0..5).prop_map(|ts| {
            Poly::from_terms(2, ts.into_iter().map(|(a, b, c)| (MultiIndex(vec![a, b]), Scalar::from_int(c))))
        })
    }

    proptest! {
        #[test]
        fn associative_mod_truncation(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            let t = Truncation::boxed(vec![4, 4]);
            let (sa, sb, sc) = (
                TruncatedSeries::from_poly(&a, t.clone()),
                TruncatedSeries::from_poly(&b, t.clone()),
                TruncatedSeries::from_poly(&c, t.clone()),
            );
            let left = series_mul(&series_mul(&sa, &sb).unwrap(), &sc).unwrap();
            let right = series_mul(&sa, &series_mul(&sb, &sc).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }
    }
}
