//! Sparse multivariate polynomials over ℚ(i).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::monomial::{default_names, MultiIndex};
use super::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<MultiIndex, Scalar>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, Scalar::one())
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        Poly::monomial(nvars, MultiIndex::zero(nvars), c)
    }

    pub fn var(nvars: usize, k: usize) -> Self {
        Poly::monomial(nvars, MultiIndex::unit(nvars, k), Scalar::one())
    }

    pub fn monomial(nvars: usize, m: MultiIndex, c: Scalar) -> Self {
        let mut p = Poly::zero(nvars);
        p.add_term(m, c);
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (MultiIndex, Scalar)>) -> Self {
        let mut p = Poly::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<MultiIndex, Scalar> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<MultiIndex, Scalar> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: MultiIndex, c: Scalar) {
        debug_assert_eq!(m.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn coeff(&self, m: &MultiIndex) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn constant_term(&self) -> Scalar {
        self.coeff(&MultiIndex::zero(self.nvars))
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_zero())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total()).max()
    }

    pub fn degree_in(&self, v: usize) -> u32 {
        self.terms.keys().map(|m| m.get(v)).max().unwrap_or(0)
    }

    /// Lex-greatest term.
    pub fn leading(&self) -> Option<(&MultiIndex, &Scalar)> {
        self.terms.iter().next_back()
    }

    /// `Some((m, c))` when the polynomial is a single nonzero term.
    pub fn as_monomial(&self) -> Option<(&MultiIndex, &Scalar)> {
        (self.terms.len() == 1).then(|| self.terms.iter().next().unwrap())
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn shift(&self, by: &MultiIndex) -> Poly {
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(m, a)| (m + by, a.clone())).collect() }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Set variable `v` to `value`; the variable count is kept.
    pub fn substitute(&self, v: usize, value: &Scalar) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut m2 = m.clone();
            let e = m2.0[v];
            m2.0[v] = 0;
            out.add_term(m2, c * &value.pow(e));
        }
        out
    }

    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        self.terms.iter().map(|(m, c)| m.0.iter().zip(point).fold(c.clone(), |acc, (&e, x)| &acc * &x.pow(e))).sum()
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let (lm, lc) = d.leading()?;
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut rem = self.clone();
        let mut quot = Poly::zero(self.nvars);
        while let Some((m, c)) = rem.leading() {
            let shift = m.checked_sub(&lm)?;
            let q = c / &lc;
            rem = &rem - &d.shift(&shift).scale(&q);
            quot.add_term(shift, q);
        }
        Some(quot)
    }

    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> Poly {
        Poly::from_terms(self.nvars, self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// Keep only terms inside the box `m ≤ bounds`.
    pub fn truncate(&self, bounds: &[u32]) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.0.iter().zip(bounds).all(|(e, b)| e <= b))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Reinterpret in a larger variable set; `map[k]` is the new index of old variable `k`.
    pub fn embed(&self, nvars: usize, map: &[usize]) -> Poly {
        Poly::from_terms(
            nvars,
            self.terms.iter().map(|(m, c)| {
                let mut e = vec![0; nvars];
                for (k, &x) in m.0.iter().enumerate() {
                    e[map[k]] += x;
                }
                (MultiIndex(e), c.clone())
            }),
        )
    }

    /// Keep only the variables in `keep` (new index = position in `keep`);
    /// `None` if a dropped variable occurs.
    pub fn restrict(&self, keep: &[usize]) -> Option<Poly> {
        let mut out = Poly::zero(keep.len());
        for (m, c) in &self.terms {
            let dropped = m.0.iter().enumerate().any(|(k, &e)| e > 0 && !keep.contains(&k));
            if dropped {
                return None;
            }
            out.add_term(MultiIndex(keep.iter().map(|&k| m.0[k]).collect()), c.clone());
        }
        Some(out)
    }

    /// All weighted degrees occurring, for homogeneity checks.
    pub fn weighted_degrees(&self, weights: &[i64]) -> Vec<i64> {
        let mut d: Vec<i64> = self.terms.keys().map(|m| m.weighted(weights)).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    pub fn format_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        // descending total degree reads more naturally
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by(|a, b| a.0.total().cmp(&b.0.total()).then_with(|| b.0.cmp(a.0)));
        for (k, (m, c)) in ordered.into_iter().enumerate() {
            let mono = m.format_with(names);
            let (neg, body) = coeff_text(c);
            let piece = match (mono.as_str(), body.as_str()) {
                ("1", b) => b.to_string(),
                (mo, "1") => mo.to_string(),
                (mo, b) => format!("{b}*{mo}"),
            };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&piece);
        }
        out
    }
}

/// Sign and body for a coefficient; complex values are parenthesised.
fn coeff_text(c: &Scalar) -> (bool, String) {
    use num_traits::Signed;
    if c.is_real() {
        let neg = c.re.is_negative();
        let abs = Scalar::real(c.re.abs());
        (neg, abs.to_string())
    } else if c.re.is_zero() {
        let neg = c.im.is_negative();
        let abs = Scalar::new(Zero::zero(), c.im.abs());
        (neg, abs.to_string().trim_end_matches("*i").to_string() + "*i")
    } else {
        (false, format!("({c})"))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with(&default_names("q", self.nvars)))
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        debug_assert_eq!(self.nvars, o.nvars);
        let mut out = Poly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                out.add_term(m1 + m2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&Scalar::from_int(-1))
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, o: Poly) -> Poly {
        &self + &o
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, o: Poly) -> Poly {
        &self - &o
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, o: Poly) -> Poly {
        &self * &o
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(k: usize) -> Poly {
        Poly::var(3, k)
    }

    #[test]
    fn exact_division() {
        let one = Poly::one(3);
        let f = &(&one - &q(1)) * &(&(&one - &q(1)) - &q(2));
        let g = &one - &q(1);
        assert_eq!(f.div_exact(&g).unwrap(), &(&one - &q(1)) - &q(2));
        assert!(f.div_exact(&(&one - &q(2))).is_none());
    }

    #[test]
    fn substitution_and_display() {
        let f = &(&Poly::one(3) - &q(1)) - &q(2);
        assert_eq!(f.to_string(), "1 - q2 - q3");
        let g = f.substitute(1, &Scalar::one());
        assert_eq!(g.to_string(), "-q3");
        assert_eq!(g.as_monomial().map(|(m, _)| m.clone()), Some(MultiIndex(vec![0, 0, 1])));
    }
}
