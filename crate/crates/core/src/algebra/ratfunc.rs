//! Rational functions whose denominators are products of factors nonvanishing at `q = 0`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::monomial::{default_names, MultiIndex};
use super::poly::Poly;
use super::scalar::Scalar;
use super::series::{TruncatedSeries, Truncation};
use crate::error::{structural, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ResidueConvention {
    /// `lim (1-v)·f`
    Plain,
    /// `lim (v-1)·f/v`, the residue of `f dv/v`
    Dlog,
}

impl std::str::FromStr for ResidueConvention {
    type Err = crate::error::ParseError;
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "plain" => Ok(ResidueConvention::Plain),
            "dlog" => Ok(ResidueConvention::Dlog),
            _ => Err(crate::error::ParseError::new(format!("unknown residue convention `{s}`"))),
        }
    }
}

impl fmt::Display for ResidueConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ResidueConvention::Plain => "plain",
            ResidueConvention::Dlog => "dlog",
        })
    }
}

/// `numerator / Π factor^mult`, every factor normalised to constant term 1.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    num: Poly,
    den: BTreeMap<Poly, u32>,
}

/// Rescale `f` to constant term 1, returning the constant removed.
fn normalize_factor(f: &Poly) -> Option<(Poly, Scalar)> {
    let c = f.constant_term();
    if c.is_zero() {
        return None;
    }
    Some((f.scale(&c.inv()), c))
}

impl RationalFunction {
    pub fn zero(nvars: usize) -> Self {
        RationalFunction::from_poly(Poly::zero(nvars))
    }

    pub fn one(nvars: usize) -> Self {
        RationalFunction::from_poly(Poly::one(nvars))
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        RationalFunction::from_poly(Poly::constant(nvars, c))
    }

    pub fn from_poly(num: Poly) -> Self {
        RationalFunction { num, den: BTreeMap::new() }
    }

    /// Build from a numerator and denominator factors; factors must not vanish at the origin.
    pub fn new(num: Poly, factors: impl IntoIterator<Item = (Poly, u32)>) -> Result<Self> {
        let mut num = num;
        let mut den = BTreeMap::new();
        for (f, k) in factors {
            if k == 0 {
                continue;
            }
            if f.is_constant() {
                let c = f.constant_term();
                if c.is_zero() {
                    return Err(structural("division by zero"));
                }
                num = num.scale(&c.inv().pow(k));
                continue;
            }
            let (g, c) = normalize_factor(&f)
                .ok_or_else(|| structural(format!("denominator factor {f} vanishes at the origin")))?;
            num = num.scale(&c.inv().pow(k));
            *den.entry(g).or_insert(0) += k;
        }
        let mut r = RationalFunction { num, den };
        r.reduce();
        Ok(r)
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &BTreeMap<Poly, u32> {
        &self.den
    }

    pub fn denominator_poly(&self) -> Poly {
        self.den.iter().fold(Poly::one(self.nvars()), |acc, (f, k)| &acc * &f.pow(*k))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn as_scalar(&self) -> Option<Scalar> {
        (self.is_polynomial() && self.num.is_constant()).then(|| self.num.constant_term())
    }

    /// Cancel every denominator factor that divides the numerator.
    pub fn reduce(&mut self) {
        if self.num.is_empty() {
            self.den.clear();
            return;
        }
        let factors: Vec<Poly> = self.den.keys().cloned().collect();
        for f in factors {
            while let Some(k) = self.den.get(&f).copied() {
                match self.num.div_exact(&f) {
                    Some(q) => {
                        self.num = q;
                        if k == 1 {
                            self.den.remove(&f);
                        } else {
                            self.den.insert(f.clone(), k - 1);
                        }
                    }
                    None => break,
                }
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return RationalFunction::zero(self.nvars());
        }
        RationalFunction { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn mul_poly(&self, p: &Poly) -> Self {
        let mut r = RationalFunction { num: &self.num * p, den: self.den.clone() };
        r.reduce();
        r
    }

    /// Expand around the origin inside `truncation`.
    pub fn expand(&self, truncation: &Truncation) -> Result<TruncatedSeries<Scalar>> {
        let mut s = TruncatedSeries::from_poly(&self.num, truncation.clone());
        for (f, k) in &self.den {
            let inv = TruncatedSeries::inverse_of(f, truncation.clone())?;
            for _ in 0..*k {
                s = s.mul_scalar_series(&inv)?;
            }
        }
        Ok(s)
    }

    /// Set variable `v` to `value`. A factor becoming a monomial must divide the numerator.
    pub fn substitute(&self, v: usize, value: &Scalar, names: &[String]) -> Result<Self> {
        self.substitute_all(&[(v, value.clone())], names)
    }

    /// Set several variables at once, so a factor such as `1-q2-q3` is judged at the joint point.
    pub fn substitute_all(&self, point: &[(usize, Scalar)], names: &[String]) -> Result<Self> {
        let at = |p: &Poly| point.iter().fold(p.clone(), |acc, (v, x)| acc.substitute(*v, x));
        let vars = || point.iter().map(|(v, _)| names[*v].clone()).collect::<Vec<_>>().join(",");
        let mut num = at(&self.num);
        let mut factors = Vec::new();
        for (f, k) in &self.den {
            let g = at(f);
            if g.is_empty() {
                return Err(Error::NonIsolatedPole { var: vars(), factor: f.format_with(names) });
            }
            if !g.constant_term().is_zero() {
                factors.push((g, *k));
                continue;
            }
            // split off the monomial content of g
            let mut gcd = g.terms().keys().next().unwrap().clone();
            for m in g.terms().keys() {
                gcd = MultiIndex(gcd.0.iter().zip(&m.0).map(|(a, b)| *a.min(b)).collect());
            }
            let mono = Poly::monomial(g.nvars(), gcd.clone(), Scalar::one());
            let rest = g.div_exact(&mono).expect("monomial content divides");
            for _ in 0..*k {
                num = num
                    .div_exact(&mono)
                    .ok_or_else(|| Error::NonIsolatedPole { var: vars(), factor: f.format_with(names) })?;
            }
            factors.push((rest, *k));
        }
        RationalFunction::new(num, factors)
    }

    /// Residue along `var = 1` under the given convention.
    pub fn residue_at_one(&self, var: usize, convention: ResidueConvention, names: &[String]) -> Result<Self> {
        let n = self.nvars();
        let pole = &Poly::one(n) - &Poly::var(n, var);
        let mut r = self.clone();
        r.reduce();
        let order = r.den.get(&pole).copied().unwrap_or(0);
        if order >= 2 {
            return Err(Error::HigherOrderPole { var: names[var].clone(), order });
        }
        for f in r.den.keys() {
            if f != &pole && f.substitute(var, &Scalar::one()).is_empty() {
                return Err(Error::NonIsolatedPole { var: names[var].clone(), factor: f.format_with(names) });
            }
        }
        if order == 0 {
            return Ok(RationalFunction::zero(n));
        }
        r.den.remove(&pole);
        let at_one = r.substitute(var, &Scalar::one(), names)?;
        Ok(match convention {
            ResidueConvention::Plain => at_one,
            ResidueConvention::Dlog => -&at_one,
        })
    }

    /// Evaluate every variable; errors if a denominator vanishes.
    pub fn eval(&self, point: &[Scalar]) -> Result<Scalar> {
        let d = self.denominator_poly().eval(point);
        if d.is_zero() {
            return Err(structural("denominator vanishes at evaluation point"));
        }
        Ok(&self.num.eval(point) / &d)
    }

    /// Inverse, when the numerator does not vanish at the origin.
    pub fn inv(&self) -> Option<Self> {
        if self.num.constant_term().is_zero() {
            return None;
        }
        let num = self.den.iter().fold(Poly::one(self.nvars()), |acc, (f, k)| &acc * &f.pow(*k));
        RationalFunction::new(num, [(self.num.clone(), 1)]).ok()
    }

    /// See [`Poly::restrict`].
    pub fn restrict(&self, keep: &[usize]) -> Option<Self> {
        let num = self.num.restrict(keep)?;
        let den: Option<Vec<(Poly, u32)>> = self.den.iter().map(|(f, k)| Some((f.restrict(keep)?, *k))).collect();
        RationalFunction::new(num, den?).ok()
    }

    /// Weighted degrees of the numerator minus the (weighted) degree of the denominator.
    /// `None` if some denominator factor is not homogeneous.
    pub fn weighted_degrees(&self, weights: &[i64]) -> Option<Vec<i64>> {
        let mut shift = 0;
        for (f, k) in &self.den {
            match f.weighted_degrees(weights).as_slice() {
                [d] => shift += d * *k as i64,
                _ => return None,
            }
        }
        Some(self.num.weighted_degrees(weights).into_iter().map(|d| d - shift).collect())
    }

    pub fn format_with(&self, names: &[String]) -> String {
        let num = self.num.format_with(names);
        if self.den.is_empty() {
            return num;
        }
        let num = if self.num.len() > 1 { format!("({num})") } else { num };
        let den: Vec<String> = self.den.iter().map(|(f, k)| format!("({})^{}", f.format_with(names), k)).collect();
        format!("{num} / {}", den.join("*"))
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, o: &Self) -> bool {
        if self.den == o.den {
            return self.num == o.num;
        }
        &self.num * &o.denominator_poly() == &o.num * &self.denominator_poly()
    }
}

impl Eq for RationalFunction {}

impl From<Poly> for RationalFunction {
    fn from(p: Poly) -> Self {
        RationalFunction::from_poly(p)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with(&default_names("q", self.nvars())))
    }
}

fn combine(a: &RationalFunction, b: &RationalFunction, sign: &Scalar) -> RationalFunction {
    if a.is_zero() {
        return b.scale(sign);
    }
    if b.is_zero() {
        return a.clone();
    }
    let mut den = a.den.clone();
    for (f, k) in &b.den {
        let e = den.entry(f.clone()).or_insert(0);
        *e = (*e).max(*k);
    }
    let lift = |x: &RationalFunction| {
        den.iter().fold(x.num.clone(), |acc, (f, k)| {
            let have = x.den.get(f).copied().unwrap_or(0);
            &acc * &f.pow(k - have)
        })
    };
    let num = &lift(a) + &lift(b).scale(sign);
    let mut r = RationalFunction { num, den };
    r.reduce();
    r
}

impl<'a> Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn add(self, o: &RationalFunction) -> RationalFunction {
        combine(self, o, &Scalar::one())
    }
}

impl<'a> Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn sub(self, o: &RationalFunction) -> RationalFunction {
        combine(self, o, &Scalar::from_int(-1))
    }
}

impl<'a> Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn mul(self, o: &RationalFunction) -> RationalFunction {
        if self.is_zero() || o.is_zero() {
            return RationalFunction::zero(self.nvars());
        }
        let mut den = self.den.clone();
        for (f, k) in &o.den {
            *den.entry(f.clone()).or_insert(0) += k;
        }
        let mut r = RationalFunction { num: &self.num * &o.num, den };
        r.reduce();
        r
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        self.scale(&Scalar::from_int(-1))
    }
}

impl Zero for RationalFunction {
    /// Zero in a single variable; prefer [`RationalFunction::zero`] with an explicit count.
    fn zero() -> Self {
        RationalFunction::zero(0)
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
}

impl Add for RationalFunction {
    type Output = RationalFunction;
    fn add(self, o: RationalFunction) -> RationalFunction {
        if self.nvars() == 0 && self.is_zero() {
            return o;
        }
        &self + &o
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names() -> Vec<String> {
        default_names("q", 3)
    }

    fn q(k: usize) -> Poly {
        Poly::var(3, k)
    }

    fn one() -> Poly {
        Poly::one(3)
    }

    #[test]
    fn residue_examples() {
        let f = RationalFunction::new(q(2), [(&one() - &q(2), 1)]).unwrap();
        let r = f.residue_at_one(2, ResidueConvention::Dlog, &names()).unwrap();
        assert_eq!(r.as_scalar(), Some(Scalar::from_int(-1)));

        let g = RationalFunction::new((&one() + &q(1)).scale(&Scalar::from_int(2)), [(&one() - &q(1), 1)]).unwrap();
        let r = g.residue_at_one(1, ResidueConvention::Plain, &names()).unwrap();
        assert_eq!(r.as_scalar(), Some(Scalar::from_int(4)));

        let h = RationalFunction::one(3);
        assert!(h.residue_at_one(1, ResidueConvention::Plain, &names()).unwrap().is_zero());
    }

    #[test]
    fn residue_errors() {
        let p = &one() - &q(1);
        let double = RationalFunction::new(one(), [(p.clone(), 2)]).unwrap();
        assert!(matches!(
            double.residue_at_one(1, ResidueConvention::Plain, &names()),
            Err(Error::HigherOrderPole { order: 2, .. })
        ));
        let other = RationalFunction::new(
            one(),
            [(p.clone(), 1), (&one() - &q(1).scale(&Scalar::from_int(1)), 0), ((&p * &(&one() + &q(2))), 1)],
        )
        .unwrap();
        assert!(matches!(
            other.residue_at_one(1, ResidueConvention::Plain, &names()),
            Err(Error::NonIsolatedPole { .. })
        ));
    }

    #[test]
    fn second_exceptional_factor_collapses_to_monomial() {
        // q2 q3 / ((1-q2)(1-q2-q3)) has residue -1 at q2 = 1
        let f = RationalFunction::new(&q(1) * &q(2), [(&one() - &q(1), 1), (&(&one() - &q(1)) - &q(2), 1)]).unwrap();
        let r = f.residue_at_one(1, ResidueConvention::Plain, &names()).unwrap();
        assert_eq!(r.as_scalar(), Some(Scalar::from_int(-1)));
    }

    #[test]
    fn arithmetic_and_equality() {
        let a = RationalFunction::new(q(1), [(&one() - &q(1), 1)]).unwrap();
        let b = RationalFunction::from_poly(one());
        // q/(1-q) + 1 = 1/(1-q)
        let s = &a + &b;
        assert_eq!(s, RationalFunction::new(one(), [(&one() - &q(1), 1)]).unwrap());
        // (1/(1-q)) * (1-q) = 1
        assert_eq!(s.mul_poly(&(&one() - &q(1))), b);
        assert_eq!(a.to_string(), "q2 / (1 - q2)^1");
    }

    #[test]
    fn expansion_matches_geometric_series() {
        let a = RationalFunction::new(q(1), [(&one() - &q(1), 1)]).unwrap();
        let s = a.expand(&Truncation::boxed(vec![2, 5, 2])).unwrap();
        for k in 1..=5 {
            assert_eq!(s.coeff(&MultiIndex(vec![0, k, 0])), Scalar::one());
        }
        assert_eq!(s.terms().len(), 5);
    }
}
