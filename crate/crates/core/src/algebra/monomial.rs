//! Exponent vectors `q^β`.

use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::ParseError;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct MultiIndex(pub Vec<u32>);

impl MultiIndex {
    pub fn zero(n: usize) -> Self {
        MultiIndex(vec![0; n])
    }

    pub fn unit(n: usize, k: usize) -> Self {
        let mut e = vec![0; n];
        e[k] = 1;
        MultiIndex(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn get(&self, k: usize) -> u32 {
        self.0[k]
    }

    /// `self` divides `other` componentwise.
    pub fn divides(&self, other: &MultiIndex) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn checked_sub(&self, other: &MultiIndex) -> Option<MultiIndex> {
        self.0.iter().zip(&other.0).map(|(a, b)| a.checked_sub(*b)).collect::<Option<Vec<_>>>().map(MultiIndex)
    }

    /// Weighted degree `Σ w_k e_k`.
    pub fn weighted(&self, weights: &[i64]) -> i64 {
        self.0.iter().zip(weights).map(|(&e, &w)| e as i64 * w).sum()
    }

    pub fn lcm(&self, other: &MultiIndex) -> MultiIndex {
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// Render with the given variable names; `1` for the empty monomial.
    pub fn format_with(&self, names: &[String]) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(k, &e)| if e == 1 { names[k].clone() } else { format!("{}^{}", names[k], e) })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    /// Parse `q1^2*q2` against an explicit variable list.
    pub fn parse_with(s: &str, names: &[String]) -> Result<Self, ParseError> {
        let mut e = vec![0u32; names.len()];
        let s = s.trim();
        if s == "1" {
            return Ok(MultiIndex(e));
        }
        for factor in s.split('*') {
            let (name, pow) = match factor.split_once('^') {
                Some((n, p)) => (
                    n.trim(),
                    p.trim().parse::<u32>().map_err(|_| ParseError::new(format!("bad exponent in `{factor}`")))?,
                ),
                None => (factor.trim(), 1),
            };
            let k = names
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| ParseError::new(format!("unknown variable `{name}`")))?;
            e[k] += pow;
        }
        Ok(MultiIndex(e))
    }
}

pub fn default_names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|k| format!("{prefix}{k}")).collect()
}

impl Add for &MultiIndex {
    type Output = MultiIndex;
    fn add(self, o: &MultiIndex) -> MultiIndex {
        debug_assert_eq!(self.len(), o.len());
        MultiIndex(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with(&default_names("q", self.len())))
    }
}

/// Without a variable list the length is the largest index mentioned.
impl FromStr for MultiIndex {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let mut max = 0usize;
        for factor in s.split('*') {
            let name = factor.split('^').next().unwrap_or("").trim();
            if name == "1" {
                continue;
            }
            let k: usize = name
                .strip_prefix('q')
                .and_then(|d| d.parse().ok())
                .ok_or_else(|| ParseError::new(format!("unknown variable `{name}`")))?;
            max = max.max(k);
        }
        MultiIndex::parse_with(s, &default_names("q", max))
    }
}

impl Serialize for MultiIndex {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for MultiIndex {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_form() {
        let m = MultiIndex(vec![2, 1, 0]);
        assert_eq!(m.to_string(), "q1^2*q2");
        let names = default_names("q", 3);
        assert_eq!(MultiIndex::parse_with("q1^2*q2", &names).unwrap(), m);
        assert_eq!(MultiIndex::zero(2).to_string(), "1");
    }

    #[test]
    fn sum_is_product() {
        let a = MultiIndex(vec![1, 0, 2]);
        let b = MultiIndex(vec![0, 3, 1]);
        assert_eq!(&a + &b, MultiIndex(vec![1, 3, 3]));
        assert!(a.divides(&(&a + &b)));
        assert_eq!((&a + &b).checked_sub(&b), Some(a));
    }
}
