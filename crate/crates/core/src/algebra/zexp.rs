//! Finite Laurent expansions in the loop parameter `z`.

use std::collections::BTreeMap;

use super::scalar::Scalar;
use super::series::Coeff;

#[derive(Clone, Debug, PartialEq)]
pub struct ZExpansion<V> {
    coeffs: BTreeMap<i32, V>,
}

impl<V: Coeff> Default for ZExpansion<V> {
    fn default() -> Self {
        ZExpansion { coeffs: BTreeMap::new() }
    }
}

impl<V: Coeff> ZExpansion<V> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(power: i32, v: V) -> Self {
        let mut z = Self::new();
        z.add_at(power, &v);
        z
    }

    pub fn coeffs(&self) -> &BTreeMap<i32, V> {
        &self.coeffs
    }

    pub fn coeff(&self, power: i32) -> Option<&V> {
        self.coeffs.get(&power)
    }

    pub fn add_at(&mut self, power: i32, v: &V) {
        if v.is_null() {
            return;
        }
        match self.coeffs.get_mut(&power) {
            Some(x) => {
                x.add_assign_ref(v);
                if x.is_null() {
                    self.coeffs.remove(&power);
                }
            }
            None => {
                self.coeffs.insert(power, v.clone());
            }
        }
    }

    pub fn max_power(&self) -> Option<i32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn min_power(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    /// Multiply by `z^k`.
    pub fn shift(&self, k: i32) -> Self {
        ZExpansion { coeffs: self.coeffs.iter().map(|(p, v)| (p + k, v.clone())).collect() }
    }

    /// Drop every power below `floor`.
    pub fn truncate_below(&self, floor: i32) -> Self {
        ZExpansion { coeffs: self.coeffs.range(floor..).map(|(p, v)| (*p, v.clone())).collect() }
    }
}

impl<V: Coeff> Coeff for ZExpansion<V> {
    fn is_null(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add_assign_ref(&mut self, other: &Self) {
        for (p, v) in &other.coeffs {
            self.add_at(*p, v);
        }
    }
    fn scaled(&self, s: &Scalar) -> Self {
        let mut out = ZExpansion::new();
        for (p, v) in &self.coeffs {
            out.add_at(*p, &v.scaled(s));
        }
        out
    }
}
