use std::collections::BTreeMap;

use crate::algebra::{Matrix, Subspace};
use crate::error::{structural, Result};
use crate::verdict::Verdict;

/// `W ⊆ V` cut out by residues, with the radical of the pairing on `V` for comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filtration {
    pub v: Subspace,
    pub w: Subspace,
    /// `V ∩ V^⊥`
    pub radical: Subspace,
}

/// `V = ∩ ker N_b`, `W = V ∩ Σ im N_b`.
pub fn compute_filtration(ns: &[Matrix], pairing: &Matrix) -> Filtration {
    let n = pairing.rows();
    let mut v = Subspace::full(n);
    let mut images = Subspace::zero(n);
    for m in ns {
        v = v.intersect(&Subspace::span(n, m.kernel()));
        images = images.sum(&Subspace::span(n, m.image()));
    }
    let w = v.intersect(&images);
    let radical = v.intersect(&orthogonal(&v, pairing));
    Filtration { v, w, radical }
}

/// `{y : <x, y> = 0 for all x in s}`
pub fn orthogonal(s: &Subspace, pairing: &Matrix) -> Subspace {
    let n = pairing.rows();
    if s.dim() == 0 {
        return Subspace::full(n);
    }
    let gt = pairing.transpose();
    let rows = s.basis().iter().map(|b| gt.mul_vec(b)).collect();
    Subspace::span(n, Matrix::from_rows(rows).kernel())
}

impl Filtration {
    pub fn check_radical(&self) -> Verdict {
        Verdict::from_witness(
            "W = V ∩ V^⊥",
            (self.w != self.radical).then(|| format!("dim W = {}, dim V ∩ V^⊥ = {}", self.w.dim(), self.radical.dim())),
        )
    }
}

/// Monodromy weight filtration of a nilpotent `N`, centred at 0.
#[derive(Clone, Debug)]
pub struct WeightFiltration {
    /// Index of `N`: `N^(top+1) = 0`, `N^top ≠ 0`.
    pub top: i32,
    /// `W_k` for `k = -top-1 ..= top`; below that it is 0, above it everything.
    levels: Vec<Subspace>,
    /// Jordan block size ↦ number of blocks.
    pub jordan: BTreeMap<usize, usize>,
}

impl WeightFiltration {
    pub fn level(&self, k: i32) -> Subspace {
        let n = self.levels[0].ambient();
        if k < -self.top - 1 {
            Subspace::zero(n)
        } else if k > self.top {
            Subspace::full(n)
        } else {
            self.levels[(k + self.top + 1) as usize].clone()
        }
    }

    /// `dim W_k / W_{k-1}`
    pub fn graded_dim(&self, k: i32) -> usize {
        self.level(k).dim() - self.level(k - 1).dim()
    }

    /// `N W_k ⊆ W_{k-2}` and `N^k : Gr_k → Gr_{-k}` bijective for `k > 0`.
    pub fn check(&self, n: &Matrix) -> Vec<Verdict> {
        let mut out = Vec::new();
        let bad = (-self.top..=self.top).find(|&k| !self.level(k - 2).contains_space(&self.level(k).map(n)));
        out.push(Verdict::from_witness("N W_k ⊆ W_{k-2}", bad.map(|k| format!("fails at k = {k}"))));
        let mut bad = None;
        for k in 1..=self.top {
            let nk = n.pow(k as u32);
            let wk = self.level(k);
            let into = self.level(-k).contains_space(&wk.map(&nk));
            let injective = self.level(k - 1).contains_space(&self.level(-k - 1).preimage(&nk).intersect(&wk));
            if !into || !injective || self.graded_dim(k) != self.graded_dim(-k) {
                bad = Some(k);
                break;
            }
        }
        out.push(Verdict::from_witness("N^k : Gr_k ≅ Gr_-k", bad.map(|k| format!("fails at k = {k}"))));
        out
    }
}

/// Jordan block sizes of a nilpotent matrix from the ranks of its powers.
pub fn jordan_blocks(n: &Matrix) -> Result<BTreeMap<usize, usize>> {
    let dim = n.rows();
    let index = n.nilpotency_index().ok_or_else(|| structural("matrix is not nilpotent"))? as usize;
    // r[k] = rank N^k; blocks of size ≥ k number r[k-1] - r[k]
    let mut r = vec![dim];
    let mut p = Matrix::identity(dim);
    for _ in 0..=index {
        p = &p * n;
        r.push(p.rank());
    }
    let at_least = |k: usize| r[k - 1] - r[k];
    let mut out = BTreeMap::new();
    for k in 1..=index {
        let c = at_least(k) - at_least(k + 1);
        if c > 0 {
            out.insert(k, c);
        }
    }
    Ok(out)
}

/// `W_k = Σ_{j ≥ max(0,-k)} ker N^(j+k+1) ∩ im N^j`.
pub fn weight_filtration(n: &Matrix) -> Result<WeightFiltration> {
    let dim = n.rows();
    let index = n.nilpotency_index().ok_or_else(|| structural("matrix is not nilpotent"))? as i32;
    let top = (index - 1).max(0);
    let mut kers = Vec::new();
    let mut ims = Vec::new();
    let mut p = Matrix::identity(dim);
    for _ in 0..=(2 * top + 2) {
        kers.push(Subspace::span(dim, p.kernel()));
        ims.push(Subspace::span(dim, p.image()));
        p = &p * n;
    }
    let ker = |a: i32| if a <= 0 { Subspace::zero(dim) } else { kers[(a as usize).min(kers.len() - 1)].clone() };
    let im = |j: i32| ims[(j as usize).min(ims.len() - 1)].clone();
    let mut levels = Vec::new();
    for k in (-top - 1)..=top {
        let mut acc = Subspace::zero(dim);
        for j in 0.max(-k)..=(top + 1) {
            acc = acc.sum(&ker(j + k + 1).intersect(&im(j)));
        }
        levels.push(acc);
    }
    Ok(WeightFiltration { top, levels, jordan: jordan_blocks(n)? })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Scalar;

    fn shift_blocks(sizes: &[usize]) -> Matrix {
        let dim: usize = sizes.iter().sum();
        let mut m = Matrix::zero(dim, dim);
        let mut o = 0;
        for &s in sizes {
            for i in 0..s.saturating_sub(1) {
                m.set(o + i + 1, o + i, Scalar::from_int(1));
            }
            o += s;
        }
        m
    }

    #[test]
    fn zero_operator() {
        let n = Matrix::zero(4, 4);
        let f = compute_filtration(std::slice::from_ref(&n), &Matrix::identity(4));
        assert_eq!(f.v.dim(), 4);
        assert_eq!(f.w.dim(), 0);
        let wf = weight_filtration(&n).unwrap();
        assert_eq!(wf.jordan, BTreeMap::from([(1, 4)]));
        assert_eq!(wf.level(-1).dim(), 0);
        assert_eq!(wf.level(0).dim(), 4);
    }

    #[test]
    fn single_block_weights() {
        let n = shift_blocks(&[3]);
        let wf = weight_filtration(&n).unwrap();
        assert_eq!(wf.top, 2);
        let dims: Vec<usize> = (-3..=3).map(|k| wf.level(k).dim()).collect();
        assert_eq!(dims, [0, 1, 1, 2, 2, 3, 3]);
        assert!(wf.check(&n).iter().all(|v| v.pass));
    }

    #[test]
    fn mixed_blocks() {
        let n = shift_blocks(&[5, 1, 2, 5, 1]);
        let wf = weight_filtration(&n).unwrap();
        assert_eq!(wf.jordan, BTreeMap::from([(1, 2), (2, 1), (5, 2)]));
        assert_eq!(wf.graded_dim(0), 4);
        assert_eq!(wf.graded_dim(1), 1);
        assert!(wf.check(&n).iter().all(|v| v.pass));
    }

    #[test]
    fn not_nilpotent() {
        assert!(weight_filtration(&Matrix::identity(2)).is_err());
    }
}
