//! The Schubert oracle against an independent quantum Pieri rule for the hyperplane class:
//! `σ1 ⋆ σ(a,b) = σ(a+1,b) + σ(a,b+1) + q σ(b-1,0)`, the last term only when `a = n-2`, `b ≥ 1`,
//! and the classical terms only when they are partitions in the `2 × (n-2)` box.

use std::collections::BTreeMap;

use qc_transition::schubert::{grassmannian_ring, quantum_product, Pair, SchubertBasis};

fn pieri(n: usize, (a, b): Pair) -> BTreeMap<(Pair, u32), i64> {
    let mut out = BTreeMap::new();
    if a < n - 2 {
        out.insert(((a + 1, b), 0), 1);
    }
    if b < a {
        out.insert(((a, b + 1), 0), 1);
    }
    if a == n - 2 && b >= 1 {
        out.insert(((b - 1, 0), 1), 1);
    }
    out
}

#[test]
fn hyperplane_products_follow_quantum_pieri() {
    for n in 3..=8 {
        let basis = SchubertBasis::new(n).unwrap();
        for &p in basis.pairs() {
            assert_eq!(quantum_product(&basis, (1, 0), p).unwrap(), pieri(n, p), "Gr(2,{n}) σ1 ⋆ σ{p:?}");
        }
    }
}

/// `deg q = n`, so every term has the degree of the product.
#[test]
fn degrees_are_conserved() {
    for n in 3..=7 {
        let basis = SchubertBasis::new(n).unwrap();
        for &l in basis.pairs() {
            for &m in basis.pairs() {
                for ((p, d), c) in quantum_product(&basis, l, m).unwrap() {
                    assert_ne!(c, 0);
                    assert_eq!(p.0 + p.1 + n * d as usize, l.0 + l.1 + m.0 + m.1, "Gr(2,{n}) {l:?}⋆{m:?}");
                }
            }
        }
    }
}

/// Euler characteristic of Gr(2,n) is n(n-1)/2.
#[test]
fn ring_dimensions() {
    for n in 3..=7 {
        assert_eq!(grassmannian_ring(&SchubertBasis::new(n).unwrap()).unwrap().dim(), n * (n - 1) / 2);
    }
}
