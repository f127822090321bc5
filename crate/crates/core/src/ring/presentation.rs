//! Graded rings given by generators and homogeneous relations.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::{parse_poly, Matrix, MultiIndex, Poly, Scalar, Subspace, Vector};
use crate::error::{structural, Error, Result};

/// `C[g_1..g_n] / (relations)` with a chosen homogeneous basis.
///
/// Generator weights are complex degrees; ring degrees elsewhere are real (twice as large).
#[derive(Clone, Debug)]
pub struct Presentation {
    generators: Vec<String>,
    weights: Vec<u32>,
    relations: Vec<Poly>,
    basis: Vec<(String, Poly)>,
    basis_degree: Vec<u32>,
    /// Per complex degree: monomials and the basis coordinates of each.
    reducers: BTreeMap<u32, (Vec<MultiIndex>, Vec<Vector>)>,
    top: u32,
}

fn monomials_of_degree(weights: &[u32], d: u32) -> Vec<MultiIndex> {
    fn go(weights: &[u32], k: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
        if k == weights.len() {
            if left == 0 {
                out.push(MultiIndex(cur.clone()));
            }
            return;
        }
        let w = weights[k].max(1);
        for e in 0..=left / w {
            cur.push(e);
            go(weights, k + 1, left - e * w, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(weights, 0, d, &mut Vec::new(), &mut out);
    out
}

fn weighted(m: &MultiIndex, weights: &[u32]) -> u32 {
    m.0.iter().zip(weights).map(|(e, w)| e * w).sum()
}

fn homogeneous_degree(p: &Poly, weights: &[u32]) -> Option<u32> {
    let mut it = p.terms().keys().map(|m| weighted(m, weights));
    let d = it.next()?;
    it.all(|e| e == d).then_some(d)
}

fn coords_in(p: &Poly, mons: &[MultiIndex]) -> Vector {
    mons.iter().map(|m| p.coeff(m)).collect()
}

impl Presentation {
    /// Build and validate. The basis must be homogeneous and, degree by degree,
    /// independent and spanning modulo the relations; the top degree must be one-dimensional.
    pub fn new(
        generators: Vec<String>,
        weights: Vec<u32>,
        relations: Vec<Poly>,
        basis: Vec<(String, Poly)>,
    ) -> Result<Self> {
        if generators.len() != weights.len() || weights.contains(&0) {
            return Err(structural("each generator needs a positive weight"));
        }
        let mut basis_degree = Vec::new();
        for (name, p) in &basis {
            let d = homogeneous_degree(p, &weights)
                .ok_or_else(|| structural(format!("basis element {name} is zero or not homogeneous")))?;
            basis_degree.push(d);
        }
        for r in &relations {
            if homogeneous_degree(r, &weights).is_none() {
                return Err(structural(format!("relation {} is not homogeneous", r.format_with(&generators))));
            }
        }
        let top = *basis_degree.iter().max().ok_or_else(|| structural("empty basis"))?;
        let maxw = *weights.iter().max().unwrap_or(&1);
        let mut pres =
            Presentation { generators, weights, relations, basis, basis_degree, reducers: BTreeMap::new(), top };
        for d in 0..=top + maxw {
            let red = pres.build_degree(d)?;
            pres.reducers.insert(d, red);
        }
        if pres.basis_degree.iter().filter(|&&d| d == top).count() != 1 {
            return Err(Error::Presentation {
                degree: 2 * top as usize,
                msg: "top degree is not one-dimensional".into(),
            });
        }
        Ok(pres)
    }

    /// Parse generators, relations and basis from expression strings.
    pub fn parse(generators: &[&str], weights: &[u32], relations: &[&str], basis: &[(&str, &str)]) -> Result<Self> {
        let names: Vec<String> = generators.iter().map(|s| s.to_string()).collect();
        let rels = relations.iter().map(|r| parse_poly(r, &names)).collect::<Result<Vec<_>, _>>()?;
        let basis =
            basis.iter().map(|(n, e)| Ok((n.to_string(), parse_poly(e, &names)?))).collect::<Result<Vec<_>>>()?;
        Presentation::new(names, weights.to_vec(), rels, basis)
    }

    /// Pick standard monomials (lex order, smallest first) as the basis.
    pub fn with_monomial_basis(generators: Vec<String>, weights: Vec<u32>, relations: Vec<Poly>) -> Result<Self> {
        let n = generators.len();
        let mut basis = Vec::new();
        let mut d = 0;
        let mut empty_run = 0;
        let maxw = *weights.iter().max().unwrap_or(&1);
        while empty_run < maxw {
            let mons = monomials_of_degree(&weights, d);
            let rel = Subspace::span(mons.len(), relation_multiples(&relations, &weights, d, &mons, n));
            let mut acc = rel.clone();
            let mut found = 0;
            for (k, m) in mons.iter().enumerate() {
                let e = crate::algebra::linalg::unit_vec(mons.len(), k);
                if !acc.contains(&e) {
                    acc = acc.sum(&Subspace::span(mons.len(), [e]));
                    let p = Poly::monomial(n, m.clone(), Scalar::from_int(1));
                    basis.push((p.format_with(&generators), p));
                    found += 1;
                }
            }
            empty_run = if found == 0 { empty_run + 1 } else { 0 };
            d += 1;
            if d > 64 {
                return Err(structural("quotient is not finite-dimensional"));
            }
        }
        Presentation::new(generators, weights, relations, basis)
    }

    fn build_degree(&self, d: u32) -> Result<(Vec<MultiIndex>, Vec<Vector>)> {
        let n = self.generators.len();
        let mons = monomials_of_degree(&self.weights, d);
        let rels = relation_multiples(&self.relations, &self.weights, d, &mons, n);
        let rel = Subspace::span(mons.len(), rels);
        let idx: Vec<usize> = (0..self.basis.len()).filter(|&i| self.basis_degree[i] == d).collect();
        let bvecs: Vec<Vector> = idx.iter().map(|&i| coords_in(&self.basis[i].1, &mons)).collect();
        let all = rel.sum(&Subspace::span(mons.len(), bvecs.clone()));
        let err = |msg: &str| Error::Presentation { degree: 2 * d as usize, msg: msg.into() };
        if all.dim() != mons.len() {
            return Err(err("basis does not span modulo the relations"));
        }
        if rel.dim() + bvecs.len() != mons.len() {
            return Err(err("basis is not independent modulo the relations"));
        }
        let mut cols = bvecs;
        cols.extend(rel.basis().iter().cloned());
        let a = Matrix::from_cols(mons.len(), &cols);
        let inv = a.inverse().ok_or_else(|| err("singular normal form system"))?;
        let total = self.basis.len();
        let reducer = (0..mons.len())
            .map(|k| {
                let mut v = vec![Scalar::zero(); total];
                for (t, &i) in idx.iter().enumerate() {
                    v[i] = inv.get(t, k).clone();
                }
                v
            })
            .collect();
        Ok((mons, reducer))
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn relations(&self) -> &[Poly] {
        &self.relations
    }

    pub fn basis(&self) -> &[(String, Poly)] {
        &self.basis
    }

    /// Complex degrees of the basis elements.
    pub fn basis_degrees(&self) -> &[u32] {
        &self.basis_degree
    }

    pub fn top_degree(&self) -> u32 {
        self.top
    }

    pub fn top_index(&self) -> usize {
        self.basis_degree.iter().position(|&d| d == self.top).expect("validated")
    }

    /// Basis coordinates of a polynomial in the generators.
    pub fn reduce(&self, p: &Poly) -> Vector {
        let mut out = vec![Scalar::zero(); self.basis.len()];
        for (m, c) in p.terms() {
            let d = weighted(m, &self.weights);
            let Some((mons, red)) = self.reducers.get(&d) else {
                // above the checked range everything vanishes
                continue;
            };
            let k = mons.iter().position(|x| x == m).expect("monomial of this degree");
            crate::algebra::linalg::axpy(&mut out, c, &red[k]);
        }
        out
    }

    pub fn parse_and_reduce(&self, expr: &str) -> Result<Vector> {
        Ok(self.reduce(&parse_poly(expr, &self.generators)?))
    }
}

fn relation_multiples(relations: &[Poly], weights: &[u32], d: u32, mons: &[MultiIndex], n: usize) -> Vec<Vector> {
    let mut out = Vec::new();
    for r in relations {
        let Some(dr) = homogeneous_degree(r, weights) else { continue };
        if dr > d {
            continue;
        }
        for m in monomials_of_degree(weights, d - dr) {
            let shifted = r.shift(&m);
            debug_assert_eq!(shifted.nvars(), n);
            out.push(coords_in(&shifted, mons));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fl() -> Presentation {
        Presentation::parse(
            &["p1", "p2"],
            &[1, 1],
            &["p1^2 + p2^2 - p1*p2", "p1^3", "p2^3", "p1^2*p2 - p1*p2^2"],
            &[("1", "1"), ("p1", "p1"), ("p2", "p2"), ("p1^2", "p1^2"), ("p2^2", "p2^2"), ("p1^2*p2", "p1^2*p2")],
        )
        .unwrap()
    }

    #[test]
    fn flag_normal_forms() {
        let p = fl();
        assert_eq!(p.top_degree(), 3);
        // p1*p2 = p1^2 + p2^2
        let v = p.parse_and_reduce("p1*p2").unwrap();
        assert_eq!(v[3], Scalar::from_int(1));
        assert_eq!(v[4], Scalar::from_int(1));
        assert!(p.parse_and_reduce("p1^3").unwrap().iter().all(Zero::is_zero));
        assert!(p.parse_and_reduce("p1^2*p2^2").unwrap().iter().all(Zero::is_zero));
        let v = p.parse_and_reduce("p1*p2^2").unwrap();
        assert_eq!(v[5], Scalar::from_int(1));
    }

    #[test]
    fn bad_basis_reports_degree() {
        let e = Presentation::parse(
            &["p1", "p2"],
            &[1, 1],
            &["p1^2 + p2^2 - p1*p2", "p1^3", "p2^3", "p1^2*p2 - p1*p2^2"],
            &[("1", "1"), ("p1", "p1"), ("p2", "p2"), ("p1^2", "p1^2"), ("x", "p1^2+p2^2-p1*p2"), ("t", "p1^2*p2")],
        )
        .unwrap_err();
        assert!(matches!(e, Error::Presentation { degree: 4, .. }), "{e}");
    }

    #[test]
    fn monomial_basis_of_projective_plane() {
        let p = Presentation::with_monomial_basis(vec!["h".into()], vec![1], vec![Poly::var(1, 0).pow(3)]).unwrap();
        assert_eq!(p.basis().len(), 3);
        assert_eq!(p.top_degree(), 2);
    }

    #[test]
    fn weighted_generators() {
        // H*(Gr(2,4)) with d of weight 1 and delta of weight 2
        let p = Presentation::parse(
            &["d", "delta"],
            &[1, 2],
            &["d^3 - 2*d*delta", "d^2*delta - delta^2"],
            &[("1", "1"), ("d", "d"), ("d^2", "d^2"), ("e", "d^2-2*delta"), ("d^3", "d^3"), ("d^4", "d^4")],
        )
        .unwrap();
        assert_eq!(p.basis_degrees(), &[0, 1, 2, 2, 3, 4]);
        let v = p.parse_and_reduce("delta^2").unwrap();
        assert_eq!(v[5], Scalar::from_frac(1, 2));
    }
}
