use num_traits::Zero;

use super::GradedRing;
use crate::algebra::rfmatrix::{rf_vec_monomial_parts, rf_vec_zero};
use crate::algebra::{Matrix, RationalFunction, RfVector, Scalar, Subspace, Vector};
use crate::error::{structural, Error, Result};

/// A named representative of a class in `V/W`.
#[derive(Clone, Debug)]
pub struct QuotientRep {
    pub name: String,
    pub vector: Vector,
}

impl QuotientRep {
    pub fn new(name: impl Into<String>, vector: Vector) -> Self {
        QuotientRep { name: name.into(), vector }
    }
}

/// Ring structure on `V/W` with some Novikov variables evaluated.
///
/// Products of representatives are formed with rational-function coefficients first, then evaluated,
/// so poles that cancel inside `V` do no harm. `keep` lists the Novikov variables left in the result.
pub fn subquotient(
    ring: &GradedRing,
    v: &Subspace,
    w: &Subspace,
    evaluation: &[(usize, Scalar)],
    reps: &[QuotientRep],
    keep: &[usize],
) -> Result<GradedRing> {
    let n = ring.dim();
    if v.ambient() != n || w.ambient() != n {
        return Err(structural("subspaces live in the wrong ambient space"));
    }
    if !v.contains_space(w) {
        return Err(structural("W is not contained in V"));
    }
    let r = reps.len();
    if r + w.dim() != v.dim() {
        return Err(structural(format!("{} representatives for a quotient of dimension {}", r, v.dim() - w.dim())));
    }
    let mut cols: Vec<Vector> = reps.iter().map(|q| q.vector.clone()).collect();
    cols.extend(w.basis().iter().cloned());
    if Subspace::span(n, cols.clone()).dim() != v.dim() || reps.iter().any(|q| !v.contains(&q.vector)) {
        return Err(structural("representatives together with W do not form a basis of V"));
    }
    let proj = left_inverse(n, &cols)?;

    let mut degrees = Vec::with_capacity(r);
    for q in reps {
        let ds: Vec<i64> =
            q.vector.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(k, _)| ring.degrees()[k]).collect();
        match ds.split_first() {
            Some((d, rest)) if rest.iter().all(|e| e == d) => degrees.push(*d),
            _ => return Err(structural(format!("representative {} is not homogeneous", q.name))),
        }
    }

    let nv = ring.nvars();
    let lifted: Vec<RfVector> = reps.iter().map(|q| ring.lift(&q.vector)).collect();
    let mut mult = vec![vec![Vec::new(); r]; r];
    for a in 0..r {
        for b in a..r {
            let mut p = ring.mul(&lifted[a], &lifted[b]);
            for x in p.iter_mut() {
                *x = x
                    .substitute_all(evaluation, ring.novikov())
                    .map_err(|_| Error::EvaluationPole { left: reps[a].name.clone(), right: reps[b].name.clone() })?;
            }
            if rf_vec_monomial_parts(&p).iter().any(|part| !v.contains(part)) {
                return Err(Error::NotClosed { left: reps[a].name.clone(), right: reps[b].name.clone() });
            }
            let mut coords = rf_vec_zero(r, nv);
            for (t, c) in coords.iter_mut().enumerate() {
                let mut s = RationalFunction::zero(nv);
                for (k, x) in p.iter().enumerate() {
                    let f = proj.get(t, k);
                    if !f.is_zero() && !x.is_zero() {
                        s = &s + &x.scale(f);
                    }
                }
                *c = s;
            }
            let coords: Option<RfVector> = coords.iter().map(|x| x.restrict(keep)).collect();
            let coords = coords.ok_or_else(|| structural("an evaluated Novikov variable survives"))?;
            mult[a][b] = coords.clone();
            mult[b][a] = coords;
        }
    }

    let mut pairing = Matrix::zero(r, r);
    for a in 0..r {
        for b in 0..r {
            pairing.set(a, b, ring.pair(&reps[a].vector, &reps[b].vector));
        }
    }
    if r > 0 && pairing.det().is_zero() {
        return Err(Error::DegeneratePairing);
    }
    let unit = ring.unit().and_then(|u| {
        let e = crate::algebra::linalg::unit_vec(n, u);
        reps.iter().position(|q| q.vector == e)
    });
    GradedRing::new(
        reps.iter().map(|q| q.name.clone()).collect(),
        degrees,
        unit,
        keep.iter().map(|&k| ring.novikov()[k].clone()).collect(),
        keep.iter().map(|&k| ring.novikov_degrees()[k]).collect(),
        mult,
        pairing,
    )
}

/// Rows: for each of the given columns, a functional returning its coefficient on their span.
fn left_inverse(n: usize, cols: &[Vector]) -> Result<Matrix> {
    let m = cols.len();
    if m == 0 {
        return Ok(Matrix::zero(0, n));
    }
    let b = Matrix::from_cols(n, cols);
    let (_, pivots) = b.transpose().rref();
    if pivots.len() != m {
        return Err(structural("dependent columns"));
    }
    let sub = Matrix::from_rows(pivots.iter().map(|&k| b.row(k).to_vec()).collect());
    let inv = sub.inverse().ok_or_else(|| structural("dependent columns"))?;
    let mut out = Matrix::zero(m, n);
    for t in 0..m {
        for (s, &k) in pivots.iter().enumerate() {
            out.set(t, k, inv.get(t, s).clone());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::linalg::unit_vec;
    use crate::ring::tests::fl_classical;

    #[test]
    fn zero_subquotient() {
        let r = fl_classical();
        let s = subquotient(&r, &Subspace::zero(6), &Subspace::zero(6), &[], &[], &[]).unwrap();
        assert_eq!(s.dim(), 0);
    }

    #[test]
    fn full_subquotient_is_the_ring() {
        let r = fl_classical();
        let reps: Vec<QuotientRep> = (0..6).map(|k| QuotientRep::new(r.names()[k].clone(), unit_vec(6, k))).collect();
        let s = subquotient(&r, &Subspace::full(6), &Subspace::zero(6), &[], &reps, &[]).unwrap();
        assert!(s.same_products(&r).is_none());
        assert_eq!(s.unit(), Some(0));
    }

    #[test]
    fn non_closed_span_is_reported() {
        let r = fl_classical();
        let v = Subspace::span(6, [unit_vec(6, 0), unit_vec(6, 1)]);
        let reps = vec![QuotientRep::new("1", unit_vec(6, 0)), QuotientRep::new("p1", unit_vec(6, 1))];
        let e = subquotient(&r, &v, &Subspace::zero(6), &[], &reps, &[]).unwrap_err();
        assert!(matches!(e, Error::NotClosed { .. }));
    }
}
