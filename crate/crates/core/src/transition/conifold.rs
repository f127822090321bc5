use crate::algebra::MultiIndex;
use crate::algebra::{Matrix, Poly, RationalFunction, Scalar, Truncation};
use crate::verdict::Verdict;

/// `Σ_{n≥1} (v1·nE)(v2·nE)(v3·nE) n⁻³ qⁿ = (v1·E)(v2·E)(v3·E) q/(1-q)`, compared through order `order`.
pub fn multiple_cover_identity(v: [i64; 3], order: u32) -> Verdict {
    let mut lhs = Poly::zero(1);
    for n in 1..=order as i64 {
        let c = Scalar::from_frac((v[0] * n) * (v[1] * n) * (v[2] * n), n * n * n);
        lhs.add_term(MultiIndex(vec![n as u32]), c);
    }
    let c = Scalar::from_int(v[0] * v[1] * v[2]);
    let one_minus_q = &Poly::one(1) - &Poly::var(1, 0);
    let rhs = RationalFunction::new(Poly::var(1, 0).scale(&c), [(one_minus_q, 1)])
        .and_then(|f| f.expand(&Truncation::boxed(vec![order])))
        .map(|s| s.to_poly());
    let check = format!("multiple cover sum for {v:?} to order {order}");
    match rhs {
        Ok(r) if r == lhs => Verdict::pass(check),
        Ok(r) => {
            Verdict::fail(check, format!("{} vs {}", lhs.format_with(&["q".into()]), r.format_with(&["q".into()])))
        }
        Err(e) => Verdict::fail(check, e.to_string()),
    }
}

/// How a residue compares with `w ↦ (w·E) E`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankOneMatch {
    pub rank: usize,
    /// `Some(±1)` if the residue is `±` the model.
    pub sign: Option<i64>,
}

/// Compare `n` with the rank one operator `w ↦ <w, E> E`.
pub fn rank_one_model(n: &Matrix, e: &[Scalar], pairing: &Matrix) -> RankOneMatch {
    let ge = pairing.transpose().mul_vec(e);
    let dim = n.rows();
    let mut model = Matrix::zero(dim, dim);
    for i in 0..dim {
        for j in 0..dim {
            model.set(i, j, &e[i] * &ge[j]);
        }
    }
    let sign = if *n == model {
        Some(1)
    } else if *n == model.scale(&Scalar::from_int(-1)) {
        Some(-1)
    } else {
        None
    };
    RankOneMatch { rank: n.rank(), sign }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_series() {
        assert!(multiple_cover_identity([1, 1, 1], 12).pass);
        assert!(multiple_cover_identity([2, 3, 5], 12).pass);
        assert!(multiple_cover_identity([-1, 2, 0], 5).pass);
    }

    #[test]
    fn rank_one_sign() {
        let g = Matrix::from_rows(vec![
            vec![Scalar::from_int(0), Scalar::from_int(1)],
            vec![Scalar::from_int(1), Scalar::from_int(0)],
        ]);
        let e = vec![Scalar::from_int(0), Scalar::from_int(1)];
        // <w, E> = w0, so the model sends e0 to E
        let mut n = Matrix::zero(2, 2);
        n.set(1, 0, Scalar::from_int(-1));
        assert_eq!(rank_one_model(&n, &e, &g), RankOneMatch { rank: 1, sign: Some(-1) });
    }
}
