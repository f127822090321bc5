//! Closed-form recovery of rational functions from truncated expansions.

use super::monomial::default_names;
use super::poly::Poly;
use super::ratfunc::RationalFunction;
use super::scalar::Scalar;
use super::series::TruncatedSeries;
use crate::error::{structural, Error, Result};

/// Extra orders that must vanish beyond the fitted numerator.
pub const DEFAULT_MARGIN: u32 = 2;
pub const DEFAULT_DEGREE_CAP: u32 = 6;

/// Find `N / D` with `D` dividing the product of the ansatz factors and `deg N ≤ degree_cap`
/// whose expansion equals `s` on its whole truncation.
///
/// Multiplying `s` by the full ansatz product `Q` gives a series that is exact on the truncation
/// box; it must be a polynomial supported at least `margin` orders away from every edge.
pub fn rational_from_series(
    s: &TruncatedSeries<Scalar>,
    ansatz: &[Poly],
    degree_cap: u32,
    margin: u32,
) -> Result<RationalFunction> {
    let n = s.variable_count();
    let names = default_names("q", n);
    let mut q = Poly::one(n);
    for f in ansatz {
        if f.nvars() != n {
            return Err(structural(format!("ansatz factor {f} has {} variables, expected {n}", f.nvars())));
        }
        q = &q * f;
    }
    let bounds = &s.truncation().bounds;
    for v in 0..n {
        let need = q.degree_in(v) + margin;
        if bounds[v] < need {
            return Err(Error::InsufficientOrders { var: names[v].clone(), have: bounds[v], need });
        }
    }
    let t = s.mul_poly(&q);
    let total_cap = degree_cap + q.total_degree().unwrap_or(0);
    let fits = t.terms().keys().all(|m| {
        m.0.iter().zip(bounds).all(|(e, b)| e + margin <= *b)
            && m.total() <= total_cap
            && s.truncation().total.is_none_or(|tb| m.total() + margin <= tb)
    });
    if !fits {
        return Err(Error::NoClosedForm { series: t_to_text(s) });
    }
    RationalFunction::new(t.to_poly(), ansatz.iter().map(|f| (f.clone(), 1)))
}

fn t_to_text(s: &TruncatedSeries<Scalar>) -> String {
    let text = s.to_poly().to_string();
    if text.len() > 400 {
        format!("{}...", &text[..400])
    } else {
        text
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::monomial::MultiIndex;
    use crate::algebra::series::Truncation;
    use proptest::prelude::*;

    fn q(n: usize, k: usize) -> Poly {
        Poly::var(n, k)
    }

    #[test]
    fn geometric_series() {
        let t = Truncation::boxed(vec![6]);
        let mut s = TruncatedSeries::zero(t);
        for k in 1..=6 {
            s.add_term(MultiIndex(vec![k]), &Scalar::from_int(1));
        }
        let one = Poly::one(1);
        let r = rational_from_series(&s, &[&one - &q(1, 0)], 6, 2).unwrap();
        assert_eq!(r, RationalFunction::new(q(1, 0), [(&one - &q(1, 0), 1)]).unwrap());
    }

    #[test]
    fn constant_one() {
        let t = Truncation::boxed(vec![4, 4]);
        let s = TruncatedSeries::from_poly(&Poly::one(2), t);
        let one = Poly::one(2);
        let r = rational_from_series(&s, &[&one - &q(2, 0), &one - &q(2, 1)], 6, 2).unwrap();
        assert_eq!(r.as_scalar(), Some(Scalar::from_int(1)));
    }

    #[test]
    fn failures() {
        let one = Poly::one(1);
        let short = TruncatedSeries::from_poly(&one, Truncation::boxed(vec![2]));
        assert!(matches!(
            rational_from_series(&short, &[&one - &q(1, 0)], 6, 2),
            Err(Error::InsufficientOrders { .. })
        ));
        // 1/(1-2q) is outside the ansatz {1-q}
        let inv =
            TruncatedSeries::inverse_of(&(&one - &q(1, 0).scale(&Scalar::from_int(2))), Truncation::boxed(vec![8]))
                .unwrap();
        assert!(matches!(rational_from_series(&inv, &[&one - &q(1, 0)], 6, 2), Err(Error::NoClosedForm { .. })));
    }

    proptest! {
        #[test]
        fn expand_then_fit_is_identity(
            coeffs in proptest::collection::vec((0u32..3, 0u32..3, -3i64..4), 0..5),
            k2 in 0u32..2, k3 in 0u32..2,
        ) {
            let n = 2;
            let one = Poly::one(n);
            let num = Poly::from_terms(n, coeffs.into_iter().map(|(a, b, c)| (MultiIndex(vec![a, b]), Scalar::from_int(c))));
            let ansatz = vec![&one - &q(n, 0), &(&one - &q(n, 0)) - &q(n, 1)];
            let f = RationalFunction::new(num, [(ansatz[0].clone(), k2), (ansatz[1].clone(), k3)]).unwrap();
            let s = f.expand(&Truncation::boxed(vec![8, 8])).unwrap();
            let back = rational_from_series(&s, &ansatz, 6, 2).unwrap();
            prop_assert_eq!(back, f);
        }
    }
}
