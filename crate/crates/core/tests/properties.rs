#![allow(clippy::needless_range_loop)]

use num_traits::Zero;
use proptest::prelude::*;

use qc_transition::algebra::{
    rational_from_series, series_mul, Matrix, MultiIndex, Poly, RationalFunction, Scalar, Subspace, Truncation,
};
use qc_transition::schubert::{quantum_product, SchubertBasis};
use qc_transition::transition::{
    jordan_blocks, multiple_cover_identity, rank_one_model, self_adjoint, weight_filtration,
};

fn scalar() -> impl Strategy<Value = Scalar> {
    (-9i64..=9, 1i64..=5, -9i64..=9, 1i64..=5)
        .prop_map(|(a, b, c, d)| Scalar::new(Scalar::from_frac(a, b).re, Scalar::from_frac(c, d).re))
}

/// Polynomial in `nvars` variables with exponents below `deg` and small integer coefficients.
fn poly(nvars: usize, deg: u32) -> impl Strategy<Value = Poly> {
    prop::collection::vec((prop::collection::vec(0..deg, nvars), -4i64..=4), 0..5).prop_map(move |terms| {
        Poly::from_terms(nvars, terms.into_iter().map(|(e, c)| (MultiIndex(e), Scalar::from_int(c))))
    })
}

fn line(nvars: usize, vars: &[usize]) -> Poly {
    vars.iter().fold(Poly::one(nvars), |p, &v| &p - &Poly::var(nvars, v))
}

proptest! {
    #[test]
    fn scalar_field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv(), Scalar::from_int(1));
        }
    }

    #[test]
    fn expansion_is_multiplicative(p in poly(2, 3), r in poly(2, 3), k in 1u32..3) {
        let t = Truncation::boxed(vec![5, 5]);
        let f = RationalFunction::new(p.clone(), [(line(2, &[0, 1]), k)]).unwrap();
        let g = RationalFunction::new(r.clone(), [(line(2, &[1]), 1)]).unwrap();
        let lhs = (&f * &g).expand(&t).unwrap();
        let rhs = series_mul(&f.expand(&t).unwrap(), &g.expand(&t).unwrap()).unwrap();
        prop_assert_eq!(lhs.to_poly(), rhs.to_poly());
    }

    #[test]
    fn fit_recovers_rational_functions(p in poly(3, 3), mask in 0u8..8) {
        let factors = [line(3, &[1]), line(3, &[2]), line(3, &[1, 2])];
        let den: Vec<(Poly, u32)> = factors.iter().enumerate().filter(|(k, _)| mask & (1 << k) != 0).map(|(_, f)| (f.clone(), 1)).collect();
        let f = RationalFunction::new(p, den).unwrap();
        let series = f.expand(&Truncation::boxed(vec![4, 10, 10])).unwrap();
        let back = rational_from_series(&series, &factors, 6, 2).unwrap();
        prop_assert_eq!(back, f);
    }

    /// `r (1-q2-q3)^k / (1-q2-q3)^k` is regular at q2 = q3 = 1 even though q2 = 1 alone leaves a pole at q3 = 0.
    #[test]
    fn joint_evaluation_sees_removable_factors(r in poly(3, 3), k in 1u32..3, extra in poly(3, 2)) {
        let names: Vec<String> = ["q1", "q2", "q3"].map(String::from).to_vec();
        let l = line(3, &[1, 2]);
        let num = &r + &(&extra * &(0..k).fold(Poly::one(3), |acc, _| &acc * &l));
        let f = RationalFunction::new(num.clone(), [(l.clone(), k)]).unwrap();
        let point = [(1usize, Scalar::from_int(1)), (2usize, Scalar::from_int(1))];
        let got = f.substitute_all(&point, &names).unwrap();
        let at = |p: &Poly| point.iter().fold(p.clone(), |acc, (v, x)| acc.substitute(*v, x));
        let sign = Scalar::from_int(-1).pow(k);
        let want = RationalFunction::from(at(&num).scale(&sign.inv()));
        prop_assert_eq!(got, want);
    }

    #[test]
    fn subspace_dimension_formula(a in prop::collection::vec(prop::collection::vec(-2i64..=2, 5), 0..4),
                                  b in prop::collection::vec(prop::collection::vec(-2i64..=2, 5), 0..4)) {
        let v = |xs: &[Vec<i64>]| Subspace::span(5, xs.iter().map(|x| x.iter().map(|&c| Scalar::from_int(c)).collect::<Vec<_>>()).collect::<Vec<_>>());
        let (a, b) = (v(&a), v(&b));
        prop_assert_eq!(a.sum(&b).dim() + a.intersect(&b).dim(), a.dim() + b.dim());
        prop_assert!(a.sum(&b).contains_space(&a));
        prop_assert!(a.contains_space(&a.intersect(&b)));
    }

    /// A nilpotent Jordan form conjugated by a unimodular matrix keeps its block sizes.
    #[test]
    fn jordan_blocks_survive_conjugation(sizes in prop::collection::vec(1usize..4, 1..4), ops in prop::collection::vec((0usize..9, 0usize..9, -2i64..=2), 0..12)) {
        let n: usize = sizes.iter().sum();
        let mut j = Matrix::zero(n, n);
        let mut start = 0;
        for s in &sizes {
            for t in 1..*s {
                j.set(start + t - 1, start + t, Scalar::from_int(1));
            }
            start += s;
        }
        let mut p = Matrix::identity(n);
        for (r, c, x) in ops {
            let (r, c) = (r % n, c % n);
            if r != c {
                let mut e = Matrix::identity(n);
                e.set(r, c, Scalar::from_int(x));
                p = &p * &e;
            }
        }
        let m = &(&p * &j) * &p.inverse().unwrap();
        let mut want = std::collections::BTreeMap::new();
        for s in &sizes {
            *want.entry(*s).or_insert(0) += 1;
        }
        prop_assert_eq!(jordan_blocks(&m).unwrap(), want);
        let wf = weight_filtration(&m).unwrap();
        prop_assert!(wf.check(&m).iter().all(|v| v.pass));
        for k in 0..=wf.top {
            prop_assert_eq!(wf.graded_dim(k), wf.graded_dim(-k));
        }
    }

    #[test]
    fn rank_one_operators_are_self_adjoint(e in prop::collection::vec(-3i64..=3, 4), g in prop::collection::vec(-3i64..=3, 10)) {
        let mut pairing = Matrix::zero(4, 4);
        let mut it = g.into_iter();
        for i in 0..4 {
            for k in i..4 {
                let x = Scalar::from_int(it.next().unwrap());
                pairing.set(i, k, x.clone());
                pairing.set(k, i, x);
            }
        }
        let e: Vec<Scalar> = e.into_iter().map(Scalar::from_int).collect();
        let ge = pairing.transpose().mul_vec(&e);
        let mut model = Matrix::zero(4, 4);
        for i in 0..4 {
            for k in 0..4 {
                model.set(i, k, &e[i] * &ge[k]);
            }
        }
        prop_assert!(self_adjoint(&model, &pairing, "model").pass);
        let m = rank_one_model(&model, &e, &pairing);
        if !model.is_zero() {
            prop_assert_eq!(m.sign, Some(1));
            prop_assert_eq!(m.rank, 1);
        }
    }

    #[test]
    fn multiple_cover_sums(v in prop::array::uniform3(-5i64..=5), order in 1u32..=12) {
        prop_assert!(multiple_cover_identity(v, order).pass);
    }

    #[test]
    fn quantum_products_commute(n in 3usize..8, a in 0usize..64, b in 0usize..64) {
        let basis = SchubertBasis::new(n).unwrap();
        let pairs = basis.pairs();
        let (l, m) = (pairs[a % pairs.len()], pairs[b % pairs.len()]);
        prop_assert_eq!(quantum_product(&basis, l, m).unwrap(), quantum_product(&basis, m, l).unwrap());
    }
}
