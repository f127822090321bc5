//! Quantum products of toric varieties from the I-function.

mod extract;
mod ifunction;
mod operator;

pub use extract::{extract_quantum_matrices, generator_series_matrices, quantum_ring, FitConfig, MirrorResult};
pub use ifunction::{max_z_power, z_coefficient, IFunction, ZVec};
pub use operator::{find_extraction_operators, leading_term_is, Applier, Extraction, Operator};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_rational, MultiIndex, RationalFunction, Scalar, Truncation};
    use crate::ring::GradedRing;
    use crate::toric::{point_class, sr_presentation, DivisorClassData, Fan};

    fn p2() -> (GradedRing, DivisorClassData) {
        let fan =
            Fan::new(2, vec![vec![1, 0], vec![0, 1], vec![-1, -1]], vec![vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        let data = DivisorClassData::new(&fan, vec!["h".into()], vec![vec![1], vec![1], vec![1]]).unwrap();
        let pres = sr_presentation(&fan, &data, None).unwrap();
        let ring = GradedRing::from_presentation(pres, &point_class(&fan, &data), Scalar::from_int(1)).unwrap();
        (ring, data)
    }

    #[test]
    fn beta_zero_term_is_the_unit() {
        let (ring, data) = p2();
        let ifn = IFunction::compute(&ring, &data, Truncation::boxed(vec![3])).unwrap();
        let t = ifn.term(&MultiIndex(vec![0])).unwrap();
        let unit = ring.unit().unwrap();
        let mut want = vec![Scalar::from_int(0); ring.dim()];
        want[unit] = Scalar::from_int(1);
        assert_eq!(t.coeff(0), Some(&want));
        assert_eq!(t.coeffs().len(), 1);
    }

    #[test]
    fn projective_plane_quantum_product() {
        let (ring, data) = p2();
        let ifn = IFunction::compute(&ring, &data, Truncation::boxed(vec![4])).unwrap();
        let res = quantum_ring(&ifn, &FitConfig::new(vec![]), vec!["q".into()]).unwrap();
        let q = &res.quantum;
        assert!(crate::verdict::all_pass(&q.check_all()));
        let h = q.index_of("h").unwrap();
        let h2 = q.index_of("h^2").unwrap();
        let prod = q.product(h, h2);
        let names = vec!["q".to_string()];
        let qq = parse_rational("q", &names).unwrap();
        for (k, c) in prod.iter().enumerate() {
            let want = if Some(k) == q.unit() { qq.clone() } else { RationalFunction::zero(1) };
            assert_eq!(c, &want, "component {k}");
        }
    }
}


#[cfg(test)]
mod grassmannian_tests {
    use super::*;
    use crate::algebra::{parse_poly, Scalar, Truncation};
    use crate::fixtures;
    use crate::ring::{GradedRing, Presentation};
    use crate::toric::{sr_relations, DivisorClassData};

    #[test]
    fn gr24_resolution_matches_fixture() {
        let fan = fixtures::fan("gr24_res").unwrap();
        let names: Vec<String> = ["m1", "m2"].map(String::from).to_vec();
        let coeffs = vec![vec![1, 0], vec![1, -1], vec![1, -1], vec![0, 1], vec![0, 1], vec![1, 0]];
        let data = DivisorClassData::new(&fan, names.clone(), coeffs).unwrap();
        let fx = fixtures::matrix("gr24res_m1").unwrap();
        let pres =
            Presentation::new(names.clone(), vec![1; 2], sr_relations(&fan, &data).unwrap(), fx.basis_polys().unwrap())
                .unwrap();
        let ring =
            GradedRing::from_presentation(pres, &parse_poly("m1^4", &names).unwrap(), Scalar::from_int(2)).unwrap();
        let ifn = IFunction::compute(&ring, &data, Truncation::boxed(vec![3, 8])).unwrap();
        let qv: Vec<String> = ["q1", "q2"].map(String::from).to_vec();
        let fit = FitConfig::new(vec![parse_poly("1-q2", &qv).unwrap()]);
        let res = quantum_ring(&ifn, &fit, qv.clone()).unwrap();
        let want = fixtures::matrix("gr24res_m1").unwrap().to_matrix().unwrap();
        assert_eq!(res.generator_matrices[0], want);
        assert!(res.generator_matrices[0].commutes_with(&res.generator_matrices[1]));
        assert!(crate::verdict::all_pass(&res.quantum.check_all()));
    }
}
