//! Toric fans, divisor data, cohomology presentations and ladder-diagram fans.

mod divisor;
mod fan;
mod ladder;
mod stanley_reisner;

pub use divisor::DivisorClassData;
pub use fan::{subsets, Fan, FanReport, Ray};
pub use ladder::{face_fan, ladder_fans, smooth_subdivisions, Edge, LadderBox, LadderDiagram, LadderFans, Vertex};
pub use stanley_reisner::{point_class, sr_presentation, sr_relations, stanley_reisner, StanleyReisner};

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn load(name: &str) -> Fan {
        let path = format!("{}/fixtures/fans/{name}.fan", env!("CARGO_MANIFEST_DIR"));
        Fan::parse(&std::fs::read_to_string(path).unwrap()).unwrap()
    }

    #[test]
    fn fixture_fans_validate() {
        for name in ["fl123_res", "gr24_res", "gr25_res"] {
            let r = load(name).validate(24, 3);
            assert!(r.simplicial && r.smooth && r.pseudo_complete, "{name}: {r:?}");
        }
        for name in ["fl123_sing", "gr24_sing", "gr25_sing"] {
            let r = load(name).validate(24, 3);
            assert!(!r.simplicial && r.pseudo_complete, "{name}: {r:?}");
        }
    }

    #[test]
    fn grassmannian_primitive_collections() {
        let pc: BTreeSet<Vec<usize>> = load("gr25_res").primitive_collections().into_iter().collect();
        let want: BTreeSet<Vec<usize>> = [vec![1, 3], vec![5, 7], vec![0, 2, 4, 6, 8]].into_iter().collect();
        assert_eq!(pc, want);
    }

    #[test]
    fn ladder_reproduces_grassmannian_fans() {
        let lf = ladder_fans(5, &[2]).unwrap();
        assert!(lf.sing.same_as(&load("gr25_sing")));
        let pc: BTreeSet<Vec<usize>> = [vec![1, 3], vec![5, 7], vec![0, 2, 4, 6, 8]].into_iter().collect();
        let f = lf.with_collections(&pc).expect("candidate");
        assert!(f.same_as(&load("gr25_res")));
        eprintln!("{} candidates, recipe {:?}", lf.candidates.len(), lf.recipe);
        for c in &lf.candidates {
            eprintln!("{:?}", c.primitive_collections());
        }
    }

    #[test]
    fn ladder_flag_matches_up_to_unimodular() {
        let lf = ladder_fans(3, &[1, 2]).unwrap();
        let target = load("fl123_res");
        assert!(lf.candidates.iter().any(|f| f.unimodular_match(&target).is_some()));
        assert!(lf.sing.unimodular_match(&load("fl123_sing")).is_some());
    }
}
