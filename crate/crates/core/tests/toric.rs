use qc_transition::fixtures;
use qc_transition::pipeline::{classical_ring, Example, Setup};
use qc_transition::toric::{face_fan, smooth_subdivisions, stanley_reisner, Fan};

#[test]
fn shipped_fans_validate() {
    for key in ["fl123", "gr24", "gr25"] {
        let res = fixtures::fan(&format!("{key}_res")).unwrap();
        let sing = fixtures::fan(&format!("{key}_sing")).unwrap();
        let r = res.validate(64, 3);
        assert!(r.smooth && r.facet_pairing && r.pseudo_complete, "{key}: {r:?}");
        let s = sing.validate(64, 3);
        assert!(!s.simplicial && s.pseudo_complete, "{key}: {s:?}");
        assert_eq!(res.rays(), sing.rays());
    }
}

#[test]
fn text_round_trip() {
    for name in ["fl123_res", "gr25_sing"] {
        let f = fixtures::fan(name).unwrap();
        assert!(Fan::parse(&f.to_text()).unwrap().same_as(&f));
    }
}

/// The singular fans are the face fans of their rays, and each resolution is one of their smooth subdivisions.
#[test]
fn resolutions_subdivide_face_fans() {
    for key in ["fl123", "gr24", "gr25"] {
        let res = fixtures::fan(&format!("{key}_res")).unwrap();
        let face = face_fan(res.rays()).unwrap();
        assert!(face.same_as(&fixtures::fan(&format!("{key}_sing")).unwrap()), "{key}");
        assert!(smooth_subdivisions(&face, 5).iter().any(|f| f.same_as(&res)), "{key}");
    }
}

/// For a smooth complete toric variety, dim H* = number of maximal cones, and the top
/// degree is one-dimensional.
#[test]
fn cohomology_dimension_is_cone_count() {
    for ex in Example::TRANSITIONS {
        let setup = Setup::for_example(&ex).unwrap();
        let (fan, _, ring) = classical_ring(&setup).unwrap();
        assert_eq!(ring.dim(), fan.cones().len(), "{ex}");
        let sr = stanley_reisner(&fan).unwrap();
        assert_eq!(sr.linear_relations.len(), fan.dim());
        for v in ring.check_all() {
            assert!(v.pass, "{ex}: {v}");
        }
    }
}

#[test]
fn singular_fans_are_rejected_for_stanley_reisner() {
    assert!(stanley_reisner(&fixtures::fan("gr24_sing").unwrap()).is_err());
}

#[test]
fn malformed_fan_text() {
    assert!(Fan::parse("not a fan").is_err());
}
