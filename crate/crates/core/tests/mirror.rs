use qc_transition::fixtures;
use qc_transition::pipeline::{build_resolution, Example, RunConfig, Setup};
use qc_transition::Error;

fn resolution(
    example: Example,
    tweak: impl FnOnce(&mut RunConfig),
) -> qc_transition::Result<qc_transition::pipeline::Resolution> {
    let mut cfg = RunConfig::new(example.clone());
    tweak(&mut cfg);
    build_resolution(&Setup::for_example(&example)?.configure(&cfg))
}

#[test]
fn flag_matrices_match_references() {
    let res = resolution(Example::Fl123, |_| {}).unwrap();
    for (k, g) in ["fp1", "fp2", "fp3"].iter().enumerate() {
        assert_eq!(
            res.mirror.generator_matrices[k],
            fixtures::matrix(&format!("fl123res_{g}")).unwrap().to_matrix().unwrap(),
            "{g}"
        );
    }
}

#[test]
fn closed_forms_do_not_depend_on_truncation() {
    let base = resolution(Example::Fl123, |_| {}).unwrap();
    let larger = resolution(Example::Fl123, |c| c.truncation = Some(vec![4, 4, 11])).unwrap();
    assert_eq!(base.mirror.generator_matrices, larger.mirror.generator_matrices);
}

#[test]
fn gr24_first_generator_matches_and_generators_commute() {
    let res = resolution(Example::Gr24, |_| {}).unwrap();
    let m = &res.mirror.generator_matrices;
    assert_eq!(m[0], fixtures::matrix("gr24res_m1").unwrap().to_matrix().unwrap());
    assert!(m[0].commutes_with(&m[1]));
}

#[test]
fn too_few_orders_are_reported() {
    let err = resolution(Example::Fl123, |c| c.truncation = Some(vec![3, 3, 2])).unwrap_err();
    assert!(matches!(err, Error::InsufficientOrders { .. }), "{err}");
}

#[test]
fn missing_ansatz_factor_is_reported() {
    let err = resolution(Example::Fl123, |c| c.ansatz = Some(vec!["1-q2".into()])).unwrap_err();
    assert!(matches!(err, Error::NoClosedForm { .. }), "{err}");
}

/// The classical limit of the quantum ring is the Stanley–Reisner ring.
#[test]
fn classical_limit() {
    let res = resolution(Example::Gr24, |_| {}).unwrap();
    let limit = res.quantum().classical_limit().unwrap();
    assert_eq!(limit.same_products(&res.classical), None);
}
