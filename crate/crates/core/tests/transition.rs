use qc_transition::algebra::ResidueConvention;
use qc_transition::pipeline::{build_resolution, run, Example, RunConfig, Setup};
use qc_transition::transition::{compute_filtration, compute_residues, weight_filtration};

#[test]
fn dlog_residue_is_minus_plain() {
    for ex in [Example::Fl123, Example::Gr24] {
        let setup = Setup::for_example(&ex).unwrap();
        let res = build_resolution(&setup).unwrap();
        let ops: Vec<_> = setup.residue_generators.iter().map(|&g| res.mirror.generator_matrices[g].clone()).collect();
        let plain = compute_residues(&ops, &setup.exceptional, ResidueConvention::Plain, &setup.novikov).unwrap();
        let dlog = compute_residues(&ops, &setup.exceptional, ResidueConvention::Dlog, &setup.novikov).unwrap();
        let (p, d) = (plain.matrices(), dlog.matrices());
        assert_eq!(d[0], p[0].scale(&(-1).into()), "{ex}");
        let pairing = res.quantum().pairing();
        let (fp, fd) = (compute_filtration(&p, pairing), compute_filtration(&d, pairing));
        assert_eq!((fp.v, fp.w), (fd.v, fd.w));
    }
}

/// Gr(2,4): one block of size 3 and five of size 1 on the eight-dimensional ring, so the
/// graded pieces have dimensions 1, 6, 1 in weights -2, 0, 2.
#[test]
fn gr24_weight_filtration_dimensions() {
    let setup = Setup::for_example(&Example::Gr24).unwrap();
    let res = build_resolution(&setup).unwrap();
    let op = res.mirror.generator_matrices[setup.residue_generators[0]].clone();
    let n = compute_residues(&[op], &setup.exceptional, setup.convention, &setup.novikov).unwrap().matrices().remove(0);
    let wf = weight_filtration(&n).unwrap();
    let dims: Vec<usize> = (-3..=2).map(|k| wf.level(k).dim()).collect();
    assert_eq!(wf.jordan.clone().into_iter().collect::<Vec<_>>(), [(1, 5), (3, 1)]);
    assert_eq!(dims, [0, 1, 1, 7, 7, 8]);
    assert!(wf.check(&n).iter().all(|v| v.pass));
}

/// The only failures of the Gr(2,4) run are the two reference matrices that disagree with the theory.
#[test]
fn gr24_failures_are_the_known_reference_conflicts() {
    let report = run(&RunConfig::new(Example::Gr24)).unwrap();
    let failed: Vec<String> = report.failures().into_iter().map(|(_, v)| v.check.clone()).collect();
    assert_eq!(failed, ["m2⋆ equals the reference matrix", "N equals the reference matrix (plain convention)"]);
    let n = report.find("residues", "N equals the reference matrix (plain convention)").unwrap();
    assert_eq!(n.witness.as_deref().map(|w| w.starts_with("(5,3): -2 vs 4; (7,5): -2 vs 4")), Some(true), "{n}");
}

#[test]
fn flag_and_gr25_reports_pass() {
    for ex in [Example::Fl123, Example::Gr25] {
        let report = run(&RunConfig::new(ex.clone())).unwrap();
        assert!(report.pass, "{ex}: {:?}", report.failures());
    }
}
