//! Acceptance criteria 1 to 8, one line each. Runs without the libtest harness so the
//! summary is always printed; the process fails if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use qc_transition::algebra::{Matrix, ResidueConvention, RfMatrix};
use qc_transition::fixtures;
use qc_transition::mirror::{
    extract_quantum_matrices, find_extraction_operators, leading_term_is, Applier, Extraction, FitConfig, Operator,
};
use qc_transition::pipeline::{build_resolution, run, run_ladder, Example, Resolution, RunConfig, Setup};
use qc_transition::report::{diff_matrices, TransitionReport};
use qc_transition::schubert::{fl123_ring, gr24_ring, gr25_ring};
use qc_transition::toric::ladder_fans;
use qc_transition::transition::{compute_filtration, compute_residues, jordan_blocks, multiple_cover_identity};
use qc_transition::Verdict;

type Outcome = Result<Vec<String>, qc_transition::Error>;

struct Example3 {
    setup: Setup,
    res: Resolution,
    report: TransitionReport,
    elapsed: Duration,
}

fn load(example: Example) -> qc_transition::Result<Example3> {
    let setup = Setup::for_example(&example)?;
    let t = Instant::now();
    let res = build_resolution(&setup)?;
    let elapsed = t.elapsed();
    let report = run(&RunConfig::new(example))?;
    Ok(Example3 { setup, res, report, elapsed })
}

/// Failing verdicts of the report sections whose title starts with one of `prefixes`.
fn section_failures(report: &TransitionReport, prefixes: &[&str]) -> Vec<String> {
    let mut out = Vec::new();
    for p in prefixes {
        let sections: Vec<_> = report.sections.iter().filter(|s| s.title.starts_with(p)).collect();
        if sections.is_empty() {
            out.push(format!("{}: no section `{p}`", report.example));
        }
        for s in sections {
            out.extend(s.verdicts.iter().filter(|v| !v.pass).map(|v| format!("{} / {}: {v}", report.example, s.title)));
        }
    }
    out
}

fn compare(label: &str, computed: &RfMatrix, reference: &str) -> qc_transition::Result<Option<String>> {
    let fx = fixtures::matrix(reference)?;
    let diffs = diff_matrices(computed, &fx.to_matrix()?, &fx.variables)?;
    Ok((!diffs.is_empty()).then(|| format!("{label}: {} entries differ from {reference}", diffs.len())))
}

fn compare_scalar(label: &str, computed: &Matrix, reference: &str) -> qc_transition::Result<Option<String>> {
    let nvars = fixtures::matrix(reference)?.variables.len();
    compare(label, &RfMatrix::from_scalar(computed, nvars), reference)
}

fn generator<'a>(e: &'a Example3, name: &str) -> &'a RfMatrix {
    let g = e.setup.generators.iter().position(|x| x == name).expect("generator");
    &e.res.mirror.generator_matrices[g]
}

fn residue_matrices(e: &Example3, convention: ResidueConvention) -> qc_transition::Result<Vec<Matrix>> {
    let ops: Vec<RfMatrix> =
        e.setup.residue_generators.iter().map(|&g| e.res.mirror.generator_matrices[g].clone()).collect();
    Ok(compute_residues(&ops, &e.setup.exceptional, convention, &e.setup.novikov)?.matrices())
}

fn criterion_1(fl: &Example3) -> Outcome {
    let mut bad = Vec::new();
    for g in ["fp1", "fp2", "fp3"] {
        bad.extend(compare(&format!("{g}⋆"), generator(fl, g), &format!("fl123res_{g}"))?);
    }
    if fl.elapsed > Duration::from_secs(30) {
        bad.push(format!("runtime {:?} exceeds 30 s", fl.elapsed));
    }
    Ok(bad)
}

fn criterion_2(fl: &Example3) -> Outcome {
    let mut bad = Vec::new();
    let n = residue_matrices(fl, ResidueConvention::Dlog)?;
    bad.extend(compare_scalar("N", &n[0], "fl123res_N")?);
    bad.extend(section_failures(&fl.report, &["residues", "filtration", "weight filtration", "quotient", "topology"]));
    for (check, name) in
        [("induced fp1⋆ equals the reference p1⋆", "p1"), ("induced fp2⋆ equals the reference p2⋆", "p2")]
    {
        if !fl.report.find("quotient V/W and θ", check).is_some_and(|v| v.pass) {
            bad.push(format!("induced operator does not match {name}⋆"));
        }
    }
    Ok(bad)
}

fn criterion_3(gr: &Example3) -> Outcome {
    let mut bad = Vec::new();
    for g in ["m1", "m2"] {
        bad.extend(compare(&format!("{g}⋆"), generator(gr, g), &format!("gr24res_{g}"))?);
    }
    let n = residue_matrices(gr, ResidueConvention::Plain)?;
    bad.extend(compare_scalar("N", &n[0], "gr24res_N")?);
    let sections = ["filtration", "weight filtration", "quotient", "W0/W-1 with θ(m1^2-2*m1*m2) = +i", "topology"];
    bad.extend(section_failures(&gr.report, &sections));
    if !gr
        .report
        .find("W0/W-1 with θ(m1^2-2*m1*m2) = +i(d^2-2*delta)", "θ preserves the pairing")
        .is_some_and(|v| v.pass)
    {
        bad.push("pairing preservation on W0/W-1 not established".into());
    }
    Ok(bad)
}

fn criterion_4(gr: &Example3) -> Outcome {
    let mut bad = section_failures(
        &gr.report,
        &["quantum ring", "residues", "filtration", "weight filtration", "quotient", "topology"],
    );
    let q = gr.res.quantum();
    let listed = fixtures::gr25_products()?;
    for p in &listed.products {
        let (l, r) = (q.index_of(&p.left).expect("basis"), q.index_of(&p.right).expect("basis"));
        if *q.product(l, r) != q.parse_element(&p.value)? {
            bad.push(format!("{} ⋆ {} differs", p.left, p.right));
        }
    }
    let ns = residue_matrices(gr, ResidueConvention::Dlog)?;
    for (k, n) in ns.iter().enumerate() {
        if n.nilpotency_index().is_none() {
            bad.push(format!("N{} is not nilpotent", k + 2));
        }
    }
    let f = compute_filtration(&ns, q.pairing());
    if (f.v.dim(), f.w.dim()) != (12, 2) {
        bad.push(format!("dim V = {}, dim W = {}", f.v.dim(), f.w.dim()));
    }
    for (a, b) in [(1, 1), (1, 2), (2, 1), (3, 5)] {
        let n = &ns[0].scale(&a.into()) + &ns[1].scale(&b.into());
        let blocks: Vec<(usize, usize)> = jordan_blocks(&n)?.into_iter().collect();
        if blocks != [(1, 10), (5, 2)] {
            bad.push(format!("Jordan blocks for a={a} b={b}: {blocks:?}"));
        }
    }
    if gr.elapsed > Duration::from_secs(300) {
        bad.push(format!("runtime {:?} exceeds 5 min", gr.elapsed));
    }
    Ok(bad)
}

fn criterion_5(gr: &Example3) -> Outcome {
    let mut bad = Vec::new();
    let ifn = &gr.res.ifunction;
    let shipped = fixtures::gr25_operators()?;
    let mut applier = Applier::new(ifn);
    let (mut operators, mut applied) = (Vec::new(), Vec::new());
    for (i, text) in shipped.operators.iter().enumerate() {
        let op = Operator::parse(text, gr.setup.novikov.len(), ifn.truncation().clone())?;
        let s = applier.apply(&op)?;
        if let Some(w) = leading_term_is(&s, i, ifn.ring().dim()) {
            bad.push(format!("D{i}: {w}"));
        }
        operators.push(op);
        applied.push(s);
    }
    let ansatz = gr
        .setup
        .ansatz
        .iter()
        .map(|a| qc_transition::algebra::parse_poly(a, &gr.setup.novikov))
        .collect::<Result<Vec<_>, _>>()?;
    let fit = FitConfig::new(ansatz);
    let from_shipped = extract_quantum_matrices(ifn, &Extraction { operators, applied }, &fit)?;
    let targets: Vec<_> = gr.setup.basis.iter().map(|(_, p)| p.clone()).collect();
    let auto = extract_quantum_matrices(ifn, &find_extraction_operators(ifn, &targets)?, &fit)?;
    if from_shipped != auto {
        bad.push("automatic operators give different matrices".into());
    }
    if from_shipped != gr.res.mirror.generator_matrices {
        bad.push("shipped operators disagree with the pipeline matrices".into());
    }
    Ok(bad)
}

fn criterion_6(rings: &[&Example3]) -> Outcome {
    let mut bad = Vec::new();
    let g24 = gr24_ring()?;
    let d = g24.mul_matrix(&g24.lift(&g24.reduce_expr("d")?));
    bad.extend(compare("d⋆", &d, "gr24_d")?);
    let g25 = gr25_ring()?;
    let w10 = g25.index_of("w10").expect("w10");
    bad.extend(compare("w10⋆", &g25.mul_matrix(&g25.basis_vector(w10)), "gr25_w10")?);
    let mut all =
        vec![("Gr(2,4)".to_string(), g24), ("Gr(2,5)".to_string(), g25), ("Fl(1,2,3)".to_string(), fl123_ring()?)];
    all.extend(rings.iter().map(|e| (format!("{} resolution", e.setup.key), e.res.quantum().clone())));
    for (label, ring) in &all {
        for v in ring
            .check_all()
            .iter()
            .filter(|v| ["frobenius", "grading", "pairing"].contains(&v.check.as_str()) && !v.pass)
        {
            bad.push(format!("{label}: {v}"));
        }
    }
    Ok(bad)
}

fn criterion_7() -> Outcome {
    let mut bad = Vec::new();
    let gr25 = fixtures::fan("gr25_res")?;
    let lf = ladder_fans(5, &[2])?;
    if !lf.candidates.iter().any(|f| f.same_as(&gr25)) {
        bad.push("no ladder fan for (5,[2]) is identical to the gr25 fan".into());
    }
    if gr25.cones().len() != 20 {
        bad.push(format!("gr25 fan has {} maximal cones", gr25.cones().len()));
    }
    let fl = fixtures::fan("fl123_res")?;
    if !ladder_fans(3, &[1, 2])?.candidates.iter().any(|f| f.unimodular_match(&fl).is_some()) {
        bad.push("no ladder fan for (3,[1,2]) is unimodularly equivalent to the fl123 fan".into());
    }
    for (n, steps) in [(5, vec![2]), (3, vec![1, 2])] {
        let r = run_ladder(n, &steps)?;
        bad.extend(r.failures().into_iter().map(|(s, v)| format!("ladder {n} {steps:?} / {s}: {v}")));
    }
    Ok(bad)
}

fn criterion_8(all: &[&Example3]) -> Outcome {
    let mut bad = Vec::new();
    for e in all {
        for v in e.res.quantum().check_all().iter().filter(|v| !v.pass) {
            bad.push(format!("{}: {v}", e.setup.key));
        }
        for m in &e.res.mirror.generator_matrices {
            for o in &e.res.mirror.generator_matrices {
                if !m.commutes_with(o) {
                    bad.push(format!("{}: generator matrices do not commute", e.setup.key));
                }
            }
        }
        let wanted = |c: &str| {
            c.contains("self-adjoint")
                || c.starts_with("V and W unchanged")
                || c.starts_with("classical limit")
                || c.starts_with("multiple cover sum")
                || c.contains("independent of (a,b)")
        };
        for s in &e.report.sections {
            bad.extend(
                s.verdicts.iter().filter(|v| wanted(&v.check) && !v.pass).map(|v| format!("{}: {v}", e.setup.key)),
            );
        }
    }
    for v in [[1, 1, 1], [1, -2, 3], [-1, 2, 2], [0, 5, 1]].map(|v| multiple_cover_identity(v, 12)) {
        if !v.pass {
            bad.push(v.to_string());
        }
    }
    Ok(bad)
}

fn main() -> ExitCode {
    let t = Instant::now();
    let loaded = (load(Example::Fl123), load(Example::Gr24), load(Example::Gr25));
    let (fl, g4, g5) = match loaded {
        (Ok(a), Ok(b), Ok(c)) => (a, b, c),
        (a, b, c) => {
            for e in [a.err(), b.err(), c.err()].into_iter().flatten() {
                println!("setup failed: {e}");
            }
            return ExitCode::FAILURE;
        }
    };
    let criteria: Vec<(&str, Outcome)> = vec![
        ("Fl(1,2,3) resolution matrices", criterion_1(&fl)),
        ("Fl(1,2,3) residue and transition", criterion_2(&fl)),
        ("Gr(2,4) matrices, residue, filtrations and transitions", criterion_3(&g4)),
        ("Gr(2,5) products, residues, filtration and transition", criterion_4(&g5)),
        ("Gr(2,5) extraction operators", criterion_5(&g5)),
        ("Schubert oracle", criterion_6(&[&fl, &g4, &g5])),
        ("ladder fans", criterion_7()),
        ("property suites", criterion_8(&[&fl, &g4, &g5])),
    ];
    let mut failed = 0;
    println!();
    for (k, (label, outcome)) in criteria.iter().enumerate() {
        let verdict = match outcome {
            Ok(bad) if bad.is_empty() => Verdict::pass(label.to_string()),
            Ok(bad) => Verdict::fail(label.to_string(), bad.join("; ")),
            Err(e) => Verdict::fail(label.to_string(), format!("error: {e}")),
        };
        failed += usize::from(!verdict.pass);
        println!("criterion {}: {verdict}", k + 1);
    }
    println!("{} of {} criteria pass ({:?})", criteria.len() - failed, criteria.len(), t.elapsed());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
