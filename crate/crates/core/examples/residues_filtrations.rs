//! Residues of the Gr(2,5) operators at q2 = q3 = 1, the subspaces V and W, and the weight filtration.

use qc_transition::pipeline::{build_resolution, Example, Setup};
use qc_transition::transition::{compute_filtration, compute_residues, jordan_blocks, weight_filtration};

fn main() -> qc_transition::Result<()> {
    let setup = Setup::for_example(&Example::Gr25)?;
    let res = build_resolution(&setup)?;
    let ops: Vec<_> = setup.residue_generators.iter().map(|&g| res.mirror.generator_matrices[g].clone()).collect();
    let data = compute_residues(&ops, &setup.exceptional, setup.convention, &setup.novikov)?;
    let pairing = res.quantum().pairing();
    for r in &data.residues {
        println!("N[{}]: rank {}, nilpotency index {}", r.variable, r.matrix.rank(), r.nilpotency);
    }
    for v in data.check_self_adjoint(pairing) {
        println!("{v}");
    }
    let f = compute_filtration(&data.matrices(), pairing);
    println!("dim V = {}, dim W = {}", f.v.dim(), f.w.dim());
    println!("{}", f.check_radical());

    let ns = data.matrices();
    for (a, b) in [(1, 1), (1, 2), (2, 1), (3, 5)] {
        let n = &ns[0].scale(&a.into()) + &ns[1].scale(&b.into());
        let blocks = jordan_blocks(&n)?;
        let wf = weight_filtration(&n)?;
        let dims: Vec<usize> = (-4..=4).map(|k| wf.level(k).dim()).collect();
        println!("a={a} b={b}: Jordan blocks {blocks:?}, dim W_k for k=-4..4 {dims:?}");
    }
    Ok(())
}
