//! Multiple cover contributions of a conifold curve, and the rank one shape of the flag residue.

use qc_transition::algebra::Scalar;
use qc_transition::pipeline::{build_resolution, Example, Setup};
use qc_transition::transition::{classical_element, compute_residues, multiple_cover_identity, rank_one_model};

fn main() -> qc_transition::Result<()> {
    for v in [[1, 1, 1], [1, -1, 2], [-1, -1, -1], [2, 3, 0]] {
        println!("{}", multiple_cover_identity(v, 12));
    }
    let setup = Setup::for_example(&Example::Fl123)?;
    let res = build_resolution(&setup)?;
    let op = res.mirror.generator_matrices[2].clone();
    let data = compute_residues(&[op], &setup.exceptional, setup.convention, &setup.novikov)?;
    let e = classical_element(res.quantum(), "fp1*fp2-fp1*fp3-fp2*fp3")?;
    let m = rank_one_model(&data.residues[0].matrix, &e, res.quantum().pairing());
    println!("exceptional class {:?}", e.iter().map(Scalar::to_string).collect::<Vec<_>>());
    println!("residue rank {}, sign against (w·E)E {:?}", m.rank, m.sign);
    Ok(())
}
