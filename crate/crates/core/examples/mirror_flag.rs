//! I-function of the flag resolution and its three quantum multiplication matrices.

use std::time::Instant;

use qc_transition::fixtures;
use qc_transition::pipeline::{build_resolution, Example, Setup};

fn main() -> qc_transition::Result<()> {
    let t = Instant::now();
    let setup = Setup::for_example(&Example::Fl123)?;
    let res = build_resolution(&setup)?;
    println!("basis {:?}", res.quantum().names());
    for (g, m) in setup.generators.iter().zip(&res.mirror.generator_matrices) {
        let reference = fixtures::matrix(&format!("fl123res_{g}"))?.to_matrix()?;
        println!("{g}⋆  (matches reference: {})\n{}", *m == reference, m.format_with(&setup.novikov));
    }
    for v in res.quantum().check_all() {
        println!("{v}");
    }
    println!("elapsed {:?}", t.elapsed());
    Ok(())
}
