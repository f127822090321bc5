//! Exact entrywise comparison of quantum matrices, as done by `qct diff`.

use qc_transition::algebra::RationalFunction;
use qc_transition::fixtures;
use qc_transition::report::{diff_fixtures, diff_matrices};

fn main() -> qc_transition::Result<()> {
    let a = fixtures::matrix("fl123res_fp3")?;
    println!("fixture against itself: {} differences", diff_fixtures(&a, &a)?.len());

    let m = a.to_matrix()?;
    let mut perturbed = m.clone();
    let x = perturbed.get(2, 0).clone();
    perturbed.set(2, 0, &x + &RationalFunction::one(m.nvars()));
    for d in diff_matrices(&m, &perturbed, &a.variables)? {
        println!("entry ({}, {}): {} vs {}", d.row + 1, d.col + 1, d.left, d.right);
    }

    let other = fixtures::matrix("gr24res_m1")?;
    match diff_fixtures(&a, &other) {
        Ok(_) => println!("unexpected: shapes agree"),
        Err(e) => println!("shape mismatch reported: {e}"),
    }
    Ok(())
}
