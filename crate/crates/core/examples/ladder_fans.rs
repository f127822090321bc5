//! Fans from ladder diagrams, compared with the shipped resolution fans.

use qc_transition::fixtures;
use qc_transition::toric::ladder_fans;

fn main() -> qc_transition::Result<()> {
    for (n, steps, key) in [(5, vec![2], "gr25_res"), (3, vec![1, 2], "fl123_res"), (4, vec![2], "gr24_res")] {
        let lf = ladder_fans(n, &steps)?;
        let reference = fixtures::fan(key)?;
        println!("ladder {n} {steps:?}: {} rays, {} smooth subdivisions", lf.sing.rays().len(), lf.candidates.len());
        for (k, f) in lf.candidates.iter().enumerate() {
            let status = if f.same_as(&reference) {
                "identical".to_string()
            } else if let Some((a, perm)) = f.unimodular_match(&reference) {
                format!("unimodular, ray map {perm:?}, det {}", a.det())
            } else {
                "different".to_string()
            };
            println!("  candidate {k} vs {key}: {status}");
        }
    }
    Ok(())
}
