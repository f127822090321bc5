//! Quantum Pieri products on Gr(2,5) and the ring checks of the Schubert oracle.

use qc_transition::schubert::{gr24_ring, gr25_ring, name, quantum_product, SchubertBasis};

fn main() -> qc_transition::Result<()> {
    let basis = SchubertBasis::new(5)?;
    for &(l, m) in &[((1, 0), (3, 3)), ((1, 0), (3, 2)), ((2, 1), (3, 1)), ((1, 1), (3, 3))] {
        let terms: Vec<String> =
            quantum_product(&basis, l, m)?.into_iter().map(|((p, d), c)| format!("{c}·q^{d}·{}", name(p))).collect();
        println!("{} * {} = {}", name(l), name(m), terms.join(" + "));
    }
    for (label, ring) in [("Gr(2,4)", gr24_ring()?), ("Gr(2,5)", gr25_ring()?)] {
        println!("{label}: basis {:?}", ring.names());
        for v in ring.check_all() {
            println!("  {v}");
        }
    }
    Ok(())
}
