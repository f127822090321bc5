//! Reproduce the listed Gr(2,5) resolution products and show the three denominator families.

use qc_transition::fixtures;
use qc_transition::pipeline::{build_resolution, Example, Setup};

fn main() -> qc_transition::Result<()> {
    let setup = Setup::for_example(&Example::Gr25)?;
    let res = build_resolution(&setup)?;
    let q = res.quantum();
    let listed = fixtures::gr25_products()?;
    let mut agree = 0;
    for p in &listed.products {
        let got = q.product(q.index_of(&p.left).expect("basis"), q.index_of(&p.right).expect("basis"));
        if *got == q.parse_element(&p.value)? {
            agree += 1;
        } else {
            println!("differs: {} ⋆ {}", p.left, p.right);
        }
    }
    println!("{agree} of {} listed products agree", listed.products.len());
    for (l, r) in [("m1", "m1^3*m2"), ("m2", "m1^2*m2"), ("m3", "m1^2*m3")] {
        let (Some(i), Some(j)) = (q.index_of(l), q.index_of(r)) else { continue };
        let terms: Vec<String> = q
            .product(i, j)
            .iter()
            .zip(q.names())
            .filter(|(x, _)| !x.is_zero())
            .map(|(x, b)| format!("({})·{b}", x.format_with(&setup.novikov)))
            .collect();
        println!("{l} ⋆ {r} = {}", terms.join(" + "));
    }
    Ok(())
}
