//! Recover closed rational functions from truncated expansions with a fixed denominator ansatz.
//! Each ansatz factor is allowed once; a squared denominator needs the factor listed twice.

use qc_transition::algebra::{parse_poly, parse_rational, rational_from_series, Poly, Truncation};

fn main() -> qc_transition::Result<()> {
    let names = vec!["q1".to_string(), "q2".to_string(), "q3".to_string()];
    let parse = |xs: &[&str]| xs.iter().map(|a| parse_poly(a, &names)).collect::<Result<Vec<Poly>, _>>();
    let single = parse(&["1-q2", "1-q3", "1-q2-q3"])?;
    let doubled = parse(&["1-q2", "1-q3", "1-q2-q3", "1-q2-q3"])?;
    let truncation = Truncation::boxed(vec![3, 10, 10]);
    for text in ["q2/(1-q2)", "(1+q3)/(1-q3)", "q2*q3/((1-q2)*(1-q3-q2))", "q1*q2*q3/(1-q2-q3)^2"] {
        let f = parse_rational(text, &names)?;
        let series = f.expand(&truncation)?;
        for (label, ansatz) in [("single", &single), ("doubled", &doubled)] {
            match rational_from_series(&series, ansatz, 6, 2) {
                Ok(back) => println!("{text:26} {label:8} -> {}  (round trip {})", back.format_with(&names), back == f),
                Err(e) => println!("{text:26} {label:8} -> no fit: {}", short(&e.to_string())),
            }
        }
    }
    Ok(())
}

fn short(s: &str) -> &str {
    s.get(..60).unwrap_or(s)
}
