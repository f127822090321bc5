//! Load the shipped fans, check completeness and smoothness, and print the Stanley–Reisner data.

use qc_transition::fixtures;
use qc_transition::toric::stanley_reisner;

fn main() -> qc_transition::Result<()> {
    for name in ["fl123_res", "fl123_sing", "gr24_res", "gr24_sing", "gr25_res", "gr25_sing"] {
        let fan = fixtures::fan(name)?;
        let report = fan.validate(64, 7);
        println!(
            "{name}: {} rays, {} cones, smooth {}, pseudo-complete {}",
            fan.rays().len(),
            fan.cones().len(),
            fan.is_smooth(),
            report.pseudo_complete
        );
        if fan.is_smooth() {
            let sr = stanley_reisner(&fan)?;
            println!("  primitive collections {:?}", sr.primitive_collections);
            println!("  linear relations {:?}", sr.linear_relations);
        }
    }
    Ok(())
}
