//! Full verification for one example, printed as text: `cargo run --release --example transition_report -- gr25`.

use qc_transition::pipeline::{run, Example, RunConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let example: Example = std::env::args().nth(1).as_deref().unwrap_or("fl123").parse()?;
    let report = run(&RunConfig::new(example))?;
    print!("{}", report.to_text());
    for (section, v) in report.failures() {
        eprintln!("failed in {section}: {v}");
    }
    Ok(())
}
