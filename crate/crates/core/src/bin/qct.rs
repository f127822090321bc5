use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use qc_transition::algebra::ResidueConvention;
use qc_transition::fixtures::{self, MatrixFixture};
use qc_transition::pipeline::{ladder_fan_files, run, Example, Format, RunConfig};
use qc_transition::report::{diff_fixtures, TransitionReport};
use qc_transition::toric::Fan;

#[derive(Parser)]
#[command(name = "qct", about = "Quantum cohomology of toric resolutions and extremal transitions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run an example end to end: fl123, gr24, gr25, or `ladder <n> <steps>`.
    Run {
        example: String,
        /// For `ladder`: n and comma-separated steps.
        args: Vec<String>,
        /// Per-variable truncation bounds, comma separated.
        #[arg(long, value_delimiter = ',')]
        truncation: Option<Vec<u32>>,
        #[arg(long)]
        convention: Option<ResidueConvention>,
        /// Denominator factors, comma separated (e.g. `1-q2,1-q3`).
        #[arg(long, value_delimiter = ',')]
        ansatz: Option<Vec<String>>,
        #[arg(long, default_value = "text")]
        format: Format,
        /// Report file; printed to stdout when absent. Ladder fan files go next to it (or into the current directory).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write every matrix of the report as JSON into this directory.
        #[arg(long)]
        dump_matrices: Option<PathBuf>,
    },
    /// Exact entrywise comparison of two matrix files.
    Diff { computed: PathBuf, reference: PathBuf },
    /// Validate and print a fan, by fixture name (e.g. gr25_res) or file path.
    Fan { fan: String },
    /// Shipped reference data.
    Fixtures {
        #[command(subcommand)]
        action: FixtureAction,
    },
}

#[derive(Subcommand)]
enum FixtureAction {
    List,
}

fn main() -> ExitCode {
    match dispatch(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

type AnyResult<T> = Result<T, Box<dyn std::error::Error>>;

fn dispatch(cli: Cli) -> AnyResult<ExitCode> {
    match cli.command {
        Command::Run { example, args, truncation, convention, ansatz, format, out, dump_matrices } => {
            let example = if example == "ladder" {
                let [n, steps] = args.as_slice() else {
                    return Err("usage: qct run ladder <n> <steps>".into());
                };
                let steps = steps.split(',').map(str::parse).collect::<Result<Vec<i64>, _>>()?;
                Example::Ladder { n: n.parse()?, steps }
            } else {
                example.parse()?
            };
            let cfg = RunConfig { example: example.clone(), truncation, convention, ansatz, format, out };
            let report = run(&cfg)?;
            emit(&report, &cfg)?;
            if let Example::Ladder { n, steps } = &example {
                let dir = cfg.out.as_deref().and_then(Path::parent).unwrap_or(Path::new("."));
                for (name, text) in ladder_fan_files(*n, steps)? {
                    std::fs::write(dir.join(&name), text)?;
                }
            }
            if let Some(dir) = dump_matrices {
                std::fs::create_dir_all(&dir)?;
                for m in report.sections.iter().flat_map(|s| &s.matrices) {
                    let name = format!("{}_{}.json", report.example, file_stem(&m.element));
                    std::fs::write(dir.join(name), serde_json::to_string_pretty(m)?)?;
                }
            }
            for (section, v) in report.failures() {
                eprintln!("FAIL [{section}] {}", v.check);
            }
            Ok(if report.pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Diff { computed, reference } => {
            let a: MatrixFixture = serde_json::from_str(&std::fs::read_to_string(&computed)?)?;
            let b: MatrixFixture = serde_json::from_str(&std::fs::read_to_string(&reference)?)?;
            let diffs = diff_fixtures(&a, &b)?;
            for d in &diffs {
                println!("({},{}): {} vs {}", d.row + 1, d.col + 1, d.left, d.right);
            }
            println!("{} differing entries", diffs.len());
            Ok(if diffs.is_empty() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Fan { fan } => {
            let f = if Path::new(&fan).exists() {
                Fan::parse(&std::fs::read_to_string(&fan)?)?
            } else {
                fixtures::fan(&fan)?
            };
            print!("{}", f.to_text());
            let r = f.validate(64, 7);
            println!("{}", serde_json::to_string_pretty(&r)?);
            println!("primitive collections: {:?}", f.primitive_collections());
            Ok(ExitCode::SUCCESS)
        }
        Command::Fixtures { action: FixtureAction::List } => {
            for p in fixtures::list() {
                println!("{p}");
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn file_stem(element: &str) -> String {
    let s: String = element
        .replace('θ', "theta")
        .replace('⋆', "")
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect();
    s.trim_matches('_').to_string()
}

fn emit(report: &TransitionReport, cfg: &RunConfig) -> AnyResult<()> {
    let text = match cfg.format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json(),
    };
    match &cfg.out {
        Some(p) => std::fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}
