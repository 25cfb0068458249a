use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use semidirect::selftest::{self, SelftestConfig};
use semidirect::Rational;
use semidirect_cli::{report, run_jobs, Instance, Summary};

/// Derivations and first cohomology of finite-dimensional algebras and
/// their semidirect products, in exact rational arithmetic.
#[derive(Parser)]
#[command(name = "semidirect", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse and validate an instance file without running its jobs.
    Validate { file: PathBuf },
    /// Run the jobs of an instance file.
    Run {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write the report here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check invariants and theorems on seeded random instances and fixtures.
    Selftest {
        #[arg(long, default_value_t = SelftestConfig::default().seed)]
        seed: u64,
        #[arg(long, default_value_t = SelftestConfig::default().max_dim)]
        max_dim: usize,
        #[arg(long, default_value_t = SelftestConfig::default().cases)]
        cases: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn load(file: &Path) -> Result<Instance, ExitCode> {
    Instance::from_path(file).map_err(|e| {
        eprintln!("error: {e}");
        ExitCode::from(e.exit_code())
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match cli.command {
        Cmd::Validate { file } => match load(&file) {
            Ok(inst) => {
                println!(
                    "valid: {} algebras, {} modules, {} characters, {} jobs",
                    inst.algebras.len(),
                    inst.modules.len(),
                    inst.characters.len(),
                    inst.jobs.len()
                );
                ExitCode::SUCCESS
            }
            Err(code) => code,
        },
        Cmd::Run { file, format, out } => {
            let inst = match load(&file) {
                Ok(inst) => inst,
                Err(code) => return code,
            };
            let outcomes = run_jobs(&inst);
            let text = match format {
                Format::Text => report::to_text(&outcomes),
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&report::to_json(&outcomes)).expect("report serializes");
                    s.push('\n');
                    s
                }
            };
            match out {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(1);
                    }
                }
                None => print!("{text}"),
            }
            ExitCode::from(Summary::of(&outcomes).exit_code())
        }
        Cmd::Selftest { seed, max_dim, cases } => {
            let config = SelftestConfig {
                seed,
                max_dim,
                cases,
                ..SelftestConfig::default()
            };
            match selftest::run::<Rational>(&config) {
                Ok(summary) => {
                    print!("{summary}");
                    if summary.passed() {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(3)
                    }
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(1)
                }
            }
        }
    }
}
