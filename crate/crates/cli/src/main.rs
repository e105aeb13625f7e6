use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use entwine::compalg::Side;
use entwine_cli::commands::{self, check_degree, CliError, Values, DEFAULT_DEGREE};
use entwine_cli::report::CliReport;

#[derive(Parser)]
#[command(name = "entwine", version, about = "Cohomology, cup products and deformations of entwining structures")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Also write the structured report to this path.
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    /// Seed for sampled inputs.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Allow degrees above the hard cap.
    #[arg(long, global = true)]
    unsafe_degree: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a structure file: algebra, coalgebra and bow-tie relations.
    Verify { path: PathBuf },
    /// Betti numbers of the entwined complex.
    Cohom {
        path: PathBuf,
        #[arg(long, default_value = "algebra")]
        side: Side,
        /// `self` (or `regular`), `hom` for Hom(C,A), or a module file.
        #[arg(long, default_value = "self")]
        values: Values,
        #[arg(long, default_value_t = DEFAULT_DEGREE)]
        max_degree: usize,
    },
    /// Cup products of cohomology classes and the graded-commutativity residual.
    Cup {
        path: PathBuf,
        #[arg(long, num_args = 2, value_names = ["M", "N"], default_values_t = [1, 1])]
        deg: Vec<usize>,
        #[arg(long, default_value = "algebra")]
        side: Side,
    },
    /// The ψ-equivariant subcomplex.
    Equivariant {
        path: PathBuf,
        #[arg(long, default_value_t = DEFAULT_DEGREE)]
        max_degree: usize,
    },
    /// Second total cohomology as infinitesimal deformations.
    Deform {
        path: PathBuf,
        #[arg(long, default_value_t = DEFAULT_DEGREE)]
        max_degree: usize,
    },
    /// Write a built-in example structure file.
    Example {
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn run(cli: &Cli, echo: Vec<String>) -> Result<CliReport, CliError> {
    match &cli.command {
        Command::Verify { path } => commands::verify(echo, path),
        Command::Cohom { path, side, values, max_degree } => {
            commands::cohom(echo, path, *side, values, check_degree(*max_degree, cli.unsafe_degree)?)
        }
        Command::Cup { path, deg, side } => {
            check_degree(deg[0] + deg[1] + 1, cli.unsafe_degree)?;
            commands::cup_table(echo, path, *side, deg[0], deg[1])
        }
        Command::Equivariant { path, max_degree } => {
            commands::equivariant(echo, path, check_degree(*max_degree, cli.unsafe_degree)?)
        }
        Command::Deform { path, max_degree } => {
            commands::deform(echo, path, check_degree(*max_degree, cli.unsafe_degree)?, cli.seed)
        }
        Command::Example { name, out } => {
            let (report, text) = commands::write_example(echo, name, out.as_deref())?;
            if out.is_none() {
                print!("{text}");
            }
            Ok(report)
        }
    }
}

/// The arguments as given, minus where the report itself is written.
fn command_echo(args: impl Iterator<Item = String>) -> Vec<String> {
    let mut out = Vec::new();
    let mut skip = false;
    for a in args {
        if std::mem::take(&mut skip) {
            continue;
        }
        if a == "--json" {
            skip = true;
        } else if !a.starts_with("--json=") {
            out.push(a);
        }
    }
    out
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let echo = command_echo(std::env::args().skip(1));
    let report = match run(&cli, echo) {
        Ok(r) => r,
        Err(err) => {
            eprintln!("error: {err}");
            return ExitCode::from(err.code as u8);
        }
    };
    let printing_example = matches!(cli.command, Command::Example { out: None, .. });
    if !printing_example {
        print!("{}", report.to_text());
    }
    if let Some(path) = &cli.json {
        if let Err(err) = std::fs::write(path, report.to_json()) {
            eprintln!("error: {}: {err}", path.display());
            return ExitCode::from(2);
        }
    }
    if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
