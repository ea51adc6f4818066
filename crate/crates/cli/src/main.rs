use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use galjac_cli::descriptor::{self, Descriptor};
use galjac_cli::report::{Format, Report};
use galjac_cli::{commands, status_of, status_of_error, verify};
use galjac_core::{Error, Result};

#[derive(Parser)]
#[command(name = "galjac", version, about = "Exact Galois-Jacobi and ramification invariants of small groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text, global = true)]
    format: OutputFormat,

    /// Bit cap for certified sign refinement of real cyclotomic values.
    #[arg(long, default_value_t = galjac_core::cyclo::DEFAULT_PRECISION_CAP, global = true)]
    precision_cap: u32,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Character table, Frobenius-Schur types and Adams operations of a group.
    Group {
        /// Descriptor file of kind "group" ("-" reads standard input).
        #[arg(long)]
        input: PathBuf,
    },
    /// Ramification invariants of a local datum (kind "local" or "tame_abelian").
    Local {
        #[arg(long)]
        input: PathBuf,
    },
    /// Global characteristics, decomposition identity and symplectic signs.
    Global {
        #[arg(long)]
        input: PathBuf,
    },
    /// Run a verification suite over the generated corpus.
    Verify {
        /// One of hilbert, adams, twisted-y, gauss, j2, decomposition, symplectic, all.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Largest group order in the corpus.
        #[arg(long, default_value_t = 24)]
        max_order: usize,
    },
}

fn read_input(path: &PathBuf) -> Result<String> {
    let mut text = String::new();
    let res = if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| Error::Descriptor(format!("cannot read {}: {e}", path.display())))?;
    Ok(text)
}

fn load(path: &PathBuf, accepted: &[&str]) -> Result<(Descriptor, serde_json::Value)> {
    let (desc, raw) = descriptor::parse(&read_input(path)?)?;
    let kind = match &desc {
        Descriptor::Group(_) => "group",
        Descriptor::Local(_) => "local",
        Descriptor::TameAbelian(_) => "tame_abelian",
        Descriptor::Global(_) => "global",
    };
    if !accepted.contains(&kind) {
        return Err(Error::Descriptor(format!(
            "kind: expected {}, found {kind}",
            accepted.join(" or ")
        )));
    }
    Ok((desc, raw))
}

fn run(cli: &Cli) -> Result<Report> {
    let cap = cli.precision_cap;
    match &cli.command {
        Command::Group { input } => {
            let (d, raw) = load(input, &["group"])?;
            commands::run_descriptor(&d, raw, cap)
        }
        Command::Local { input } => {
            let (d, raw) = load(input, &["local", "tame_abelian"])?;
            commands::run_descriptor(&d, raw, cap)
        }
        Command::Global { input } => {
            let (d, raw) = load(input, &["global"])?;
            commands::run_descriptor(&d, raw, cap)
        }
        Command::Verify { suite, max_order } => verify::run(
            suite,
            verify::Params {
                max_order: *max_order,
                precision_cap: cap,
            },
        ),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match cli.format {
        OutputFormat::Text => Format::Text,
        OutputFormat::Structured => Format::Structured,
    };
    match run(&cli) {
        Ok(report) => {
            print!("{}", report.render(format));
            ExitCode::from(status_of(&report) as u8)
        }
        Err(e) => {
            match format {
                Format::Text => eprintln!("error: {e}"),
                Format::Structured => println!("{}", serde_json::json!({ "error": e.to_string() })),
            }
            ExitCode::from(status_of_error(&e) as u8)
        }
    }
}
