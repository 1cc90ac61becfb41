//! `cremona`: compose, iterate and verify plane Cremona maps from the shell.

mod batch;
mod commands;
mod config;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use config::{Format, Settings};

/// Exact computation with birational maps of the plane.
#[derive(Debug, Parser)]
#[command(name = "cremona", version, about)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Default, Args)]
pub struct GlobalArgs {
    /// Output format.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Iteration depth for degree growth.
    #[arg(long, global = true)]
    pub n_max: Option<usize>,
    /// Degree cap for projective composition.
    #[arg(long, global = true)]
    pub max_degree: Option<u32>,
    /// Term cap for projective composition.
    #[arg(long, global = true, env = "CREMONA_MAX_TERMS")]
    pub max_terms: Option<usize>,
    /// Search bound for order and relation searches.
    #[arg(long, global = true)]
    pub relation_bound: Option<u32>,
    /// Worker threads for batch mode.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// TOML file with defaults for the options above.
    #[arg(long, global = true)]
    pub config: Option<std::path::PathBuf>,
    /// A `.maps` file; map arguments may then name its entries.
    #[arg(long, global = true)]
    pub maps: Option<std::path::PathBuf>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Print A ∘ B.
    Compose { a: String, b: String },
    /// Print the inverse of A.
    Invert { a: String },
    /// Print [A, B] = A B A⁻¹ B⁻¹.
    Commutator { a: String, b: String },
    /// Print the degrees of A, A², …, Aⁿ.
    Degseq {
        a: String,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Classify the degree growth of A.
    Classify {
        a: String,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Check whether A, B generate a faithful Heisenberg group.
    Verify {
        a: String,
        b: String,
        /// Exit with status 1 unless the embedding is faithful.
        #[arg(long)]
        strict: bool,
    },
    /// Build a family instance from `key=value` parameters.
    Family {
        /// One of pgl3, elema, elemb, torus1, torus2, order2, torusgen.
        variant: String,
        /// Parameters as `key=value`, e.g. `delta=1 gamma=2 s=+1 a=x`.
        params: Vec<String>,
        /// Also verify the resulting pair.
        #[arg(long)]
        verify: bool,
        /// With --verify, exit with status 1 unless the embedding is faithful.
        #[arg(long)]
        strict: bool,
    },
    /// Find polynomials p with p(µ(x)) = λ² p(x).
    ClaimSolve {
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda2: String,
        #[arg(long, default_value_t = 6)]
        max_deg: usize,
    },
    /// Run one command per line of FILE and check trailing expectations.
    Batch { file: std::path::PathBuf },
}

/// Process outcome, ordered by severity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Ok = 0,
    Negative = 1,
    Usage = 2,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { Status::Usage as u8 } else { 0 });
        }
    };
    let settings = match Settings::resolve(&cli.global) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(Status::Usage as u8);
        }
    };
    let status = match &cli.command {
        Command::Batch { file } => batch::run(file, &settings),
        command => match commands::execute(command, &settings) {
            Ok(out) => {
                println!("{}", out.render(settings.format));
                out.status
            }
            Err(e) => {
                eprintln!("error: {e}");
                e.status()
            }
        },
    };
    ExitCode::from(status as u8)
}
