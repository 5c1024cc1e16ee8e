//! `nichols`: command-line front end for the engine.

mod commands;
mod config;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use nichols_core::catalog::CatalogError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Failed(String),
}

impl From<CatalogError> for CliError {
    fn from(e: CatalogError) -> Self {
        match e {
            CatalogError::UnknownCase(_) | CatalogError::NoLifting(_) | CatalogError::Parse(_) | CatalogError::CasePredicateViolated { .. } => {
                CliError::Usage(e.to_string())
            }
            other => CliError::Failed(other.to_string()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Nichols,
    Lifting,
}

#[derive(Parser, Debug)]
#[command(name = "nichols", version, about = "Exact q-commutator, PBW and lifting computations for rank-two Nichols algebras")]
pub struct Cli {
    /// Session config (TOML): root order, braiding, realization, parameters.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for randomized commands.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Cartan matrix of the configured braiding.
    Cartan,
    /// Reflected braiding at a vertex (1-based).
    Reflect {
        #[arg(long)]
        vertex: usize,
    },
    /// Generalized Dynkin diagram.
    Dynkin,
    /// Dynkin diagrams in the Weyl orbit.
    WeylOrbit {
        #[arg(long, default_value_t = 64)]
        cap: usize,
    },
    /// Lyndon words up to a length.
    Lyndon {
        #[arg(long)]
        max_len: usize,
    },
    /// Expands a super letter, e.g. `x1 x1 x2` or `112`.
    ExpandSuperletter { word: String },
    /// Coproduct of an element.
    Coproduct { expr: String },
    /// `Delta(a) - a (x) 1 - g (x) a`; exit 1 when nonzero.
    SkewDefect {
        expr: String,
        #[arg(long)]
        group: String,
    },
    /// PBW normal form modulo a catalog presentation or a relation file.
    Reduce {
        expr: String,
        #[arg(long, conflicts_with = "relations", required_unless_present = "relations")]
        case: Option<String>,
        /// Use the lifting instead of the Nichols relations of the case.
        #[arg(long, requires = "case")]
        lifting: bool,
        /// One relation per line, head first.
        #[arg(long)]
        relations: Option<PathBuf>,
        /// Overlap completion bound.
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Nichols presentation of a catalog case.
    Nichols { id: String },
    /// Lifting of a catalog case, with parameter admissibility.
    Lifting { id: String },
    /// Verifies a case (or all cases).
    Verify {
        #[arg(required_unless_present = "all")]
        id: Option<String>,
        #[arg(long)]
        all: bool,
        /// Realization file (TOML), or `standard` for Z/12 x Z/12 with g_i = e_i.
        #[arg(long)]
        realization: Option<String>,
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
        #[arg(long)]
        degree_bound: Option<usize>,
        /// Complete only to one past the top degree.
        #[arg(long)]
        bounded: bool,
    },
    /// Graded dimensions of a Nichols presentation by rank counting.
    OracleDim {
        #[arg(long)]
        case: String,
        #[arg(long)]
        bound: usize,
    },
    /// Lifted root vector and Serre forms of a case.
    RootSerre { id: String },
    /// Print-parse round trip on random elements.
    Roundtrip {
        #[arg(long, default_value_t = 500)]
        trials: usize,
    },
    /// Lists catalog case ids.
    Cases,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => e.exit(),
    };
    match commands::run(&cli) {
        Ok(out) => {
            print!("{}", out.render(cli.format, &cli.command));
            if out.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(CliError::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(CliError::Failed(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
