use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

/// Exact characters, Lagrangian algebras and modular invariants of twisted
/// Drinfeld doubles Z(G, α).
#[derive(Parser, Debug)]
#[command(name = "tdouble", version)]
pub struct Cli {
    #[command(flatten)]
    pub config: Config,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Config {
    /// trivial, cyclic:N, dihedral:N, symmetric:N, q8, product:A,B, or a JSON table file
    #[arg(long, global = true, default_value = "dihedral:3")]
    pub group: String,
    /// trivial, theta3:K (dihedral:3 only) or class:K (K-th class of H³(G))
    #[arg(long, global = true, default_value = "trivial", conflicts_with = "cocycle_file")]
    pub cocycle: String,
    /// cochain JSON file, overrides --cocycle
    #[arg(long, global = true)]
    pub cocycle_file: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// worker threads (0 = all cores)
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,
    /// seed for sampled checks
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// bound on |G|
    #[arg(long, global = true)]
    pub max_order: Option<usize>,
    /// ASCII names instead of ω, ε, η, χ
    #[arg(long, global = true)]
    pub ascii: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Cocycle identity, transgression identities and the double-complex check
    CheckCocycle {
        /// test this many random tuples instead of all of them
        #[arg(long)]
        sample: Option<usize>,
    },
    /// Hⁿ(G, ℚ/ℤ) as invariant factors
    Cohomology {
        #[arg(long, default_value_t = 3)]
        degree: usize,
    },
    /// Simple objects with their dimensions
    Simples,
    /// Character table of the simple objects
    CharTable,
    /// Lagrangian algebras with characters and decompositions
    Lagrangians,
    /// All étale algebra data
    Etale,
    /// Physical modular invariants from Z(G×G, α×α⁻¹)
    ModularInvariants,
    /// Decompose a character into simples
    Decompose {
        /// {"order": n, "values": [[c₀, c₁, …], …]} in table column order
        #[arg(long, conflicts_with_all = ["datum_file", "product"])]
        character_file: Option<PathBuf>,
        /// Lagrangian datum JSON
        #[arg(long, conflicts_with = "product")]
        datum_file: Option<PathBuf>,
        /// χ_i·χ_j given as "i,j"
        #[arg(long)]
        product: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.config.jobs > 0 {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.config.jobs).build_global();
    }
    match commands::run(&cli.config, &cli.command) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(commands::exit_code(&e))
        }
    }
}
