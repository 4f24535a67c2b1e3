mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

/// Construct and verify self-complementary 2-subset-regular 3-hypergraphs.
#[derive(Debug, Parser)]
#[command(name = "schyper", version)]
pub struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Kv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the order-n hypergraph (n >= 6, n ≡ 2 mod 4) and write its edge list.
    Construct {
        #[arg(long)]
        n: usize,
        /// Output file; the edge list goes to stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check regularity, edge balance and an antimorphism for an edge-list file.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 2)]
        t: usize,
        /// `swap`, `identity`, `search`, or the path of a permutation file.
        #[arg(long, default_value = "swap")]
        tau: String,
        /// Node budget for `--tau search`.
        #[arg(long)]
        budget: Option<u64>,
        /// Allow antimorphism search at orders 9 and 10.
        #[arg(long)]
        extended: bool,
    },
    /// Per-vertex K4 counts, automorphism vertex orbits and the Euler characteristic.
    Invariants {
        #[arg(long = "in")]
        input: PathBuf,
        /// Node budget for the orbit computation.
        #[arg(long)]
        budget: Option<u64>,
        /// Allow exhaustive orbit computation above order 10.
        #[arg(long)]
        extended: bool,
    },
    /// Parity of C(n-i, k-i) for i = 0..=t.
    Parity {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        t: u64,
    },
    /// Residues of admissible orders modulo a power of two.
    Residues {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        t: u64,
        #[arg(long = "mod")]
        modulus: u64,
        /// Scan orders below this bound (default: sixteen periods).
        #[arg(long)]
        bound: Option<u64>,
    },
    /// Enumerate every hypergraph with the given antimorphism and keep the t-subset-regular ones.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, default_value_t = 2)]
        t: usize,
        /// `swap` or the path of a permutation file.
        #[arg(long, default_value = "swap")]
        tau: String,
        /// Maximum number of candidates.
        #[arg(long, default_value_t = schyper::search::DEFAULT_CAP)]
        cap: u64,
        /// Enumerate only the first `cap` candidates instead of refusing.
        #[arg(long)]
        truncate: bool,
        /// Write each survivor as a numbered edge-list file into this directory.
        #[arg(long)]
        emit: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.status)
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.status)
        }
    }
}
