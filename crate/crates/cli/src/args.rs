//! Command-line argument definitions.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use s3bundle::EquivalenceLevel;

/// Classify the total spaces of 3-sphere bundles over the 4-sphere.
///
/// A pair of integers (m, n) with n >= 1 indexes a closed 7-manifold; the
/// subcommands compute its invariants and decide homotopy equivalence,
/// homeomorphism, and diffeomorphism. All arithmetic is exact.
#[derive(Debug, Parser)]
#[command(name = "s3bundle", version, max_term_width = 100)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format. `text` and `json` apply to single-result commands;
    /// `csv` and `jsonl` apply to `table` (where `text` means `csv` and
    /// `json` means `jsonl`).
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Enumeration window for `classes`: scan 0 <= m < window. Must be a
    /// positive multiple of lcm(56, n). Defaults to 56 * n.
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub window: Option<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Jsonl,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Invariants of the total space indexed by (m, n)
    Invariants {
        #[arg(allow_negative_numbers = true)]
        m: i64,
        #[arg(allow_negative_numbers = true)]
        n: i64,
    },
    /// Strongest equivalence between two indexed total spaces, with a
    /// per-condition breakdown
    Compare {
        #[arg(allow_negative_numbers = true)]
        m: i64,
        #[arg(allow_negative_numbers = true)]
        n: i64,
        #[arg(allow_negative_numbers = true)]
        m_prime: i64,
        #[arg(allow_negative_numbers = true)]
        n_prime: i64,
    },
    /// Number of diffeomorphism classes in the homeomorphism class of the
    /// indexed total space
    Count {
        #[arg(allow_negative_numbers = true)]
        m: i64,
        #[arg(allow_negative_numbers = true)]
        n: i64,
        /// Also run the independent direct count and compare; a mismatch is
        /// an internal error (exit 3)
        #[arg(long)]
        oracle: bool,
    },
    /// Enumerate equivalence classes of indices over one Euler number
    Classes {
        #[arg(allow_negative_numbers = true)]
        n: i64,
        /// Which relation to partition by
        #[arg(long, value_enum)]
        level: LevelArg,
    },
    /// Survey table over a range of Euler numbers, one row per (n, parity
    /// of m)
    Table {
        n_min: i64,
        n_max: i64,
        /// Write rows to this file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Convert between (m, n) and Milnor (k, l) indexing
    Convert {
        #[command(subcommand)]
        direction: ConvertDirection,
    },
    /// Modular counting primitives
    Modcount {
        #[command(subcommand)]
        kind: ModcountKind,
    },
}

#[derive(Debug, Subcommand)]
pub enum ConvertDirection {
    /// (m, n) -> (k, l) with k = n + m, l = -m
    ToMilnor {
        #[arg(allow_negative_numbers = true)]
        m: i64,
        #[arg(allow_negative_numbers = true)]
        n: i64,
    },
    /// (k, l) -> (m, n) with m = -l, n = k + l; requires k + l >= 1
    FromMilnor {
        #[arg(allow_negative_numbers = true)]
        k: i64,
        #[arg(allow_negative_numbers = true)]
        l: i64,
    },
}

#[derive(Debug, Subcommand)]
pub enum ModcountKind {
    /// How many distinct squares there are modulo k
    Squares {
        #[arg(allow_negative_numbers = true)]
        k: i64,
    },
    /// How many distinct values q(q + 1) takes modulo k
    Products {
        #[arg(allow_negative_numbers = true)]
        k: i64,
    },
}

/// Equivalence level as selected on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LevelArg {
    Homotopy,
    Homeo,
    Diffeo,
}

impl LevelArg {
    pub fn to_level(self) -> EquivalenceLevel {
        match self {
            LevelArg::Homotopy => EquivalenceLevel::HomotopyEquivalent,
            LevelArg::Homeo => EquivalenceLevel::Homeomorphic,
            LevelArg::Diffeo => EquivalenceLevel::Diffeomorphic,
        }
    }

    /// The token as typed on the command line, echoed into JSON `inputs`.
    pub fn token(self) -> &'static str {
        match self {
            LevelArg::Homotopy => "homotopy",
            LevelArg::Homeo => "homeo",
            LevelArg::Diffeo => "diffeo",
        }
    }
}
