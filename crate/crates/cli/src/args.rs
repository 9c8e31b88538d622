use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;

#[derive(Debug, Parser)]
#[command(name = "fslp", version, about = "Real spectrum of the fractional Dirichlet Sturm-Liouville problem -ᶜD^α D^α y = λy on [0, 1]")]
pub struct Cli {
    /// Output format [default: table]
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Significant digits for printed reals (table1 defaults to 6, other
    /// commands print full precision)
    #[arg(long, global = true)]
    pub precision: Option<usize>,

    /// key = value settings file; falls back to $FSLP_CONFIG
    #[arg(long, global = true, env = "FSLP_CONFIG")]
    pub config: Option<PathBuf>,

    /// Suppress warnings on stderr
    #[arg(long, global = true)]
    pub quiet: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Equation {
    Fe1,
    Fe2,
    Fe3,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Eigenvalue counts and first/last bracketing intervals per α
    Table1 {
        /// Fractional orders in (1/2, 1); repeat or separate with commas.
        /// Defaults to the 18 reference values from 0.78 to 0.9898.
        #[arg(long = "alpha", value_delimiter = ',')]
        alphas: Vec<String>,

        /// Also refine the eigenvalues of every bracket
        #[arg(long)]
        refine: bool,
    },

    /// Full spectrum report for one α: N*, brackets, refined eigenvalues
    Eig {
        #[arg(long)]
        alpha: String,

        /// Root tolerance, |E| ≤ tol and |Δλ| ≤ tol (1 + λ)
        #[arg(long)]
        tol: Option<f64>,

        /// Refine only the first N brackets
        #[arg(long)]
        max_brackets: Option<usize>,
    },

    /// Mittag-Leffler function E_{δ,θ}(z) for real z
    Ml {
        #[arg(long)]
        delta: f64,

        #[arg(long)]
        theta: f64,

        #[arg(long, allow_negative_numbers = true)]
        z: f64,
    },

    /// Sample the fundamental solutions of fe1, fe2 (ψ) or fe3 on a grid
    Fss {
        #[arg(long, value_enum)]
        equation: Equation,

        #[arg(long)]
        alpha: f64,

        /// λ, required for fe3
        #[arg(long, allow_negative_numbers = true)]
        lambda: Option<f64>,

        /// a:b, for fe1 and fe2
        #[arg(long, default_value = "0:1", allow_hyphen_values = true)]
        interval: String,

        /// start:end:count with count ≥ 2
        #[arg(long, allow_hyphen_values = true)]
        grid: String,
    },
}
