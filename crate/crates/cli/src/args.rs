use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qtcat::cfrac::Family;
use qtcat::mfs::ActionKind;
use qtcat::{ClassSpec, Permutation};

#[derive(Debug, Parser)]
#[command(name = "qtcat", version, about = "Compute and verify (q,t)-Catalan identities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format; `bfile` applies to `seq` only.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write to this file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Tsv,
    Bfile,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a named polynomial family at n (or n..=to).
    Poly {
        /// qt-catalan, carlitz, narayana, dyck-bp, cstar, chat or cbar
        family: Family,
        n: usize,
        #[arg(long)]
        to: Option<usize>,
    },
    /// Distribution of a weight list over a permutation class.
    ///
    /// Example: `qtcat dist 'av:231@n=5' 't^des,q^13-2'`.
    Dist {
        class: ClassSpec,
        weights: String,
    },
    /// Coefficients of a named continued fraction up to z^order.
    Cf {
        /// catalan, qt-catalan, quint, ceks or u-series
        name: String,
        order: usize,
    },
    /// Gamma expansion of a polynomial given inline, as `@file`, or `-` for stdin.
    Gamma {
        poly: String,
        /// Basis span; defaults to the top degree of the variable.
        #[arg(long)]
        span: Option<u32>,
        #[arg(long, default_value = "t")]
        var: qtcat::Var,
        #[arg(long, value_enum, default_value_t = BasisArg::OnePlusT)]
        basis: BasisArg,
    },
    /// Orbit of a permutation under a modified Foata-Strehl action.
    Orbit {
        permutation: Permutation,
        /// zero, n+1 or bar
        kind: ActionKind,
        /// Print only the orbit representative.
        #[arg(long)]
        representative: bool,
    },
    /// Terms of a named integer sequence.
    Seq {
        /// catalan, ballot (rows), r, t, u, F or Gat1
        name: String,
        count: usize,
        /// First index written to a b-file.
        #[arg(long)]
        offset: Option<usize>,
    },
    /// Run identity suites.
    Verify(VerifyArgs),
    /// Tabulate G_n(t) over 123-avoiding derangements and check the listed data.
    Conjecture {
        #[arg(long)]
        n_max: Option<usize>,
        /// Extend the default range to n = 10.
        #[arg(long)]
        deep: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BasisArg {
    /// t^k (1+t)^(span-2k)
    #[value(name = "1+t")]
    OnePlusT,
    /// t^k (1+t/q)^(span-2k)
    #[value(name = "1+t/q")]
    OnePlusTOverQ,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Suite id or `all`.
    #[arg(default_value = "all")]
    pub suite: String,
    /// Largest permutation length, applied to every selected suite.
    #[arg(long)]
    pub n_max: Option<usize>,
    #[arg(long)]
    pub deep: bool,
    /// Suites run in parallel on this many threads.
    #[arg(long, env = "QTCAT_WORKERS")]
    pub workers: Option<usize>,
    /// Randomized trials for the property suite.
    #[arg(long)]
    pub trials: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
}
