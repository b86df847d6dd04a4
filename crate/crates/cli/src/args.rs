use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "aec", version, about = "Landauer energy accounting for finite and quantum finite automata")]
pub struct Cli {
    /// Worker threads for parallel searches (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    pub threads: Option<usize>,

    /// Write the result here instead of standard output (atomically).
    #[arg(short, long, global = true, value_name = "FILE")]
    pub output: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub group: Group,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Group {
    /// DFA structure and transformations.
    #[command(subcommand)]
    Dfa(DfaCmd),
    /// Forgotten bits per step, per length and per unit of time.
    #[command(subcommand)]
    Energy(EnergyCmd),
    /// Quantum finite automata.
    #[command(subcommand)]
    Qfa(QfaCmd),
    /// Built-in DFA families.
    #[command(subcommand)]
    Gen(GenCmd),
    /// Exhaustive and sampling cross-checks.
    #[command(subcommand)]
    Oracle(OracleCmd),
}

#[derive(Debug, Subcommand)]
pub enum DfaCmd {
    /// Parse a DFA file and summarize it.
    Validate { file: PathBuf },
    /// Minimal equivalent DFA.
    Minimize { file: PathBuf },
    /// Compare languages; exits 1 with a shortest counterexample if they differ.
    Equiv { a: PathBuf, b: PathBuf },
    /// Equivalent DFA with same-symbol in-degree at most |alphabet| + 1.
    Rebalance { file: PathBuf },
    /// Unroll the minimal DFA into trees of the given depth.
    Expand {
        file: PathBuf,
        #[arg(long, value_name = "K")]
        depth: usize,
        /// Refuse to build more states than this.
        #[arg(long, default_value_t = aec_core::transforms::DEFAULT_STATE_CAP)]
        cap: usize,
    },
    /// Replace a state looping on every symbol by a cycle of copies.
    CycleExpand {
        file: PathBuf,
        #[arg(long, value_name = "Q")]
        state: usize,
        #[arg(long, value_name = "M")]
        m: usize,
    },
    /// Reachable part renumbered in breadth-first order.
    Canon { file: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum EnergyCmd {
    /// Worst-case forgotten bits E(n) for n = 0..=N with witness words.
    Profile {
        file: PathBuf,
        #[arg(long, value_name = "N")]
        max_len: usize,
    },
    /// Asymptotic worst-case bits per step.
    Rate { file: PathBuf },
    /// Expected bits per step under uniformly random input.
    Expected {
        file: PathBuf,
        /// Also convert to joules at this temperature (kelvin).
        #[arg(long, value_name = "K")]
        temperature: Option<f64>,
    },
    /// Expected-cost margin contributed by transient sources.
    Margin { file: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum QfaCmd {
    /// Check shapes and completeness of a QFA file.
    Validate { file: PathBuf },
    /// Acceptance probability of a word.
    Sim {
        file: PathBuf,
        #[arg(long, value_name = "W", allow_hyphen_values = true)]
        word: String,
        /// Also list the measurement branches.
        #[arg(long)]
        branches: bool,
    },
    /// Zero-error QFA simulating a DFA.
    FromDfa { file: PathBuf },
    /// DFA recognizing the language of a zero-error QFA.
    Extract {
        file: PathBuf,
        /// Compare the result with the QFA on all words up to this length.
        #[arg(long, default_value_t = 8)]
        verify_len: usize,
    },
    /// Check that every word up to the given length has probability 0 or 1.
    ZeroError {
        file: PathBuf,
        #[arg(long, value_name = "N")]
        max_len: usize,
    },
    /// Largest error against a built-in language.
    MaxError {
        file: PathBuf,
        /// lbb, li, or lj followed by J.
        #[arg(long, num_args = 1..=2, value_names = ["LANG", "J"], required = true)]
        lang: Vec<String>,
        #[arg(long, value_name = "N")]
        max_len: usize,
    },
    /// Ten-state two-element QFA for L_2.
    GenM2,
    /// Three-element QFA for L_j.
    GenMj {
        #[arg(long)]
        j: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum GenCmd {
    /// Words containing bb and ending in b.
    Lbb,
    /// Non-empty words over the given alphabet.
    Li {
        #[arg(long, num_args = 1.., required = true, value_name = "SYMBOL")]
        alphabet: Vec<String>,
    },
    /// Words over s1..sJ ending in s_i s_(i mod J + 1).
    Lj {
        #[arg(long)]
        j: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum OracleCmd {
    /// Smallest same-symbol in-degree over all recognizers of L_j.
    #[command(visible_alias = "thm5")]
    MinInflow {
        #[arg(long)]
        j: usize,
        #[arg(long, value_name = "M")]
        max_states: usize,
        #[command(flatten)]
        guard: Guard,
    },
    /// Worst-case bits at one length by enumerating every word.
    Energy {
        file: PathBuf,
        #[arg(long, value_name = "N")]
        len: usize,
    },
    /// Search for an equivalent DFA with in-degree at most 1.
    Reversible {
        file: PathBuf,
        #[arg(long, value_name = "M")]
        max_states: usize,
        #[command(flatten)]
        guard: Guard,
    },
    /// Monte Carlo estimate of bits per step.
    Mc {
        file: PathBuf,
        #[arg(long, value_name = "N")]
        len: usize,
        #[arg(long, value_name = "S")]
        samples: usize,
        #[arg(long, value_name = "X", default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Args)]
pub struct Guard {
    /// Upper limit on n^(n k) 2^n n for the enumeration.
    #[arg(long, default_value_t = aec_core::oracles::ENUMERATION_GUARD)]
    pub guard: u128,
}
