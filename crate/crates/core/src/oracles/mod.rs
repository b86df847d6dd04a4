//! Exhaustive and sampling oracles used to cross-check the main algorithms:
//! enumeration of small DFAs, bounded searches over recognizers of a
//! language, energy by enumerating words, and Monte Carlo energy estimates.

mod energy;
mod enumerate;
mod random;
mod search;

pub use energy::{brute_force_energy, monte_carlo_step_energy, MonteCarlo, WORD_GUARD};
pub use enumerate::{all_tables, canonical_tables, enumerate_dfas, EnumerationSpec, ENUMERATION_GUARD};
pub use random::{random_dfa, random_small_dfa};
pub use search::{
    find_reversible_recognizer, find_reversible_recognizer_with, inflow_search, min_inflow_over_recognizers,
    InflowSearch,
};
