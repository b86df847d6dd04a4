//! Landauer energy accounting for finite automata.
//!
//! A DFA step that enters state `q` on symbol `s` forgets `log2 chi(q, s)`
//! bits, where `chi(q, s)` counts the states whose `s`-transition leads to
//! `q`; erasing a bit costs at least `k_B T ln 2` joules. This crate
//!
//! - profiles those costs per step, per run and per input length
//!   ([`energy`]),
//! - rewrites DFAs into equivalent machines with cheaper steps
//!   ([`transforms`]),
//! - simulates general quantum finite automata given by per-symbol
//!   superoperators and turns zero-error ones back into DFAs with no
//!   costlier steps ([`qfa`]),
//! - provides brute-force oracles for all of the above ([`oracles`]).
//!
//! Numeric code is generic over the scalar: [`Real`] for floating point
//! (`f32`, `f64`) and [`Field`] for linear solves that may also run over
//! exact rationals. The aliases below fix the common choices.

pub mod automata;
pub mod energy;
pub mod error;
pub mod oracles;
pub mod qfa;
pub mod scalar;
pub mod transforms;

pub use automata::{Alphabet, Dfa, Equivalence, InDegreeProfile, TransitionCounts};
pub use error::{Error, Result};
pub use scalar::{Field, Real};

pub use num_rational::BigRational;

pub type RunTrace = automata::RunTrace<f64>;
pub type EnergyCurve = energy::EnergyCurve<f64>;
pub type Distribution = energy::Distribution<f64>;
/// Stationary distribution with exact rational probabilities.
pub type ExactDistribution = energy::Distribution<BigRational>;
pub type ComplexMatrix = qfa::ComplexMatrix<f64>;
pub type Superoperator = qfa::Superoperator<f64>;
pub type Qfa = qfa::Qfa<f64>;
pub type Qfa32 = qfa::Qfa<f32>;
pub type Ensemble = qfa::Ensemble<f64>;
pub type Subspace = qfa::Subspace<f64>;
