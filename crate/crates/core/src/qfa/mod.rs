//! Quantum finite automata in the superoperator model: after each symbol
//! the machine applies one of `l` operation elements, recording which in an
//! auxiliary register that is then measured and overwritten.

mod extract;
mod generators;
mod json;
mod machine;
mod matrix;
mod simulate;
mod subspace;

pub use extract::{extract, extract_dfa, ExtractOptions, Extraction, VERIFY_WORD_CAP};
pub use generators::{gen_m2, gen_mj};
pub use machine::{from_dfa, step_energy, validate_qfa, Qfa, Superoperator};
pub use matrix::{basis_vector, inner, norm_sqr, ComplexMatrix, Vector};
pub use simulate::{
    accept_prob, branch_run, branch_run_with_cap, is_zero_error, max_error, max_error_with_witness, trace_drift,
    zero_error_tolerance, Branch, Ensemble, MaxError, ZeroErrorCheck, DEFAULT_BRANCH_CAP, WORD_GUARD,
};
pub use subspace::{drop_tolerance, projector_tolerance, Subspace};
