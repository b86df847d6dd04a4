use num_complex::Complex;
use num_traits::One;

use crate::error::{Error, Result};
use crate::qfa::machine::{Qfa, Superoperator};
use crate::qfa::matrix::{basis_vector, norm_sqr, ComplexMatrix, Vector};
use crate::scalar::Real;

pub const DEFAULT_BRANCH_CAP: usize = 100_000;
/// Largest number of words `is_zero_error` will hold in one level.
pub const WORD_GUARD: u128 = 10_000_000;

impl<T: Real> Qfa<T> {
    /// `|start><start|`.
    pub fn initial_density(&self) -> ComplexMatrix<T> {
        let mut rho = ComplexMatrix::zeros(self.state_count(), self.state_count());
        rho[(self.start(), self.start())] = Complex::one();
        rho
    }

    pub fn evolve(&self, rho: &ComplexMatrix<T>, symbol: usize) -> ComplexMatrix<T> {
        self.superoperator(symbol).apply_density(rho)
    }

    /// Density operator after reading `^` followed by `word`.
    pub fn final_density(&self, word: &[usize]) -> Result<ComplexMatrix<T>> {
        self.alphabet().check_word(word)?;
        let rho = self.endmarker().apply_density(&self.initial_density());
        Ok(word.iter().fold(rho, |rho, &s| self.evolve(&rho, s)))
    }

    /// Unclamped probability of measuring an accepting state in `rho`.
    pub fn acceptance(&self, rho: &ComplexMatrix<T>) -> T {
        (0..self.state_count()).filter(|&q| self.is_accepting(q)).map(|q| rho[(q, q)].re).sum()
    }
}

/// Acceptance probability of `word` (the endmarker is prepended).
pub fn accept_prob<T: Real>(m: &Qfa<T>, word: &[usize]) -> Result<T> {
    let p = m.acceptance(&m.final_density(word)?);
    Ok(p.max(T::zero()).min(T::one()))
}

#[derive(Debug, Clone, PartialEq)]
pub struct Branch<T> {
    pub probability: T,
    /// Unit vector.
    pub state: Vector<T>,
}

/// Pure states reachable with positive probability, one per sequence of
/// measured operation elements.
#[derive(Debug, Clone, PartialEq)]
pub struct Ensemble<T> {
    pub branches: Vec<Branch<T>>,
}

impl<T: Real> Ensemble<T> {
    pub fn total_probability(&self) -> T {
        self.branches.iter().map(|b| b.probability).sum()
    }

    pub fn acceptance(&self, m: &Qfa<T>) -> T {
        self.branches
            .iter()
            .map(|b| {
                let acc: T = (0..b.state.len()).filter(|&q| m.is_accepting(q)).map(|q| b.state[q].norm_sqr()).sum();
                b.probability * acc
            })
            .sum()
    }

    fn split(&self, op: &Superoperator<T>, cap: usize) -> Result<Self> {
        let cutoff = T::epsilon() * T::epsilon();
        let mut branches = Vec::new();
        for b in &self.branches {
            for e in op.elements() {
                let v = e.apply(&b.state);
                let p = norm_sqr(&v);
                if p <= cutoff {
                    continue;
                }
                if branches.len() == cap {
                    return Err(Error::BranchCap(cap));
                }
                let scale = T::one() / p.sqrt();
                branches.push(Branch { probability: b.probability * p, state: v.into_iter().map(|z| z * scale).collect() });
            }
        }
        Ok(Self { branches })
    }
}

pub fn branch_run<T: Real>(m: &Qfa<T>, word: &[usize]) -> Result<Ensemble<T>> {
    branch_run_with_cap(m, word, DEFAULT_BRANCH_CAP)
}

pub fn branch_run_with_cap<T: Real>(m: &Qfa<T>, word: &[usize], cap: usize) -> Result<Ensemble<T>> {
    m.alphabet().check_word(word)?;
    let start = Ensemble {
        branches: vec![Branch { probability: T::one(), state: basis_vector(m.state_count(), m.start()) }],
    };
    let mut ens = start.split(m.endmarker(), cap)?;
    for &s in word {
        ens = ens.split(m.superoperator(s), cap)?;
    }
    Ok(ens)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ZeroErrorCheck<T> {
    pub zero_error: bool,
    /// First word in length-lexicographic order accepted with probability
    /// strictly between 0 and 1.
    pub witness: Option<Vec<usize>>,
    pub probability: Option<T>,
}

/// Tolerance on `{0, 1}` used by [`is_zero_error`].
pub fn zero_error_tolerance<T: Real>() -> T {
    T::cast(1e-7).max(T::tolerance())
}

/// Checks every word of length at most `n_max`.
pub fn is_zero_error<T: Real>(m: &Qfa<T>, n_max: usize) -> Result<ZeroErrorCheck<T>> {
    let k = m.alphabet().len();
    let largest = (k as u128).checked_pow(n_max as u32).unwrap_or(u128::MAX);
    if largest > WORD_GUARD {
        return Err(Error::GuardExceeded { candidates: largest, limit: WORD_GUARD });
    }
    let tol = zero_error_tolerance::<T>();
    let mut level = vec![(Vec::new(), m.endmarker().apply_density(&m.initial_density()))];
    for len in 0..=n_max {
        for (word, rho) in &level {
            let p = m.acceptance(rho);
            if p > tol && p < T::one() - tol {
                return Ok(ZeroErrorCheck { zero_error: false, witness: Some(word.clone()), probability: Some(p) });
            }
        }
        if len == n_max {
            break;
        }
        level = level
            .iter()
            .flat_map(|(word, rho)| {
                (0..k).map(move |s| {
                    let mut w = word.clone();
                    w.push(s);
                    (w, m.evolve(rho, s))
                })
            })
            .collect();
    }
    Ok(ZeroErrorCheck { zero_error: true, witness: None, probability: None })
}

#[derive(Debug, Clone, PartialEq)]
pub struct MaxError<T> {
    pub error: T,
    /// Length-lexicographically least word attaining `error`.
    pub word: Vec<usize>,
}

/// Largest error over words of length at most `n_max`: `1 - p` on members
/// of the language and `p` on non-members.
pub fn max_error<T: Real>(m: &Qfa<T>, member: impl Fn(&[usize]) -> bool, n_max: usize) -> T {
    max_error_with_witness(m, member, n_max).error
}

pub fn max_error_with_witness<T: Real>(m: &Qfa<T>, member: impl Fn(&[usize]) -> bool, n_max: usize) -> MaxError<T> {
    let mut best = MaxError { error: T::neg_infinity(), word: Vec::new() };
    let rho = m.endmarker().apply_density(&m.initial_density());
    let mut word = Vec::with_capacity(n_max);
    visit(m, &member, n_max, &mut word, &rho, &mut best);
    best.error = best.error.max(T::zero()).min(T::one());
    best
}

fn visit<T: Real>(
    m: &Qfa<T>,
    member: &impl Fn(&[usize]) -> bool,
    n_max: usize,
    word: &mut Vec<usize>,
    rho: &ComplexMatrix<T>,
    best: &mut MaxError<T>,
) {
    let p = m.acceptance(rho);
    let err = if member(word) { T::one() - p } else { p };
    let slack = T::epsilon() * T::cast(64.0);
    let better = err > best.error + slack
        || (err >= best.error - slack
            && (word.len(), word.as_slice()) < (best.word.len(), best.word.as_slice()));
    if better {
        best.error = err.max(best.error);
        best.word = word.clone();
    }
    if word.len() == n_max {
        return;
    }
    for s in 0..m.alphabet().len() {
        word.push(s);
        visit(m, member, n_max, word, &m.evolve(rho, s), best);
        word.pop();
    }
}

/// `|Tr rho - 1|`.
pub fn trace_drift<T: Real>(rho: &ComplexMatrix<T>) -> T {
    (rho.trace() - Complex::one()).norm()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qfa::from_dfa;
    use crate::transforms::{gen_lbb, in_lbb};
    use crate::automata::words_up_to;

    #[test]
    fn dfa_qfa_tracks_membership() {
        let d = gen_lbb();
        let m: Qfa<f64> = from_dfa(&d);
        assert_eq!(accept_prob(&m, &d.alphabet().parse_word("abb").unwrap()).unwrap(), 1.0);
        for w in words_up_to(2, 6) {
            let p = accept_prob(&m, &w).unwrap();
            assert_eq!(p, if in_lbb(&w) { 1.0 } else { 0.0 });
            let ens = branch_run(&m, &w).unwrap();
            assert_eq!(ens.branches.len(), 1);
            assert_eq!(ens.branches[0].probability, 1.0);
        }
        let check = is_zero_error(&m, 8).unwrap();
        assert!(check.zero_error && check.witness.is_none());
        assert_eq!(max_error(&m, in_lbb, 8), 0.0);
    }

    #[test]
    fn unknown_symbol_rejected() {
        let m: Qfa<f64> = from_dfa(&gen_lbb());
        assert!(accept_prob(&m, &[2]).is_err());
    }

    #[test]
    fn branch_cap_enforced() {
        let m: Qfa<f64> = crate::qfa::gen_m2();
        assert!(matches!(branch_run_with_cap(&m, &[], 2), Ok(_)));
        assert!(matches!(branch_run_with_cap(&m, &[0, 1, 0, 1], 1), Err(Error::BranchCap(1))));
    }
}
