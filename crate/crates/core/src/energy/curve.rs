use num_bigint::BigUint;
use num_traits::One;

use crate::automata::Dfa;
use crate::error::Result;
use crate::scalar::Real;

/// Bits forgotten while `d` reads `word` from its start state.
pub fn run_energy<T: Real>(d: &Dfa, word: &[usize]) -> Result<T> {
    Ok(d.run_trace::<T>(word)?.total_bits())
}

/// Edge weights `log2 chi(delta(q, s), s)`, row-major by `(q, s)`.
pub(crate) fn step_weights<T: Real>(d: &Dfa) -> Vec<T> {
    let profile = d.in_degree_profile();
    let k = d.symbol_count();
    (0..d.state_count() * k)
        .map(|i| {
            let (q, s) = (i / k, i % k);
            T::log2_count(profile.chi(d.next(q, s), s))
        })
        .collect()
}

/// Largest number of bits forgotten on any input of length exactly `n`.
///
/// Forward dynamic program over `best(q, i)`, the costliest way to be in `q`
/// after `i` symbols; `O(n |Q| |Sigma|)` time, `O(|Q|)` memory.
pub fn energy_complexity<T: Real>(d: &Dfa, n: usize) -> T {
    let k = d.symbol_count();
    let weights = step_weights::<T>(d);
    let mut best = vec![T::neg_infinity(); d.state_count()];
    best[d.start()] = T::zero();
    let mut next = best.clone();
    for _ in 0..n {
        next.iter_mut().for_each(|v| *v = T::neg_infinity());
        for (q, &b) in best.iter().enumerate() {
            if b == T::neg_infinity() {
                continue;
            }
            for s in 0..k {
                let t = d.next(q, s);
                let cand = b + weights[q * k + s];
                if cand > next[t] {
                    next[t] = cand;
                }
            }
        }
        std::mem::swap(&mut best, &mut next);
    }
    best.into_iter().fold(T::neg_infinity(), T::max)
}

/// `E(0..=n_max)`, optionally with a witness word for every length.
#[derive(Clone, Debug, PartialEq)]
pub struct EnergyCurve<T = f64> {
    pub values: Vec<T>,
    /// Lexicographically least input of each length attaining the maximum.
    pub witnesses: Option<Vec<Vec<usize>>>,
}

impl<T: Real> EnergyCurve<T> {
    pub fn n_max(&self) -> usize {
        self.values.len() - 1
    }

    /// `E(n) / n` at the largest length, the finite-horizon estimate of the
    /// rate.
    pub fn final_slope(&self) -> T {
        let n = self.n_max();
        if n == 0 {
            T::zero()
        } else {
            self.values[n] / T::from_count(n)
        }
    }
}

/// Backward value table: `value[r][q]` is the costliest `r`-symbol
/// continuation from `q`.
fn backward_values<T: Real>(d: &Dfa, n_max: usize, keep_all: bool) -> (Vec<T>, Vec<Vec<T>>) {
    let k = d.symbol_count();
    let weights = step_weights::<T>(d);
    let mut current = vec![T::zero(); d.state_count()];
    let mut curve = vec![T::zero()];
    let mut table = Vec::new();
    if keep_all {
        table.push(current.clone());
    }
    for _ in 0..n_max {
        let next: Vec<T> = (0..d.state_count())
            .map(|q| {
                (0..k)
                    .map(|s| weights[q * k + s] + current[d.next(q, s)])
                    .fold(T::neg_infinity(), T::max)
            })
            .collect();
        curve.push(next[d.start()]);
        if keep_all {
            table.push(next.clone());
        }
        current = next;
    }
    (curve, table)
}

/// One sweep producing `E(0..=n_max)`.
pub fn energy_curve<T: Real>(d: &Dfa, n_max: usize) -> EnergyCurve<T> {
    let (values, _) = backward_values::<T>(d, n_max, false);
    EnergyCurve { values, witnesses: None }
}

/// [`energy_curve`] plus the lexicographically least maximizing word for
/// every length.
///
/// Ties are broken exactly: the energy of a path is `log2` of the product of
/// the in-degrees it enters, so witnesses are reconstructed from a table of
/// exact products instead of floating point sums. Memory is
/// `O(n_max^2 |Q|)` bits.
pub fn energy_curve_with_witnesses<T: Real>(d: &Dfa, n_max: usize) -> EnergyCurve<T> {
    let (values, _) = backward_values::<T>(d, n_max, false);
    let k = d.symbol_count();
    let profile = d.in_degree_profile();
    let chi = |q: usize, s: usize| profile.chi(d.next(q, s), s) as u64;

    let mut products: Vec<Vec<BigUint>> = vec![vec![BigUint::one(); d.state_count()]];
    for r in 1..=n_max {
        let prev = &products[r - 1];
        let row = (0..d.state_count())
            .map(|q| {
                (0..k)
                    .map(|s| &prev[d.next(q, s)] * chi(q, s))
                    .max()
                    .expect("non-empty alphabet")
            })
            .collect();
        products.push(row);
    }

    let witnesses = (0..=n_max)
        .map(|n| {
            let mut word = Vec::with_capacity(n);
            let mut q = d.start();
            for remaining in (1..=n).rev() {
                let target = &products[remaining][q];
                let s = (0..k)
                    .find(|&s| &(&products[remaining - 1][d.next(q, s)] * chi(q, s)) == target)
                    .expect("maximum is attained by some symbol");
                word.push(s);
                q = d.next(q, s);
            }
            word
        })
        .collect();
    EnergyCurve { values, witnesses: Some(witnesses) }
}
