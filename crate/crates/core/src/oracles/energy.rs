use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::automata::Dfa;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Largest number of words `brute_force_energy` enumerates.
pub const WORD_GUARD: u128 = 10_000_000;

/// Bits forgotten entering `delta(q, s)` on `s`, counted from scratch.
fn entry_bits<T: Real>(d: &Dfa, q: usize, s: usize) -> T {
    let target = d.next(q, s);
    let sources = (0..d.state_count()).filter(|&p| d.next(p, s) == target).count();
    T::log2_count(sources)
}

/// Maximum over all `|Sigma|^n` words of the bits forgotten on the word,
/// by explicit enumeration.
pub fn brute_force_energy<T: Real>(d: &Dfa, n: usize) -> Result<T> {
    let k = d.symbol_count();
    let words = (k as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if words > WORD_GUARD {
        return Err(Error::GuardExceeded { candidates: words, limit: WORD_GUARD });
    }
    let bits: Vec<T> = (0..d.state_count() * k).map(|i| entry_bits(d, i / k, i % k)).collect();
    let mut best = T::neg_infinity();
    let mut word = vec![0usize; n];
    loop {
        let mut q = d.start();
        let mut total = T::zero();
        for &s in &word {
            total = total + bits[q * k + s];
            q = d.next(q, s);
        }
        best = best.max(total);
        // odometer increment, last position fastest
        let Some(pos) = word.iter().rposition(|&s| s + 1 < k) else {
            break;
        };
        word[pos] += 1;
        word[pos + 1..].iter_mut().for_each(|s| *s = 0);
    }
    Ok(best)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MonteCarlo<T> {
    /// Mean bits per step over the samples.
    pub mean: T,
    pub std_error: T,
    pub samples: usize,
}

/// Average bits per step over `samples` uniformly random words of length
/// `n`, drawn from ChaCha8 seeded with `seed`.
pub fn monte_carlo_step_energy<T: Real>(d: &Dfa, n: usize, samples: usize, seed: u64) -> Result<MonteCarlo<T>> {
    if n == 0 || samples == 0 {
        return Err(Error::InvalidArgument("monte carlo needs n >= 1 and samples >= 1".into()));
    }
    let k = d.symbol_count();
    let bits: Vec<T> = (0..d.state_count() * k).map(|i| entry_bits(d, i / k, i % k)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let per_step: Vec<T> = (0..samples)
        .map(|_| {
            let mut q = d.start();
            let mut total = T::zero();
            for _ in 0..n {
                let s = rng.random_range(0..k);
                total = total + bits[q * k + s];
                q = d.next(q, s);
            }
            total / T::from_count(n)
        })
        .collect();
    let m = T::from_count(samples);
    let mean = per_step.iter().copied().sum::<T>() / m;
    let std_error = if samples < 2 {
        T::zero()
    } else {
        let var = per_step.iter().map(|&x| (x - mean) * (x - mean)).sum::<T>() / T::from_count(samples - 1);
        (var / m).sqrt()
    };
    Ok(MonteCarlo { mean, std_error, samples })
}
