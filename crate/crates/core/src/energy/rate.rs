use crate::automata::Dfa;
use crate::scalar::Real;

use super::curve::step_weights;

/// Asymptotic bits per step, `lim E(n) / n`: the maximum mean weight of a
/// cycle reachable from the start state, where the edge `q -s-> delta(q, s)`
/// weighs `log2 chi(delta(q, s), s)`.
///
/// Karp's characterization with walk lengths counted from the start state:
/// `max_v min_k (D_N(v) - D_k(v)) / (N - k)`, where `D_k(v)` is the heaviest
/// walk of exactly `k` edges from the start to `v` and `N` is the number of
/// reachable states.
pub fn energy_rate<T: Real>(d: &Dfa) -> T {
    let reach = d.reachable();
    let n = reach.iter().filter(|&&r| r).count();
    let k = d.symbol_count();
    let weights = step_weights::<T>(d);
    let neg_inf = T::neg_infinity();

    let mut walks = vec![vec![neg_inf; d.state_count()]; n + 1];
    walks[0][d.start()] = T::zero();
    for len in 0..n {
        let (done, rest) = walks.split_at_mut(len + 1);
        let (prev, next) = (&done[len], &mut rest[0]);
        for q in 0..d.state_count() {
            if prev[q] == neg_inf {
                continue;
            }
            for s in 0..k {
                let t = d.next(q, s);
                let cand = prev[q] + weights[q * k + s];
                if cand > next[t] {
                    next[t] = cand;
                }
            }
        }
    }

    let mut best = neg_inf;
    for v in 0..d.state_count() {
        let full = walks[n][v];
        if full == neg_inf {
            continue;
        }
        let worst = (0..n)
            .filter(|&len| walks[len][v] != neg_inf)
            .map(|len| (full - walks[len][v]) / T::from_count(n - len))
            .fold(T::infinity(), T::min);
        best = best.max(worst);
    }
    // every reachable state lies on or leads to a cycle, so some D_N is finite
    best.max(T::zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::Alphabet;
    use crate::transforms::{cycle_expand, gen_lbb, gen_li};

    #[test]
    fn lbb_rate_is_log2_3() {
        let r: f64 = energy_rate(&gen_lbb());
        assert!((r - 3f64.log2()).abs() < 1e-9);
    }

    #[test]
    fn cycle_expanded_li() {
        for m in [2, 3, 5, 10] {
            let d = cycle_expand(&gen_li(Alphabet::new(["a", "b"]).unwrap()), 1, m).unwrap();
            let r: f64 = energy_rate(&d);
            assert!((r - 1.0 / m as f64).abs() < 1e-9, "m={m} r={r}");
        }
    }

    #[test]
    fn group_language_rate_is_zero() {
        let d = Dfa::from_fn(Alphabet::new(["a"]).unwrap(), 2, 0, [0], |q, _| 1 - q).unwrap();
        assert_eq!(energy_rate::<f64>(&d), 0.0);
    }
}
