use crate::scalar::Real;

use super::Dfa;

/// Anything that assigns a count of incoming same-symbol transitions to a
/// `(state, symbol)` pair.
pub trait TransitionCounts {
    fn count(&self, state: usize, symbol: usize) -> usize;
}

/// `chi(q, s)`: number of states whose `s`-transition enters `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InDegreeProfile {
    symbols: usize,
    counts: Vec<usize>,
}

impl InDegreeProfile {
    pub fn of(d: &Dfa) -> Self {
        let k = d.symbol_count();
        let mut counts = vec![0; d.state_count() * k];
        for q in 0..d.state_count() {
            for s in 0..k {
                counts[d.next(q, s) * k + s] += 1;
            }
        }
        Self { symbols: k, counts }
    }

    pub fn chi(&self, state: usize, symbol: usize) -> usize {
        self.counts[state * self.symbols + symbol]
    }

    /// Largest same-symbol in-degree.
    pub fn max(&self) -> usize {
        self.counts.iter().copied().max().unwrap_or(0)
    }

    pub fn state_count(&self) -> usize {
        self.counts.len() / self.symbols
    }

    pub fn symbol_count(&self) -> usize {
        self.symbols
    }

    /// Bits forgotten by the costliest single step.
    pub fn max_step_bits<T: Real>(&self) -> T {
        T::log2_count(self.max())
    }
}

impl TransitionCounts for InDegreeProfile {
    fn count(&self, state: usize, symbol: usize) -> usize {
        self.chi(state, symbol)
    }
}

/// States visited while consuming a word, with the bits forgotten on each
/// step (`log2 chi` of the state entered).
#[derive(Clone, Debug, PartialEq)]
pub struct RunTrace<T = f64> {
    pub states: Vec<usize>,
    pub symbols: Vec<usize>,
    pub per_step_bits: Vec<T>,
}

impl<T: Real> RunTrace<T> {
    pub fn total_bits(&self) -> T {
        self.per_step_bits.iter().copied().sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::Alphabet;
    use crate::transforms::gen_lbb;

    #[test]
    fn lbb_in_degrees() {
        let p = gen_lbb().in_degree_profile();
        // symbols a=0, b=1
        assert_eq!(p.chi(2, 1), 3);
        assert_eq!(p.chi(0, 0), 2);
        assert_eq!(p.chi(1, 1), 1);
        assert_eq!(p.chi(3, 0), 2);
        let nonzero: usize = (0..4).flat_map(|q| (0..2).map(move |s| (q, s)))
            .filter(|&(q, s)| p.chi(q, s) > 0)
            .count();
        assert_eq!(nonzero, 4);
        assert_eq!(p.max(), 3);
        assert!((p.max_step_bits::<f64>() - 3f64.log2()).abs() < 1e-12);
    }

    #[test]
    fn permutation_machine_has_unit_in_degrees() {
        let d = Dfa::from_fn(Alphabet::new(["a", "b"]).unwrap(), 3, 0, [0], |q, s| {
            if s == 0 { (q + 1) % 3 } else { (3 - q) % 3 }
        })
        .unwrap();
        let p = d.in_degree_profile();
        assert!(p.max() <= 1);
        assert!(d.is_reversible());
    }
}
