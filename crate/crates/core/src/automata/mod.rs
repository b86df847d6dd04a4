//! Deterministic finite automata and their structural queries.

mod alphabet;
mod equivalence;
mod format;
mod minimize;
mod profile;

use std::collections::VecDeque;

pub use alphabet::{words_of_length, words_up_to, Alphabet, ENDMARKER};
pub use equivalence::Equivalence;
pub use profile::{InDegreeProfile, RunTrace, TransitionCounts};

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Complete DFA with dense 0-based states.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Dfa {
    alphabet: Alphabet,
    state_count: usize,
    /// Row-major `state_count x alphabet.len()` transition table.
    delta: Vec<usize>,
    start: usize,
    accepting: Vec<bool>,
}

impl Dfa {
    /// Builds a DFA from a row-major transition table.
    pub fn new(
        alphabet: Alphabet,
        state_count: usize,
        delta: Vec<usize>,
        start: usize,
        accepting: impl IntoIterator<Item = usize>,
    ) -> Result<Self> {
        if state_count == 0 {
            return Err(Error::InvalidArgument("a DFA needs at least one state".into()));
        }
        let k = alphabet.len();
        if delta.len() != state_count * k {
            return Err(Error::Dimension(format!(
                "transition table has {} entries, expected {}",
                delta.len(),
                state_count * k
            )));
        }
        if let Some(&bad) = delta.iter().find(|&&t| t >= state_count) {
            return Err(Error::UnknownState { state: bad, count: state_count });
        }
        if start >= state_count {
            return Err(Error::UnknownState { state: start, count: state_count });
        }
        let mut acc = vec![false; state_count];
        for q in accepting {
            if q >= state_count {
                return Err(Error::UnknownState { state: q, count: state_count });
            }
            acc[q] = true;
        }
        Ok(Self { alphabet, state_count, delta, start, accepting: acc })
    }

    /// Builds a DFA whose transition table is given by `next(state, symbol)`.
    pub fn from_fn(
        alphabet: Alphabet,
        state_count: usize,
        start: usize,
        accepting: impl IntoIterator<Item = usize>,
        next: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let k = alphabet.len();
        let delta = (0..state_count * k).map(|i| next(i / k, i % k)).collect();
        Self::new(alphabet, state_count, delta, start, accepting)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.state_count
    }

    pub fn symbol_count(&self) -> usize {
        self.alphabet.len()
    }

    pub fn start(&self) -> usize {
        self.start
    }

    #[inline]
    pub fn next(&self, state: usize, symbol: usize) -> usize {
        self.delta[state * self.alphabet.len() + symbol]
    }

    pub fn transitions(&self) -> &[usize] {
        &self.delta
    }

    pub fn is_accepting(&self, state: usize) -> bool {
        self.accepting[state]
    }

    pub fn accepting_states(&self) -> Vec<usize> {
        (0..self.state_count).filter(|&q| self.accepting[q]).collect()
    }

    /// Same transition structure, different accepting set.
    pub fn with_accepting(&self, accepting: impl IntoIterator<Item = usize>) -> Result<Self> {
        Self::new(self.alphabet.clone(), self.state_count, self.delta.clone(), self.start, accepting)
    }

    /// State reached from `from` after reading `word`.
    pub fn walk(&self, from: usize, word: &[usize]) -> Result<usize> {
        self.alphabet.check_word(word)?;
        Ok(word.iter().fold(from, |q, &s| self.next(q, s)))
    }

    pub fn accepts(&self, word: &[usize]) -> Result<bool> {
        Ok(self.accepting[self.walk(self.start, word)?])
    }

    /// Convenience wrapper parsing `word` with [`Alphabet::parse_word`].
    pub fn accepts_str(&self, word: &str) -> Result<bool> {
        self.accepts(&self.alphabet.parse_word(word)?)
    }

    /// Full run with the bits forgotten at each step.
    pub fn run_trace<T: Real>(&self, word: &[usize]) -> Result<RunTrace<T>> {
        self.alphabet.check_word(word)?;
        let profile = self.in_degree_profile();
        let mut states = Vec::with_capacity(word.len() + 1);
        let mut bits = Vec::with_capacity(word.len());
        let mut q = self.start;
        states.push(q);
        for &s in word {
            q = self.next(q, s);
            states.push(q);
            bits.push(T::log2_count(profile.chi(q, s)));
        }
        Ok(RunTrace { states, symbols: word.to_vec(), per_step_bits: bits })
    }

    pub fn in_degree_profile(&self) -> InDegreeProfile {
        InDegreeProfile::of(self)
    }

    /// Every state has at most one incoming transition per symbol.
    pub fn is_reversible(&self) -> bool {
        self.in_degree_profile().max() <= 1
    }

    /// Whether every symbol permutes the states of the minimal machine.
    pub fn is_group_language(&self) -> bool {
        self.minimize().is_reversible()
    }

    /// Reachable states, as a mask.
    pub fn reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.state_count];
        let mut stack = vec![self.start];
        seen[self.start] = true;
        while let Some(q) = stack.pop() {
            for s in 0..self.symbol_count() {
                let t = self.next(q, s);
                if !seen[t] {
                    seen[t] = true;
                    stack.push(t);
                }
            }
        }
        seen
    }

    /// Breadth-first order of the reachable states (symbols in alphabet order).
    pub fn bfs_order(&self) -> Vec<usize> {
        let mut order = vec![self.start];
        let mut seen = vec![false; self.state_count];
        seen[self.start] = true;
        let mut queue = VecDeque::from([self.start]);
        while let Some(q) = queue.pop_front() {
            for s in 0..self.symbol_count() {
                let t = self.next(q, s);
                if !seen[t] {
                    seen[t] = true;
                    order.push(t);
                    queue.push_back(t);
                }
            }
        }
        order
    }

    /// Renumbers the reachable states in breadth-first order from the start
    /// state and drops the rest. Isomorphic machines map to equal values.
    pub fn renumber_canonical(&self) -> Dfa {
        let order = self.bfs_order();
        self.relabel(&order)
    }

    /// Drops unreachable states, keeping the relative order of the others.
    pub fn trim(&self) -> Dfa {
        let reach = self.reachable();
        let order: Vec<usize> = (0..self.state_count).filter(|&q| reach[q]).collect();
        self.relabel(&order)
    }

    /// Keeps exactly the states listed in `order` (which must be closed under
    /// transitions), renaming `order[i]` to `i`.
    fn relabel(&self, order: &[usize]) -> Dfa {
        let mut new_id = vec![usize::MAX; self.state_count];
        for (i, &q) in order.iter().enumerate() {
            new_id[q] = i;
        }
        let k = self.symbol_count();
        let mut delta = Vec::with_capacity(order.len() * k);
        for &q in order {
            for s in 0..k {
                delta.push(new_id[self.next(q, s)]);
            }
        }
        Dfa {
            alphabet: self.alphabet.clone(),
            state_count: order.len(),
            delta,
            start: new_id[self.start],
            accepting: order.iter().map(|&q| self.accepting[q]).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transforms::{gen_lbb, gen_li};

    fn w(d: &Dfa, s: &str) -> Vec<usize> {
        d.alphabet().parse_word(s).unwrap()
    }

    #[test]
    fn lbb_membership() {
        let d = gen_lbb();
        assert!(d.accepts_str("abb").unwrap());
        assert!(!d.accepts_str("").unwrap());
        assert!(!d.accepts_str("bba").unwrap());
        assert!(d.accepts_str("bbab").unwrap());
        assert!(matches!(d.accepts_str("abc"), Err(Error::UnknownSymbol(_))));
    }

    #[test]
    fn lbb_traces() {
        let d = gen_lbb();
        let t: RunTrace = d.run_trace(&w(&d, "bbb")).unwrap();
        assert_eq!(t.states, vec![0, 1, 2, 2]);
        let l3 = 3f64.log2();
        assert_eq!(t.per_step_bits, vec![0.0, l3, l3]);

        let t: RunTrace = d.run_trace(&w(&d, "aa")).unwrap();
        assert_eq!(t.states, vec![0, 0, 0]);
        assert_eq!(t.per_step_bits, vec![1.0, 1.0]);

        let t: RunTrace = d.run_trace(&[]).unwrap();
        assert_eq!(t.states, vec![0]);
        assert!(t.per_step_bits.is_empty());
        assert!(d.run_trace::<f64>(&[2]).is_err());
    }

    #[test]
    fn reversibility() {
        assert!(!gen_lbb().is_reversible());
        assert!(!gen_li(Alphabet::new(["a", "b"]).unwrap()).is_reversible());
        let one = Dfa::from_fn(Alphabet::new(["a", "b"]).unwrap(), 1, 0, [0], |_, _| 0).unwrap();
        assert!(one.is_reversible());
    }

    #[test]
    fn group_languages() {
        let parity = Dfa::from_fn(Alphabet::new(["a"]).unwrap(), 2, 0, [0], |q, _| 1 - q).unwrap();
        assert!(parity.is_group_language());
        assert!(!gen_lbb().is_group_language());
        assert!(!gen_li(Alphabet::new(["a", "b"]).unwrap()).is_group_language());
        // a non-minimal machine whose minimization is a permutation machine
        let padded = Dfa::from_fn(Alphabet::new(["a"]).unwrap(), 4, 0, [0, 2], |q, _| (q + 1) % 4)
            .unwrap();
        assert!(padded.is_group_language());
    }

    #[test]
    fn canonical_renumbering() {
        let d = gen_lbb();
        // permute states 0..4 -> (2, 0, 3, 1)
        let perm = [2usize, 0, 3, 1];
        let mut inv = [0usize; 4];
        for (q, &p) in perm.iter().enumerate() {
            inv[p] = q;
        }
        let shuffled = Dfa::from_fn(
            d.alphabet().clone(),
            4,
            perm[d.start()],
            d.accepting_states().into_iter().map(|q| perm[q]),
            |q, s| perm[d.next(inv[q], s)],
        )
        .unwrap();
        assert_ne!(shuffled, d);
        assert_eq!(shuffled.renumber_canonical().to_text(), d.renumber_canonical().to_text());
        assert_eq!(d.renumber_canonical().start(), 0);

        // an extra unreachable state disappears
        let extra = Dfa::from_fn(d.alphabet().clone(), 5, 0, [2], |q, s| {
            if q == 4 { 0 } else { d.next(q, s) }
        })
        .unwrap();
        assert_eq!(extra.renumber_canonical().state_count(), 4);
        assert_eq!(extra.trim().state_count(), 4);
    }
}
