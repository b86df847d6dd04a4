use std::collections::VecDeque;

use super::Dfa;
use crate::error::{Error, Result};

/// Outcome of a language-equivalence check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Equivalence {
    Equivalent,
    /// Shortest distinguishing word, lexicographically least among the
    /// shortest (alphabet order).
    Counterexample(Vec<usize>),
}

impl Equivalence {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, Equivalence::Equivalent)
    }

    pub fn counterexample(&self) -> Option<&[usize]> {
        match self {
            Equivalence::Equivalent => None,
            Equivalence::Counterexample(w) => Some(w),
        }
    }
}

impl Dfa {
    /// Decides `L(self) = L(other)` by breadth-first search of the product
    /// automaton. Both machines must use the same alphabet (same order).
    pub fn equivalent(&self, other: &Dfa) -> Result<Equivalence> {
        if self.alphabet() != other.alphabet() {
            return Err(Error::AlphabetMismatch(
                self.alphabet().symbols().to_vec(),
                other.alphabet().symbols().to_vec(),
            ));
        }
        let k = self.symbol_count();
        let m = other.state_count();
        let idx = |p: usize, q: usize| p * m + q;
        // parent[(p, q)] = (previous pair, symbol)
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; self.state_count() * m];
        let mut seen = vec![false; self.state_count() * m];
        let root = idx(self.start(), other.start());
        seen[root] = true;
        let mut queue = VecDeque::from([(self.start(), other.start())]);

        let rebuild = |mut at: usize, parent: &[Option<(usize, usize)>]| {
            let mut word = Vec::new();
            while let Some((prev, s)) = parent[at] {
                word.push(s);
                at = prev;
            }
            word.reverse();
            word
        };

        if self.is_accepting(self.start()) != other.is_accepting(other.start()) {
            return Ok(Equivalence::Counterexample(Vec::new()));
        }
        while let Some((p, q)) = queue.pop_front() {
            for s in 0..k {
                let (np, nq) = (self.next(p, s), other.next(q, s));
                let j = idx(np, nq);
                if seen[j] {
                    continue;
                }
                seen[j] = true;
                parent[j] = Some((idx(p, q), s));
                if self.is_accepting(np) != other.is_accepting(nq) {
                    return Ok(Equivalence::Counterexample(rebuild(j, &parent)));
                }
                queue.push_back((np, nq));
            }
        }
        Ok(Equivalence::Equivalent)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::Alphabet;
    use crate::transforms::{gen_lbb, gen_li};

    #[test]
    fn lbb_against_variants() {
        let d = gen_lbb();
        assert!(d.equivalent(&d.minimize()).unwrap().is_equivalent());
        assert!(d.equivalent(&d).unwrap().is_equivalent());

        let other = d.with_accepting([3]).unwrap();
        let eq = d.equivalent(&other).unwrap();
        assert_eq!(d.alphabet().format_word(eq.counterexample().unwrap()), "bb");
    }

    #[test]
    fn empty_word_counterexample() {
        let d = gen_lbb();
        let flipped = d.with_accepting([0, 2]).unwrap();
        assert_eq!(d.equivalent(&flipped).unwrap(), Equivalence::Counterexample(vec![]));
    }

    #[test]
    fn alphabet_mismatch() {
        let d = gen_lbb();
        let li = gen_li(Alphabet::new(["a"]).unwrap());
        assert!(matches!(d.equivalent(&li), Err(Error::AlphabetMismatch(..))));
    }
}
