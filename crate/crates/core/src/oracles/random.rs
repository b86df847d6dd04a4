use rand::Rng;

use crate::automata::{Alphabet, Dfa};

/// DFA with a uniformly random transition table and accepting set, start
/// state 0. Unreachable states are kept.
pub fn random_dfa(rng: &mut impl Rng, states: usize, alphabet: &Alphabet) -> Dfa {
    let k = alphabet.len();
    let delta = (0..states * k).map(|_| rng.random_range(0..states)).collect();
    let accepting: Vec<usize> = (0..states).filter(|_| rng.random_bool(0.5)).collect();
    Dfa::new(alphabet.clone(), states, delta, 0, accepting).expect("random table in range")
}

/// [`random_dfa`] with `1..=max_states` states over `s1..s{1..=max_symbols}`.
pub fn random_small_dfa(rng: &mut impl Rng, max_states: usize, max_symbols: usize) -> Dfa {
    let n = rng.random_range(1..=max_states);
    let k = rng.random_range(1..=max_symbols);
    random_dfa(rng, n, &Alphabet::indexed(k).expect("k >= 1"))
}
