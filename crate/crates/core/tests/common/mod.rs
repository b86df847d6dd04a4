#![allow(dead_code)]

use aec_core::{Alphabet, Dfa};
use proptest::prelude::*;

/// Random total DFA, start state 0, with `1..=max_states` states over
/// `s1..sk`, `1 <= k <= max_symbols`.
pub fn arb_dfa(max_states: usize, max_symbols: usize) -> impl Strategy<Value = Dfa> {
    (1..=max_states, 1..=max_symbols).prop_flat_map(|(n, k)| {
        (
            proptest::collection::vec(0..n, n * k),
            proptest::collection::vec(any::<bool>(), n),
        )
            .prop_map(move |(delta, acc)| {
                let accepting = (0..n).filter(|&q| acc[q]);
                Dfa::new(Alphabet::indexed(k).unwrap(), n, delta, 0, accepting).unwrap()
            })
    })
}

/// DFA together with a word over its alphabet of length at most `max_len`.
pub fn arb_dfa_and_word(
    max_states: usize,
    max_symbols: usize,
    max_len: usize,
) -> impl Strategy<Value = (Dfa, Vec<usize>)> {
    arb_dfa(max_states, max_symbols).prop_flat_map(move |d| {
        let k = d.symbol_count();
        (Just(d), proptest::collection::vec(0..k, 0..=max_len))
    })
}

/// Two DFAs over the same alphabet.
pub fn arb_dfa_pair(max_states: usize, max_symbols: usize) -> impl Strategy<Value = (Dfa, Dfa)> {
    (1..=max_symbols).prop_flat_map(move |k| (arb_dfa_over(max_states, k), arb_dfa_over(max_states, k)))
}

pub fn arb_dfa_over(max_states: usize, k: usize) -> impl Strategy<Value = Dfa> {
    (1..=max_states).prop_flat_map(move |n| {
        (
            proptest::collection::vec(0..n, n * k),
            proptest::collection::vec(any::<bool>(), n),
        )
            .prop_map(move |(delta, acc)| {
                Dfa::new(Alphabet::indexed(k).unwrap(), n, delta, 0, (0..n).filter(|&q| acc[q])).unwrap()
            })
    })
}

pub fn same_language(a: &Dfa, b: &Dfa) -> bool {
    a.equivalent(b).unwrap().is_equivalent()
}
