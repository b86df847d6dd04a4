use rayon::prelude::*;

use crate::automata::Dfa;
use crate::error::Result;
use crate::oracles::enumerate::{canonical_tables, EnumerationSpec};

/// Outcome of a bounded search over recognizers of a language.
#[derive(Debug, Clone, PartialEq)]
pub struct InflowSearch {
    pub max_states: usize,
    /// Smallest max same-symbol in-degree among recognizers with at most
    /// `max_states` states; `None` if there is no such recognizer.
    pub min_inflow: Option<usize>,
    /// First recognizer (fewest states, then table order) attaining it.
    pub witness: Option<Dfa>,
    /// Number of recognizers found.
    pub recognizers: usize,
}

/// The only accepting set with which `table` (start state 0, all states
/// reachable) recognizes the language of `target`, if any: walking both
/// machines in lockstep pairs every state with target states that must
/// agree on acceptance.
fn forced_acceptance(table: &[usize], n: usize, target: &Dfa) -> Option<Vec<usize>> {
    let k = target.symbol_count();
    let mut paired: Vec<Option<bool>> = vec![None; n];
    let mut seen = vec![false; n * target.state_count()];
    let mut stack = vec![(0usize, target.start())];
    seen[target.start()] = true;
    while let Some((q, t)) = stack.pop() {
        let want = target.is_accepting(t);
        match paired[q] {
            Some(have) if have != want => return None,
            _ => paired[q] = Some(want),
        }
        for s in 0..k {
            let next = (table[q * k + s], target.next(t, s));
            let id = next.0 * target.state_count() + next.1;
            if !seen[id] {
                seen[id] = true;
                stack.push(next);
            }
        }
    }
    Some((0..n).filter(|&q| paired[q] == Some(true)).collect())
}

fn max_inflow(table: &[usize], n: usize, k: usize) -> usize {
    let mut counts = vec![0usize; n * k];
    for (i, &t) in table.iter().enumerate() {
        counts[t * k + i % k] += 1;
    }
    counts.into_iter().max().unwrap_or(0)
}

/// Searches every canonical recognizer of `target`'s language with at most
/// `spec.max_states` states. Tables are checked in parallel; the merge
/// keeps enumeration order, so the result does not depend on scheduling.
pub fn inflow_search(target: &Dfa, spec: &EnumerationSpec) -> Result<InflowSearch> {
    spec.check()?;
    let k = target.symbol_count();
    let mut best: Option<(usize, Dfa)> = None;
    let mut recognizers = 0;
    for n in 1..=spec.max_states {
        let tables = canonical_tables(n, k);
        let hits: Vec<(usize, usize, Vec<usize>)> = tables
            .par_iter()
            .enumerate()
            .filter_map(|(i, table)| forced_acceptance(table, n, target).map(|acc| (i, max_inflow(table, n, k), acc)))
            .collect();
        recognizers += hits.len();
        if let Some((i, inflow, acc)) = hits.into_iter().min_by_key(|&(i, inflow, _)| (inflow, i)) {
            if best.as_ref().is_none_or(|(b, _)| inflow < *b) {
                let d = Dfa::new(target.alphabet().clone(), n, tables[i].clone(), 0, acc)?;
                best = Some((inflow, d));
            }
        }
    }
    Ok(InflowSearch {
        max_states: spec.max_states,
        min_inflow: best.as_ref().map(|(b, _)| *b),
        witness: best.map(|(_, d)| d),
        recognizers,
    })
}

/// Smallest max same-symbol in-degree over all recognizers of `target`'s
/// language with at most `max_states` states, or `None` if none exist
/// within the bound.
pub fn min_inflow_over_recognizers(target: &Dfa, max_states: usize) -> Result<Option<usize>> {
    let spec = EnumerationSpec::canonical(max_states, target.alphabet().clone());
    Ok(inflow_search(target, &spec)?.min_inflow)
}

/// Some reversible recognizer of `target`'s language with at most
/// `max_states` states. `None` only means there is none within the bound.
pub fn find_reversible_recognizer(target: &Dfa, max_states: usize) -> Result<Option<Dfa>> {
    find_reversible_recognizer_with(target, &EnumerationSpec::canonical(max_states, target.alphabet().clone()))
}

pub fn find_reversible_recognizer_with(target: &Dfa, spec: &EnumerationSpec) -> Result<Option<Dfa>> {
    spec.check()?;
    let k = target.symbol_count();
    for n in 1..=spec.max_states {
        let tables = canonical_tables(n, k);
        let hit = tables
            .par_iter()
            .enumerate()
            .filter(|(_, table)| max_inflow(table, n, k) <= 1)
            .filter_map(|(i, table)| forced_acceptance(table, n, target).map(|acc| (i, acc)))
            .min_by_key(|&(i, _)| i);
        if let Some((i, acc)) = hit {
            return Dfa::new(target.alphabet().clone(), n, tables[i].clone(), 0, acc).map(Some);
        }
    }
    Ok(None)
}
