use crate::automata::{Alphabet, Dfa};
use crate::error::{Error, Result};

/// Default cap on `n^(n k) 2^n n`, the size of the unpruned search space.
pub const ENUMERATION_GUARD: u128 = 1_000_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationSpec {
    pub max_states: usize,
    pub alphabet: Alphabet,
    /// Only machines whose states are all reachable from the start state.
    pub reachable_only: bool,
    /// Only machines numbered in breadth-first order from the start state,
    /// one per isomorphism class. Implies `reachable_only`.
    pub canonical_only: bool,
    pub guard: u128,
}

impl EnumerationSpec {
    /// Canonical reachable machines with at most `max_states` states.
    pub fn canonical(max_states: usize, alphabet: Alphabet) -> Self {
        Self { max_states, alphabet, reachable_only: true, canonical_only: true, guard: ENUMERATION_GUARD }
    }

    pub fn with_guard(mut self, guard: u128) -> Self {
        self.guard = guard;
        self
    }

    /// `n^(n k) 2^n n` at `n = max_states`, saturating.
    pub fn candidate_bound(&self) -> u128 {
        let n = self.max_states as u128;
        let k = self.alphabet.len() as u32;
        let tables = n.checked_pow(self.max_states as u32 * k).unwrap_or(u128::MAX);
        let accepts = 1u128.checked_shl(self.max_states as u32).unwrap_or(u128::MAX);
        tables.saturating_mul(accepts).saturating_mul(n)
    }

    pub fn check(&self) -> Result<()> {
        if self.max_states == 0 {
            return Err(Error::InvalidArgument("max_states must be at least 1".into()));
        }
        let bound = self.candidate_bound();
        if bound > self.guard {
            return Err(Error::GuardExceeded { candidates: bound, limit: self.guard });
        }
        Ok(())
    }
}

/// Transition tables (row-major, start state 0) of all machines with
/// exactly `n` states over `k` symbols that are numbered in breadth-first
/// order with every state reachable. Generated directly: when the
/// transition `(q, s)` is filled in, `q` must already have been discovered
/// and the target is either a discovered state or the next new one.
pub fn canonical_tables(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn fill(n: usize, k: usize, pos: usize, discovered: usize, table: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if pos == n * k {
            if discovered == n {
                out.push(table.clone());
            }
            return;
        }
        if pos / k >= discovered || discovered + (n * k - pos) < n {
            return;
        }
        for t in 0..=discovered.min(n - 1) {
            table.push(t);
            fill(n, k, pos + 1, discovered.max(t + 1), table, out);
            table.pop();
        }
    }
    let mut out = Vec::new();
    fill(n, k, 0, 1, &mut Vec::with_capacity(n * k), &mut out);
    out
}

/// Transition tables of all machines with exactly `n` states over `k`
/// symbols, start state 0, no pruning.
pub fn all_tables(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let len = n * k;
    let total = (n as u128).pow(len as u32);
    (0..total).map(move |mut code| {
        let mut table = vec![0; len];
        for slot in table.iter_mut().rev() {
            *slot = (code % n as u128) as usize;
            code /= n as u128;
        }
        table
    })
}

fn accepting_sets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..1u64 << n).map(move |mask| (0..n).filter(|&q| mask >> q & 1 == 1).collect())
}

/// Every machine allowed by `spec` with `1..=max_states` states, each with
/// all `2^n` accepting sets, ordered by state count, then table, then
/// accepting-set bitmask.
pub fn enumerate_dfas(spec: &EnumerationSpec) -> Result<impl Iterator<Item = Dfa> + '_> {
    spec.check()?;
    let k = spec.alphabet.len();
    let canonical = spec.canonical_only;
    let reachable = spec.reachable_only || spec.canonical_only;
    Ok((1..=spec.max_states).flat_map(move |n| {
        let tables: Box<dyn Iterator<Item = Vec<usize>>> = if canonical {
            Box::new(canonical_tables(n, k).into_iter())
        } else {
            Box::new(all_tables(n, k))
        };
        tables
            .map(move |table| Dfa::new(spec.alphabet.clone(), n, table, 0, []).expect("table in range"))
            .filter(move |d| !reachable || d.reachable().iter().all(|&r| r))
            .flat_map(move |d| accepting_sets(n).map(move |acc| d.with_accepting(acc).expect("states in range")))
    }))
}
