use crate::automata::Dfa;
use crate::error::{Error, Result};

/// Default cap on the number of states [`tree_expand`] may build.
pub const DEFAULT_STATE_CAP: usize = 1_000_000;

/// [`tree_expand_with_cap`] with [`DEFAULT_STATE_CAP`].
pub fn tree_expand(d: &Dfa, k: usize) -> Result<Dfa> {
    tree_expand_with_cap(d, k, DEFAULT_STATE_CAP)
}

/// Unrolls the minimal machine into trees of depth `k`.
///
/// Each state is a pair (root state `r` of the minimal machine, buffered
/// window `w` with `|w| <= k`) and behaves like `delta*(r, w)`. Reading a
/// symbol appends it to the window; once the window holds `k` symbols the
/// next symbol jumps to the root of `delta*(r, w s)`. Non-root states have
/// exactly one predecessor, so bits are only forgotten on entering a root,
/// once every `k + 1` steps. Unreachable trees are dropped.
pub fn tree_expand_with_cap(d: &Dfa, k: usize, cap: usize) -> Result<Dfa> {
    if k == 0 {
        return Err(Error::InvalidArgument("tree depth must be at least 1".into()));
    }
    let minimal = d.minimize();
    let c = minimal.state_count();
    let sigma = minimal.symbol_count();

    // nodes per tree: 1 + sigma + ... + sigma^k
    let mut level_offset = Vec::with_capacity(k + 1);
    let mut per_tree: u128 = 0;
    let mut level_size: u128 = 1;
    for _ in 0..=k {
        level_offset.push(per_tree);
        per_tree = per_tree.saturating_add(level_size);
        level_size = level_size.saturating_mul(sigma as u128);
    }
    let required = per_tree.saturating_mul(c as u128);
    if required > cap as u128 {
        return Err(Error::StateCap { required, cap });
    }
    let per_tree = per_tree as usize;
    let level_offset: Vec<usize> = level_offset.into_iter().map(|o| o as usize).collect();

    let total = per_tree * c;
    let mut delta = vec![0usize; total * sigma];
    let mut accepting = Vec::new();
    // minimal-machine state mimicked by each node of the tree rooted at r
    let mut mimic = vec![0usize; per_tree];
    for root in 0..c {
        mimic[0] = root;
        for depth in 0..=k {
            let width = per_tree_level_width(sigma, depth);
            for pos in 0..width {
                let local = level_offset[depth] + pos;
                let state = root * per_tree + local;
                let here = mimic[local];
                if minimal.is_accepting(here) {
                    accepting.push(state);
                }
                for s in 0..sigma {
                    let next = minimal.next(here, s);
                    let target = if depth < k {
                        let child = level_offset[depth + 1] + pos * sigma + s;
                        mimic[child] = next;
                        root * per_tree + child
                    } else {
                        next * per_tree
                    };
                    delta[state * sigma + s] = target;
                }
            }
        }
    }
    let expanded = Dfa::new(
        minimal.alphabet().clone(),
        total,
        delta,
        minimal.start() * per_tree,
        accepting,
    )?;
    Ok(expanded.trim())
}

fn per_tree_level_width(sigma: usize, depth: usize) -> usize {
    sigma.pow(depth as u32)
}

/// Replaces a state that loops to itself on every symbol by a cycle of `m`
/// equivalent states. Transitions that entered `state` now enter the first
/// copy (which keeps the index `state`); the copies `state`, `n`, `n + 1`,
/// ..., `n + m - 2` advance cyclically on every symbol.
pub fn cycle_expand(d: &Dfa, state: usize, m: usize) -> Result<Dfa> {
    if m < 2 {
        return Err(Error::InvalidArgument(format!("cycle length must be at least 2, got {m}")));
    }
    let n = d.state_count();
    if state >= n {
        return Err(Error::UnknownState { state, count: n });
    }
    if (0..d.symbol_count()).any(|s| d.next(state, s) != state) {
        return Err(Error::InvalidArgument(format!(
            "state {state} does not loop to itself on every symbol"
        )));
    }
    let copy = |i: usize| if i == 0 { state } else { n + i - 1 };
    let position = |q: usize| {
        if q == state {
            Some(0)
        } else if q >= n {
            Some(q - n + 1)
        } else {
            None
        }
    };
    let mut accepting = d.accepting_states();
    if d.is_accepting(state) {
        accepting.extend(n..n + m - 1);
    }
    Dfa::from_fn(d.alphabet().clone(), n + m - 1, d.start(), accepting, |q, s| match position(q) {
        Some(i) => copy((i + 1) % m),
        None => d.next(q, s),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::Alphabet;
    use crate::transforms::{gen_lbb, gen_li};

    #[test]
    fn tree_expand_lbb_depth3() {
        let d = gen_lbb();
        let t = tree_expand(&d, 3).unwrap();
        assert!(t.equivalent(&d).unwrap().is_equivalent());
        // 4 trees of 15 nodes, all roots reachable
        assert_eq!(t.state_count(), 60);
        let p = t.in_degree_profile();
        assert!(p.max() <= 4 * 8);
    }

    #[test]
    fn tree_expand_cap() {
        let d = gen_lbb();
        assert!(matches!(tree_expand_with_cap(&d, 20, 1000), Err(Error::StateCap { .. })));
        assert!(tree_expand(&d, 0).is_err());
        assert!(matches!(tree_expand(&d, 200), Err(Error::StateCap { .. })));
    }

    #[test]
    fn tree_expand_unary() {
        let d = gen_li(Alphabet::new(["a"]).unwrap());
        let t = tree_expand(&d, 2).unwrap();
        assert!(t.equivalent(&d).unwrap().is_equivalent());
    }

    #[test]
    fn cycle_expand_li() {
        let d = gen_li(Alphabet::new(["a", "b"]).unwrap());
        let c = cycle_expand(&d, 1, 3).unwrap();
        assert_eq!(c.state_count(), 4);
        assert!(c.equivalent(&d).unwrap().is_equivalent());
        let p = c.in_degree_profile();
        assert_eq!(p.chi(1, 0), 2);
        assert_eq!(p.chi(2, 0), 1);
        assert_eq!(p.chi(3, 0), 1);
    }

    #[test]
    fn cycle_expand_errors() {
        let d = gen_li(Alphabet::new(["a"]).unwrap());
        assert!(cycle_expand(&d, 1, 1).is_err());
        assert!(cycle_expand(&d, 0, 3).is_err());
        assert!(cycle_expand(&d, 9, 3).is_err());
    }
}
