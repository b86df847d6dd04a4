use crate::automata::Dfa;
use crate::error::{Error, Result};

use super::bags::expand_bags;

/// Bag sizes for [`rebalance`] together with the quantities driving the
/// search.
///
/// `per_symbol_in[s][i]` is the number of `s`-transitions entering bag `i`
/// (the sum of the sizes of the bags whose `s`-successor is `i`) and
/// `slack[i] = bag_sizes[i] * (k + 1) - max_s per_symbol_in[s][i]` with
/// `k` the alphabet size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BagPlan {
    pub bag_sizes: Vec<usize>,
    pub slack: Vec<i64>,
    pub per_symbol_in: Vec<Vec<usize>>,
}

impl BagPlan {
    /// One state per bag.
    pub fn initial(quotient: &Dfa) -> Self {
        Self::with_sizes(quotient, vec![1; quotient.state_count()])
    }

    pub fn with_sizes(quotient: &Dfa, bag_sizes: Vec<usize>) -> Self {
        let k = quotient.symbol_count();
        let n = quotient.state_count();
        let mut per_symbol_in = vec![vec![0usize; n]; k];
        for (j, &size) in bag_sizes.iter().enumerate() {
            for (s, row) in per_symbol_in.iter_mut().enumerate() {
                row[quotient.next(j, s)] += size;
            }
        }
        let slack = (0..n)
            .map(|i| slack_of(bag_sizes[i], k, per_symbol_in.iter().map(|row| row[i])))
            .collect();
        Self { bag_sizes, slack, per_symbol_in }
    }

    /// Grows bags until every slack is nonnegative: repeatedly add a state to
    /// the bag with the smallest slack (lowest index on ties).
    ///
    /// Only negative slacks are ever raised, by at most `k + 1`, so no slack
    /// exceeds `max(initial, k)`; every iteration raises the slack total by
    /// at least one. The difference between those two totals caps the loop.
    pub fn solve(quotient: &Dfa) -> Result<Self> {
        let k = quotient.symbol_count();
        let mut plan = Self::initial(quotient);
        let ceiling: i64 = plan.slack.iter().map(|&u| u.max(k as i64)).sum();
        let floor: i64 = plan.slack.iter().sum();
        let cap = (ceiling - floor).max(0) as usize;

        let mut iterations = 0;
        loop {
            let (i, &u) = plan
                .slack
                .iter()
                .enumerate()
                .min_by_key(|&(i, &u)| (u, i))
                .expect("at least one bag");
            if u >= 0 {
                break;
            }
            if iterations == cap {
                return Err(Error::IterationCap(cap));
            }
            iterations += 1;
            plan.bag_sizes[i] += 1;
            let mut touched = vec![i];
            for s in 0..k {
                let t = quotient.next(i, s);
                plan.per_symbol_in[s][t] += 1;
                touched.push(t);
            }
            for t in touched {
                plan.slack[t] = slack_of(
                    plan.bag_sizes[t],
                    k,
                    plan.per_symbol_in.iter().map(|row| row[t]),
                );
            }
        }
        Ok(plan)
    }
}

fn slack_of(size: usize, k: usize, incoming: impl Iterator<Item = usize>) -> i64 {
    size as i64 * (k as i64 + 1) - incoming.max().unwrap_or(0) as i64
}

/// Equivalent DFA in which no state has more than `|alphabet| + 1` incoming
/// transitions on the same symbol.
///
/// A machine that already meets the bound is returned unchanged. Otherwise
/// the minimal machine's states are grown into bags by [`BagPlan::solve`]
/// and incoming transitions are distributed round-robin inside each bag.
pub fn rebalance(d: &Dfa) -> Result<Dfa> {
    let bound = d.symbol_count() + 1;
    if d.in_degree_profile().max() <= bound {
        return Ok(d.clone());
    }
    let minimal = d.minimize();
    let plan = BagPlan::solve(&minimal)?;
    let out = expand_bags(&minimal, &plan.bag_sizes);
    debug_assert!(out.in_degree_profile().max() <= bound);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::Alphabet;
    use crate::transforms::{gen_lbb, gen_lj};

    #[test]
    fn lbb_slacks() {
        let m = gen_lbb().minimize();
        let plan = BagPlan::initial(&m);
        assert_eq!(plan.slack, vec![1, 2, 0, 1]);
        assert_eq!(BagPlan::solve(&m).unwrap().bag_sizes, vec![1, 1, 1, 1]);
        assert_eq!(rebalance(&m).unwrap(), m);
    }

    #[test]
    fn unary_l1_untouched() {
        let d = gen_lj(1).minimize();
        assert_eq!(d.in_degree_profile().max(), 2);
        assert_eq!(rebalance(&d).unwrap(), d);
    }

    #[test]
    fn reversible_untouched() {
        let d = Dfa::from_fn(Alphabet::new(["a", "b"]).unwrap(), 3, 0, [1], |q, s| (q + s + 1) % 3)
            .unwrap();
        assert!(d.is_reversible());
        assert_eq!(rebalance(&d).unwrap(), d);
    }

    #[test]
    fn overloaded_minimal_machine_is_split() {
        // b rotates a 6-cycle, a resets to state 0; minimal, chi(0, a) = 6
        let alphabet = Alphabet::new(["a", "b"]).unwrap();
        let d = Dfa::from_fn(alphabet, 6, 0, [0], |q, s| if s == 0 { 0 } else { (q + 1) % 6 })
            .unwrap();
        assert_eq!(d.minimize().state_count(), 6);
        assert_eq!(d.in_degree_profile().max(), 6);
        let r = rebalance(&d).unwrap();
        assert!(r.in_degree_profile().max() <= 3);
        assert!(r.equivalent(&d).unwrap().is_equivalent());
        assert!(r.state_count() > 6);
    }
}
