mod common;

use aec_core::transforms::{cycle_expand, gen_lj, rebalance, tree_expand, BagPlan};
use common::{arb_dfa, arb_dfa_and_word, same_language};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn rebalance_meets_bound(d in arb_dfa(8, 3)) {
        let r = rebalance(&d).unwrap();
        prop_assert!(same_language(&r, &d));
        prop_assert!(r.in_degree_profile().max() <= d.symbol_count() + 1);
    }

    #[test]
    fn rebalance_slack_is_nonnegative(d in arb_dfa(8, 3)) {
        let plan = BagPlan::solve(&d.minimize()).unwrap();
        prop_assert!(plan.slack.iter().all(|&u| u >= 0));
    }

    #[test]
    fn tree_expand_preserves_language(d in arb_dfa(5, 2), k in 1..=3usize) {
        let t = tree_expand(&d, k).unwrap();
        prop_assert!(same_language(&t, &d));
    }

    /// Only roots can have several same-symbol predecessors, and a run
    /// enters a root every `k + 1` steps, so costs appear only there.
    #[test]
    fn tree_expand_charges_only_root_entries((d, w) in arb_dfa_and_word(5, 2, 16), k in 1..=3usize) {
        let t = tree_expand(&d, k).unwrap();
        let trace = t.run_trace::<f64>(&w).unwrap();
        for (i, &bits) in trace.per_step_bits.iter().enumerate() {
            if (i + 1) % (k + 1) != 0 {
                prop_assert_eq!(bits, 0.0, "step {} costs {}", i, bits);
            }
        }
    }

    #[test]
    fn cycle_expand_preserves_language(d in arb_dfa(6, 2), m in 2..=4usize) {
        let full_loop = (0..d.state_count()).find(|&q| (0..d.symbol_count()).all(|s| d.next(q, s) == q));
        if let Some(q) = full_loop {
            let e = cycle_expand(&d, q, m).unwrap();
            prop_assert_eq!(e.state_count(), d.state_count() + m - 1);
            prop_assert!(same_language(&e, &d));
        }
    }
}

#[test]
fn lj_minimal_machines_force_large_in_degree() {
    for j in 1..=3 {
        assert!(gen_lj(j).minimize().in_degree_profile().max() > j, "j = {j}");
    }
}
