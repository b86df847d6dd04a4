//! Language-preserving rewrites that lower per-step or per-length energy,
//! and generators for the reference language families.

mod bags;
mod expand;
mod families;
mod rebalance;

pub use bags::expand_bags;
pub use expand::{cycle_expand, tree_expand, tree_expand_with_cap, DEFAULT_STATE_CAP};
pub use families::{gen_lbb, gen_li, gen_lj, in_lbb, in_li, in_lj};
pub use rebalance::{rebalance, BagPlan};
