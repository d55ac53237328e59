//! The lifting strategy and the code constructions built on it.

mod dispatch;
mod large;
mod lift;
mod n32;
mod n43;
mod probabilistic;

pub use dispatch::{construct, ConstructOptions};
pub use large::{construct_13_6_4, construct_2w, construct_w_plus_1, default_t};
pub use lift::{best_shortening_coordinate, lift, shorten, LiftPlan};
pub use n32::construct_n32;
pub use n43::{
    colour_triples, construct_n43, construct_n43_packing, construct_n43_with, cyclic_code_6, cyclic_code_7,
    graham_sloane_classes, optimal_4_4_3_3, optimal_5_4_3_3, partition_lift_asymptotic,
};
pub use probabilistic::{default_lambda, probabilistic_construct, ProbabilisticRun};

use crate::codes::SetSystem;
use crate::designs::{disjointify_with, DisjointifyConfig};
use crate::error::{Error, Result};

/// Default hill-climbing move budget.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// Seed, budget and parallelism for the randomized ingredient searches.
#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub seed: u64,
    pub budget: u64,
    pub workers: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { seed: 0, budget: DEFAULT_BUDGET, workers: 1 }
    }
}

impl SearchOptions {
    pub fn new(seed: u64, budget: u64) -> Self {
        SearchOptions { seed, budget, ..Default::default() }
    }

    pub(crate) fn disjointify_config(&self) -> DisjointifyConfig {
        DisjointifyConfig { workers: self.workers, ..DisjointifyConfig::new(self.seed, self.budget) }
    }
}

/// Up to `s` pairwise-disjoint copies of `system`.
///
/// When the search for `s` runs out of budget the target drops by 1, 2, 4, ...
/// until a search succeeds; one copy always does.
pub(crate) fn disjoint_copies(system: &SetSystem, s: usize, opts: &SearchOptions) -> Result<Vec<SetSystem>> {
    disjoint_copies_keyed(system, s, opts, None)
}

/// As [`disjoint_copies`], but copies may not share any `key_size`-subset.
pub(crate) fn disjoint_copies_keyed(
    system: &SetSystem,
    s: usize,
    opts: &SearchOptions,
    key_size: Option<usize>,
) -> Result<Vec<SetSystem>> {
    let cfg = DisjointifyConfig { key_size, ..opts.disjointify_config() };
    let (mut target, mut step) = (s.max(1), 1);
    loop {
        match disjointify_with(system, target, &cfg) {
            Ok(out) => return Ok(out.systems),
            Err(Error::BudgetExhausted { .. }) if target > 1 => {
                target = target.saturating_sub(step).max(1);
                step *= 2;
            }
            Err(e) => return Err(e),
        }
    }
}

/// `Ok(code)` when the target size was reached, `Error::Partial` otherwise.
pub(crate) fn full_or_partial(code: crate::codes::Code, target: usize) -> Result<crate::codes::Code> {
    if code.len() >= target {
        Ok(code)
    } else {
        Err(Error::Partial { partial: Box::new(code), target })
    }
}
