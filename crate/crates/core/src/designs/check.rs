//! Exhaustive coverage checks used by every design constructor before it
//! returns.

use std::collections::HashMap;

use crate::codes::SetSystem;
use crate::error::{Error, Result};
use crate::math::{for_each_sub_of, BinomialTable};

/// Number of blocks through each `t`-subset, indexed by colex rank.
pub fn t_subset_counts(system: &SetSystem, t: usize) -> Vec<u32> {
    let n = system.order();
    let table = BinomialTable::new(n, t);
    let mut counts = vec![0u32; table.get(n, t) as usize];
    for block in system.blocks() {
        for_each_sub_of(block, t, |s| counts[table.rank(s) as usize] += 1);
    }
    counts
}

/// Every `t`-subset lies in at most (or, with `exact`, exactly) `lambda` blocks.
pub fn check_t_coverage(system: &SetSystem, t: usize, lambda: u32, exact: bool) -> Result<()> {
    let counts = t_subset_counts(system, t);
    if let Some(i) = counts.iter().position(|&c| c > lambda || (exact && c != lambda)) {
        return Err(Error::design(format!("{t}-subset #{i} covered {} times (lambda = {lambda})", counts[i])));
    }
    Ok(())
}

/// 2-(n, k, 1) design check.
pub fn is_pair_design(system: &SetSystem, k: usize) -> bool {
    system.uniform_size().is_some_and(|s| s == k) && check_t_coverage(system, 2, 1, true).is_ok()
}

/// Pairs covered by `blocks`, with multiplicity, keyed by `(min, max)`.
pub fn pair_multiplicities(system: &SetSystem) -> HashMap<(usize, usize), u32> {
    let mut map = HashMap::new();
    for b in system.blocks() {
        for i in 0..b.len() {
            for j in i + 1..b.len() {
                *map.entry((b[i], b[j])).or_insert(0) += 1;
            }
        }
    }
    map
}

/// Check that the pairs covered by `system` are exactly those for which
/// `wanted(x, y)` holds, each once.
pub fn check_pair_pattern(system: &SetSystem, wanted: impl Fn(usize, usize) -> bool) -> Result<()> {
    let n = system.order();
    let mut count = vec![0u8; n * n];
    for b in system.blocks() {
        for i in 0..b.len() {
            for j in i + 1..b.len() {
                let c = &mut count[b[i] * n + b[j]];
                *c = c.saturating_add(1);
            }
        }
    }
    for x in 0..n {
        for y in x + 1..n {
            let c = count[x * n + y];
            let want = u8::from(wanted(x, y));
            if c != want {
                return Err(Error::design(format!("pair {{{x}, {y}}} covered {c} times, expected {want}")));
            }
        }
    }
    Ok(())
}
