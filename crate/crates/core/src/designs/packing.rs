use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::check::check_t_coverage;
use crate::codes::{Block, SetSystem};
use crate::error::{Error, Result};
use crate::math::{binomial_u128, for_each_sub_of, for_each_subset, BinomialTable};

/// Above this many candidate blocks a seeded run relabels points instead of
/// materializing and shuffling the candidate list.
const SHUFFLE_LIMIT: u128 = 2_000_000;

/// `t-(n, w, λ)` packing: every `t`-subset lies in at most `λ` blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Packing {
    system: SetSystem,
    w: usize,
    t: usize,
    lambda: u32,
}

impl Packing {
    pub fn new(system: SetSystem, w: usize, t: usize, lambda: u32) -> Result<Self> {
        let p = Packing { system, w, t, lambda };
        p.validate()?;
        Ok(p)
    }

    pub fn system(&self) -> &SetSystem {
        &self.system
    }

    pub fn into_system(self) -> SetSystem {
        self.system
    }

    pub fn blocks(&self) -> &[Block] {
        self.system.blocks()
    }

    pub fn len(&self) -> usize {
        self.system.len()
    }

    pub fn is_empty(&self) -> bool {
        self.system.is_empty()
    }

    pub fn order(&self) -> usize {
        self.system.order()
    }

    pub fn w(&self) -> usize {
        self.w
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn lambda(&self) -> u32 {
        self.lambda
    }

    pub fn validate(&self) -> Result<()> {
        if !self.system.is_empty() && !self.system.is_uniform(&[self.w]) {
            return Err(Error::design(format!("packing blocks must have size {}", self.w)));
        }
        check_t_coverage(&self.system, self.t, self.lambda, false)
    }
}

#[derive(Clone, Debug, Default)]
pub struct PackingOptions {
    /// `None` scans candidates lexicographically.
    pub seed: Option<u64>,
    /// Also require any two blocks to share at most this many points.
    pub max_intersection: Option<usize>,
}

/// Greedy maximal `t-(n, w, λ)` packing.
pub fn greedy_packing(n: usize, w: usize, t: usize, lambda: u32, seed: Option<u64>) -> Result<Packing> {
    greedy_packing_with(n, w, t, lambda, &PackingOptions { seed, max_intersection: None })
}

pub fn greedy_packing_with(n: usize, w: usize, t: usize, lambda: u32, opts: &PackingOptions) -> Result<Packing> {
    if t > w || w > n {
        return Err(Error::precondition(format!("packing needs t <= w <= n, got t={t}, w={w}, n={n}")));
    }
    if lambda == 0 {
        return Err(Error::precondition("lambda must be at least 1"));
    }
    // A cap m on pairwise intersections means every (m+1)-subset is covered at most once.
    let strict = opts.max_intersection.filter(|&m| m < w).map(|m| m + 1);
    let kmax = w.max(strict.unwrap_or(0));
    let table = BinomialTable::new(n, kmax);
    let mut counts = vec![0u32; table.get(n, t) as usize];
    let mut strict_seen = strict.map(|s| vec![false; table.get(n, s) as usize]);

    let mut blocks: Vec<Block> = Vec::new();
    let mut consider = |cand: &[usize]| {
        let mut ok = true;
        for_each_sub_of(cand, t, |s| ok &= counts[table.rank(s) as usize] < lambda);
        if !ok {
            return;
        }
        if let (Some(s), Some(seen)) = (strict, strict_seen.as_ref()) {
            for_each_sub_of(cand, s, |sub| ok &= !seen[table.rank(sub) as usize]);
            if !ok {
                return;
            }
        }
        for_each_sub_of(cand, t, |s| counts[table.rank(s) as usize] += 1);
        if let (Some(s), Some(seen)) = (strict, strict_seen.as_mut()) {
            for_each_sub_of(cand, s, |sub| seen[table.rank(sub) as usize] = true);
        }
        blocks.push(cand.to_vec());
    };

    match opts.seed {
        None => for_each_subset(n, w, |c| consider(c)),
        Some(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            if binomial_u128(n as u64, w as u64) <= SHUFFLE_LIMIT {
                let mut all = Vec::new();
                for_each_subset(n, w, |c| all.push(c.to_vec()));
                all.shuffle(&mut rng);
                for c in &all {
                    consider(c);
                }
            } else {
                let mut relabel: Vec<usize> = (0..n).collect();
                relabel.shuffle(&mut rng);
                let mut img = vec![0; w];
                for_each_subset(n, w, |c| {
                    for (slot, &p) in img.iter_mut().zip(c) {
                        *slot = relabel[p];
                    }
                    img.sort_unstable();
                    consider(&img);
                });
            }
        }
    }
    Packing::new(SetSystem::new(n, blocks)?, w, t, lambda)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::math::common_count;

    #[test]
    fn fano_from_lexicographic_greedy() {
        let p = greedy_packing(7, 3, 2, 1, None).unwrap();
        assert_eq!(p.len(), 7);
    }

    #[test]
    fn lambda_one_blocks_share_fewer_than_t_points() {
        let p = greedy_packing(12, 4, 2, 1, Some(3)).unwrap();
        for (i, a) in p.blocks().iter().enumerate() {
            for b in &p.blocks()[i + 1..] {
                assert!(common_count(a, b) < 2);
            }
        }
    }

    #[test]
    fn max_intersection_is_respected() {
        let opts = PackingOptions { seed: Some(1), max_intersection: Some(2) };
        let p = greedy_packing_with(15, 4, 2, 2, &opts).unwrap();
        for (i, a) in p.blocks().iter().enumerate() {
            for b in &p.blocks()[i + 1..] {
                assert!(common_count(a, b) <= 2);
            }
        }
    }

    #[test]
    fn bad_parameters() {
        assert!(greedy_packing(5, 6, 2, 1, None).is_err());
        assert!(greedy_packing(5, 3, 4, 1, None).is_err());
        assert!(greedy_packing(5, 3, 2, 0, None).is_err());
    }

    #[test]
    fn seeded_runs_repeat() {
        let a = greedy_packing(11, 3, 2, 2, Some(4)).unwrap();
        let b = greedy_packing(11, 3, 2, 2, Some(4)).unwrap();
        assert_eq!(a, b);
    }
}
