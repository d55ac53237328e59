//! Randomized search for pairwise-disjoint isomorphic copies of a set system.
//!
//! Copy 0 is the input itself; copies `1..s` are images under point
//! permutations. The objective is the number of colliding block pairs,
//! `Σ C(m_B, 2)` over every block `B` with multiplicity `m_B` across copies.
//! A move swaps the images of two points in one copy and is kept when the
//! objective does not grow. After `stall` moves without strict improvement
//! the non-identity copies are re-randomized.
//!
//! With a key size `k`, the multiplicities are taken over the `k`-subsets of
//! blocks instead, so distinct copies may not even share a `k`-subset.

use std::collections::HashMap;
use std::sync::atomic::{AtomicBool, Ordering};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::codes::{Block, SetSystem};
use crate::error::{Error, Result};
use crate::math::{binomial_u128, BinomialTable};

/// Search controls for [`disjointify_with`].
#[derive(Clone, Debug)]
pub struct DisjointifyConfig {
    pub seed: u64,
    /// Total move budget, shared evenly across workers.
    pub budget: u64,
    /// Moves without strict improvement before a restart.
    pub stall: u64,
    pub workers: usize,
    /// Optional point classes; permutations only move points within a class.
    pub classes: Option<Vec<usize>>,
    /// Forbid shared `k`-subsets between copies rather than shared blocks.
    pub key_size: Option<usize>,
}

impl DisjointifyConfig {
    pub fn new(seed: u64, budget: u64) -> Self {
        DisjointifyConfig { seed, budget, stall: 1000, workers: 1, classes: None, key_size: None }
    }
}

#[derive(Clone, Debug)]
pub struct Disjointified {
    /// `s` pairwise-disjoint copies; the first is the input system.
    pub systems: Vec<SetSystem>,
    /// The point permutations that produced each copy.
    pub permutations: Vec<Vec<usize>>,
    pub moves: u64,
    pub restarts: u64,
    /// `|blocks|^s < C(n, k)`: a counting argument guarantees existence.
    pub guaranteed: bool,
}

/// Find `s` pairwise-disjoint isomorphic copies of `system`.
pub fn disjointify(system: &SetSystem, s: usize, seed: u64, budget: u64) -> Result<Disjointified> {
    disjointify_with(system, s, &DisjointifyConfig::new(seed, budget))
}

pub fn disjointify_with(system: &SetSystem, s: usize, config: &DisjointifyConfig) -> Result<Disjointified> {
    if s == 0 {
        return Err(Error::precondition("target count s must be at least 1"));
    }
    let n = system.order();
    if let Some(classes) = &config.classes {
        if classes.len() != n {
            return Err(Error::precondition("point classes must label every point"));
        }
    }
    if let Some(k) = config.key_size {
        if k == 0 || system.blocks().iter().any(|b| b.len() < k) {
            return Err(Error::precondition(format!("key size {k} must be in 1..=block size")));
        }
        let mut seen = std::collections::HashSet::new();
        for b in system.blocks() {
            let mut dup = false;
            crate::math::for_each_sub_of(b, k, |sub| dup |= !seen.insert(sub.to_vec()));
            if dup {
                return Err(Error::precondition(format!("two blocks of the input share a {k}-subset")));
            }
        }
    }
    let guaranteed = config.key_size.is_none() && sufficient_condition(system, s);
    let identity: Vec<usize> = (0..n).collect();
    if s == 1 {
        return Ok(Disjointified {
            systems: vec![system.clone()],
            permutations: vec![identity],
            moves: 0,
            restarts: 0,
            guaranteed,
        });
    }
    if system.is_empty() {
        // Empty systems are trivially disjoint.
        return Ok(Disjointified {
            systems: vec![system.clone(); s],
            permutations: vec![identity; s],
            moves: 0,
            restarts: 0,
            guaranteed,
        });
    }

    let workers = config.workers.max(1);
    let share = config.budget.div_ceil(workers as u64);
    let stop = AtomicBool::new(false);
    let outcomes: Vec<Outcome> = if workers == 1 {
        vec![Climber::new(system, s, config, config.seed).run(share, &stop)]
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|w| {
                    let stop = &stop;
                    let seed = config.seed.wrapping_add((w as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
                    scope.spawn(move || Climber::new(system, s, config, seed).run(share, stop))
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("search worker panicked")).collect()
        })
    };

    let spent: u64 = outcomes.iter().map(|o| o.moves).sum();
    let restarts: u64 = outcomes.iter().map(|o| o.restarts).sum();
    let Some(perms) = outcomes.into_iter().find_map(|o| o.found) else {
        return Err(Error::BudgetExhausted {
            what: format!("{s} pairwise-disjoint copies of a {}-block system on {n} points", system.len()),
            spent,
        });
    };
    let systems = perms.iter().map(|p| system.permuted(p)).collect::<Result<Vec<_>>>()?;
    for i in 0..s {
        for j in i + 1..s {
            if crate::codes::intersection_size(&systems[i], &systems[j])? != 0 {
                return Err(Error::design(format!("copies {i} and {j} intersect")));
            }
        }
    }
    if let Some(k) = config.key_size {
        let mut seen = std::collections::HashSet::new();
        for sys in &systems {
            for b in sys.blocks() {
                let mut dup = false;
                crate::math::for_each_sub_of(b, k, |sub| dup |= !seen.insert(sub.to_vec()));
                if dup {
                    return Err(Error::design(format!("copies share a {k}-subset")));
                }
            }
        }
    }
    Ok(Disjointified { systems, permutations: perms, moves: spent, restarts, guaranteed })
}

/// Counting condition under which disjoint copies must exist.
pub fn sufficient_condition(system: &SetSystem, s: usize) -> bool {
    let Some(k) = system.uniform_size() else { return false };
    let total = binomial_u128(system.order() as u64, k as u64);
    let b = system.len() as u128;
    let mut pow: u128 = 1;
    for _ in 0..s {
        pow = match pow.checked_mul(b) {
            Some(p) => p,
            None => return false,
        };
    }
    pow < total
}

struct Outcome {
    found: Option<Vec<Vec<usize>>>,
    moves: u64,
    restarts: u64,
}

/// `size << 56 | colex rank`.
type Key = u64;

/// Above this many possible keys the multiplicities live in a hash map.
const DENSE_LIMIT: u128 = 1 << 22;

enum Counter {
    /// Indexed by `base[size] + rank`.
    Dense {
        base: Vec<u64>,
        counts: Vec<u32>,
    },
    Sparse(HashMap<Key, u32>),
}

impl Counter {
    fn new(n: usize, sizes: &[usize]) -> Self {
        let kmax = sizes.iter().copied().max().unwrap_or(0);
        let mut base = vec![0u64; kmax + 2];
        let mut total: u128 = 0;
        for (k, slot) in base.iter_mut().enumerate().take(kmax + 1) {
            *slot = total as u64;
            if sizes.contains(&k) {
                total += binomial_u128(n as u64, k as u64);
            }
            if total > DENSE_LIMIT {
                return Counter::Sparse(HashMap::new());
            }
        }
        Counter::Dense { base, counts: vec![0; total as usize] }
    }

    fn slot(&mut self, k: Key) -> &mut u32 {
        match self {
            Counter::Dense { base, counts } => &mut counts[(base[(k >> 56) as usize] + (k & ((1 << 56) - 1))) as usize],
            Counter::Sparse(map) => map.entry(k).or_insert(0),
        }
    }

    fn release(&mut self, k: Key) {
        if let Counter::Sparse(map) = self {
            if map.get(&k) == Some(&0) {
                map.remove(&k);
            }
        }
    }
}

struct Climber<'a> {
    blocks: &'a [Block],
    incidence: Vec<Vec<usize>>,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    table: BinomialTable,
    key_size: Option<usize>,
    /// Block `b` owns `keys[copy][offsets[b]..offsets[b + 1]]`.
    offsets: Vec<usize>,
    perms: Vec<Vec<usize>>,
    keys: Vec<Vec<Key>>,
    counts: Counter,
    objective: u64,
    stall: u64,
    rng: ChaCha8Rng,
}

impl<'a> Climber<'a> {
    fn new(system: &'a SetSystem, s: usize, config: &DisjointifyConfig, seed: u64) -> Self {
        let n = system.order();
        let blocks = system.blocks();
        let kmax = blocks.iter().map(Vec::len).max().unwrap_or(0);
        let mut offsets = vec![0];
        for b in blocks {
            let per = config.key_size.map_or(1, |k| binomial_u128(b.len() as u64, k as u64) as usize);
            offsets.push(offsets.last().unwrap() + per);
        }
        let mut incidence = vec![Vec::new(); n];
        for (bi, b) in blocks.iter().enumerate() {
            for &p in b {
                incidence[p].push(bi);
            }
        }
        let class_of = config.classes.clone().unwrap_or_else(|| vec![0; n]);
        let mut by_class: HashMap<usize, Vec<usize>> = HashMap::new();
        for (p, &c) in class_of.iter().enumerate() {
            by_class.entry(c).or_default().push(p);
        }
        let mut classes: Vec<Vec<usize>> = by_class.into_values().collect();
        classes.sort();
        let mut climber = Climber {
            blocks,
            incidence,
            classes,
            class_of,
            table: BinomialTable::new(n, kmax),
            key_size: config.key_size,
            offsets,
            perms: vec![(0..n).collect(); s],
            keys: vec![Vec::new(); s],
            counts: {
                let mut sizes: Vec<usize> = match config.key_size {
                    Some(k) => vec![k],
                    None => blocks.iter().map(Vec::len).collect(),
                };
                sizes.sort_unstable();
                sizes.dedup();
                Counter::new(n, &sizes)
            },
            objective: 0,
            stall: config.stall.max(1),
            rng: ChaCha8Rng::seed_from_u64(seed),
        };
        climber.restart();
        climber
    }

    /// Write the keys of `block` under copy `copy` into `out`.
    fn block_keys(&self, copy: usize, block: usize, out: &mut [Key]) {
        let perm = &self.perms[copy];
        let mut img: Vec<usize> = self.blocks[block].iter().map(|&p| perm[p]).collect();
        img.sort_unstable();
        match self.key_size {
            None => out[0] = ((img.len() as u64) << 56) | self.table.rank(&img),
            Some(k) => {
                let mut i = 0;
                crate::math::for_each_sub_of(&img, k, |sub| {
                    out[i] = ((k as u64) << 56) | self.table.rank(sub);
                    i += 1;
                });
            }
        }
    }

    fn restart(&mut self) {
        for copy in 1..self.perms.len() {
            let mut perm: Vec<usize> = (0..self.class_of.len()).collect();
            for class in &self.classes {
                let mut images = class.clone();
                images.shuffle(&mut self.rng);
                for (&p, &img) in class.iter().zip(&images) {
                    perm[p] = img;
                }
            }
            self.perms[copy] = perm;
        }
        for copy in 0..self.perms.len() {
            for i in 0..self.keys[copy].len() {
                let k = self.keys[copy][i];
                *self.counts.slot(k) = 0;
                self.counts.release(k);
            }
        }
        self.objective = 0;
        for copy in 0..self.perms.len() {
            let mut keys = vec![0; *self.offsets.last().unwrap()];
            for b in 0..self.blocks.len() {
                self.block_keys(copy, b, &mut keys[self.offsets[b]..self.offsets[b + 1]]);
            }
            for &k in &keys {
                let c = self.counts.slot(k);
                self.objective += u64::from(*c);
                *c += 1;
            }
            self.keys[copy] = keys;
        }
    }

    fn remove(&mut self, k: Key) -> i64 {
        let c = self.counts.slot(k);
        *c -= 1;
        let delta = -i64::from(*c);
        self.counts.release(k);
        delta
    }

    fn add(&mut self, k: Key) -> i64 {
        let c = self.counts.slot(k);
        let delta = i64::from(*c);
        *c += 1;
        delta
    }

    /// Swap the images of `x` and `y` in `copy`; returns the objective change.
    fn swap(&mut self, copy: usize, x: usize, y: usize, affected: &[usize]) -> i64 {
        let mut delta = 0;
        for &b in affected {
            for i in self.offsets[b]..self.offsets[b + 1] {
                delta += self.remove(self.keys[copy][i]);
            }
        }
        self.perms[copy].swap(x, y);
        let mut buf = std::mem::take(&mut self.keys[copy]);
        for &b in affected {
            let range = self.offsets[b]..self.offsets[b + 1];
            self.block_keys(copy, b, &mut buf[range.clone()]);
            for &k in &buf[range] {
                delta += self.add(k);
            }
        }
        self.keys[copy] = buf;
        delta
    }

    fn run(mut self, budget: u64, stop: &AtomicBool) -> Outcome {
        let movable: Vec<usize> = (0..self.classes.len()).filter(|&c| self.classes[c].len() > 1).collect();
        let s = self.perms.len();
        let (mut moves, mut restarts, mut since) = (0u64, 0u64, 0u64);
        let mut affected = Vec::new();
        while self.objective > 0 && moves < budget && !movable.is_empty() {
            if moves % 1024 == 0 && stop.load(Ordering::Relaxed) {
                break;
            }
            moves += 1;
            let copy = self.rng.gen_range(1..s);
            let class = &self.classes[movable[self.rng.gen_range(0..movable.len())]];
            let i = self.rng.gen_range(0..class.len());
            let mut j = self.rng.gen_range(0..class.len() - 1);
            if j >= i {
                j += 1;
            }
            let (x, y) = (class[i], class[j]);
            affected.clear();
            affected.extend_from_slice(&self.incidence[x]);
            affected.extend_from_slice(&self.incidence[y]);
            affected.sort_unstable();
            affected.dedup();
            let delta = self.swap(copy, x, y, &affected);
            if delta <= 0 {
                self.objective = (self.objective as i64 + delta) as u64;
                since = if delta < 0 { 0 } else { since + 1 };
            } else {
                self.swap(copy, x, y, &affected);
                since += 1;
            }
            if since >= self.stall && self.objective > 0 {
                self.restart();
                restarts += 1;
                since = 0;
            }
        }
        let found = (self.objective == 0).then(|| {
            stop.store(true, Ordering::Relaxed);
            self.perms
        });
        Outcome { found, moves, restarts }
    }
}
