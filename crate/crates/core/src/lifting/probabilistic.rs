use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::lift::finish_at;
use crate::codes::{Code, Word};
use crate::designs::{greedy_packing_with, Packing, PackingOptions};
use crate::error::{Error, Result};
use crate::math::{binomial_u128, for_each_sub_of, BinomialTable};

/// Outcome of one random-symbol assignment on a packing.
#[derive(Clone, Debug)]
pub struct ProbabilisticRun {
    pub packing: Packing,
    pub seed: u64,
    /// Ordered pairs `(u, v)` with `v ∈ conf(u)`.
    pub conflicts_found: u64,
    pub deleted: usize,
    pub final_code: Code,
}

/// `(t, f) = (⌈(2w-d+1)/2⌉, ⌊(2w-d+1)/2⌋)`.
pub(crate) fn t_and_f(d: usize, w: usize) -> (usize, usize) {
    let m = 2 * w + 1 - d;
    (m.div_ceil(2), m / 2)
}

/// `max(1, ⌊((q-1)^e / C(w,t) + 1) / 2⌋)` with `e = t` for odd `d`, `t - 1`
/// for even `d`.
pub fn default_lambda(d: usize, w: usize, q: u16) -> u64 {
    if d == 0 || d > 2 * w {
        return 1;
    }
    let (t, _) = t_and_f(d, w);
    let e = if d % 2 == 1 { t } else { t.saturating_sub(1) };
    let c = binomial_u128(w as u64, t as u64);
    let lam = u128::from(q - 1).checked_pow(e as u32).map_or(u128::MAX, |p| (p + c) / (2 * c));
    lam.clamp(1, u64::MAX as u128) as u64
}

/// Random nonzero symbols on the blocks of a greedy `t-(n, w, λ)` packing,
/// followed by deletion of conflicting words.
///
/// The packing also caps pairwise block intersections at `t`, which the
/// conflict count relies on. Words are deleted one at a time, always a word
/// of maximum remaining conflict degree, earliest block first on ties.
pub fn probabilistic_construct(
    n: usize,
    d: usize,
    w: usize,
    q: u16,
    lambda: u64,
    seed: u64,
) -> Result<ProbabilisticRun> {
    if d == 0 || d > 2 * w || w > n {
        return Err(Error::precondition(format!("need 1 <= d <= 2w <= 2n, got n={n}, d={d}, w={w}")));
    }
    if lambda == 0 {
        return Err(Error::precondition("lambda must be at least 1"));
    }
    if q < 3 {
        return Err(Error::precondition("random symbol assignment needs q >= 3"));
    }
    let lambda32 = u32::try_from(lambda).map_err(|_| Error::precondition("lambda too large"))?;
    let (t, _) = t_and_f(d, w);
    let opts = PackingOptions { seed: None, max_intersection: Some(t) };
    let packing = greedy_packing_with(n, w, t, lambda32, &opts)?;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let words: Vec<Word> = packing
        .blocks()
        .iter()
        .map(|b| {
            let entries: Vec<(usize, u8)> = b.iter().map(|&p| (p, rng.gen_range(1..q) as u8)).collect();
            Word::from_entries(n, &entries, q)
        })
        .collect::<Result<_>>()?;

    // Conflicting words share at least t support points, hence a t-subset.
    let table = BinomialTable::new(n, t);
    let mut through: Vec<Vec<usize>> = vec![Vec::new(); table.get(n, t) as usize];
    for (i, b) in packing.blocks().iter().enumerate() {
        for_each_sub_of(b, t, |s| through[table.rank(s) as usize].push(i));
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for bucket in &through {
        for (x, &i) in bucket.iter().enumerate() {
            for &j in &bucket[x + 1..] {
                if words[i].distance_unchecked(&words[j]) < d {
                    pairs.push((i, j));
                }
            }
        }
    }
    pairs.sort_unstable();
    pairs.dedup();

    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); words.len()];
    for &(i, j) in &pairs {
        adj[i].push(j);
        adj[j].push(i);
    }
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut alive = vec![true; words.len()];
    let mut deleted = 0;
    while let Some((u, _)) =
        degree.iter().enumerate().filter(|&(i, &g)| alive[i] && g > 0).max_by_key(|&(i, &g)| (g, std::cmp::Reverse(i)))
    {
        alive[u] = false;
        deleted += 1;
        for &v in &adj[u] {
            if alive[v] {
                degree[v] -= 1;
            }
        }
        degree[u] = 0;
    }
    let kept: Vec<Word> = words.into_iter().zip(&alive).filter(|(_, &a)| a).map(|(w, _)| w).collect();
    let tag = format!("IX:random({t}-({n},{w},{lambda})packing,seed={seed})");
    let final_code = finish_at(n, d, w, q, kept, tag)?;
    Ok(ProbabilisticRun { packing, seed, conflicts_found: 2 * pairs.len() as u64, deleted, final_code })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lambda_one_has_no_conflicts() {
        for (n, d, w, q) in [(10, 5, 4, 5), (12, 4, 3, 4), (15, 5, 4, 7), (9, 3, 3, 3)] {
            let run = probabilistic_construct(n, d, w, q, 1, 7).unwrap();
            assert_eq!(run.conflicts_found, 0);
            assert_eq!(run.deleted, 0);
            assert_eq!(run.final_code.len(), run.packing.len());
        }
    }

    #[test]
    fn deletion_leaves_a_verified_code() {
        let run = probabilistic_construct(15, 5, 4, 7, 2, 3).unwrap();
        assert!(run.final_code.is_verified());
        assert_eq!(run.final_code.len() + run.deleted, run.packing.len());
    }

    #[test]
    fn lambda_choice() {
        // d odd: t = 2, ((q-1)^2 / 6 + 1) / 2.
        assert_eq!(default_lambda(5, 4, 7), 3);
        assert_eq!(default_lambda(5, 4, 3), 1);
        // d even: e = t - 1.
        assert_eq!(default_lambda(4, 3, 13), 2);
    }

    #[test]
    fn preconditions() {
        assert!(probabilistic_construct(10, 9, 4, 5, 1, 0).is_err());
        assert!(probabilistic_construct(10, 5, 4, 2, 1, 0).is_err());
        assert!(probabilistic_construct(10, 5, 4, 5, 0, 0).is_err());
    }
}
