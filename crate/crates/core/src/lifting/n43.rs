use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::lift::{best_shortening_coordinate, finish_at, lift_blocks, shorten};
use super::{disjoint_copies, full_or_partial, SearchOptions};
use crate::codes::{parse_code, Block, Code, SetSystem, Word};
use crate::designs::{gdd_pair_5_1, steiner_triple_system};
use crate::error::{Error, Result};
use crate::math::{binomial_u128, subsets};

const OPT_5_4_3_3: &str = include_str!("../../fixtures/opt_5_4_3_3.code");

/// Base words whose cyclic shifts give the optimal `(7, 4, 3)_q` codes.
const CYCLIC_WORDS_7: [[u8; 7]; 5] =
    [[0, 0, 0, 0, 1, 2, 1], [0, 0, 3, 3, 0, 0, 1], [0, 0, 2, 0, 3, 0, 2], [0, 0, 0, 4, 4, 0, 4], [0, 0, 0, 5, 0, 5, 5]];

/// The `n` classes `{T : Σ_{i∈T} i ≡ r (mod n)}` of weight-3 supports.
///
/// Two triples in one class cannot share two points, so each class is a
/// partial Steiner triple system. Classes may be empty for `n < 4`.
pub fn graham_sloane_classes(n: usize) -> Result<Vec<SetSystem>> {
    if n < 3 {
        return Err(Error::precondition(format!("Graham-Sloane classes need n >= 3, got {n}")));
    }
    let mut classes: Vec<Vec<Block>> = vec![Vec::new(); n];
    for t in subsets(n, 3) {
        let r = t.iter().sum::<usize>() % n;
        classes[r].push(t);
    }
    classes.into_iter().map(|b| SetSystem::new(n, b)).collect()
}

/// All cyclic shifts of the first `q - 1` base words, `q ∈ {4, 5, 6}`.
pub fn cyclic_code_7(q: u16) -> Result<Code> {
    if !(4..=6).contains(&q) {
        return Err(Error::precondition(format!("the cyclic (7, 4, 3)_q codes need q in 4..=6, got {q}")));
    }
    let mut words = Vec::new();
    for base in &CYCLIC_WORDS_7[..usize::from(q) - 1] {
        let w = Word::new(base.to_vec(), q)?;
        words.extend((0..7).map(|k| w.rotate(k)));
    }
    finish_at(7, 4, 3, q, words, "Lem13:cyclic")
}

/// The `(7, 4, 3)_q` cyclic code shortened at coordinate 0.
pub fn cyclic_code_6(q: u16) -> Result<Code> {
    shorten(&cyclic_code_7(q)?, 0)?.with_provenance("Lem14:cyclic/short@0").verified()
}

/// Optimal `(5, 4, 3)_3` code, cached from the exhaustive clique search.
pub fn optimal_5_4_3_3() -> Result<Code> {
    parse_code(OPT_5_4_3_3)?.with_provenance("brute-force(5,4,3)_3").verified()
}

/// Optimal `(4, 4, 3)_3` code `{0111, 2022}`.
pub fn optimal_4_4_3_3() -> Result<Code> {
    let words = vec![Word::new(vec![0, 1, 1, 1], 3)?, Word::new(vec![2, 0, 2, 2], 3)?];
    finish_at(4, 4, 3, 3, words, "(4,4,3)_3")
}

pub fn construct_n43(n: usize, q: u16) -> Result<Code> {
    construct_n43_with(n, q, &SearchOptions::default())
}

/// Best `(n, 4, 3)_q` construction available for `(n, q)`.
///
/// Search failures surface as `Error::Partial` carrying the verified code
/// actually reached.
pub fn construct_n43_with(n: usize, q: u16, opts: &SearchOptions) -> Result<Code> {
    if n < 3 || q < 2 {
        return Err(Error::precondition(format!("construct_n43 needs n >= 3 and q >= 2, got n={n}, q={q}")));
    }
    let qi = usize::from(q);
    if qi > n {
        return graham_sloane_lift(n, q);
    }
    if (4..=6).contains(&q) {
        match n {
            7 => return cyclic_code_7(q),
            6 => return cyclic_code_6(q),
            _ => {}
        }
    }
    match (n % 6, q) {
        (1 | 3, _) => sts_lift(n, q, (qi - 1).min(n - 2), opts),
        (0 | 2, _) => sts_deleted_lift(n, q, (qi - 1).min(n - 1), opts),
        (5, 3) => gdd_lift_5(n, opts),
        (4, 3) => gdd_lift_4(n, opts),
        _ => construct_n43_packing(n, q, opts),
    }
}

fn graham_sloane_lift(n: usize, q: u16) -> Result<Code> {
    let classes = graham_sloane_classes(n)?;
    let refs: Vec<&[Block]> = classes.iter().map(SetSystem::blocks).collect();
    finish_at(n, 4, 3, q, lift_blocks(n, q, &refs)?, format!("Thm13i:GS({n})"))
}

/// Triples of `0..n` in at most `colours` classes, no two triples of a class
/// sharing a pair. Randomized DSATUR with restarts.
pub fn colour_triples(n: usize, colours: usize, seed: u64, attempts: u64) -> Result<Vec<Vec<Block>>> {
    if colours == 0 || colours > 256 {
        return Err(Error::precondition("colour count must be in 1..=256"));
    }
    let triples = subsets(n, 3);
    let v = triples.len();
    let pair = |a: usize, b: usize| a * n + b;
    let mut through: Vec<Vec<usize>> = vec![Vec::new(); n * n];
    for (i, t) in triples.iter().enumerate() {
        for (a, b) in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
            through[pair(a, b)].push(i);
        }
    }
    let adj: Vec<Vec<usize>> = triples
        .iter()
        .enumerate()
        .map(|(i, t)| {
            [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])]
                .iter()
                .flat_map(|&(a, b)| through[pair(a, b)].iter().copied())
                .filter(|&j| j != i)
                .collect()
        })
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..attempts.max(1) {
        let mut order: Vec<usize> = (0..v).collect();
        order.shuffle(&mut rng);
        let mut colour = vec![usize::MAX; v];
        let mut banned = vec![[0u64; 4]; v];
        let mut sat = vec![0u32; v];
        let mut ok = true;
        for _ in 0..v {
            let &u =
                order.iter().filter(|&&x| colour[x] == usize::MAX).max_by_key(|&&x| sat[x]).expect("uncoloured vertex");
            let Some(c) = (0..colours).find(|&c| banned[u][c / 64] & (1 << (c % 64)) == 0) else {
                ok = false;
                break;
            };
            colour[u] = c;
            for &x in &adj[u] {
                let bit = 1u64 << (c % 64);
                if banned[x][c / 64] & bit == 0 {
                    banned[x][c / 64] |= bit;
                    sat[x] += 1;
                }
            }
        }
        if ok {
            let mut classes = vec![Vec::new(); colours];
            for (i, t) in triples.iter().enumerate() {
                classes[colour[i]].push(t.clone());
            }
            return Ok(classes);
        }
    }
    Err(Error::BudgetExhausted { what: format!("{colours}-colouring of the triples of {n} points"), spent: attempts })
}

/// When `s` copies would use every triple, colour the triples with the
/// `q - 1` available symbols instead of searching for a large set.
fn complete_by_colouring(n: usize, q: u16, opts: &SearchOptions, tag: String) -> Option<Code> {
    let attempts = (opts.budget / binomial_u128(n as u64, 3).max(1) as u64).clamp(1, 1000);
    let classes = colour_triples(n, usize::from(q) - 1, opts.seed, attempts).ok()?;
    let refs: Vec<&[Block]> = classes.iter().map(Vec::as_slice).collect();
    finish_at(n, 4, 3, q, lift_blocks(n, q, &refs).ok()?, tag).ok()
}

fn sts_lift(n: usize, q: u16, s: usize, opts: &SearchOptions) -> Result<Code> {
    let sts = steiner_triple_system(n)?;
    let target = s * sts.len();
    let copies = disjoint_copies(&sts, s, opts)?;
    if copies.len() < s && target as u128 == binomial_u128(n as u64, 3) {
        if let Some(code) = complete_by_colouring(n, q, opts, format!("Thm13iia:colour({n})")) {
            return Ok(code);
        }
    }
    let refs: Vec<&[Block]> = copies.iter().map(SetSystem::blocks).collect();
    let code = finish_at(n, 4, 3, q, lift_blocks(n, q, &refs)?, format!("Thm10i:{}xSTS({n})", copies.len()))?;
    full_or_partial(code, target)
}

fn sts_deleted_lift(n: usize, q: u16, s: usize, opts: &SearchOptions) -> Result<Code> {
    let sts = steiner_triple_system(n + 1)?;
    let per = sts.len() - n / 2;
    let target = s * per;
    let copies = disjoint_copies(&sts, s, opts)?;
    if copies.len() < s && target as u128 == binomial_u128(n as u64, 3) {
        if let Some(code) = complete_by_colouring(n, q, opts, format!("Thm13iib:colour({n})")) {
            return Ok(code);
        }
    }
    let deleted = copies.iter().map(|c| c.delete_point(n)).collect::<Result<Vec<_>>>()?;
    let refs: Vec<&[Block]> = deleted.iter().map(SetSystem::blocks).collect();
    let tag = format!("Thm10ii:{}xSTS({})-pt", copies.len(), n + 1);
    full_or_partial(finish_at(n, 4, 3, q, lift_blocks(n, q, &refs)?, tag)?, target)
}

/// Lift of a disjoint `5^1 1^{n-5}` GDD pair plus an optimal `(5, 4, 3)_3`
/// code on the group.
fn gdd_lift_5(n: usize, opts: &SearchOptions) -> Result<Code> {
    let t = (n - 5) / 6;
    let mut words = gdd_pair_words(n, opts)?;
    for w in optimal_5_4_3_3()?.words() {
        words.push(pad(w, n)?);
    }
    finish_at(n, 4, 3, 3, words, format!("VI-D:2xGDD(5^1 1^{})+(5,4,3)_3", 6 * t))
}

/// The `n + 1` GDD lift shortened at a group point, plus `{0111, 2022}` on
/// the rest of the group.
fn gdd_lift_4(n: usize, opts: &SearchOptions) -> Result<Code> {
    let mut words: Vec<Word> = gdd_pair_words(n + 1, opts)?
        .into_iter()
        .filter(|w| w.get(0) == 0)
        .map(|w| w.puncture(0))
        .collect::<Result<_>>()?;
    for w in optimal_4_4_3_3()?.words() {
        words.push(pad(w, n)?);
    }
    finish_at(n, 4, 3, 3, words, format!("VI-D:2xGDD(5^1 1^{})/short@0+(4,4,3)_3", n - 4))
}

fn gdd_pair_words(n: usize, opts: &SearchOptions) -> Result<Vec<Word>> {
    let (a, b) = gdd_pair_5_1((n - 5) / 6, opts.seed, opts.budget)?;
    lift_blocks(n, 3, &[a.blocks(), b.blocks()])
}

fn pad(w: &Word, n: usize) -> Result<Word> {
    let mut symbols = w.symbols().to_vec();
    symbols.resize(n, 0);
    Word::new(symbols, w.q().max(3))
}

/// Disjoint maximum-packing lift for `n ≡ 4, 5 (mod 6)`.
///
/// The packing of order `m ≡ 5` is a `5^1 1^{m-5}` GDD plus `{0,1,2}` and
/// `{0,3,4}`; up to `min(q-1, m-4)` disjoint copies are searched for. For
/// `n ≡ 4` the order-`(n+1)` lift is shortened at its least-covered
/// coordinate.
pub fn construct_n43_packing(n: usize, q: u16, opts: &SearchOptions) -> Result<Code> {
    let m = match n % 6 {
        5 => n,
        4 => n + 1,
        _ => return Err(Error::precondition(format!("maximum-packing route needs n ≡ 4, 5 (mod 6), got {n}"))),
    };
    if q < 2 {
        return Err(Error::precondition("q must be at least 2"));
    }
    let (gdd, _) = gdd_pair_5_1((m - 5) / 6, opts.seed, opts.budget)?;
    let mut blocks = gdd.blocks().to_vec();
    blocks.extend([vec![0, 1, 2], vec![0, 3, 4]]);
    let packing = SetSystem::new(m, blocks)?;
    let s = (usize::from(q) - 1).min(m - 4);
    let copies = disjoint_copies(&packing, s, opts)?;
    let refs: Vec<&[Block]> = copies.iter().map(SetSystem::blocks).collect();
    let got = copies.len();
    let per = packing.len();
    let lifted = finish_at(m, 4, 3, q, lift_blocks(m, q, &refs)?, format!("Thm10iii:{got}xmaxpacking({m})"))?;
    if m == n {
        return full_or_partial(lifted, s * per);
    }
    let (coord, _) = best_shortening_coordinate(&lifted);
    let short = shorten(&lifted, coord)?.with_provenance(format!("Thm10iv:{got}xmaxpacking({m})/short@{coord}"));
    // Guaranteed: one copy loses (n-2)/2 words, the others at most n/2 each.
    let target = s * per - ((n - 2) / 2 + (s - 1) * n / 2);
    full_or_partial(short.verified()?, target)
}

/// Lift of the largest part when the Graham–Sloane classes are cut, in
/// index order, into `⌊n/(q-1)⌋` runs of `q - 1` classes.
pub fn partition_lift_asymptotic(n: usize, q: u16) -> Result<Code> {
    let qi = usize::from(q);
    if q < 2 || qi - 1 > n {
        return Err(Error::precondition(format!("partition lift needs 1 <= q-1 <= n, got n={n}, q={q}")));
    }
    let classes = graham_sloane_classes(n)?;
    let parts = n / (qi - 1);
    let best = (0..parts)
        .max_by_key(|&j| {
            let size: usize = classes[j * (qi - 1)..(j + 1) * (qi - 1)].iter().map(SetSystem::len).sum();
            (size, std::cmp::Reverse(j))
        })
        .expect("at least one part");
    let refs: Vec<&[Block]> = classes[best * (qi - 1)..(best + 1) * (qi - 1)].iter().map(SetSystem::blocks).collect();
    finish_at(n, 4, 3, q, lift_blocks(n, q, &refs)?, format!("VI-G:GS({n})part{best}/{parts}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::brute_force_max;
    use crate::codes::write_code;
    use crate::codes::SearchBudget;

    #[test]
    fn graham_sloane_n7() {
        let classes = graham_sloane_classes(7).unwrap();
        assert_eq!(classes.len(), 7);
        assert!(classes.iter().all(|c| c.len() == 5));
        for c in &classes {
            assert!(c.to_code().unwrap().params().d >= 4);
        }
    }

    #[test]
    fn cyclic_codes() {
        for q in 4..=6u16 {
            assert_eq!(cyclic_code_7(q).unwrap().len(), 7 * (usize::from(q) - 1));
            assert_eq!(cyclic_code_6(q).unwrap().len(), 4 * (usize::from(q) - 1));
        }
        assert!(cyclic_code_7(3).is_err());
    }

    #[test]
    fn fixture_is_the_search_witness() {
        let found = brute_force_max(5, 4, 3, 3, SearchBudget::default()).unwrap();
        let witness = found.witness.unwrap();
        assert_eq!(write_code(&witness), OPT_5_4_3_3);
        assert_eq!(optimal_5_4_3_3().unwrap().len(), 5);
    }

    #[test]
    fn examples() {
        assert_eq!(construct_n43(7, 4).unwrap().len(), 21);
        assert_eq!(construct_n43(9, 3).unwrap().len(), 24);
        assert_eq!(construct_n43(11, 3).unwrap().len(), 35);
        assert_eq!(construct_n43(10, 3).unwrap().len(), 26);
        assert_eq!(construct_n43(7, 9).unwrap().len(), 35);
    }

    #[test]
    fn seven_with_six_symbols_is_complete() {
        // Only two disjoint STS(7) exist; the colouring fallback still uses
        // every triple.
        let code = construct_n43(7, 7).unwrap();
        assert_eq!(code.len(), 35);
    }

    #[test]
    fn small_orders() {
        assert_eq!(construct_n43(4, 3).unwrap().len(), 2);
        assert_eq!(construct_n43(5, 3).unwrap().len(), 5);
        assert_eq!(construct_n43(3, 2).unwrap().len(), 1);
        assert_eq!(construct_n43(5, 2).unwrap().len(), 2);
        assert_eq!(construct_n43(4, 2).unwrap().len(), 1);
    }

    #[test]
    fn partition_lift() {
        assert_eq!(partition_lift_asymptotic(7, 8).unwrap().len(), 35);
        assert!(partition_lift_asymptotic(13, 4).unwrap().len() >= 59);
        assert!(partition_lift_asymptotic(5, 7).is_err());
    }
}
