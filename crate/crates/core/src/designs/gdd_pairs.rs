//! Pairs of `{3}`-GDDs with prescribed intersection, built recursively from
//! Latin squares, Steiner triple systems and the two small base pairs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::format::parse_design;
use super::gdd::{disjoint_igdd_pair, gdd_from_latin, GroupedDesign};
use super::latin::LatinSquare;
use super::search::{disjointify_with, DisjointifyConfig};
use super::steiner::steiner_triple_system;
use crate::codes::{intersection_size, Block, SetSystem};
use crate::error::{Error, Result};

const TABLE1_A: &str = include_str!("../../fixtures/table1_a.design");
const TABLE1_B: &str = include_str!("../../fixtures/table1_b.design");
const TABLE2_A: &str = include_str!("../../fixtures/table2_a.design");
const TABLE2_B: &str = include_str!("../../fixtures/table2_b.design");

/// The shipped disjoint pair of type `5^1 1^{6t}` for `t ∈ {1, 2}`.
pub fn base_pair_5_1(t: usize) -> Result<(GroupedDesign, GroupedDesign)> {
    let (a, b) = match t {
        1 => (TABLE1_A, TABLE1_B),
        2 => (TABLE2_A, TABLE2_B),
        _ => return Err(Error::precondition(format!("no shipped base pair for t = {t}"))),
    };
    let load = |text: &str| -> Result<GroupedDesign> {
        let file = parse_design(text)?;
        let groups = file.groups.ok_or_else(|| Error::design("fixture lacks a groups line"))?;
        GroupedDesign::new(file.system, groups, vec![3])
    };
    Ok((load(a)?, load(b)?))
}

/// Two `{3}`-GDDs of type `g^3` on common groups sharing exactly one block.
///
/// The first is the cyclic Latin-square GDD. The second is an isotope that
/// fixes the block `T = {0, g, 2g}` pointwise and keeps every group; the
/// remaining blocks are pushed apart by hill-climbing.
pub fn gdd_pair_intersection_one(g: usize, seed: u64, budget: u64) -> Result<(GroupedDesign, GroupedDesign)> {
    if g == 3 {
        return Err(Error::precondition("intersection 1 not achievable for type 3^3"));
    }
    if g.is_multiple_of(2) || g < 7 {
        return Err(Error::precondition(format!("intersection-one search needs odd g >= 7, got {g}")));
    }
    let first = gdd_from_latin(&LatinSquare::cyclic(g))?;
    let t_block = vec![0, g, 2 * g];
    let rest: Vec<Block> = first.blocks().iter().filter(|b| **b != t_block).cloned().collect();
    let rest = SetSystem::new(3 * g, rest)?;
    let classes = (0..3 * g).map(|p| if p % g == 0 { 3 + p / g } else { p / g }).collect();
    let cfg = DisjointifyConfig { classes: Some(classes), ..DisjointifyConfig::new(seed, budget) };
    let found = disjointify_with(&rest, 2, &cfg)?;
    let mut blocks = found.systems[1].blocks().to_vec();
    blocks.push(t_block);
    let second = GroupedDesign::new(SetSystem::new(3 * g, blocks)?, first.groups().to_vec(), vec![3])?;
    let common = intersection_size(first.base(), second.base())?;
    if common != 1 {
        return Err(Error::design(format!("pair meets in {common} blocks, expected 1")));
    }
    Ok((first, second))
}

/// Whether a disjoint pair of `{3}`-GDDs of type `3^1 1^r` exists.
pub fn admissible_3_1(r: usize) -> bool {
    let n = r + 3;
    (n % 6 == 1 || n % 6 == 3) && (r == 4 || r == 6 || n >= 13)
}

/// Two disjoint `{3}`-GDDs of type `3^1 1^r` on `0..r+3` with group `{0, 1, 2}`.
///
/// Both come from one Steiner triple system containing `{0, 1, 2}`: the block
/// is removed and the rest re-embedded by a permutation fixing `{0, 1, 2}`.
pub fn gdd_pair_3_1(r: usize, seed: u64, budget: u64) -> Result<(GroupedDesign, GroupedDesign)> {
    if !admissible_3_1(r) {
        return Err(Error::precondition(format!("type 3^1 1^{r} is inadmissible for a disjoint pair")));
    }
    let n = r + 3;
    let sts = steiner_triple_system(n)?;
    let anchor = sts.blocks()[0].clone();
    let mut perm = vec![usize::MAX; n];
    for (i, &p) in anchor.iter().enumerate() {
        perm[p] = i;
    }
    for (slot, next) in perm.iter_mut().filter(|s| **s == usize::MAX).zip(3..) {
        *slot = next;
    }
    let sts = sts.permuted(&perm)?;
    let group = vec![0, 1, 2];
    let rest = SetSystem::new(n, sts.blocks().iter().filter(|b| **b != group).cloned().collect())?;
    let classes = (0..n).map(|p| usize::from(p >= 3)).collect();
    let cfg = DisjointifyConfig { classes: Some(classes), ..DisjointifyConfig::new(seed, budget) };
    let found = disjointify_with(&rest, 2, &cfg)?;
    let groups: Vec<Vec<usize>> = std::iter::once(group).chain((3..n).map(|p| vec![p])).collect();
    let a = GroupedDesign::new(found.systems[0].clone(), groups.clone(), vec![3])?;
    let b = GroupedDesign::new(found.systems[1].clone(), groups, vec![3])?;
    Ok((a, b))
}

/// Block count of one side of a `5^1 1^{6t}` pair.
pub fn blocks_5_1(t: usize) -> usize {
    let v = 6 * t + 5;
    (v * (v - 1) / 2 - 10) / 3
}

/// Two disjoint `{3}`-GDDs of type `5^1 1^{6t}` on `0..6t+5` with common
/// group `{0, .., 4}`.
///
/// `t ≤ 2` uses the shipped base pairs; `t ≡ 0, 2 (mod 3)` splices an
/// intersection-one pair of type `(2t+1)^3` with three `3^1 1^{2t}` pairs;
/// `t ≡ 1 (mod 3)` glues a disjoint IGDD pair of type `(2t+1, 3)^3`, three
/// recursive pairs for `(t-1)/3` and the `t = 1` pair on the leftover 11 points.
pub fn gdd_pair_5_1(t: usize, seed: u64, budget: u64) -> Result<(GroupedDesign, GroupedDesign)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (a, b) = pair_5_1(t, &mut rng, budget)?;
    for side in [&a, &b] {
        if side.blocks().len() != blocks_5_1(t) || side.group_type().first() != Some(&(5, 1)) {
            return Err(Error::design(format!("side of the t = {t} pair has the wrong shape")));
        }
    }
    if intersection_size(a.base(), b.base())? != 0 {
        return Err(Error::design(format!("t = {t} pair is not disjoint")));
    }
    Ok((a, b))
}

fn pair_5_1(t: usize, rng: &mut ChaCha8Rng, budget: u64) -> Result<(GroupedDesign, GroupedDesign)> {
    if t == 0 {
        let empty = GroupedDesign::new(SetSystem::empty(5), vec![(0..5).collect()], vec![3])?;
        return Ok((empty.clone(), empty));
    }
    if t <= 2 {
        return base_pair_5_1(t);
    }
    let g = 2 * t + 1;
    let pt = |x: usize, i: usize| i * g + x;
    let (inf1, inf2) = (3 * g, 3 * g + 1);
    let order = 3 * g + 2;
    let (mut a, mut b): (Vec<Block>, Vec<Block>);
    let five: Vec<usize>;

    if t % 3 != 1 {
        let (ga, gb) = gdd_pair_intersection_one(g, rng.gen(), budget)?;
        let t_block = vec![pt(0, 0), pt(0, 1), pt(0, 2)];
        a = ga.blocks().iter().filter(|x| **x != t_block).cloned().collect();
        b = gb.blocks().iter().filter(|x| **x != t_block).cloned().collect();
        for i in 0..3 {
            let (pa, pb) = gdd_pair_3_1(2 * t, rng.gen(), budget)?;
            let map: Vec<usize> = [pt(0, i), inf1, inf2].into_iter().chain((1..g).map(|x| pt(x, i))).collect();
            a.extend(relabel(pa.blocks(), &map));
            b.extend(relabel(pb.blocks(), &map));
        }
        five = vec![pt(0, 0), pt(0, 1), pt(0, 2), inf1, inf2];
    } else {
        let (ia, ib) = disjoint_igdd_pair(g)?;
        a = ia.blocks().to_vec();
        b = ib.blocks().to_vec();
        for i in 0..3 {
            let (pa, pb) = pair_5_1((t - 1) / 3, rng, budget)?;
            let map: Vec<usize> =
                (0..3).map(|x| pt(x, i)).chain([inf1, inf2]).chain((3..g).map(|x| pt(x, i))).collect();
            a.extend(relabel(pa.blocks(), &map));
            b.extend(relabel(pb.blocks(), &map));
        }
        let mut eleven: Vec<usize> = (0..3).flat_map(|i| (0..3).map(move |x| pt(x, i))).collect();
        eleven.extend([inf1, inf2]);
        eleven.sort_unstable();
        let (ta, tb) = base_pair_5_1(1)?;
        a.extend(relabel(ta.blocks(), &eleven));
        b.extend(relabel(tb.blocks(), &eleven));
        five = eleven[..5].to_vec();
    }

    // Move the size-5 group onto 0..5, keeping the other points in order.
    let mut map = vec![usize::MAX; order];
    let mut sorted_five = five;
    sorted_five.sort_unstable();
    for (i, &p) in sorted_five.iter().enumerate() {
        map[p] = i;
    }
    for (slot, next) in map.iter_mut().filter(|s| **s == usize::MAX).zip(5..) {
        *slot = next;
    }
    let groups: Vec<Vec<usize>> = std::iter::once((0..5).collect()).chain((5..order).map(|p| vec![p])).collect();
    let side = |blocks: &[Block]| -> Result<GroupedDesign> {
        GroupedDesign::new(SetSystem::new(order, relabel(blocks, &map))?, groups.clone(), vec![3])
    };
    Ok((side(&a)?, side(&b)?))
}

fn relabel(blocks: &[Block], map: &[usize]) -> Vec<Block> {
    blocks.iter().map(|b| b.iter().map(|&p| map[p]).collect()).collect()
}
