use std::collections::BTreeMap;

use super::check::check_pair_pattern;
use super::latin::LatinSquare;
use crate::codes::{Block, SetSystem};
use crate::error::{Error, Result};

/// Group divisible design: every pair of points from different groups lies in
/// exactly one block, pairs inside a group in none.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupedDesign {
    base: SetSystem,
    groups: Vec<Vec<usize>>,
    block_sizes: Vec<usize>,
}

impl GroupedDesign {
    pub fn new(base: SetSystem, mut groups: Vec<Vec<usize>>, block_sizes: Vec<usize>) -> Result<Self> {
        for g in &mut groups {
            g.sort_unstable();
        }
        let gdd = GroupedDesign { base, groups, block_sizes };
        gdd.validate()?;
        Ok(gdd)
    }

    pub fn base(&self) -> &SetSystem {
        &self.base
    }

    pub fn blocks(&self) -> &[Block] {
        self.base.blocks()
    }

    pub fn groups(&self) -> &[Vec<usize>] {
        &self.groups
    }

    pub fn order(&self) -> usize {
        self.base.order()
    }

    /// Group type as `(size, multiplicity)`, largest groups first.
    pub fn group_type(&self) -> Vec<(usize, usize)> {
        let mut by_size = BTreeMap::new();
        for g in &self.groups {
            *by_size.entry(g.len()).or_insert(0) += 1;
        }
        by_size.into_iter().rev().collect()
    }

    /// Group containing `point`.
    pub fn group_of(&self, point: usize) -> Option<&[usize]> {
        self.groups.iter().find(|g| g.binary_search(&point).is_ok()).map(Vec::as_slice)
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.base.order();
        let label = group_labels(n, &self.groups)?;
        if !self.base.is_uniform(&self.block_sizes) {
            return Err(Error::design(format!("block sizes outside {:?}", self.block_sizes)));
        }
        for b in self.base.blocks() {
            for i in 0..b.len() {
                for j in i + 1..b.len() {
                    if label[b[i]] == label[b[j]] {
                        return Err(Error::design(format!("block {b:?} meets a group twice")));
                    }
                }
            }
        }
        check_pair_pattern(&self.base, |x, y| label[x] != label[y])
    }
}

/// Incomplete GDD of type `(g, h)^t`: additionally, pairs inside the union of
/// the holes are uncovered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncompleteGdd {
    base: SetSystem,
    groups: Vec<Vec<usize>>,
    holes: Vec<Vec<usize>>,
}

impl IncompleteGdd {
    pub fn new(base: SetSystem, groups: Vec<Vec<usize>>, holes: Vec<Vec<usize>>) -> Result<Self> {
        let igdd = IncompleteGdd { base, groups, holes };
        igdd.validate()?;
        Ok(igdd)
    }

    pub fn base(&self) -> &SetSystem {
        &self.base
    }

    pub fn blocks(&self) -> &[Block] {
        self.base.blocks()
    }

    pub fn groups(&self) -> &[Vec<usize>] {
        &self.groups
    }

    pub fn holes(&self) -> &[Vec<usize>] {
        &self.holes
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.base.order();
        let label = group_labels(n, &self.groups)?;
        if self.holes.len() != self.groups.len() {
            return Err(Error::design("one hole per group required"));
        }
        let mut in_hole = vec![false; n];
        for (hole, group) in self.holes.iter().zip(&self.groups) {
            for &p in hole {
                if !group.contains(&p) {
                    return Err(Error::design(format!("hole point {p} outside its group")));
                }
                in_hole[p] = true;
            }
        }
        check_pair_pattern(&self.base, |x, y| label[x] != label[y] && !(in_hole[x] && in_hole[y]))
    }
}

fn group_labels(n: usize, groups: &[Vec<usize>]) -> Result<Vec<usize>> {
    let mut label = vec![usize::MAX; n];
    for (gi, g) in groups.iter().enumerate() {
        for &p in g {
            if p >= n || label[p] != usize::MAX {
                return Err(Error::design(format!("point {p} repeated or outside the groups' range")));
            }
            label[p] = gi;
        }
    }
    if label.contains(&usize::MAX) {
        return Err(Error::design("groups do not cover every point"));
    }
    Ok(label)
}

/// The three groups (rows, columns, symbols) of a Latin-square design.
fn latin_groups(n: usize) -> Vec<Vec<usize>> {
    (0..3).map(|i| (i * n..(i + 1) * n).collect()).collect()
}

fn latin_blocks(square: &LatinSquare, skip: impl Fn(usize, usize) -> bool) -> Vec<Block> {
    let n = square.side();
    let mut blocks = Vec::with_capacity(n * n);
    for r in 0..n {
        for c in 0..n {
            if !skip(r, c) {
                blocks.push(vec![r, n + c, 2 * n + square.get(r, c)]);
            }
        }
    }
    blocks
}

/// `{3}`-GDD of type `n^3`: row `r` is point `r`, column `c` is `n + c` and
/// symbol `s` is `2n + s`; one block per cell.
pub fn gdd_from_latin(square: &LatinSquare) -> Result<GroupedDesign> {
    square.validate()?;
    let n = square.side();
    let base = SetSystem::new(3 * n, latin_blocks(square, |_, _| false))?;
    GroupedDesign::new(base, latin_groups(n), vec![3])
}

/// `{3}`-IGDD of type `(n, k)^3` from a square with a marked subsquare: the
/// subsquare's rows, columns and symbols are the holes, and its cells are
/// dropped.
pub fn igdd_from_latin(square: &LatinSquare) -> Result<IncompleteGdd> {
    square.validate()?;
    let n = square.side();
    let sub = square.subsquare().ok_or_else(|| Error::precondition("square has no marked subsquare"))?.clone();
    let base = SetSystem::new(3 * n, latin_blocks(square, |r, c| sub.contains_cell(r, c)))?;
    let holes = vec![
        sub.rows.clone(),
        sub.cols.iter().map(|c| n + c).collect(),
        sub.symbols.iter().map(|s| 2 * n + s).collect(),
    ];
    IncompleteGdd::new(base, latin_groups(n), holes)
}

/// Two disjoint `{3}`-IGDDs of type `(n, 3)^3` with common holes.
pub fn disjoint_igdd_pair(n: usize) -> Result<(IncompleteGdd, IncompleteGdd)> {
    let (a, b) = super::latin::disjoint_latin_pair(n)?;
    let (ia, ib) = (igdd_from_latin(&a)?, igdd_from_latin(&b)?);
    if crate::codes::intersection_size(ia.base(), ib.base())? != 0 {
        return Err(Error::design("IGDD pair is not disjoint"));
    }
    Ok((ia, ib))
}
