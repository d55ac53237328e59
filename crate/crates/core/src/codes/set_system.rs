use std::collections::BTreeSet;

use super::code::{Code, Params};
use super::word::Word;
use crate::error::{Error, Result};

pub type Block = Vec<usize>;

/// Points `0..order` together with a set of blocks (sorted point lists).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetSystem {
    order: usize,
    blocks: Vec<Block>,
}

impl SetSystem {
    /// Blocks are normalized (each sorted, list sorted). Repeated points inside
    /// a block, points outside `0..order`, and repeated blocks are errors.
    pub fn new(order: usize, blocks: Vec<Block>) -> Result<Self> {
        let count = blocks.len();
        let mut set = BTreeSet::new();
        for mut block in blocks {
            block.sort_unstable();
            if block.windows(2).any(|p| p[0] == p[1]) {
                return Err(Error::design(format!("block {block:?} repeats a point")));
            }
            if let Some(&p) = block.last() {
                if p >= order {
                    return Err(Error::design(format!("point {p} outside order {order}")));
                }
            }
            set.insert(block);
        }
        if set.len() != count {
            return Err(Error::design("repeated block"));
        }
        Ok(SetSystem { order, blocks: set.into_iter().collect() })
    }

    pub fn empty(order: usize) -> Self {
        SetSystem { order, blocks: Vec::new() }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn into_blocks(self) -> Vec<Block> {
        self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn contains(&self, block: &[usize]) -> bool {
        self.blocks.binary_search_by(|b| b.as_slice().cmp(block)).is_ok()
    }

    /// Common block size, if every block has the same size.
    pub fn uniform_size(&self) -> Option<usize> {
        let k = self.blocks.first()?.len();
        self.blocks.iter().all(|b| b.len() == k).then_some(k)
    }

    pub fn is_uniform(&self, sizes: &[usize]) -> bool {
        self.blocks.iter().all(|b| sizes.contains(&b.len()))
    }

    /// Image under the point map `perm` (`perm[x]` is the image of `x`).
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.order {
            return Err(Error::LengthMismatch { left: self.order, right: perm.len() });
        }
        let blocks = self.blocks.iter().map(|b| b.iter().map(|&x| perm[x]).collect()).collect();
        SetSystem::new(self.order, blocks)
    }

    /// Copy with blocks containing `point` removed and `point` deleted, later
    /// points shifted down by one.
    pub fn delete_point(&self, point: usize) -> Result<Self> {
        if point >= self.order {
            return Err(Error::invalid(format!("point {point} outside order {}", self.order)));
        }
        let blocks = self
            .blocks
            .iter()
            .filter(|b| !b.contains(&point))
            .map(|b| b.iter().map(|&x| if x > point { x - 1 } else { x }).collect())
            .collect();
        SetSystem::new(self.order - 1, blocks)
    }

    /// Blocks through `point`.
    pub fn degree(&self, point: usize) -> usize {
        self.blocks.iter().filter(|b| b.binary_search(&point).is_ok()).count()
    }

    /// Code of the set system: the incidence vectors of its blocks.
    pub fn to_code(&self) -> Result<Code> {
        let k = self.uniform_size().ok_or_else(|| Error::invalid("set system is empty or not uniform"))?;
        let words = self.blocks.iter().map(|b| Word::from_support(self.order, b, 1, 2)).collect::<Result<Vec<_>>>()?;
        let d = super::code::min_distance(&words).value().unwrap_or(2 * k);
        Code::new(Params::new(self.order, d, k, 2), words, "set-system code")?.verified()
    }

    /// Supports of a binary code.
    pub fn from_code(code: &Code) -> Result<Self> {
        if !code.is_binary() {
            return Err(Error::invalid("code is not binary"));
        }
        SetSystem::new(code.params().n, code.words().iter().map(Word::support).collect())
    }
}

/// Number of blocks common to `a` and `b`.
pub fn intersection_size(a: &SetSystem, b: &SetSystem) -> Result<usize> {
    if a.order != b.order {
        return Err(Error::OrderMismatch { left: a.order, right: b.order });
    }
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    Ok(small.blocks.iter().filter(|blk| large.contains(blk)).count())
}

/// Set system to code (incidence vectors) for a `{k}`-uniform system.
pub fn packing_to_code(system: &SetSystem) -> Result<Code> {
    system.to_code()
}

/// Binary code to its set system of supports.
pub fn code_to_packing(code: &Code) -> Result<SetSystem> {
    SetSystem::from_code(code)
}
