use super::lift::{finish_at, lift_blocks};
use super::{disjoint_copies, disjoint_copies_keyed, full_or_partial, SearchOptions};
use crate::codes::{Block, Code, SetSystem};
use crate::designs::{design_13_4, greedy_packing};
use crate::error::{Error, Result};

/// Number of pairwise-disjoint 2-(13, 4, 1) designs in a large set.
const LARGE_SET_13: usize = 55;

/// Lift of `min(q-1, 55)` images of the cyclic 2-(13, 4, 1) design.
///
/// Words from different copies carry different symbols, so their distance is
/// `8 - |A ∩ B|`; reaching distance 6 needs cross-copy blocks to share at most
/// two points. The search therefore forbids shared triples, not just shared
/// blocks. The union is then a 3-(13, 4, 1) packing, which has at most 65
/// blocks, so at most five copies can be found.
pub fn construct_13_6_4(q: u16, opts: &SearchOptions) -> Result<Code> {
    if q < 2 {
        return Err(Error::precondition("q must be at least 2"));
    }
    let design = design_13_4()?;
    let s = (usize::from(q) - 1).min(LARGE_SET_13);
    let copies = disjoint_copies_keyed(&design, s, opts, Some(3))?;
    let refs: Vec<&[Block]> = copies.iter().map(SetSystem::blocks).collect();
    let code = finish_at(13, 6, 4, q, lift_blocks(13, q, &refs)?, format!("Thm15:{}x2-(13,4,1)", copies.len()))?;
    full_or_partial(code, 13 * s)
}

/// Largest `t` allowed for `(w, q)`: `t <= (w+1)/2` and `q - 1 <= ⌊w/t⌋`.
pub fn default_t(w: usize, q: u16) -> Option<usize> {
    let s = usize::from(q).checked_sub(1)?;
    (1..=w.div_ceil(2)).rev().find(|&t| s <= w / t)
}

/// `(n, w+1, w)_q` code from `q - 1` disjoint copies of a greedy
/// `t-(n, w, 1)` packing.
///
/// Blocks of one packing share fewer than `t` points, so each class is a
/// binary `(n, 2(w-t+1), w)` code; distinct supports across classes keep
/// every lifted pair at distance at least `w + 1`.
pub fn construct_w_plus_1(n: usize, w: usize, q: u16, t: usize, opts: &SearchOptions) -> Result<Code> {
    if q < 2 {
        return Err(Error::precondition("q must be at least 2"));
    }
    if t == 0 || 2 * t > w + 1 {
        return Err(Error::precondition(format!("need 1 <= t <= (w+1)/2, got t={t}, w={w}")));
    }
    let s = usize::from(q) - 1;
    if s > w / t {
        return Err(Error::precondition(format!("need q-1 <= ⌊w/t⌋, got q-1={s}, ⌊{w}/{t}⌋={}", w / t)));
    }
    if w > n {
        return Err(Error::precondition(format!("weight {w} exceeds length {n}")));
    }
    let packing = greedy_packing(n, w, t, 1, None)?.into_system();
    let copies = disjoint_copies(&packing, s, opts)?;
    let refs: Vec<&[Block]> = copies.iter().map(SetSystem::blocks).collect();
    let tag = format!("Lem17:{}x{t}-({n},{w},1)packing", copies.len());
    let code = finish_at(n, w + 1, w, q, lift_blocks(n, q, &refs)?, tag)?;
    full_or_partial(code, s * packing.len())
}

/// `⌊n/w⌋` words on pairwise-disjoint supports, which is optimal at `d = 2w`.
pub fn construct_2w(n: usize, w: usize, q: u16) -> Result<Code> {
    if w == 0 || w > n || q < 2 {
        return Err(Error::precondition(format!("need 1 <= w <= n and q >= 2, got n={n}, w={w}, q={q}")));
    }
    let blocks: Vec<Block> = (0..n / w).map(|i| (i * w..(i + 1) * w).collect()).collect();
    finish_at(n, 2 * w, w, q, lift_blocks(n, q, &[&blocks])?, format!("Lem11:{}disjoint", n / w))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thirteen_six_four() {
        let opts = SearchOptions::default();
        assert_eq!(construct_13_6_4(2, &opts).unwrap().len(), 13);
        let c = construct_13_6_4(5, &opts).unwrap();
        assert_eq!(c.len(), 52);
        assert_eq!(c.params().d, 6);
    }

    #[test]
    fn w_plus_one() {
        let opts = SearchOptions::default();
        let c = construct_w_plus_1(13, 4, 3, 2, &opts).unwrap();
        assert!(c.min_distance().at_least(5));
        assert!(c.len() >= 2 * 10);
        assert!(construct_w_plus_1(13, 4, 3, 3, &opts).is_err());
        assert!(construct_w_plus_1(13, 4, 4, 2, &opts).is_err());
    }

    #[test]
    fn t_choice() {
        assert_eq!(default_t(4, 3), Some(2));
        assert_eq!(default_t(4, 4), Some(1));
        assert_eq!(default_t(4, 6), None);
        assert_eq!(default_t(5, 3), Some(2));
    }

    #[test]
    fn disjoint_supports() {
        assert_eq!(construct_2w(6, 3, 3).unwrap().len(), 2);
        assert_eq!(construct_2w(5, 3, 2).unwrap().len(), 1);
        assert_eq!(construct_2w(4, 4, 5).unwrap().len(), 1);
    }
}
