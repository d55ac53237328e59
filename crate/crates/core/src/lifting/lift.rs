use std::collections::HashSet;

use crate::codes::{Block, Code, Params, Word};
use crate::error::{Error, Result};

/// Binary classes and the nonzero symbol each is lifted to.
#[derive(Clone, Debug)]
pub struct LiftPlan {
    pub classes: Vec<(Code, u8)>,
    pub q: u16,
}

/// Replace the 1s of class `i` by its symbol and take the union.
///
/// The declared distance of the result is its recomputed minimum distance
/// (`2w` for a single word); the result is verified.
pub fn lift(plan: &LiftPlan) -> Result<Code> {
    let Some((first, _)) = plan.classes.first() else {
        return Err(Error::invalid("lift plan has no classes"));
    };
    let Params { n, w, .. } = first.params();
    let mut symbols = HashSet::new();
    let mut supports: HashSet<Vec<usize>> = HashSet::new();
    let mut words = Vec::new();
    for (code, symbol) in &plan.classes {
        if !code.is_binary() {
            return Err(Error::invalid("lift classes must be binary codes"));
        }
        let p = code.params();
        if (p.n, p.w) != (n, w) {
            return Err(Error::invalid(format!("class with (n, w) = ({}, {}) in a ({n}, {w}) plan", p.n, p.w)));
        }
        if *symbol == 0 || u16::from(*symbol) >= plan.q {
            return Err(Error::SymbolOutOfRange { symbol: (*symbol).into(), q: plan.q });
        }
        if !symbols.insert(*symbol) {
            return Err(Error::invalid(format!("symbol {symbol} used by two classes")));
        }
        for word in code.words() {
            if !supports.insert(word.support()) {
                return Err(Error::invalid(format!("classes overlap in word {word}")));
            }
            words.push(word.recolor(*symbol, plan.q)?);
        }
    }
    finish(n, w, plan.q, words, "lift")
}

/// Lift block lists directly; class `i` gets symbol `i + 1`.
pub(crate) fn lift_blocks(n: usize, q: u16, classes: &[&[Block]]) -> Result<Vec<Word>> {
    if classes.len() >= usize::from(q) {
        return Err(Error::invalid(format!("{} classes need more than {q} symbols", classes.len())));
    }
    let mut out = Vec::new();
    for (i, blocks) in classes.iter().enumerate() {
        for b in blocks.iter() {
            out.push(Word::from_support(n, b, (i + 1) as u8, q)?);
        }
    }
    Ok(out)
}

/// Build and verify a code whose declared distance is its actual one.
pub(crate) fn finish(n: usize, w: usize, q: u16, words: Vec<Word>, provenance: &str) -> Result<Code> {
    let code = Code::new(Params::new(n, 0, w, q), words, provenance)?;
    let d = code.min_distance().value().unwrap_or(2 * w);
    code.with_distance(d).verified()
}

/// Build a code at declared distance `d` and verify it.
pub(crate) fn finish_at(
    n: usize,
    d: usize,
    w: usize,
    q: u16,
    words: Vec<Word>,
    provenance: impl Into<String>,
) -> Result<Code> {
    Code::new(Params::new(n, d, w, q), words, provenance)?.verified()
}

/// Remove every word with `coord` in its support, then drop the coordinate.
pub fn shorten(code: &Code, coord: usize) -> Result<Code> {
    let p = code.params();
    if coord >= p.n {
        return Err(Error::invalid(format!("coordinate {coord} outside length {}", p.n)));
    }
    let words =
        code.words().iter().filter(|w| w.get(coord) == 0).map(|w| w.puncture(coord)).collect::<Result<Vec<_>>>()?;
    if words.is_empty() {
        return Err(Error::invalid(format!("shortening at {coord} leaves no words")));
    }
    let out = Code::new(Params::new(p.n - 1, p.d, p.w, p.q), words, format!("{}/short@{coord}", code.provenance()))?;
    if code.is_verified() {
        out.verified()
    } else {
        Ok(out)
    }
}

/// Coordinate lying in the fewest supports, with that count.
pub fn best_shortening_coordinate(code: &Code) -> (usize, usize) {
    let n = code.params().n;
    let mut hits = vec![0usize; n];
    for w in code.words() {
        for &(p, _) in w.entries() {
            hits[p as usize] += 1;
        }
    }
    let (coord, &count) = hits.iter().enumerate().min_by_key(|&(i, c)| (*c, i)).expect("positive length");
    (coord, count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::SetSystem;
    use crate::designs::{disjointify, steiner_triple_system};

    fn sts7_pair() -> (Code, Code) {
        let sts = steiner_triple_system(7).unwrap();
        let out = disjointify(&sts, 2, 0, 1_000_000).unwrap();
        (out.systems[0].to_code().unwrap(), out.systems[1].to_code().unwrap())
    }

    #[test]
    fn two_sts7_give_fourteen_words() {
        let (a, b) = sts7_pair();
        let code = lift(&LiftPlan { classes: vec![(a, 1), (b, 2)], q: 3 }).unwrap();
        assert_eq!(code.len(), 14);
        assert!(code.params().d >= 4);
        assert!(code.is_verified());
    }

    #[test]
    fn identity_lift() {
        let (a, _) = sts7_pair();
        let code = lift(&LiftPlan { classes: vec![(a.clone(), 1)], q: 2 }).unwrap();
        assert_eq!(code.words(), a.words());
    }

    #[test]
    fn overlapping_or_repeated_symbols_rejected() {
        let (a, b) = sts7_pair();
        assert!(lift(&LiftPlan { classes: vec![(a.clone(), 1), (a.clone(), 2)], q: 3 }).is_err());
        assert!(lift(&LiftPlan { classes: vec![(a.clone(), 1), (b.clone(), 1)], q: 3 }).is_err());
        assert!(lift(&LiftPlan { classes: vec![(a, 1), (b, 3)], q: 3 }).is_err());
        assert!(lift(&LiftPlan { classes: vec![], q: 3 }).is_err());
    }

    #[test]
    fn shortening() {
        let sys = SetSystem::new(5, vec![vec![0, 1, 2], vec![0, 3, 4]]).unwrap();
        let code = sys.to_code().unwrap();
        let short = shorten(&code, 1).unwrap();
        assert_eq!(short.len(), 1);
        assert_eq!(short.params().n, 4);
        assert_eq!(best_shortening_coordinate(&code), (1, 1));
        let single = SetSystem::new(4, vec![vec![0, 1, 2]]).unwrap().to_code().unwrap();
        assert!(shorten(&single, 0).is_err());
        assert_eq!(shorten(&single, 3).unwrap().len(), 1);
    }
}
