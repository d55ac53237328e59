use super::check::check_t_coverage;
use crate::codes::{Block, SetSystem};
use crate::error::{Error, Result};

/// Steiner triple system of order `n` (`n ≡ 1, 3 mod 6`).
///
/// Bose construction for `n ≡ 3` and Skolem construction for `n ≡ 1`; both
/// are deterministic.
pub fn steiner_triple_system(n: usize) -> Result<SetSystem> {
    let blocks = match n % 6 {
        3 => bose(n),
        1 => skolem(n),
        _ => return Err(Error::precondition(format!("STS(n) exists only for n ≡ 1 or 3 (mod 6), got {n}"))),
    };
    let sts = SetSystem::new(n, blocks)?;
    check_t_coverage(&sts, 2, 1, true)?;
    debug_assert_eq!(sts.len(), n * (n - 1) / 6);
    Ok(sts)
}

/// Points `(x, i)`, `x ∈ Z_{2m+1}`, `i ∈ Z_3`, mapped to `x + i(2m+1)`;
/// quasigroup `x ∘ y = (x + y)(m + 1)`, i.e. halving mod the odd order.
fn bose(n: usize) -> Vec<Block> {
    let v = n / 3;
    let m = (v - 1) / 2;
    let pt = |x: usize, i: usize| x + (i % 3) * v;
    let op = |x: usize, y: usize| ((x + y) * (m + 1)) % v;
    let mut blocks = Vec::with_capacity(n * (n - 1) / 6);
    for x in 0..v {
        blocks.push(vec![pt(x, 0), pt(x, 1), pt(x, 2)]);
    }
    for i in 0..3 {
        for x in 0..v {
            for y in x + 1..v {
                blocks.push(vec![pt(x, i), pt(y, i), pt(op(x, y), i + 1)]);
            }
        }
    }
    blocks
}

/// Points `∞ = n-1` and `(x, i)`, `x ∈ Z_{2m}`, mapped to `x + 2mi`; uses the
/// half-idempotent commutative quasigroup obtained by relabelling the
/// addition table of `Z_{2m}`.
fn skolem(n: usize) -> Vec<Block> {
    let m = (n - 1) / 6;
    let v = 2 * m;
    let inf = n - 1;
    let pt = |x: usize, i: usize| x + (i % 3) * v;
    let op = |x: usize, y: usize| {
        let s = (x + y) % v;
        if s.is_multiple_of(2) {
            s / 2
        } else {
            (s - 1) / 2 + m
        }
    };
    let mut blocks = Vec::with_capacity(n * (n - 1) / 6);
    for x in 0..m {
        blocks.push(vec![pt(x, 0), pt(x, 1), pt(x, 2)]);
    }
    for x in 0..m {
        for i in 0..3 {
            blocks.push(vec![inf, pt(x + m, i), pt(x, i + 1)]);
        }
    }
    for i in 0..3 {
        for x in 0..v {
            for y in x + 1..v {
                blocks.push(vec![pt(x, i), pt(y, i), pt(op(x, y), i + 1)]);
            }
        }
    }
    blocks
}
