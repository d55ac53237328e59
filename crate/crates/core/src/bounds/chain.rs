//! Iterated length/weight recursions, memoized over `(n, w)`.

use std::collections::HashMap;

use super::arith::{binom, floor_div, lit, mul, pow, Scalar};
use super::exact::exact_value;
use super::value::BoundValue;
use crate::error::Result;

/// Tightest upper bound on `A_q(n, d, w)` reachable by unwinding the length
/// and weight recursions down to closed-form values, at every depth.
pub fn chain_upper<T: Scalar>(n: u64, d: u64, w: u64, q: u64) -> Result<BoundValue<T>> {
    let mut memo = HashMap::new();
    let v = node(n, d, w, q, &mut memo)?;
    Ok(BoundValue::upper(v, "Lem1/Lem2-chain"))
}

fn node<T: Scalar>(n: u64, d: u64, w: u64, q: u64, memo: &mut HashMap<(u64, u64), T>) -> Result<T> {
    if let Some(v) = memo.get(&(n, w)) {
        return Ok(v.clone());
    }
    let mut best = mul(&binom::<T>(n, w)?, &pow(&lit(q - 1)?, w)?)?;
    if let Some(e) = exact_value::<T>(n, d, w, q)? {
        best = best.min(e.value);
    } else {
        if w < n {
            let inner = node(n - 1, d, w, q, memo)?;
            best = best.min(floor_div(&mul(&lit(n)?, &inner)?, &lit(n - w)?));
        }
        if w >= 1 && n >= 1 {
            let inner = node(n - 1, d, w - 1, q, memo)?;
            best = best.min(floor_div(&mul(&lit(n * (q - 1))?, &inner)?, &lit(w)?));
        }
    }
    memo.insert((n, w), best.clone());
    Ok(best)
}
