use super::large::{construct_13_6_4, construct_2w, construct_w_plus_1, default_t};
use super::lift::finish_at;
use super::n32::construct_n32;
use super::n43::construct_n43_with;
use super::probabilistic::{default_lambda, probabilistic_construct};
use super::SearchOptions;
use crate::codes::{Code, Word};
use crate::error::{Error, Result};

#[derive(Clone, Debug, Default)]
pub struct ConstructOptions {
    pub search: SearchOptions,
    /// Packing multiplicity for the random construction; `None` uses
    /// [`default_lambda`].
    pub lambda: Option<u64>,
    /// Packing strength for the `d = w + 1` construction; `None` uses
    /// [`default_t`].
    pub t: Option<usize>,
}

/// Best available construction for `(n, d, w)_q`, chosen from `(d, w)`.
pub fn construct(n: usize, d: usize, w: usize, q: u16, opts: &ConstructOptions) -> Result<Code> {
    if w == 0 || w > n || q < 2 || d == 0 {
        return Err(Error::precondition(format!("need 1 <= w <= n, d >= 1, q >= 2; got n={n}, d={d}, w={w}, q={q}")));
    }
    if d > 2 * w {
        let word = Word::from_support(n, &(0..w).collect::<Vec<_>>(), 1, q)?;
        return finish_at(n, d, w, q, vec![word], "single");
    }
    if d == 2 * w {
        return construct_2w(n, w, q);
    }
    match (d, w) {
        (3, 2) => return construct_n32(n, q),
        (4, 3) => return construct_n43_with(n, q, &opts.search),
        (6, 4) if n == 13 => return construct_13_6_4(q, &opts.search),
        _ => {}
    }
    if d == w + 1 {
        if let Some(t) = opts.t.or_else(|| default_t(w, q)) {
            return construct_w_plus_1(n, w, q, t, &opts.search);
        }
    }
    if q < 3 {
        return Err(Error::precondition(format!("no construction for ({n}, {d}, {w})_2")));
    }
    let lambda = opts.lambda.unwrap_or_else(|| default_lambda(d, w, q));
    Ok(probabilistic_construct(n, d, w, q, lambda, opts.search.seed)?.final_code)
}
