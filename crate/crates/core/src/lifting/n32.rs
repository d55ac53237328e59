use super::lift::finish_at;
use crate::codes::{Code, Word};
use crate::designs::{near_one_factorization, one_factorization};
use crate::error::{Error, Result};

/// Optimal `(n, 3, 2)_q` code from lifted (near-)one-factors.
///
/// Class `s` is factor `s - 1` with symbol `s`. For odd `n` factor `i`
/// isolates vertex `i` and the last factor is `{0,1}, {2,3}, ...`; when
/// `q <= n` that last pattern carries the mixed words `(2k+1, 2k+2)` on
/// positions `2k, 2k+1`, which clash with no class because class `2k+1`
/// misses vertex `2k` and class `2k+2` misses vertex `2k+1`.
pub fn construct_n32(n: usize, q: u16) -> Result<Code> {
    if n < 2 || q < 2 {
        return Err(Error::precondition(format!("construct_n32 needs n >= 2 and q >= 2, got n={n}, q={q}")));
    }
    let qi = usize::from(q);
    let fact = if n.is_multiple_of(2) { one_factorization(n)? } else { near_one_factorization(n)? };
    let classes = (qi - 1).min(fact.factors().len());
    let mut words = Vec::new();
    for (i, factor) in fact.factors().iter().take(classes).enumerate() {
        for &(a, b) in factor {
            words.push(Word::from_support(n, &[a, b], (i + 1) as u8, q)?);
        }
    }
    let mut tag = format!("Thm9:{classes}x{}factors({n})", if n.is_multiple_of(2) { "one-" } else { "near-one-" });
    if n % 2 == 1 && qi <= n {
        let mixed = (qi - 1) / 2;
        for k in 0..mixed {
            words.push(Word::from_entries(n, &[(2 * k, (2 * k + 1) as u8), (2 * k + 1, (2 * k + 2) as u8)], q)?);
        }
        tag.push_str(&format!("+{mixed}mixed"));
    }
    finish_at(n, 3, 2, q, words, tag)
}

/// Closed form for `A_q(n, 3, 2)`.
#[cfg(test)]
pub(crate) fn n32_size(n: usize, q: usize) -> usize {
    if q <= n {
        (q - 1) * n / 2
    } else {
        n * (n - 1) / 2
    }
}
