use super::arith::{binom, lit, mul, sub, Scalar};
use super::formulas::{delta_n4, delta_n5, epsilon_n5, exact_2w, n32_exact, u_bound};
use super::value::BoundValue;
use crate::error::Result;

/// `Some((p, k))` when `q = p^k` with `p` prime, by trial division.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..).take_while(|&p| p * p <= q).find(|&p| q.is_multiple_of(p)).unwrap_or(q);
    let (mut m, mut k) = (q, 0);
    while m % p == 0 {
        m /= p;
        k += 1;
    }
    (m == 1).then_some((p, k))
}

pub fn is_odd_prime_power(q: u64) -> bool {
    matches!(prime_power(q), Some((p, _)) if p != 2)
}

pub fn is_power_of_two(q: u64) -> bool {
    q >= 2 && q.is_power_of_two()
}

/// Exact `A_q(n, d, w)` when one of the closed forms determines it.
pub fn exact_value<T: Scalar>(n: u64, d: u64, w: u64, q: u64) -> Result<Option<BoundValue<T>>> {
    if q < 2 {
        return Ok(None);
    }
    if w > n {
        return Ok(Some(BoundValue::exact(T::zero(), "trivial:w>n")));
    }
    if w == 0 || d > 2 * w {
        return Ok(Some(BoundValue::exact(T::one(), "trivial:single")));
    }
    if d <= 1 {
        let all = mul(&binom::<T>(n, w)?, &super::arith::pow(&lit(q - 1)?, w)?)?;
        return Ok(Some(BoundValue::exact(all, "trivial:all-words")));
    }
    if d == 2 * w {
        return exact_2w(n, w, q).map(Some);
    }
    match (d, w) {
        (3, 2) => n32_exact(n, q).map(Some),
        (4, 3) => n43_exact(n, q),
        (4, 4) => {
            if is_odd_prime_power(q) && n == q + 1 {
                let v = mul(&lit(q - 1)?, &binom(q + 1, 4)?)?;
                Ok(Some(BoundValue::exact(v, "Thm14i")))
            } else if is_power_of_two(q) && n == q + 2 {
                let v = mul(&lit(q - 1)?, &binom(q + 2, 4)?)?;
                Ok(Some(BoundValue::exact(v, "Thm14ii")))
            } else {
                Ok(None)
            }
        }
        // Four pairwise triple-disjoint planes of order 3 is the most there
        // are, so the lift settles only q <= 5.
        (6, 4) if n == 13 && q <= 5 => Ok(Some(BoundValue::exact(lit(13 * (q - 1))?, "Thm15"))),
        _ => Ok(None),
    }
}

fn n43_exact<T: Scalar>(n: u64, q: u64) -> Result<Option<BoundValue<T>>> {
    if n < 3 {
        return Ok(Some(BoundValue::exact(T::zero(), "trivial:w>n")));
    }
    let c3: T = binom(n, 3)?;
    if q > n {
        return Ok(Some(BoundValue::exact(c3, "Thm13i")));
    }
    if (4..=6).contains(&q) {
        if n == 7 {
            return Ok(Some(BoundValue::exact(lit(7 * (q - 1))?, "Lem13")));
        }
        if n == 6 {
            return Ok(Some(BoundValue::exact(lit(4 * (q - 1))?, "Lem14")));
        }
    }
    let u = u_bound::<T>(n, q)?.value;
    let v = match n % 6 {
        1 | 3 if q < n => BoundValue::exact(lit((q - 1) * n * (n - 1) / 6)?, "Thm10i"),
        1 | 3 => BoundValue::exact(c3, "Thm13iia"),
        0 | 2 => BoundValue::exact(lit((q - 1) * n * (n - 2) / 6)?, "Thm10ii"),
        4 if q == 3 => BoundValue::exact(u, "VI-D"),
        5 if q == 3 => BoundValue::exact(sub(&u, &T::one())?, "VI-D"),
        4 if q == 2 && delta_n4(q) == 0 => BoundValue::exact(u, "Thm10iv"),
        5 if q == 2 && delta_n5(q) == epsilon_n5(q) => BoundValue::exact(sub(&u, &T::one())?, "Thm10iii"),
        5 if is_odd_prime_power(q) && n == q => BoundValue::exact(c3, "Thm14i"),
        5 if is_power_of_two(q) && n == q + 1 => BoundValue::exact(c3, "Thm14ii"),
        _ => return Ok(None),
    };
    Ok(Some(v))
}

/// Range bounds on `A_q(n, 4, 3)` for `n ≡ 4, 5 (mod 6)` outside the exact cases.
pub fn n43_range<T: Scalar>(n: u64, q: u64) -> Result<Vec<BoundValue<T>>> {
    let mut out = Vec::new();
    if n < 4 || q < 2 || q > n {
        return Ok(out);
    }
    match n % 6 {
        4 => {
            let u = u_bound::<T>(n, q)?.value;
            if q + 2 <= n {
                out.push(BoundValue::lower(sub(&u, &lit(delta_n4(q))?)?, "Thm10iv"));
            } else if n >= 4 {
                // q ∈ {n-1, n}: monotone in q from q = n-2.
                let base = n - 2;
                if base >= 2 {
                    let ub = u_bound::<T>(n, base)?.value;
                    out.push(BoundValue::lower(sub(&ub, &lit(delta_n4(base))?)?, "Thm13iic"));
                }
            }
        }
        5 => {
            let u = u_bound::<T>(n, q)?.value;
            if q + 3 <= n {
                out.push(BoundValue::lower(sub(&u, &lit(delta_n5(q))?)?, "Thm10iii"));
                out.push(BoundValue::upper(sub(&u, &lit(epsilon_n5(q))?)?, "Thm10iii"));
            } else if n >= 5 {
                let base = n - 3;
                if base >= 2 {
                    let ub = u_bound::<T>(n, base)?.value;
                    out.push(BoundValue::lower(sub(&ub, &lit(delta_n5(base))?)?, "Thm13iid"));
                }
                out.push(BoundValue::upper(sub(&u, &lit(epsilon_n5(q))?)?, "Thm13iid"));
            }
        }
        _ => {}
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(n: u64, d: u64, w: u64, q: u64) -> Option<(i64, String)> {
        exact_value::<i64>(n, d, w, q).unwrap().map(|b| (b.value, b.provenance))
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(2), Some((2, 1)));
        assert_eq!(prime_power(1), None);
        assert!(is_odd_prime_power(25));
        assert!(!is_odd_prime_power(8));
        assert!(is_power_of_two(8));
        assert!(!is_power_of_two(1));
    }

    #[test]
    fn examples() {
        assert_eq!(ev(13, 6, 4, 5), Some((52, "Thm15".into())));
        assert_eq!(ev(9, 4, 3, 4), Some((36, "Thm10i".into())));
        assert_eq!(ev(10, 4, 3, 3), Some((26, "VI-D".into())));
        assert_eq!(ev(10, 4, 4, 8), Some((1470, "Thm14ii".into())));
        assert_eq!(ev(8, 4, 4, 7), Some((6 * 70, "Thm14i".into())));
        assert_eq!(ev(7, 4, 3, 9), Some((35, "Thm13i".into())));
        assert_eq!(ev(11, 4, 3, 3).unwrap().0, 35);
        assert_eq!(ev(7, 4, 3, 3).unwrap().0, 14);
        assert_eq!(ev(11, 4, 3, 4), None);
        assert_eq!(ev(13, 6, 4, 7), None);
        assert_eq!(ev(5, 4, 3, 4), Some((10, "Thm14ii".into())));
        assert_eq!(ev(5, 4, 3, 5), Some((10, "Thm14i".into())));
    }

    #[test]
    fn ranges() {
        let r = n43_range::<i64>(11, 4).unwrap();
        let u = 55;
        assert_eq!(r[0].value, u - 4);
        assert_eq!(r[1].value, u);
    }
}
