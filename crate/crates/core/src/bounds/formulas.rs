use num_rational::Ratio;

use super::arith::{binom, ceil_div, factorial, floor_div, lit, mul, pow, sub, Scalar};
use super::value::BoundValue;
use crate::error::{Error, Result};

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::precondition(msg()))
    }
}

/// Length recursion: `A_q(n, d, w) <= ⌊n/(n-w) · A_q(n-1, d, w)⌋`.
pub fn svanstrom_length<T: Scalar>(n: u64, _d: u64, w: u64, _q: u64, inner: &BoundValue<T>) -> Result<BoundValue<T>> {
    require(w < n, || format!("length recursion needs w < n, got w={w}, n={n}"))?;
    require(inner.is_upper(), || "inner value must be an upper bound".into())?;
    let v = floor_div(&mul(&lit(n)?, &inner.value)?, &lit(n - w)?);
    Ok(BoundValue::upper(v, format!("Lem1[{}]", inner.provenance)))
}

/// Weight recursion: `A_q(n, d, w) <= ⌊n(q-1)/w · A_q(n-1, d, w-1)⌋`.
pub fn svanstrom_weight<T: Scalar>(n: u64, _d: u64, w: u64, q: u64, inner: &BoundValue<T>) -> Result<BoundValue<T>> {
    require(w >= 1, || "weight recursion needs w >= 1".into())?;
    require(q >= 1, || "q must be positive".into())?;
    require(inner.is_upper(), || "inner value must be an upper bound".into())?;
    let v = floor_div(&mul(&lit(n * (q - 1))?, &inner.value)?, &lit(w)?);
    Ok(BoundValue::upper(v, format!("Lem2[{}]", inner.provenance)))
}

/// Johnson–Schönheim bound on `D_λ(n, k, t)`, with the unfloored `λC(n,t)/C(k,t)`.
#[derive(Clone, Debug)]
pub struct JohnsonSchonheim<T> {
    pub nested: BoundValue<T>,
    pub loose: Ratio<T>,
}

pub fn johnson_schonheim<T: Scalar>(n: u64, k: u64, t: u64, lambda: u64) -> Result<JohnsonSchonheim<T>> {
    require(t <= k && k <= n && k >= 1, || format!("need t <= k <= n, got t={t}, k={k}, n={n}"))?;
    let mut v: T = lit(lambda)?;
    for i in (0..t).rev() {
        v = floor_div(&mul(&lit(n - i)?, &v)?, &lit(k - i)?);
    }
    let loose = Ratio::new(mul(&lit(lambda)?, &binom(n, t)?)?, binom(k, t)?);
    Ok(JohnsonSchonheim { nested: BoundValue::upper(v, "JS"), loose })
}

/// `A_q(n, 2w, w) = ⌊n/w⌋`.
pub fn exact_2w<T: Scalar>(n: u64, w: u64, _q: u64) -> Result<BoundValue<T>> {
    let v = match n.checked_div(w) {
        Some(v) => lit(v)?,
        None => T::one(),
    };
    Ok(BoundValue::exact(v, "Lem11"))
}

/// `⌊(q-1)n/2⌋` for `q <= n`, else `C(n, 2)`.
pub fn n32_exact<T: Scalar>(n: u64, q: u64) -> Result<BoundValue<T>> {
    let v = if q <= n { lit((q - 1) * n / 2)? } else { binom(n, 2)? };
    Ok(BoundValue::exact(v, "Thm9"))
}

/// `U(n, q) = ⌊(q-1)n/3 · ⌊(n-1)/2⌋⌋`.
pub fn u_bound<T: Scalar>(n: u64, q: u64) -> Result<BoundValue<T>> {
    require(n >= 3, || format!("U(n, q) needs n >= 3, got {n}"))?;
    require(q >= 2, || "q must be at least 2".into())?;
    let num = mul(&lit((q - 1) * n)?, &lit((n - 1) / 2)?)?;
    Ok(BoundValue::upper(floor_div(&num, &lit(3)?), "Cor1"))
}

/// `B(n, q) = (q-1)n(n-1)/6`.
pub fn b_value<T: Scalar>(n: u64, q: u64) -> Result<Ratio<T>> {
    let num = mul(&lit((q - 1) * n)?, &lit(n.saturating_sub(1))?)?;
    Ok(Ratio::new(num, lit(6)?))
}

/// `B(n, q) - U(n, q)` as listed by residues of `n` mod 6 and `q` mod 3.
pub fn u_correction<T: Scalar>(n: u64, q: u64) -> Result<Ratio<T>> {
    let shift = || -> Result<Ratio<T>> { Ok(Ratio::new(lit((q - 1) * n)?, lit(6)?)) };
    let third = |k: u64| -> Result<Ratio<T>> { Ok(Ratio::new(lit(k)?, lit(3)?)) };
    let extra = match q % 3 {
        0 => third(2)?,
        1 => third(0)?,
        _ => third(1)?,
    };
    Ok(match n % 6 {
        0 | 2 => shift()?,
        1 | 3 => Ratio::from_integer(T::zero()),
        4 => shift()? + extra,
        _ => extra,
    })
}

/// `A_q(n, 4, 3) <= min(U(n, q) - [n ≡ 5 (6), q ≢ 1 (3)], C(n, 3))`.
pub fn n43_upper<T: Scalar>(n: u64, q: u64) -> Result<BoundValue<T>> {
    let u = u_bound::<T>(n, q)?.value;
    let (u, tag) = if n % 6 == 5 && q % 3 != 1 { (sub(&u, &T::one())?, "Lem12") } else { (u, "Cor1") };
    let c = binom::<T>(n, 3)?;
    Ok(if c < u { BoundValue::upper(c, "Thm12") } else { BoundValue::upper(u, tag) })
}

/// Lower-range slack `δ` for `n ≡ 5 (mod 6)`.
pub fn delta_n5(q: u64) -> u64 {
    let base = 4 * (q - 1);
    match q % 3 {
        0 => (base - 2) / 3,
        1 => base / 3,
        _ => (base - 1) / 3,
    }
}

/// Lower-range slack `δ` for `n ≡ 4 (mod 6)`; `q >= 2`.
pub fn delta_n4(q: u64) -> u64 {
    let base = 4 * (q - 1);
    match q % 3 {
        0 => (base - 5) / 3,
        1 => (base - 3) / 3,
        _ => (base - 4) / 3,
    }
}

/// Upper-range slack `ε` for `n ≡ 5 (mod 6)`.
pub fn epsilon_n5(q: u64) -> u64 {
    u64::from(q % 3 != 1)
}

/// `(q-1)^c C(n,c) / C(w,c)` with `c = ⌈w/2⌉`, floored; bounds `A_q(n, w+1, w)`.
pub fn lemma15_upper<T: Scalar>(n: u64, w: u64, q: u64) -> Result<BoundValue<T>> {
    require(w <= n, || format!("need w <= n, got w={w}, n={n}"))?;
    let c = w.div_ceil(2);
    let num = mul(&pow(&lit(q - 1)?, c)?, &binom(n, c)?)?;
    Ok(BoundValue::upper(floor_div(&num, &binom(w, c)?), "Lem15"))
}

/// `t = ⌈(2w-d+1)/2⌉`, `f = ⌊(2w-d+1)/2⌋`.
pub fn prob_parameters(d: u64, w: u64) -> (u64, u64) {
    let m = 2 * w + 1 - d;
    (m.div_ceil(2), m / 2)
}

/// `⌊(q-1)^e C(n,t) / C(w,t)⌋` with `e = t` for odd `d` and `t-1` for even `d`.
pub fn power_upper<T: Scalar>(n: u64, d: u64, w: u64, q: u64) -> Result<BoundValue<T>> {
    require(d >= 1 && d <= 2 * w && w <= n, || format!("need 1 <= d <= 2w <= 2n, got n={n}, d={d}, w={w}"))?;
    let (t, _) = prob_parameters(d, w);
    let e = if d % 2 == 1 { t } else { t - 1 };
    let num = mul(&pow(&lit(q - 1)?, e)?, &binom(n, t)?)?;
    Ok(BoundValue::upper(floor_div(&num, &binom(w, t)?), "Lem2-power"))
}

/// Number of weight-`w` words within distance `r` of a fixed weight-`w` word.
pub fn sphere_size<T: Scalar>(n: u64, w: u64, q: u64, r: u64) -> Result<T> {
    require(w <= n, || format!("need w <= n, got w={w}, n={n}"))?;
    require(q >= 2, || "q must be at least 2".into())?;
    let mut total = T::zero();
    for i in 0..=r {
        for j in 0..=(i / 2).min(n - w).min(w) {
            let rest = i - 2 * j;
            if rest > w - j {
                continue;
            }
            let term = mul(&mul(&binom::<T>(w, j)?, &binom(n - w, j)?)?, &binom(w - j, rest)?)?;
            let term = mul(&mul(&term, &pow(&lit(q - 1)?, j)?)?, &pow(&lit(q - 2)?, rest)?)?;
            total = total + term;
        }
    }
    Ok(total)
}

/// `⌈C(n,w)(q-1)^w / S_{d-1}^{n,w}⌉`.
pub fn gv_lower<T: Scalar>(n: u64, d: u64, w: u64, q: u64) -> Result<BoundValue<T>> {
    require(d >= 1, || "d must be at least 1".into())?;
    let all = mul(&binom::<T>(n, w)?, &pow(&lit(q - 1)?, w)?)?;
    let s = sphere_size::<T>(n, w, q, d - 1)?;
    Ok(BoundValue::lower(ceil_div(&all, &s), "GV"))
}

/// `(λ/C(w,t) - λ(λ-1)C(t,f)/(q-1)^f) · C(n,t)`, clamped at 0 and floored.
///
/// Assumes a `t-(n, w, λ)` packing meeting `λC(n,t)/C(w,t)`, so the value is
/// a reference, not a guarantee, at finite `n`.
pub fn prob_lower<T: Scalar>(n: u64, d: u64, w: u64, q: u64, lambda: u64) -> Result<BoundValue<T>> {
    require(d >= 1 && d <= 2 * w && w <= n, || format!("need 1 <= d <= 2w <= 2n, got n={n}, d={d}, w={w}"))?;
    require(lambda >= 1, || "lambda must be at least 1".into())?;
    require(q >= 2, || "q must be at least 2".into())?;
    let (t, f) = prob_parameters(d, w);
    let cw: T = binom(w, t)?;
    let qf = pow(&lit(q - 1)?, f)?;
    let lam: T = lit(lambda)?;
    // Over the common denominator C(w,t)(q-1)^f.
    let first = mul(&lam, &qf)?;
    let second = mul(&mul(&mul(&lam, &lit(lambda - 1)?)?, &binom(t, f)?)?, &cw)?;
    let num = mul(&sub(&first, &second)?, &binom(n, t)?)?;
    let v = floor_div(&num, &mul(&cw, &qf)?).max(T::zero());
    Ok(BoundValue::lower(v, format!("Eq10(lambda={lambda})")).heuristic().assuming("packing of size λC(n,t)/C(w,t)"))
}

/// Expected number of ordered conflicting pairs is at most
/// `λ(λ-1)C(t,f)/(q-1)^f · C(n,t)`.
pub fn expected_conflicts_bound<T: Scalar>(n: u64, d: u64, w: u64, q: u64, lambda: u64) -> Result<Ratio<T>> {
    require(d >= 1 && d <= 2 * w, || "need 1 <= d <= 2w".into())?;
    let (t, f) = prob_parameters(d, w);
    let num = mul(&mul(&mul(&lit(lambda)?, &lit(lambda.saturating_sub(1))?)?, &binom(t, f)?)?, &binom(n, t)?)?;
    Ok(Ratio::new(num, pow(&lit(q - 1)?, f)?))
}

/// `λ` choice and leading constants of the large-`q` lower bounds.
#[derive(Clone, Debug)]
pub struct LargeQRegime<T> {
    pub t: u64,
    pub lambda: u64,
    /// `1/(4C(w,t))` for odd `d`, `1/(4C(w,t)t)` for even `d`.
    pub constant: Ratio<T>,
    /// `constant · (q-1)^e C(n,t)/C(w,t)`; holds only asymptotically in `q`.
    pub asymptotic_lower: Ratio<T>,
    pub upper: BoundValue<T>,
}

pub fn large_q_regime<T: Scalar>(n: u64, d: u64, w: u64, q: u64) -> Result<LargeQRegime<T>> {
    let upper = power_upper::<T>(n, d, w, q)?;
    let (t, _) = prob_parameters(d, w);
    let cw: T = binom(w, t)?;
    let denom = if d % 2 == 1 { mul(&lit(4)?, &cw)? } else { mul(&mul(&lit(4)?, &cw)?, &lit(t)?)? };
    let constant = Ratio::new(T::one(), denom);
    let e = if d % 2 == 1 { t } else { t - 1 };
    let main = Ratio::new(mul(&pow(&lit(q - 1)?, e)?, &binom(n, t)?)?, cw);
    let lambda = crate::lifting::default_lambda(d as usize, w as usize, q.min(u64::from(u16::MAX)) as u16);
    Ok(LargeQRegime { t, lambda, asymptotic_lower: constant.clone() * main, constant, upper })
}

/// `(q-1)n²/6`, the growth rate of `A_q(n, 4, 3)` for fixed `q`.
pub fn asymptotic_n43<T: Scalar>(n: u64, q: u64) -> Result<Ratio<T>> {
    Ok(Ratio::new(mul(&lit(q - 1)?, &lit(n * n)?)?, lit(6)?))
}

/// `V(n, w) = (w/2)!/w! · n^{w/2}` for even `w`.
pub fn corollary3_v<T: Scalar>(n: u64, w: u64) -> Result<Ratio<T>> {
    require(w.is_multiple_of(2), || "V(n, w) is defined for even w".into())?;
    Ok(Ratio::new(mul(&factorial::<T>(w / 2)?, &pow(&lit(n)?, w / 2)?)?, factorial(w)?))
}

/// Large-`n` form of the GV bound at `d = w + 1`, even `w`:
/// `n^{w/2} (q-1)^{w/2} ((w/2)!)^3 / (w!)^2`.
pub fn gv_asymptotic<T: Scalar>(n: u64, w: u64, q: u64) -> Result<Ratio<T>> {
    require(w.is_multiple_of(2), || "defined for even w".into())?;
    let h = w / 2;
    let num = mul(&mul(&pow(&lit(n)?, h)?, &pow(&lit(q - 1)?, h)?)?, &pow(&factorial::<T>(h)?, 3)?)?;
    Ok(Ratio::new(num, pow(&factorial::<T>(w)?, 2)?))
}
