use std::fmt::Write as _;

use serde_json::{json, Value};

use super::arith::{binom, lit, mul, pow, Scalar};
use super::chain::chain_upper;
use super::exact::{exact_value, n43_range};
use super::formulas::{gv_lower, johnson_schonheim, lemma15_upper, n43_upper, power_upper, prob_lower};
use super::value::{scalar_json, BoundValue};
use crate::error::{Error, Result};
use crate::lifting::{construct, default_lambda, ConstructOptions};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundParams {
    pub n: u64,
    pub d: u64,
    pub w: u64,
    pub q: u64,
}

/// Every applicable bound on `A_q(n, d, w)` and the bracket they leave.
#[derive(Clone, Debug)]
pub struct BoundReport<T> {
    pub params: BoundParams,
    pub bounds: Vec<BoundValue<T>>,
    pub best_upper: T,
    pub best_lower: T,
    pub exact: Option<BoundValue<T>>,
}

#[derive(Clone, Debug, Default)]
pub struct ReportOptions {
    /// Also build a code and count it as a lower bound.
    pub construct: Option<ConstructOptions>,
    /// Packing multiplicity for the random-construction reference value.
    pub lambda: Option<u64>,
}

pub fn bound_report<T: Scalar>(n: u64, d: u64, w: u64, q: u64) -> Result<BoundReport<T>> {
    bound_report_with(n, d, w, q, &ReportOptions::default())
}

pub fn bound_report_with<T: Scalar>(n: u64, d: u64, w: u64, q: u64, opts: &ReportOptions) -> Result<BoundReport<T>> {
    if q < 2 || d == 0 {
        return Err(Error::precondition(format!("need q >= 2 and d >= 1, got d={d}, q={q}")));
    }
    let params = BoundParams { n, d, w, q };
    let mut bounds: Vec<BoundValue<T>> = Vec::new();
    let exact = exact_value::<T>(n, d, w, q)?;
    if let Some(e) = &exact {
        bounds.push(e.clone());
    }
    if w <= n && w >= 1 && d <= 2 * w {
        let all = mul(&binom::<T>(n, w)?, &pow(&lit(q - 1)?, w)?)?;
        bounds.push(BoundValue::upper(all, "trivial:all-words"));
        bounds.push(BoundValue::lower(T::one(), "trivial:single"));
        bounds.push(chain_upper(n, d, w, q)?);
        bounds.push(power_upper(n, d, w, q)?);
        if d > w {
            // Supports pairwise share at most 2w-d points.
            let js = johnson_schonheim::<T>(n, w, 2 * w - d + 1, 1)?;
            bounds.push(BoundValue::upper(js.nested.value, "support-packing"));
            bounds.push(lemma15_upper(n, w, q)?);
        }
        if (d, w) == (4, 3) && n >= 3 {
            bounds.push(n43_upper(n, q)?);
            bounds.extend(n43_range(n, q)?);
        }
        if (n, d, w) == (13, 6, 4) && q > 5 {
            bounds.push(BoundValue::lower(lit(52)?, "Thm15(q=5)+monotone"));
        }
        bounds.push(gv_lower(n, d, w, q)?);
        if q >= 3 {
            let lambda = opts.lambda.unwrap_or_else(|| default_lambda(d as usize, w as usize, q.min(256) as u16));
            bounds.push(prob_lower(n, d, w, q, lambda)?);
        }
        if let Some(copts) = &opts.construct {
            if let Some(b) = constructed(n, d, w, q, copts)? {
                bounds.push(b);
            }
        }
    }
    let best_upper = bounds
        .iter()
        .filter(|b| b.is_upper())
        .map(|b| b.value.clone())
        .min()
        .ok_or_else(|| Error::precondition("no upper bound applies"))?;
    let best_lower = bounds.iter().filter(|b| b.is_lower()).map(|b| b.value.clone()).max().unwrap_or_else(T::zero);
    if best_lower > best_upper {
        let lo = bounds.iter().filter(|b| b.is_lower()).max_by_key(|b| b.value.clone()).unwrap();
        let hi = bounds.iter().filter(|b| b.is_upper()).min_by_key(|b| b.value.clone()).unwrap();
        return Err(Error::Verification(format!(
            "inconsistent bounds for ({n}, {d}, {w})_{q}: lower {} ({}) exceeds upper {} ({})",
            lo.value, lo.provenance, hi.value, hi.provenance
        )));
    }
    Ok(BoundReport { params, bounds, best_upper, best_lower, exact })
}

fn constructed<T: Scalar>(n: u64, d: u64, w: u64, q: u64, opts: &ConstructOptions) -> Result<Option<BoundValue<T>>> {
    let Ok(q16) = u16::try_from(q) else { return Ok(None) };
    if q16 > 256 {
        return Ok(None);
    }
    let code = match construct(n as usize, d as usize, w as usize, q16, opts) {
        Ok(c) => c,
        Err(Error::Partial { partial, .. }) => *partial,
        Err(Error::BudgetExhausted { .. } | Error::Precondition(_) | Error::TooLarge(_)) => return Ok(None),
        Err(e) => return Err(e),
    };
    Ok(Some(BoundValue::lower(lit(code.len() as u64)?, format!("constructed:{}", code.provenance()))))
}

impl<T: Scalar> BoundReport<T> {
    pub fn to_json(&self) -> Value {
        let p = self.params;
        json!({
            "params": {"n": p.n, "d": p.d, "w": p.w, "q": p.q},
            "bounds": self.bounds.iter().map(BoundValue::to_json).collect::<Vec<_>>(),
            "best_upper": scalar_json(&self.best_upper),
            "best_lower": scalar_json(&self.best_lower),
            "exact": self.exact.as_ref().map(BoundValue::to_json),
        })
    }

    pub fn to_text(&self) -> String {
        let p = self.params;
        let mut out = format!("A_{}({}, {}, {})\n", p.q, p.n, p.d, p.w);
        match &self.exact {
            Some(e) => {
                let _ = writeln!(out, "  exact {} [{}]", e.value, e.provenance);
            }
            None => {
                let _ = writeln!(out, "  {} <= A <= {}", self.best_lower, self.best_upper);
            }
        }
        for b in &self.bounds {
            let kind = match b.kind {
                super::BoundKind::Exact => "exact",
                super::BoundKind::Upper => "upper",
                super::BoundKind::Lower => "lower",
            };
            let flag = if b.rigorous { "" } else { " (reference only)" };
            let _ = writeln!(out, "  {kind:5} {:>12}  {}{flag}", b.value.to_string(), b.provenance);
        }
        out
    }
}
