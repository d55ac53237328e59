use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::word::Word;
use crate::error::{Error, Result};

/// Declared parameters `(n, d, w)_q` of a constant-weight code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Params {
    pub n: usize,
    pub d: usize,
    pub w: usize,
    pub q: u16,
}

impl Params {
    pub fn new(n: usize, d: usize, w: usize, q: u16) -> Self {
        Params { n, d, w, q }
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})_{}", self.n, self.d, self.w, self.q)
    }
}

/// Minimum pairwise distance; undefined for codes with fewer than two words.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum MinDistance {
    Undefined,
    Value(usize),
}

impl MinDistance {
    pub fn value(self) -> Option<usize> {
        match self {
            MinDistance::Undefined => None,
            MinDistance::Value(d) => Some(d),
        }
    }

    /// `true` when every pair is at distance at least `d` (vacuous if undefined).
    pub fn at_least(self, d: usize) -> bool {
        self.value().is_none_or(|m| m >= d)
    }
}

impl fmt::Display for MinDistance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinDistance::Undefined => f.write_str("undefined"),
            MinDistance::Value(d) => write!(f, "{d}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistanceViolation {
    pub first: usize,
    pub second: usize,
    pub distance: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub params: Params,
    pub size: usize,
    pub valid: bool,
    pub actual_min_distance: MinDistance,
    /// Indices (into the code's sorted word list) of words of the wrong weight.
    pub weight_violations: Vec<usize>,
    /// Pairs closer than the declared distance.
    pub distance_violations: Vec<DistanceViolation>,
}

/// A set of words with declared parameters and a construction tag.
///
/// Words are kept sorted and unique. A `Code` is only marked verified after
/// [`Code::verified`] has checked weight and pairwise distance exhaustively.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Code {
    params: Params,
    words: Vec<Word>,
    provenance: String,
    verified: bool,
}

impl Code {
    pub fn new(params: Params, words: Vec<Word>, provenance: impl Into<String>) -> Result<Self> {
        if words.is_empty() {
            return Err(Error::invalid("codes are nonempty"));
        }
        for word in &words {
            if word.len() != params.n {
                return Err(Error::LengthMismatch { left: params.n, right: word.len() });
            }
            if word.q() != params.q {
                return Err(Error::invalid(format!(
                    "word over alphabet {} in code over alphabet {}",
                    word.q(),
                    params.q
                )));
            }
        }
        let count = words.len();
        let set: BTreeSet<Word> = words.into_iter().collect();
        if set.len() != count {
            return Err(Error::invalid("duplicate words"));
        }
        Ok(Code { params, words: set.into_iter().collect(), provenance: provenance.into(), verified: false })
    }

    pub fn params(&self) -> Params {
        self.params
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn into_words(self) -> Vec<Word> {
        self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    pub fn is_binary(&self) -> bool {
        self.params.q == 2
    }

    pub fn contains(&self, word: &Word) -> bool {
        self.words.binary_search(word).is_ok()
    }

    pub fn with_provenance(mut self, provenance: impl Into<String>) -> Self {
        self.provenance = provenance.into();
        self
    }

    /// Re-declare the claimed distance; clears the verified flag.
    pub fn with_distance(mut self, d: usize) -> Self {
        self.params.d = d;
        self.verified = false;
        self
    }

    /// Verify and mark the code, or fail with the first violation.
    pub fn verified(mut self) -> Result<Self> {
        let report = verify_code(&self);
        if !report.valid {
            let msg = match (report.weight_violations.first(), report.distance_violations.first()) {
                (Some(&i), _) => format!(
                    "{}: word {} has weight {} (expected {})",
                    self.params,
                    self.words[i],
                    self.words[i].weight(),
                    self.params.w
                ),
                (None, Some(v)) => format!(
                    "{}: words {} and {} at distance {}",
                    self.params, self.words[v.first], self.words[v.second], v.distance
                ),
                (None, None) => unreachable!("invalid report without violations"),
            };
            return Err(Error::Verification(msg));
        }
        self.verified = true;
        Ok(self)
    }

    /// Minimum pairwise distance, recomputed.
    pub fn min_distance(&self) -> MinDistance {
        min_distance(&self.words)
    }
}

pub(crate) fn min_distance(words: &[Word]) -> MinDistance {
    if words.len() < 2 {
        return MinDistance::Undefined;
    }
    let m = (0..words.len())
        .into_par_iter()
        .map(|i| words[i + 1..].iter().map(|v| words[i].distance_unchecked(v)).min().unwrap_or(usize::MAX))
        .min()
        .unwrap_or(usize::MAX);
    MinDistance::Value(m)
}

/// Exhaustive check of constant weight and pairwise distance.
///
/// The pair loop runs in parallel; the report is identical for any schedule.
pub fn verify_code(code: &Code) -> VerificationReport {
    let Params { w, d, .. } = code.params;
    let words = &code.words;
    let weight_violations: Vec<usize> =
        words.iter().enumerate().filter(|(_, u)| u.weight() != w).map(|(i, _)| i).collect();

    let per_row: Vec<(usize, Vec<DistanceViolation>)> = (0..words.len())
        .into_par_iter()
        .map(|i| {
            let mut min = usize::MAX;
            let mut bad = Vec::new();
            for (off, v) in words[i + 1..].iter().enumerate() {
                let dist = words[i].distance_unchecked(v);
                min = min.min(dist);
                if dist < d {
                    bad.push(DistanceViolation { first: i, second: i + 1 + off, distance: dist });
                }
            }
            (min, bad)
        })
        .collect();

    let actual_min_distance = if words.len() < 2 {
        MinDistance::Undefined
    } else {
        MinDistance::Value(per_row.iter().map(|(m, _)| *m).min().unwrap_or(usize::MAX))
    };
    let distance_violations: Vec<DistanceViolation> = per_row.into_iter().flat_map(|(_, bad)| bad).collect();

    VerificationReport {
        params: code.params,
        size: words.len(),
        valid: weight_violations.is_empty() && distance_violations.is_empty(),
        actual_min_distance,
        weight_violations,
        distance_violations,
    }
}
