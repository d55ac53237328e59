use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A word of length `n` over the alphabet `{0, .., q-1}`.
///
/// The dense symbol vector is the canonical form; a sparse `(position, symbol)`
/// list of the nonzero entries is kept alongside it so that distances between
/// low-weight words can be computed by merging supports.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    symbols: Vec<u8>,
    q: u16,
    entries: Vec<(u32, u8)>,
}

impl Word {
    pub fn new(symbols: Vec<u8>, q: u16) -> Result<Self> {
        if !(2..=256).contains(&q) {
            return Err(Error::invalid(format!("alphabet size {q} not in [2, 256]")));
        }
        if let Some(&s) = symbols.iter().find(|&&s| u16::from(s) >= q) {
            return Err(Error::SymbolOutOfRange { symbol: s.into(), q });
        }
        let entries = symbols.iter().enumerate().filter(|(_, &s)| s != 0).map(|(i, &s)| (i as u32, s)).collect();
        Ok(Word { symbols, q, entries })
    }

    /// Word of length `n` with `symbol` on every position of `support`.
    pub fn from_support(n: usize, support: &[usize], symbol: u8, q: u16) -> Result<Self> {
        let mut symbols = vec![0u8; n];
        for &p in support {
            if p >= n {
                return Err(Error::invalid(format!("position {p} outside length {n}")));
            }
            symbols[p] = symbol;
        }
        Word::new(symbols, q)
    }

    /// Word of length `n` built from explicit `(position, symbol)` pairs.
    pub fn from_entries(n: usize, entries: &[(usize, u8)], q: u16) -> Result<Self> {
        let mut symbols = vec![0u8; n];
        for &(p, s) in entries {
            if p >= n {
                return Err(Error::invalid(format!("position {p} outside length {n}")));
            }
            symbols[p] = s;
        }
        Word::new(symbols, q)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn q(&self) -> u16 {
        self.q
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn get(&self, i: usize) -> u8 {
        self.symbols[i]
    }

    pub fn weight(&self) -> usize {
        self.entries.len()
    }

    /// Sorted nonzero `(position, symbol)` pairs.
    pub fn entries(&self) -> &[(u32, u8)] {
        &self.entries
    }

    pub fn support(&self) -> Vec<usize> {
        self.entries.iter().map(|&(p, _)| p as usize).collect()
    }

    pub fn is_binary(&self) -> bool {
        self.entries.iter().all(|&(_, s)| s == 1)
    }

    /// Same word read over a larger alphabet.
    pub fn with_alphabet(&self, q: u16) -> Result<Self> {
        Word::new(self.symbols.clone(), q)
    }

    /// Replace every nonzero symbol by `symbol`.
    pub fn recolor(&self, symbol: u8, q: u16) -> Result<Self> {
        let symbols = self.symbols.iter().map(|&s| if s == 0 { 0 } else { symbol }).collect();
        Word::new(symbols, q)
    }

    /// Drop coordinate `coord` entirely.
    pub fn puncture(&self, coord: usize) -> Result<Self> {
        let mut symbols = self.symbols.clone();
        symbols.remove(coord);
        Word::new(symbols, self.q)
    }

    /// Cyclic shift by `k` positions to the right.
    pub fn rotate(&self, k: usize) -> Self {
        let mut symbols = self.symbols.clone();
        let n = symbols.len();
        if n > 0 {
            symbols.rotate_right(k % n);
        }
        Word::new(symbols, self.q).expect("rotation keeps symbols in range")
    }

    pub fn distance(&self, other: &Word) -> Result<usize> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch { left: self.len(), right: other.len() });
        }
        Ok(self.distance_unchecked(other))
    }

    /// Hamming distance via a merge of the two sparse supports.
    ///
    /// `d = |u| + |v| - |S_u ∩ S_v| - |{i in S_u ∩ S_v : u_i = v_i}|`.
    pub(crate) fn distance_unchecked(&self, other: &Word) -> usize {
        let (a, b) = (&self.entries, &other.entries);
        let (mut i, mut j) = (0, 0);
        let mut common = 0;
        let mut agree = 0;
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => i += 1,
                Ordering::Greater => j += 1,
                Ordering::Equal => {
                    common += 1;
                    if a[i].1 == b[j].1 {
                        agree += 1;
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        a.len() + b.len() - common - agree
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.symbols.cmp(&other.symbols).then(self.q.cmp(&other.q))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for s in &self.symbols {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
            first = false;
        }
        Ok(())
    }
}

pub fn hamming_distance(u: &Word, v: &Word) -> Result<usize> {
    u.distance(v)
}
