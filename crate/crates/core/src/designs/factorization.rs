use crate::error::{Error, Result};

pub type Edge = (usize, usize);

/// A partition of the edges of `K_n` into (near-)one-factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    n: usize,
    factors: Vec<Vec<Edge>>,
}

impl Factorization {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn factors(&self) -> &[Vec<Edge>] {
        &self.factors
    }

    /// Vertex missed by factor `i`, if any.
    pub fn isolated(&self, i: usize) -> Option<usize> {
        let mut seen = vec![false; self.n];
        for &(a, b) in &self.factors[i] {
            seen[a] = true;
            seen[b] = true;
        }
        seen.iter().position(|&s| !s)
    }

    /// Full check that the factors partition `E(K_n)` and each is a
    /// (near-)perfect matching as required by the parity of `n`.
    pub fn validate(&self) -> Result<()> {
        let n = self.n;
        let expected = if n.is_multiple_of(2) { n - 1 } else { n };
        if self.factors.len() != expected {
            return Err(Error::design(format!("{} factors, expected {expected}", self.factors.len())));
        }
        let mut used = vec![false; n * n];
        let mut isolated_seen = vec![false; n];
        for (i, f) in self.factors.iter().enumerate() {
            let mut deg = vec![0u8; n];
            for &(a, b) in f {
                if a >= n || b >= n || a == b {
                    return Err(Error::design(format!("bad edge ({a}, {b})")));
                }
                let (x, y) = (a.min(b), a.max(b));
                if used[x * n + y] {
                    return Err(Error::design(format!("edge ({x}, {y}) repeated")));
                }
                used[x * n + y] = true;
                deg[a] += 1;
                deg[b] += 1;
            }
            let missing: Vec<usize> = (0..n).filter(|&v| deg[v] == 0).collect();
            if deg.iter().any(|&d| d > 1) {
                return Err(Error::design(format!("factor {i} is not a matching")));
            }
            match (n % 2, missing.as_slice()) {
                (0, []) => {}
                (1, [v]) => {
                    if isolated_seen[*v] {
                        return Err(Error::design(format!("vertex {v} isolated twice")));
                    }
                    isolated_seen[*v] = true;
                }
                _ => return Err(Error::design(format!("factor {i} misses {missing:?}"))),
            }
        }
        Ok(())
    }
}

/// Round-robin one-factorization of `K_n`, `n` even.
///
/// Vertices `0..n-1` sit on a circle with `n-1` at the centre; factor `i`
/// holds `{i, n-1}` and the chords `{i+k, i-k}`.
pub fn one_factorization(n: usize) -> Result<Factorization> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::precondition(format!("one-factorization requires even n >= 2, got {n}")));
    }
    let m = n - 1;
    let factors = (0..m)
        .map(|i| {
            let mut f = vec![(i.min(m), m.max(i))];
            for k in 1..=(m - 1) / 2 {
                let a = (i + k) % m;
                let b = (i + m - k) % m;
                f.push((a.min(b), a.max(b)));
            }
            f.sort_unstable();
            f
        })
        .collect();
    let fact = Factorization { n, factors };
    fact.validate()?;
    Ok(fact)
}

/// Near-one-factorization of `K_n`, `n` odd, labelled so that factor `i`
/// isolates vertex `i` and the last factor is `{0,1}, {2,3}, .., {n-3,n-2}`.
pub fn near_one_factorization(n: usize) -> Result<Factorization> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::precondition(format!("near-one-factorization requires odd n >= 3, got {n}")));
    }
    // Circle method on Z_n: factor x isolates x and pairs x+k with x-k.
    let raw = |x: usize| -> Vec<Edge> { (1..=(n - 1) / 2).map(|k| ((x + k) % n, (x + n - k) % n)).collect() };
    // Relabel so the factor isolating 0 becomes {0,1},{2,3},.. and 0 -> n-1.
    let mut perm = vec![0; n];
    perm[0] = n - 1;
    for k in 1..=(n - 1) / 2 {
        perm[k] = 2 * (k - 1);
        perm[n - k] = 2 * (k - 1) + 1;
    }
    let mut factors = vec![Vec::new(); n];
    for x in 0..n {
        let mut f: Vec<Edge> = raw(x)
            .into_iter()
            .map(|(a, b)| {
                let (a, b) = (perm[a], perm[b]);
                (a.min(b), a.max(b))
            })
            .collect();
        f.sort_unstable();
        factors[perm[x]] = f;
    }
    let fact = Factorization { n, factors };
    fact.validate()?;
    debug_assert!((0..n).all(|i| fact.isolated(i) == Some(i)));
    Ok(fact)
}
