use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};

/// Rows, columns and symbols of a marked subsquare.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subsquare {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub symbols: Vec<usize>,
}

impl Subsquare {
    pub fn corner(k: usize) -> Self {
        let idx: Vec<usize> = (0..k).collect();
        Subsquare { rows: idx.clone(), cols: idx.clone(), symbols: idx }
    }

    pub fn side(&self) -> usize {
        self.rows.len()
    }

    pub fn contains_cell(&self, r: usize, c: usize) -> bool {
        self.rows.contains(&r) && self.cols.contains(&c)
    }
}

/// Latin square of side `n` on symbols `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatinSquare {
    cells: Vec<Vec<usize>>,
    subsquare: Option<Subsquare>,
}

impl LatinSquare {
    pub fn new(cells: Vec<Vec<usize>>, subsquare: Option<Subsquare>) -> Result<Self> {
        let sq = LatinSquare { cells, subsquare };
        sq.validate()?;
        Ok(sq)
    }

    pub fn cyclic(n: usize) -> Self {
        let cells = (0..n).map(|r| (0..n).map(|c| (r + c) % n).collect()).collect();
        LatinSquare { cells, subsquare: None }
    }

    pub fn side(&self) -> usize {
        self.cells.len()
    }

    pub fn get(&self, r: usize, c: usize) -> usize {
        self.cells[r][c]
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn subsquare(&self) -> Option<&Subsquare> {
        self.subsquare.as_ref()
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.cells.len();
        let mut col_seen = vec![vec![false; n]; n];
        for (r, row) in self.cells.iter().enumerate() {
            if row.len() != n {
                return Err(Error::design(format!("row {r} has length {}", row.len())));
            }
            let mut seen = vec![false; n];
            for (c, &s) in row.iter().enumerate() {
                if s >= n || seen[s] || col_seen[c][s] {
                    return Err(Error::design(format!("symbol {s} repeated or out of range at ({r}, {c})")));
                }
                seen[s] = true;
                col_seen[c][s] = true;
            }
        }
        if let Some(sub) = &self.subsquare {
            let k = sub.side();
            if sub.cols.len() != k || sub.symbols.len() != k {
                return Err(Error::design("subsquare is not square"));
            }
            for &r in &sub.rows {
                for &c in &sub.cols {
                    if r >= n || c >= n || !sub.symbols.contains(&self.cells[r][c]) {
                        return Err(Error::design(format!("cell ({r}, {c}) leaves the subsquare symbols")));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Latin square of side `n` with a side-`k` subsquare on symbols `0..k` in
/// the top-left corner; requires `k <= n/2`.
///
/// The first `k` rows are written down directly (cyclic square on `0..k`
/// beside a cyclic `k × (n-k)` rectangle on the other symbols); the rest are
/// completed row by row with perfect matchings, which always exist for a
/// Latin rectangle.
pub fn latin_square_subsquare(n: usize, k: usize) -> Result<LatinSquare> {
    if n == 0 {
        return Err(Error::precondition("side must be positive"));
    }
    if k > n / 2 {
        return Err(Error::precondition(format!("subsquare side {k} exceeds floor({n}/2)")));
    }
    let mut cells: Vec<Vec<usize>> = Vec::with_capacity(n);
    for r in 0..k {
        let row = (0..n).map(|c| if c < k { (r + c) % k } else { k + (r + c - k) % (n - k) }).collect();
        cells.push(row);
    }
    while cells.len() < n {
        let row = complete_row(&cells, n, |_, _| true, None::<&mut rand::rngs::ThreadRng>)
            .ok_or_else(|| Error::design("Latin rectangle failed to extend"))?;
        cells.push(row);
    }
    let sub = (k > 0).then(|| Subsquare::corner(k));
    LatinSquare::new(cells, sub)
}

/// Next row for a Latin rectangle, restricted to cells where `allowed(c, s)`.
pub(crate) fn complete_row<R: Rng>(
    rows: &[Vec<usize>],
    n: usize,
    allowed: impl Fn(usize, usize) -> bool,
    rng: Option<&mut R>,
) -> Option<Vec<usize>> {
    let mut used = vec![vec![false; n]; n];
    for row in rows {
        for (c, &s) in row.iter().enumerate() {
            used[c][s] = true;
        }
    }
    let mut adj: Vec<Vec<usize>> = (0..n).map(|c| (0..n).filter(|&s| !used[c][s] && allowed(c, s)).collect()).collect();
    let mut order: Vec<usize> = (0..n).collect();
    if let Some(rng) = rng {
        for a in &mut adj {
            a.shuffle(rng);
        }
        order.shuffle(rng);
    }
    perfect_matching(&adj, n, &order)
}

/// Kuhn's augmenting-path matching; `adj[l]` lists right vertices for left `l`.
fn perfect_matching(adj: &[Vec<usize>], right: usize, order: &[usize]) -> Option<Vec<usize>> {
    fn augment(l: usize, adj: &[Vec<usize>], seen: &mut [bool], owner: &mut [Option<usize>]) -> bool {
        for &r in &adj[l] {
            if seen[r] {
                continue;
            }
            seen[r] = true;
            if owner[r].is_none_or(|o| augment(o, adj, seen, owner)) {
                owner[r] = Some(l);
                return true;
            }
        }
        false
    }
    let mut owner: Vec<Option<usize>> = vec![None; right];
    for &l in order {
        let mut seen = vec![false; right];
        if !augment(l, adj, &mut seen, &mut owner) {
            return None;
        }
    }
    let mut result = vec![usize::MAX; adj.len()];
    for (r, o) in owner.iter().enumerate() {
        if let Some(l) = o {
            result[*l] = r;
        }
    }
    Some(result)
}

/// Two Latin squares of side `n >= 6` with the same top-left side-3
/// subsquare, disagreeing in every cell outside it.
///
/// The second square relabels the first by `σ = (0 1 2)` on the subsquare
/// symbols and a cyclic shift on the others, then restores the corner.
pub fn disjoint_latin_pair(n: usize) -> Result<(LatinSquare, LatinSquare)> {
    if n < 6 {
        return Err(Error::precondition(format!("disjoint Latin pair requires n >= 6, got {n}")));
    }
    let first = latin_square_subsquare(n, 3)?;
    let sigma = |s: usize| if s < 3 { (s + 1) % 3 } else { 3 + (s - 3 + 1) % (n - 3) };
    let cells = (0..n)
        .map(|r| (0..n).map(|c| if r < 3 && c < 3 { first.get(r, c) } else { sigma(first.get(r, c)) }).collect())
        .collect();
    let second = LatinSquare::new(cells, Some(Subsquare::corner(3)))?;
    for r in 0..n {
        for c in 0..n {
            let inside = r < 3 && c < 3;
            if inside != (first.get(r, c) == second.get(r, c)) {
                return Err(Error::design(format!("cell ({r}, {c}) breaks disjointness")));
            }
        }
    }
    Ok((first, second))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsquare_examples() {
        let l = latin_square_subsquare(6, 3).unwrap();
        for r in 0..3 {
            for c in 0..3 {
                assert!(l.get(r, c) < 3);
            }
        }
        latin_square_subsquare(7, 3).unwrap();
        assert!(latin_square_subsquare(5, 3).is_err());
    }

    #[test]
    fn all_small_sides() {
        for n in 1..16 {
            for k in 0..=n / 2 {
                latin_square_subsquare(n, k).unwrap().validate().unwrap();
            }
        }
    }

    #[test]
    fn disjoint_pairs() {
        for n in 6..20 {
            let (a, b) = disjoint_latin_pair(n).unwrap();
            let differ =
                (0..n).flat_map(|r| (0..n).map(move |c| (r, c))).filter(|&(r, c)| a.get(r, c) != b.get(r, c)).count();
            assert_eq!(differ, n * n - 9);
        }
        assert!(disjoint_latin_pair(5).is_err());
    }

    #[test]
    fn invalid_square_rejected() {
        assert!(LatinSquare::new(vec![vec![0, 1], vec![0, 1]], None).is_err());
    }
}
