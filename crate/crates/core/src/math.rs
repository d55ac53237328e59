//! Small combinatorial helpers shared by the code and design modules.

/// `C(n, k)` in `u128`; zero when `k > n`.
pub fn binomial_u128(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    acc
}

/// Pascal table with `table[n][k] = C(n, k)` for `n <= max_n`, `k <= max_k`.
#[derive(Clone, Debug)]
pub struct BinomialTable {
    rows: Vec<Vec<u64>>,
}

impl BinomialTable {
    pub fn new(max_n: usize, max_k: usize) -> Self {
        let mut rows = vec![vec![0u64; max_k + 1]; max_n + 1];
        for n in 0..=max_n {
            rows[n][0] = 1;
            for k in 1..=max_k.min(n) {
                rows[n][k] = rows[n - 1][k - 1].saturating_add(if k < n { rows[n - 1][k] } else { 0 });
            }
        }
        BinomialTable { rows }
    }

    pub fn get(&self, n: usize, k: usize) -> u64 {
        if k > n {
            0
        } else {
            self.rows[n][k]
        }
    }

    /// Colexicographic rank of a sorted subset.
    pub fn rank(&self, subset: &[usize]) -> u64 {
        subset.iter().enumerate().map(|(i, &x)| self.get(x, i + 1)).sum()
    }
}

/// Visit all `k`-subsets of `0..n` in lexicographic order.
pub fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut c: Vec<usize> = (0..k).collect();
    loop {
        f(&c);
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if c[i] < n - k + i {
                break;
            }
            if i == 0 {
                return;
            }
        }
        c[i] += 1;
        for j in i + 1..k {
            c[j] = c[j - 1] + 1;
        }
    }
}

/// Visit all `k`-subsets of the sorted slice `set`.
pub fn for_each_sub_of(set: &[usize], k: usize, mut f: impl FnMut(&[usize])) {
    let mut buf = vec![0; k];
    for_each_subset(set.len(), k, |idx| {
        for (b, &i) in buf.iter_mut().zip(idx) {
            *b = set[i];
        }
        f(&buf);
    });
}

/// All `k`-subsets of `0..n`.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_subset(n, k, |s| out.push(s.to_vec()));
    out
}

/// Size of the intersection of two sorted slices.
pub fn common_count(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut c) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                c += 1;
                i += 1;
                j += 1;
            }
        }
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial_u128(13, 4), 715);
        assert_eq!(binomial_u128(3, 5), 0);
        assert_eq!(binomial_u128(200, 4), 64_684_950);
        let t = BinomialTable::new(20, 4);
        assert_eq!(t.get(13, 4), 715);
        assert_eq!(t.get(3, 4), 0);
    }

    #[test]
    fn subsets_and_ranks() {
        let all = subsets(6, 3);
        assert_eq!(all.len(), 20);
        assert_eq!(all[0], vec![0, 1, 2]);
        assert_eq!(all[19], vec![3, 4, 5]);
        let t = BinomialTable::new(6, 3);
        let mut ranks: Vec<u64> = all.iter().map(|s| t.rank(s)).collect();
        ranks.sort_unstable();
        assert_eq!(ranks, (0..20).collect::<Vec<_>>());
        assert_eq!(subsets(3, 0), vec![Vec::<usize>::new()]);
        assert!(subsets(2, 3).is_empty());
    }

    #[test]
    fn intersections() {
        assert_eq!(common_count(&[0, 2, 4, 6], &[1, 2, 3, 4]), 2);
    }
}
