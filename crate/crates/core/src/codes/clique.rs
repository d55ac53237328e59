//! Exhaustive optimum for tiny instances: maximum clique in the graph whose
//! vertices are the weight-`w` words and whose edges join words at distance
//! at least `d`.

use super::code::{Code, Params};
use super::word::Word;
use crate::error::{Error, Result};
use crate::math::binomial_u128;

/// Limits for [`brute_force_max`].
#[derive(Clone, Copy, Debug)]
pub struct SearchBudget {
    /// Maximum number of weight-`w` words to enumerate.
    pub max_vertices: usize,
    /// Maximum number of branch-and-bound nodes.
    pub max_nodes: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_vertices: 100_000, max_nodes: 50_000_000 }
    }
}

#[derive(Clone, Debug)]
pub struct BruteForce {
    pub size: usize,
    /// `None` only when no weight-`w` word exists (`w > n`).
    pub witness: Option<Code>,
    pub nodes: u64,
}

/// All weight-`w` words of length `n` over `q` symbols, in lexicographic order.
pub fn weight_w_words(n: usize, w: usize, q: u16) -> Result<Vec<Word>> {
    let mut out = Vec::new();
    let mut symbols = vec![0u8; n];
    fill(&mut symbols, 0, w, q, &mut out)?;
    Ok(out)
}

fn fill(buf: &mut [u8], pos: usize, left: usize, q: u16, out: &mut Vec<Word>) -> Result<()> {
    if left == 0 {
        out.push(Word::new(buf.to_vec(), q)?);
        return Ok(());
    }
    if buf.len() - pos < left {
        return Ok(());
    }
    // Lexicographic: a zero at `pos` sorts first.
    if buf.len() - pos > left {
        fill(buf, pos + 1, left, q, out)?;
    }
    for s in 1..q {
        buf[pos] = s as u8;
        fill(buf, pos + 1, left - 1, q, out)?;
        buf[pos] = 0;
    }
    Ok(())
}

/// Exact `A_q(n, d, w)` with a witness code, by branch and bound.
///
/// Coordinate permutations combined with per-coordinate permutations of the
/// nonzero symbols act transitively on weight-`w` words, so the search fixes
/// the lexicographically first word and looks for a maximum clique among its
/// neighbours. Vertex order is deterministic.
pub fn brute_force_max(n: usize, d: usize, w: usize, q: u16, budget: SearchBudget) -> Result<BruteForce> {
    if q < 2 {
        return Err(Error::invalid("alphabet size must be at least 2"));
    }
    let count = binomial_u128(n as u64, w as u64) * u128::from(q - 1).pow(w as u32);
    if count > budget.max_vertices as u128 {
        return Err(Error::TooLarge(format!(
            "{count} weight-{w} words exceeds the vertex budget {}",
            budget.max_vertices
        )));
    }
    let words = weight_w_words(n, w, q)?;
    let params = Params::new(n, d, w, q);
    if words.is_empty() {
        return Ok(BruteForce { size: 0, witness: None, nodes: 0 });
    }

    let root = &words[0];
    let neigh: Vec<usize> = (1..words.len()).filter(|&j| root.distance_unchecked(&words[j]) >= d).collect();
    let graph = Graph::induced(&words, &neigh, d);
    let mut search = CliqueSearch::new(&graph, budget.max_nodes);
    search.run()?;

    let mut chosen = vec![words[0].clone()];
    chosen.extend(search.best.iter().map(|&v| words[neigh[graph.label[v]]].clone()));
    let size = chosen.len();
    let witness = Code::new(params, chosen, format!("brute-force A_{q}({n},{d},{w})"))?.verified()?;
    Ok(BruteForce { size, witness: Some(witness), nodes: search.nodes })
}

struct Graph {
    /// `label[v]` is the index into the neighbour list for graph vertex `v`.
    label: Vec<usize>,
    adj: Vec<Vec<u64>>,
    blocks: usize,
}

impl Graph {
    fn induced(words: &[Word], verts: &[usize], d: usize) -> Graph {
        let m = verts.len();
        let mut raw = vec![Vec::new(); m];
        for i in 0..m {
            for j in i + 1..m {
                if words[verts[i]].distance_unchecked(&words[verts[j]]) >= d {
                    raw[i].push(j);
                    raw[j].push(i);
                }
            }
        }
        // Degree-descending initial order, ties by index.
        let mut order: Vec<usize> = (0..m).collect();
        order.sort_by(|&a, &b| raw[b].len().cmp(&raw[a].len()).then(a.cmp(&b)));
        let mut pos = vec![0; m];
        for (p, &v) in order.iter().enumerate() {
            pos[v] = p;
        }
        let blocks = m.div_ceil(64).max(1);
        let mut adj = vec![vec![0u64; blocks]; m];
        for (v, row) in raw.iter().enumerate() {
            for &u in row {
                let (pv, pu) = (pos[v], pos[u]);
                adj[pv][pu / 64] |= 1 << (pu % 64);
            }
        }
        Graph { label: order, adj, blocks }
    }
}

struct CliqueSearch<'g> {
    graph: &'g Graph,
    best: Vec<usize>,
    current: Vec<usize>,
    nodes: u64,
    max_nodes: u64,
}

impl<'g> CliqueSearch<'g> {
    fn new(graph: &'g Graph, max_nodes: u64) -> Self {
        CliqueSearch { graph, best: Vec::new(), current: Vec::new(), nodes: 0, max_nodes }
    }

    fn run(&mut self) -> Result<()> {
        let m = self.graph.label.len();
        let mut all = vec![0u64; self.graph.blocks];
        for v in 0..m {
            all[v / 64] |= 1 << (v % 64);
        }
        self.expand(all)
    }

    fn expand(&mut self, mut cand: Vec<u64>) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(Error::BudgetExhausted { what: "clique search node budget".into(), spent: self.nodes });
        }
        let (order, colors) = self.color(&cand);
        for idx in (0..order.len()).rev() {
            if self.current.len() + colors[idx] <= self.best.len() {
                return Ok(());
            }
            let v = order[idx];
            self.current.push(v);
            let next: Vec<u64> = cand.iter().zip(&self.graph.adj[v]).map(|(a, b)| a & b).collect();
            if next.iter().all(|&x| x == 0) {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next)?;
            }
            self.current.pop();
            cand[v / 64] &= !(1 << (v % 64));
        }
        Ok(())
    }

    /// Greedy sequential colouring; returns vertices in colour order together
    /// with the colour (1-based) of each, which bounds the clique size.
    fn color(&self, cand: &[u64]) -> (Vec<usize>, Vec<usize>) {
        let mut uncolored = cand.to_vec();
        let mut order = Vec::new();
        let mut colors = Vec::new();
        let mut k = 0;
        while uncolored.iter().any(|&x| x != 0) {
            k += 1;
            let mut q = uncolored.clone();
            while let Some(v) = first_bit(&q) {
                uncolored[v / 64] &= !(1 << (v % 64));
                q[v / 64] &= !(1 << (v % 64));
                for (qb, ab) in q.iter_mut().zip(&self.graph.adj[v]) {
                    *qb &= !ab;
                }
                order.push(v);
                colors.push(k);
            }
        }
        (order, colors)
    }
}

fn first_bit(bits: &[u64]) -> Option<usize> {
    bits.iter().enumerate().find(|(_, &b)| b != 0).map(|(i, &b)| i * 64 + b.trailing_zeros() as usize)
}
