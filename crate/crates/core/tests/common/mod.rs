//! Independent oracles over plain adjacency matrices.
//!
//! Nothing here calls into the library's algorithms; graphs are converted to
//! `adj[v][u] = (u ∈ F(v))` once and every answer is recomputed from that.

#![allow(dead_code)]

use std::collections::VecDeque;

use multifn::{MultiFunction, VertexSet, VertexUniverse};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Adj = Vec<Vec<bool>>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn adjacency(f: &MultiFunction) -> Adj {
    let n = f.size();
    (0..n).map(|v| (0..n).map(|u| f.relates(v, u)).collect()).collect()
}

pub fn from_adjacency(adj: &Adj) -> MultiFunction {
    let u = VertexUniverse::new(adj.len()).unwrap();
    MultiFunction::from_fn(&u, |v, w| adj[v][w])
}

pub fn mask_set(n: usize, mask: u64) -> VertexSet {
    VertexSet::from_mask(n, mask)
}

pub fn members(s: &VertexSet) -> Vec<usize> {
    s.iter().collect()
}

/// A multifunction with each pair related independently with probability `p`.
pub fn random_mf(rng: &mut ChaCha8Rng, n: usize, p: f64) -> MultiFunction {
    let adj: Adj = (0..n).map(|_| (0..n).map(|_| rng.gen_bool(p)).collect()).collect();
    from_adjacency(&adj)
}

/// Unordered pairs `(i, j)`, `i < j`, in a fixed order.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

/// The simple graph whose edges are the pairs selected by `mask`.
pub fn simple_graph(n: usize, mask: u64) -> Adj {
    let mut adj = vec![vec![false; n]; n];
    for (k, (i, j)) in pairs(n).into_iter().enumerate() {
        if mask >> k & 1 == 1 {
            adj[i][j] = true;
            adj[j][i] = true;
        }
    }
    adj
}

/// Every simple graph on `n` labelled vertices.
pub fn all_simple_graphs(n: usize) -> impl Iterator<Item = Adj> {
    let count = pairs(n).len();
    (0u64..1 << count).map(move |mask| simple_graph(n, mask))
}

/// Every undirected graph on `n` vertices with loops allowed.
pub fn all_undirected_graphs(n: usize) -> impl Iterator<Item = Adj> {
    let count = pairs(n).len() + n;
    (0u64..1 << count).map(move |mask| {
        let mut adj = simple_graph(n, mask & ((1 << pairs(n).len()) - 1));
        for v in 0..n {
            if mask >> (pairs(n).len() + v) & 1 == 1 {
                adj[v][v] = true;
            }
        }
        adj
    })
}

/// A random simple graph on `n` vertices with no isolated vertex.
pub fn random_graph_without_isolated(rng: &mut ChaCha8Rng, n: usize) -> Adj {
    loop {
        let p = rng.gen_range(0.15..0.6);
        let mut adj = vec![vec![false; n]; n];
        for (i, j) in pairs(n) {
            if rng.gen_bool(p) {
                adj[i][j] = true;
                adj[j][i] = true;
            }
        }
        if adj.iter().all(|row| row.iter().any(|&x| x)) {
            return adj;
        }
    }
}

pub fn has_isolated(adj: &Adj) -> bool {
    adj.iter().any(|row| row.iter().all(|&x| !x))
}

pub fn reachable(adj: &Adj, start: usize) -> Vec<bool> {
    let mut seen = vec![false; adj.len()];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for (u, &e) in adj[v].iter().enumerate() {
            if e && !seen[u] {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    seen
}

pub fn connected(adj: &Adj) -> bool {
    reachable(adj, 0).into_iter().all(|x| x)
}

/// BFS 2-coloring of an undirected graph.
pub fn two_coloring(adj: &Adj) -> Option<Vec<u8>> {
    let n = adj.len();
    let mut color: Vec<Option<u8>> = vec![None; n];
    for s in 0..n {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            let c = color[v].unwrap();
            for u in 0..n {
                if !adj[v][u] {
                    continue;
                }
                match color[u] {
                    None => {
                        color[u] = Some(1 - c);
                        queue.push_back(u);
                    }
                    Some(d) if d == c => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(color.into_iter().map(Option::unwrap).collect())
}

/// All-pairs shortest walk lengths by Floyd–Warshall; `None` is unreachable.
/// Entry `[u][w]` is the least `n` with a walk of `n` edges from `u` to `w`.
pub fn floyd_warshall(adj: &Adj) -> Vec<Vec<Option<u64>>> {
    let n = adj.len();
    let mut d = vec![vec![None; n]; n];
    for u in 0..n {
        d[u][u] = Some(0);
        for w in 0..n {
            // a one-edge walk u → w needs u ∈ F(w)
            if u != w && adj[w][u] {
                d[u][w] = Some(1);
            }
        }
    }
    for k in 0..n {
        for u in 0..n {
            for w in 0..n {
                if let (Some(a), Some(b)) = (d[u][k], d[k][w]) {
                    if d[u][w].is_none_or(|c| a + b < c) {
                        d[u][w] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

/// Start letters of every word `α₁…α_{n+1}` ending in `w` with
/// `αᵢ ∈ F(αᵢ₊₁)`, found by listing the words one by one.
pub fn walk_starts(adj: &Adj, w: usize, n: usize) -> Vec<bool> {
    fn extend(adj: &Adj, last: usize, remaining: usize, starts: &mut Vec<bool>) {
        if remaining == 0 {
            starts[last] = true;
            return;
        }
        for (prev, &e) in adj[last].iter().enumerate() {
            if e {
                extend(adj, prev, remaining - 1, starts);
            }
        }
    }
    let mut starts = vec![false; adj.len()];
    extend(adj, w, n, &mut starts);
    starts
}

/// Whether some closed walk of odd length passes through `v`, by search over
/// (vertex, parity) states with no length bound.
pub fn odd_closed_walk_dp(adj: &Adj, v: usize) -> bool {
    let n = adj.len();
    let mut seen = vec![[false; 2]; n];
    seen[v][0] = true;
    let mut queue = VecDeque::from([(v, 0usize)]);
    while let Some((x, parity)) = queue.pop_front() {
        for y in 0..n {
            if adj[x][y] && !seen[y][1 - parity] {
                seen[y][1 - parity] = true;
                queue.push_back((y, 1 - parity));
            }
        }
    }
    seen[v][1]
}

/// Vertex set of a color class.
pub fn color_class(coloring: &[u8], c: u8) -> Vec<usize> {
    (0..coloring.len()).filter(|&v| coloring[v] == c).collect()
}
