//! Graphs as multifunctions: neighborhoods, edge extraction and selections.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::multifunction::MultiFunction;
use crate::vertex_set::{VertexSet, VertexUniverse};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    /// Unordered pairs of distinct vertices.
    Simple,
    /// Unordered pairs, loops allowed.
    Undirected,
    /// Undirected with every loop present.
    EverywhereloopUndirected,
    /// Arbitrary ordered pairs.
    Digraph,
    /// Ordered pairs without loops.
    SimpleDigraph,
    /// Ordered pairs containing the whole diagonal.
    EverywhereloopDigraph,
    /// Loopless and without an arc in both directions.
    Orgraph,
}

impl GraphKind {
    pub fn is_directed(self) -> bool {
        matches!(
            self,
            GraphKind::Digraph | GraphKind::SimpleDigraph | GraphKind::EverywhereloopDigraph | GraphKind::Orgraph
        )
    }
}

/// An edge list over a universe.
///
/// Undirected edges are stored once, smaller endpoint first. Directed edges
/// `(v, u)` are arcs from `v` to `u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeList {
    pub universe: VertexUniverse,
    pub directed: bool,
    pub edges: Vec<(usize, usize)>,
}

impl EdgeList {
    pub fn new(universe: VertexUniverse, directed: bool, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut out = Vec::new();
        for (a, b) in edges {
            universe.check_vertex(a)?;
            universe.check_vertex(b)?;
            out.push(if directed { (a, b) } else { (a.min(b), a.max(b)) });
        }
        Ok(Self {
            universe,
            directed,
            edges: out,
        })
    }

    fn has_loop(&self) -> bool {
        self.edges.iter().any(|&(a, b)| a == b)
    }

    fn loops(&self) -> BTreeSet<usize> {
        self.edges.iter().filter(|(a, b)| a == b).map(|&(a, _)| a).collect()
    }
}

fn violation(msg: impl Into<String>) -> Error {
    Error::KindViolation(msg.into())
}

/// The neighborhood multifunction of an undirected graph, or the
/// out-neighborhood `N⁺(v) = {u | (v, u) ∈ E}` of a directed one. The
/// in-neighborhood is its inverse.
pub fn from_graph(g: &EdgeList, kind: GraphKind) -> Result<MultiFunction> {
    if kind.is_directed() != g.directed {
        return Err(violation(format!(
            "{kind:?} needs a {} edge list",
            if kind.is_directed() { "directed" } else { "undirected" }
        )));
    }
    let n = g.universe.size();
    match kind {
        GraphKind::Simple => {
            if let Some(&(a, _)) = g.edges.iter().find(|(a, b)| a == b) {
                return Err(violation(format!("loop at {a} in a simple graph")));
            }
            let distinct: BTreeSet<_> = g.edges.iter().collect();
            if distinct.len() != g.edges.len() {
                return Err(violation("duplicate edge in a simple graph"));
            }
        }
        GraphKind::SimpleDigraph | GraphKind::Orgraph if g.has_loop() => {
            return Err(violation(format!("loop in a {kind:?}")));
        }
        GraphKind::EverywhereloopUndirected | GraphKind::EverywhereloopDigraph => {
            let loops = g.loops();
            if let Some(v) = (0..n).find(|v| !loops.contains(v)) {
                return Err(violation(format!("missing loop at {v}")));
            }
        }
        _ => {}
    }
    if kind == GraphKind::Orgraph {
        let arcs: BTreeSet<_> = g.edges.iter().copied().collect();
        if let Some(&(a, b)) = arcs.iter().find(|&&(a, b)| arcs.contains(&(b, a))) {
            return Err(violation(format!("arcs ({a},{b}) and ({b},{a}) in an orgraph")));
        }
    }

    let mut rows = vec![VertexSet::empty(n); n];
    for &(a, b) in &g.edges {
        rows[a].insert(b);
        if !g.directed {
            rows[b].insert(a);
        }
    }
    MultiFunction::from_rows(&g.universe, rows)
}

/// Edge list of `F`.
///
/// Directed: one arc `(v, u)` per `u ∈ F(v)`, so that `from_graph` with a
/// digraph kind gives back `F`. Undirected: the pairs `{u, v}` with
/// `u ∈ F(v)`, which requires `F = F⁻¹`.
pub fn to_graph(f: &MultiFunction, directed: bool) -> Result<EdgeList> {
    let universe = f.universe();
    if directed {
        let edges = (0..f.size()).flat_map(|v| f.image(v).iter().map(move |u| (v, u)));
        return EdgeList::new(universe, true, edges.collect::<Vec<_>>());
    }
    if !f.is_undirected() {
        return Err(Error::NotUndirected);
    }
    let edges: Vec<_> = (0..f.size())
        .flat_map(|v| f.image(v).iter().filter(move |&u| u >= v).map(move |u| (v, u)))
        .collect();
    EdgeList::new(universe, false, edges)
}

/// A choice of one endpoint for unordered pairs `{u, v}`, `u ≠ v`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Selection {
    choices: BTreeMap<(usize, usize), usize>,
}

impl Selection {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records `φ({u, v}) = chosen`.
    pub fn choose(&mut self, u: usize, v: usize, chosen: usize) -> Result<()> {
        if u == v || (chosen != u && chosen != v) {
            return Err(Error::InvalidSelection { u, v, chosen });
        }
        self.choices.insert((u.min(v), u.max(v)), chosen);
        Ok(())
    }

    pub fn get(&self, u: usize, v: usize) -> Option<usize> {
        self.choices.get(&(u.min(v), u.max(v))).copied()
    }

    /// Picks the smaller endpoint of every pair.
    pub fn min_picker(universe: &VertexUniverse) -> Self {
        Self::from_rule(universe, |u, _| u)
    }

    /// Picks the larger endpoint of every pair.
    pub fn max_picker(universe: &VertexUniverse) -> Self {
        Self::from_rule(universe, |_, v| v)
    }

    /// `rule(u, v)` with `u < v` must return `u` or `v`.
    pub fn from_rule(universe: &VertexUniverse, rule: impl Fn(usize, usize) -> usize) -> Self {
        let n = universe.size();
        let mut choices = BTreeMap::new();
        for u in 0..n {
            for v in u + 1..n {
                choices.insert((u, v), rule(u, v));
            }
        }
        Self { choices }
    }
}

/// The multiselection `φ̂(v) = {u | φ({u, v}) = v}`.
pub fn multiselection(s: &Selection, universe: &VertexUniverse) -> Result<MultiFunction> {
    let n = universe.size();
    let mut rows = vec![VertexSet::empty(n); n];
    for u in 0..n {
        for v in u + 1..n {
            let chosen = s.get(u, v).ok_or(Error::IncompleteSelection(u, v))?;
            match chosen {
                c if c == v => rows[v].insert(u),
                c if c == u => rows[u].insert(v),
                c => return Err(Error::InvalidSelection { u, v, chosen: c }),
            }
        }
    }
    if let Some(&(u, v)) = s.choices.keys().find(|&&(_, v)| v >= n) {
        return Err(Error::VertexOutOfRange { vertex: u.max(v), size: n });
    }
    MultiFunction::from_rows(universe, rows)
}

/// `F ∩ φ̂`, an orgraph multifunction.
pub fn orient(f: &MultiFunction, s: &Selection) -> Result<MultiFunction> {
    f.intersection(&multiselection(s, &f.universe())?)
}

/// Whether `∏_v F(v)` is nonempty, i.e. `F` is strict.
pub fn has_selection(f: &MultiFunction) -> bool {
    f.is_strict()
}
