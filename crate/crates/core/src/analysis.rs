//! Independent sets, cliques, connectedness, bipartiteness and the graph metric.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};
use crate::iterate::{closure, power_image};
use crate::multifunction::MultiFunction;
use crate::setops::preimage_complete;
use crate::vertex_set::VertexSet;

/// Two nonempty independent sides partitioning the universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub u: VertexSet,
    pub w: VertexSet,
}

/// A distance in `(V, d_F)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(u64),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<u64> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }

    /// Addition with `∞` absorbing.
    pub fn plus(self, other: Distance) -> Distance {
        match (self, other) {
            (Distance::Finite(a), Distance::Finite(b)) => Distance::Finite(a + b),
            _ => Distance::Infinite,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    size: usize,
    entries: Vec<Distance>,
}

impl DistanceMatrix {
    pub fn size(&self) -> usize {
        self.size
    }

    /// `d(u, w)`; panics when either vertex is out of range.
    pub fn get(&self, u: usize, w: usize) -> Distance {
        assert!(u < self.size && w < self.size, "vertex out of range");
        self.entries[u * self.size + w]
    }

    pub fn row(&self, u: usize) -> &[Distance] {
        &self.entries[u * self.size..(u + 1) * self.size]
    }
}

/// `U ∩ F_−(U) = ∅`.
pub fn is_independent(f: &MultiFunction, u: &VertexSet) -> Result<bool> {
    Ok(!preimage_complete(f, u)?.intersects(u))
}

/// `∀u, w ∈ U: u ∈ F(w)`, with `u = w` included.
///
/// Every vertex of a clique therefore carries a loop; for a loopless `F` only
/// the empty set qualifies.
pub fn is_clique(f: &MultiFunction, u: &VertexSet) -> Result<bool> {
    f.check_set(u)?;
    Ok(u.iter().all(|w| u.is_subset(f.image(w))))
}

/// Whether `closure(F, 1)` relates every pair.
pub fn is_connected(f: &MultiFunction) -> bool {
    let reach = closure(f, 1).expect("modulus 1 is nonzero");
    reach.rows().iter().all(VertexSet::is_full)
}

/// Classes of `u ∈ closure(F, 1)(v)`, ordered by smallest member.
pub fn components(f: &MultiFunction) -> Result<Vec<VertexSet>> {
    if !f.is_undirected() {
        return Err(Error::NotUndirected);
    }
    let reach = closure(f, 1)?;
    let mut seen = VertexSet::empty(f.size());
    let mut out = Vec::new();
    for v in 0..f.size() {
        if !seen.contains(v) {
            let class = reach.image(v).clone();
            seen.union_with(&class);
            out.push(class);
        }
    }
    Ok(out)
}

fn require_strict_simple(f: &MultiFunction, op: &'static str) -> Result<()> {
    if f.is_simple_graph() && f.is_strict() {
        Ok(())
    } else {
        Err(Error::Precondition(op))
    }
}

/// The sides `closure(F, 2)(v_c)` and their complements, one component at a
/// time, or `None` when some component is not bipartite.
pub fn bipartition(f: &MultiFunction) -> Result<Option<Bipartition>> {
    require_strict_simple(f, "bipartition needs a strict simple graph")?;
    let even = closure(f, 2)?;
    let n = f.size();
    let mut u = VertexSet::empty(n);
    let mut w = VertexSet::empty(n);
    for component in components(f)? {
        let v = component.first().expect("components are nonempty");
        u.union_with(even.image(v));
        w.union_with(&component.difference(even.image(v))?);
    }
    if u.is_empty() || w.is_empty() || !is_independent(f, &u)? || !is_independent(f, &w)? {
        return Ok(None);
    }
    Ok(Some(Bipartition { u, w }))
}

/// Bipartite iff even-length reachability splits every component.
pub fn is_bipartite_even_iteration(f: &MultiFunction) -> Result<bool> {
    require_strict_simple(f, "even-iteration test needs a strict simple graph")?;
    let even = closure(f, 2)?;
    Ok(components(f)?.iter().all(|c| {
        let v = c.first().expect("components are nonempty");
        even.image(v) != c
    }))
}

/// Whether `v ∈ F^{n∪}(v)` for some odd `n ≤ 3|V|`.
///
/// An odd closed walk through `v` exists at all iff the component of `v`
/// contains an odd cycle. That cycle has at most `|V|` edges and lies within
/// `|V|` steps of `v`, so the search length is enough.
pub fn has_odd_closed_walk(f: &MultiFunction, v: usize) -> Result<bool> {
    if !f.is_undirected() {
        return Err(Error::Precondition("odd closed walks need an undirected multifunction"));
    }
    f.check_vertex(v)?;
    let square = power_image(f, 2);
    let mut current = f.image(v).clone();
    let bound = 3 * f.size();
    let mut n = 1;
    while n <= bound {
        if current.contains(v) {
            return Ok(true);
        }
        current = crate::setops::image_union(&square, &current)?;
        n += 2;
    }
    Ok(false)
}

/// `d_F(u, w) = min{n | u ∈ F^{n∪}(w)}` by breadth-first search.
pub fn metric(f: &MultiFunction) -> Result<DistanceMatrix> {
    if !f.is_simple_graph() {
        return Err(Error::Precondition("metric needs a simple graph"));
    }
    let n = f.size();
    let mut entries = vec![Distance::Infinite; n * n];
    for w in 0..n {
        let row = &mut entries[w * n..(w + 1) * n];
        row[w] = Distance::Finite(0);
        let mut queue = VecDeque::from([w]);
        while let Some(a) = queue.pop_front() {
            let next = row[a].plus(Distance::Finite(1));
            for b in f.image(a) {
                if row[b] == Distance::Infinite {
                    row[b] = next;
                    queue.push_back(b);
                }
            }
        }
    }
    Ok(DistanceMatrix { size: n, entries })
}

/// `sup_{u,w∈M} d_F(u, w)`, zero for at most one member.
pub fn diameter(f: &MultiFunction, m: &VertexSet) -> Result<Distance> {
    f.check_set(m)?;
    let d = metric(f)?;
    Ok(m.iter()
        .flat_map(|u| m.iter().map(move |w| (u, w)))
        .map(|(u, w)| d.get(u, w))
        .max()
        .unwrap_or(Distance::Finite(0)))
}
