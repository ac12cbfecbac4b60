//! Multifunctions `F: V ⇝ V` and their pointwise algebra.
//!
//! A multifunction assigns a (possibly empty) vertex set to every vertex of a
//! finite universe. Graphs, relations and every derived operator in this crate
//! are expressed as multifunctions.

use std::fmt;

use crate::error::{Error, Result};
use crate::vertex_set::{check_sizes, VertexSet, VertexUniverse};

/// Pointwise set operation for [`MultiFunction::combine`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetOp {
    Union,
    Intersection,
    Difference,
}

/// A total assignment `v ↦ F(v)` over one vertex universe.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiFunction {
    size: usize,
    rows: Vec<VertexSet>,
}

impl MultiFunction {
    /// Builds a multifunction from one row per vertex.
    pub fn from_rows(universe: &VertexUniverse, rows: Vec<VertexSet>) -> Result<Self> {
        check_sizes(universe.size(), rows.len())?;
        for row in &rows {
            universe.check_set(row)?;
        }
        Ok(Self {
            size: universe.size(),
            rows,
        })
    }

    /// Builds a multifunction from member lists, e.g. `[[1], [0, 2], [1]]`.
    pub fn from_lists<R, I>(lists: R) -> Result<Self>
    where
        R: IntoIterator<Item = I>,
        I: IntoIterator<Item = usize>,
    {
        let lists: Vec<Vec<usize>> = lists
            .into_iter()
            .map(|l| l.into_iter().collect())
            .collect();
        let universe = VertexUniverse::new(lists.len())?;
        let rows = lists
            .into_iter()
            .map(|l| VertexSet::from_members(universe.size(), l))
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(&universe, rows)
    }

    pub(crate) fn from_rows_unchecked(size: usize, rows: Vec<VertexSet>) -> Self {
        debug_assert_eq!(rows.len(), size);
        Self { size, rows }
    }

    /// Builds `F` from the predicate `u ∈ F(v) ⟺ related(v, u)`.
    pub fn from_fn(universe: &VertexUniverse, mut related: impl FnMut(usize, usize) -> bool) -> Self {
        let n = universe.size();
        let rows = (0..n)
            .map(|v| {
                let mut row = VertexSet::empty(n);
                for u in 0..n {
                    if related(v, u) {
                        row.insert(u);
                    }
                }
                row
            })
            .collect();
        Self { size: n, rows }
    }

    /// `const^S`: every vertex maps to `S`.
    pub fn constant(universe: &VertexUniverse, set: &VertexSet) -> Result<Self> {
        universe.check_set(set)?;
        Ok(Self {
            size: universe.size(),
            rows: vec![set.clone(); universe.size()],
        })
    }

    /// `const^∅`, the trivial multifunction.
    pub fn trivial(universe: &VertexUniverse) -> Self {
        Self::from_rows_unchecked(universe.size(), vec![universe.empty_set(); universe.size()])
    }

    /// `const^V`.
    pub fn complete(universe: &VertexUniverse) -> Self {
        Self::from_rows_unchecked(universe.size(), vec![universe.full_set(); universe.size()])
    }

    /// The singleton multifunction `{·}: v ↦ {v}`.
    pub fn singleton(universe: &VertexUniverse) -> Self {
        let n = universe.size();
        let rows = (0..n)
            .map(|v| VertexSet::singleton(n, v).expect("vertex in range"))
            .collect();
        Self { size: n, rows }
    }

    pub fn universe(&self) -> VertexUniverse {
        VertexUniverse::new(self.size).expect("multifunctions have nonempty universes")
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// `F(v)`. Panics if `v` is outside the universe.
    pub fn image(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    pub fn try_image(&self, v: usize) -> Result<&VertexSet> {
        self.rows.get(v).ok_or(Error::VertexOutOfRange {
            vertex: v,
            size: self.size,
        })
    }

    pub fn rows(&self) -> &[VertexSet] {
        &self.rows
    }

    /// `u ∈ F(v)`.
    pub fn relates(&self, v: usize, u: usize) -> bool {
        self.rows[v].contains(u)
    }

    pub(crate) fn check_same_universe(&self, other: &Self) -> Result<()> {
        check_sizes(self.size, other.size)
    }

    pub(crate) fn check_set(&self, set: &VertexSet) -> Result<()> {
        check_sizes(self.size, set.universe_size())
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.size {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                size: self.size,
            })
        }
    }

    /// `F⁻¹(y) = {x | y ∈ F(x)}`.
    pub fn invert(&self) -> Self {
        let mut rows = vec![VertexSet::empty(self.size); self.size];
        for (x, row) in self.rows.iter().enumerate() {
            for y in row {
                rows[y].insert(x);
            }
        }
        Self::from_rows_unchecked(self.size, rows)
    }

    /// The completion `F^c(x) = V − F(x)`.
    pub fn complement(&self) -> Self {
        Self::from_rows_unchecked(self.size, self.rows.iter().map(VertexSet::complement).collect())
    }

    pub fn combine(&self, other: &Self, op: SetOp) -> Result<Self> {
        self.check_same_universe(other)?;
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| {
                let mut out = a.clone();
                match op {
                    SetOp::Union => out.union_with(b),
                    SetOp::Intersection => out.intersect_with(b),
                    SetOp::Difference => out.difference_with(b),
                }
                out
            })
            .collect();
        Ok(Self::from_rows_unchecked(self.size, rows))
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.combine(other, SetOp::Union)
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.combine(other, SetOp::Intersection)
    }

    pub fn difference(&self, other: &Self) -> Result<Self> {
        self.combine(other, SetOp::Difference)
    }

    /// Pointwise containment `F ⊆ G`.
    pub fn is_subset(&self, other: &Self) -> Result<bool> {
        self.check_same_universe(other)?;
        Ok(self.rows.iter().zip(&other.rows).all(|(a, b)| a.is_subset(b)))
    }

    /// `D(F) = {x | F(x) ≠ ∅}`.
    pub fn domain(&self) -> VertexSet {
        let mut out = VertexSet::empty(self.size);
        for (x, row) in self.rows.iter().enumerate() {
            if !row.is_empty() {
                out.insert(x);
            }
        }
        out
    }

    /// The codomain `⋃ₓ F(x)`.
    pub fn codomain(&self) -> VertexSet {
        let mut out = VertexSet::empty(self.size);
        for row in &self.rows {
            out.union_with(row);
        }
        out
    }

    pub fn is_trivial(&self) -> bool {
        self.rows.iter().all(VertexSet::is_empty)
    }

    pub fn is_strict(&self) -> bool {
        self.rows.iter().all(|r| !r.is_empty())
    }

    pub fn is_undirected(&self) -> bool {
        *self == self.invert()
    }

    pub fn is_loopless(&self) -> bool {
        (0..self.size).all(|v| !self.relates(v, v))
    }

    pub fn is_simple_graph(&self) -> bool {
        self.is_loopless() && self.is_undirected()
    }

    /// Restriction of `F` to the vertices in `keep`, other rows emptied.
    pub fn restrict(&self, keep: &VertexSet) -> Result<Self> {
        self.check_set(keep)?;
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(v, r)| if keep.contains(v) { r.clone() } else { VertexSet::empty(self.size) })
            .collect();
        Ok(Self::from_rows_unchecked(self.size, rows))
    }

    pub fn classify(&self) -> PropertyReport {
        PropertyReport::of(self)
    }
}

impl fmt::Debug for MultiFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut map = f.debug_map();
        for (v, row) in self.rows.iter().enumerate() {
            map.entry(&v, row);
        }
        map.finish()
    }
}

/// The classification flags of a multifunction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PropertyReport {
    pub strict: bool,
    pub nontrivial: bool,
    pub undirected: bool,
    pub oriented: bool,
    pub total: bool,
    pub everywhereloop: bool,
    pub loopless: bool,
    pub simple_graph: bool,
    pub orgraph: bool,
    pub transitive: bool,
}

impl PropertyReport {
    fn of(f: &MultiFunction) -> Self {
        let n = f.size;
        let inverse = f.invert();
        let undirected = *f == inverse;
        let oriented = f
            .rows
            .iter()
            .zip(&inverse.rows)
            .all(|(a, b)| a.is_disjoint(b));
        let total = f.rows.iter().zip(&inverse.rows).all(|(a, b)| {
            let mut both = a.clone();
            both.union_with(b);
            both.is_full()
        });
        let everywhereloop = (0..n).all(|v| f.relates(v, v));
        let loopless = f.is_loopless();
        // u ∈ F(v) ∧ v ∈ F(w) ⇒ u ∈ F(w), i.e. F(v) ⊆ F(w) whenever v ∈ F(w).
        let transitive = (0..n).all(|w| f.rows[w].iter().all(|v| f.rows[v].is_subset(&f.rows[w])));
        Self {
            strict: f.is_strict(),
            nontrivial: !f.is_trivial(),
            undirected,
            oriented,
            total,
            everywhereloop,
            loopless,
            simple_graph: loopless && undirected,
            orgraph: loopless && oriented,
            transitive,
        }
    }

    /// `(name, value)` pairs in a fixed order.
    pub fn flags(&self) -> [(&'static str, bool); 10] {
        [
            ("strict", self.strict),
            ("nontrivial", self.nontrivial),
            ("undirected", self.undirected),
            ("oriented", self.oriented),
            ("total", self.total),
            ("everywhereloop", self.everywhereloop),
            ("loopless", self.loopless),
            ("simple_graph", self.simple_graph),
            ("orgraph", self.orgraph),
            ("transitive", self.transitive),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> MultiFunction {
        MultiFunction::from_lists([vec![1], vec![0, 2], vec![1]]).unwrap()
    }

    fn c3() -> MultiFunction {
        MultiFunction::from_lists([vec![1, 2], vec![0, 2], vec![0, 1]]).unwrap()
    }

    fn lists(f: &MultiFunction) -> Vec<Vec<usize>> {
        f.rows().iter().map(VertexSet::to_vec).collect()
    }

    #[test]
    fn invert_transposes_the_relation() {
        assert_eq!(p3().invert(), p3());
        let f = MultiFunction::from_lists([vec![1], vec![]]).unwrap();
        assert_eq!(lists(&f.invert()), vec![vec![], vec![0]]);
        let u = VertexUniverse::new(4).unwrap();
        assert_eq!(MultiFunction::trivial(&u).invert(), MultiFunction::trivial(&u));
    }

    #[test]
    fn completion_examples() {
        let u = VertexUniverse::new(3).unwrap();
        assert_eq!(MultiFunction::trivial(&u).complement(), MultiFunction::complete(&u));
        assert_eq!(lists(&p3().complement()), vec![vec![0, 2], vec![1], vec![0, 2]]);
        let u2 = VertexUniverse::new(2).unwrap();
        assert_eq!(lists(&MultiFunction::singleton(&u2).complement()), vec![vec![1], vec![0]]);
    }

    #[test]
    fn combine_examples() {
        let f = p3();
        let u = f.universe();
        assert_eq!(f.intersection(&MultiFunction::complete(&u)).unwrap(), f);
        let directed = MultiFunction::from_lists([vec![1], vec![2], vec![]]).unwrap();
        assert!(directed.union(&directed.invert()).unwrap().is_undirected());
        assert_eq!(f.difference(&MultiFunction::singleton(&u)).unwrap(), f);
        let other = MultiFunction::trivial(&VertexUniverse::new(4).unwrap());
        assert_eq!(
            f.union(&other),
            Err(Error::UniverseMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn constant_and_singleton() {
        let u = VertexUniverse::new(5).unwrap();
        let empty = MultiFunction::constant(&u, &u.empty_set()).unwrap();
        assert!(empty.rows().iter().all(VertexSet::is_empty));
        assert_eq!(MultiFunction::singleton(&u).image(3).to_vec(), vec![3]);
        let full = MultiFunction::constant(&u, &u.full_set()).unwrap().classify();
        assert!(full.total && full.nontrivial);
        assert!(MultiFunction::constant(&u, &VertexSet::empty(4)).is_err());
    }

    #[test]
    fn classify_examples() {
        let r = c3().classify();
        assert!(r.strict && r.undirected && r.loopless && r.simple_graph);
        assert!(!r.total && !r.transitive);

        let r = MultiFunction::trivial(&VertexUniverse::new(3).unwrap()).classify();
        assert!(!r.nontrivial && !r.strict);

        let r = MultiFunction::singleton(&VertexUniverse::new(3).unwrap()).classify();
        assert!(r.everywhereloop && r.undirected && r.transitive && r.strict);
    }

    #[test]
    fn domain_and_codomain() {
        let u = VertexUniverse::new(3).unwrap();
        assert!(MultiFunction::trivial(&u).domain().is_empty());
        assert_eq!(p3().codomain().to_vec(), vec![0, 1, 2]);
        let f = MultiFunction::from_lists([vec![1], vec![]]).unwrap();
        assert_eq!(f.domain().to_vec(), vec![0]);
    }
}
