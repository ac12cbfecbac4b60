//! Set families attached to a multifunction: neighbor and wall families,
//! duals, filter and ideal axioms, generated filters and leaf sets.
//!
//! Families are enumerated explicitly over the powerset, so every builder
//! refuses universes above [`FAMILY_CAP`] vertices.

use std::collections::HashSet;

use crate::analysis::{metric, Distance};
use crate::error::{Error, Result};
use crate::multifunction::MultiFunction;
use crate::setops::{preimage_complete, preimage_small};
use crate::vertex_set::{check_sizes, VertexSet};

/// Largest universe for which families are enumerated.
pub const FAMILY_CAP: usize = 16;

/// An explicit family of subsets, kept sorted by size then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetFamily {
    size: usize,
    members: Vec<VertexSet>,
}

impl SetFamily {
    pub fn new<I>(size: usize, members: I) -> Result<Self>
    where
        I: IntoIterator<Item = VertexSet>,
    {
        let mut out = Vec::new();
        for m in members {
            check_sizes(size, m.universe_size())?;
            out.push(m);
        }
        out.sort_by(VertexSet::canonical_cmp);
        out.dedup();
        Ok(Self { size, members: out })
    }

    pub fn empty(size: usize) -> Self {
        Self {
            size,
            members: Vec::new(),
        }
    }

    /// `P(V)`.
    pub fn powerset(size: usize) -> Result<Self> {
        Self::filtered(size, |_| Ok(true))
    }

    fn filtered(size: usize, mut keep: impl FnMut(&VertexSet) -> Result<bool>) -> Result<Self> {
        if size > FAMILY_CAP {
            return Err(Error::CapExceeded {
                what: "set family enumeration",
                requested: size,
                cap: FAMILY_CAP,
            });
        }
        let mut members = Vec::new();
        for u in VertexSet::all_subsets(size) {
            if keep(&u)? {
                members.push(u);
            }
        }
        members.sort_by(VertexSet::canonical_cmp);
        Ok(Self { size, members })
    }

    pub fn universe_size(&self) -> usize {
        self.size
    }

    pub fn members(&self) -> &[VertexSet] {
        &self.members
    }

    pub fn iter(&self) -> std::slice::Iter<'_, VertexSet> {
        self.members.iter()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, u: &VertexSet) -> bool {
        self.members
            .binary_search_by(|m| m.canonical_cmp(u))
            .is_ok()
    }

    /// Whether every member of `self` belongs to `other`.
    pub fn is_subfamily(&self, other: &SetFamily) -> bool {
        self.members.iter().all(|m| other.contains(m))
    }

    /// Members common to both families.
    pub fn intersection(&self, other: &SetFamily) -> Result<SetFamily> {
        check_sizes(self.size, other.size)?;
        Ok(SetFamily {
            size: self.size,
            members: self.members.iter().filter(|m| other.contains(m)).cloned().collect(),
        })
    }
}

impl<'a> IntoIterator for &'a SetFamily {
    type Item = &'a VertexSet;
    type IntoIter = std::slice::Iter<'a, VertexSet>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

/// Threshold for the cardinal-bounded families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CardBound {
    /// Strictly fewer than `k` vertices.
    Finite(usize),
    /// Always satisfied on a finite universe.
    Unbounded,
}

impl CardBound {
    fn admits(self, count: usize) -> bool {
        match self {
            CardBound::Finite(k) => count < k,
            CardBound::Unbounded => true,
        }
    }
}

/// `Neigh_A = {U | F_−(U) ⊆ A}`.
pub fn neigh_family(f: &MultiFunction, a: &VertexSet) -> Result<SetFamily> {
    f.check_set(a)?;
    SetFamily::filtered(f.size(), |u| Ok(preimage_complete(f, u)?.is_subset(a)))
}

/// `Wall_A = {U | A ⊆ F_+(U)}`.
pub fn wall_family(f: &MultiFunction, a: &VertexSet) -> Result<SetFamily> {
    f.check_set(a)?;
    SetFamily::filtered(f.size(), |u| Ok(a.is_subset(&preimage_small(f, u)?)))
}

/// `{U | |F_−(U)| < k}`.
pub fn neigh_card(f: &MultiFunction, k: CardBound) -> Result<SetFamily> {
    SetFamily::filtered(f.size(), |u| Ok(k.admits(preimage_complete(f, u)?.len())))
}

/// `{U | |F_+(U)ᶜ| < k}`.
pub fn wall_card(f: &MultiFunction, k: CardBound) -> Result<SetFamily> {
    SetFamily::filtered(f.size(), |u| Ok(k.admits(preimage_small(f, u)?.complement().len())))
}

/// Isolated sets, `Neigh_∅`.
pub fn isol(f: &MultiFunction) -> Result<SetFamily> {
    neigh_family(f, &VertexSet::empty(f.size()))
}

/// `Wall_V`.
pub fn build(f: &MultiFunction) -> Result<SetFamily> {
    wall_family(f, &VertexSet::full(f.size()))
}

/// `Φ^d = {A | Aᶜ ∈ Φ}`.
pub fn dual(fam: &SetFamily) -> SetFamily {
    let mut members: Vec<_> = fam.members.iter().map(VertexSet::complement).collect();
    members.sort_by(VertexSet::canonical_cmp);
    SetFamily {
        size: fam.size,
        members,
    }
}

fn require_nonempty(fam: &SetFamily) -> Result<()> {
    if fam.is_empty() {
        Err(Error::EmptyFamily)
    } else {
        Ok(())
    }
}

fn closed_under(fam: &SetFamily, op: impl Fn(&VertexSet, &VertexSet) -> VertexSet) -> bool {
    fam.iter().all(|a| fam.iter().all(|b| fam.contains(&op(a, b))))
}

fn union_of(a: &VertexSet, b: &VertexSet) -> VertexSet {
    a.union(b).expect("members share one universe")
}

fn intersection_of(a: &VertexSet, b: &VertexSet) -> VertexSet {
    a.intersection(b).expect("members share one universe")
}

/// Downward closed and closed under pairwise union.
pub fn is_ideal(fam: &SetFamily) -> Result<bool> {
    require_nonempty(fam)?;
    let downward = fam.iter().all(|m| {
        VertexSet::all_subsets(fam.size)
            .filter(|s| s.is_subset(m))
            .all(|s| fam.contains(&s))
    });
    Ok(downward && closed_under(fam, union_of))
}

/// Upward closed and closed under pairwise intersection.
pub fn is_filter(fam: &SetFamily) -> Result<bool> {
    require_nonempty(fam)?;
    let upward = fam.iter().all(|m| {
        VertexSet::all_subsets(fam.size)
            .filter(|s| m.is_subset(s))
            .all(|s| fam.contains(&s))
    });
    Ok(upward && closed_under(fam, intersection_of))
}

/// A filter without `∅`.
pub fn is_proper_filter(fam: &SetFamily) -> Result<bool> {
    Ok(is_filter(fam)? && !fam.contains(&VertexSet::empty(fam.size)))
}

/// Closed under intersection, and `U ∈ Φ`, `U ⊆ F_+(W)` imply `W ∈ Φ`.
pub fn is_fplus_filter(f: &MultiFunction, fam: &SetFamily) -> Result<bool> {
    require_nonempty(fam)?;
    check_sizes(f.size(), fam.size)?;
    if !closed_under(fam, intersection_of) {
        return Ok(false);
    }
    for w in VertexSet::all_subsets(fam.size) {
        if fam.contains(&w) {
            continue;
        }
        let small = preimage_small(f, &w)?;
        if fam.iter().any(|u| u.is_subset(&small)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `Filtr_Γ = {U | A₁ ∩ … ∩ Aₙ ⊆ F_+(U) for some n ≥ 1, Aᵢ ∈ Γ}`.
///
/// At least one generator is required in the intersection, so an empty `Γ`
/// generates the empty family.
pub fn generate_filtr(f: &MultiFunction, gens: &SetFamily) -> Result<SetFamily> {
    check_sizes(f.size(), gens.size)?;
    let meets = intersection_closure(gens);
    SetFamily::filtered(f.size(), |u| {
        let small = preimage_small(f, u)?;
        Ok(meets.iter().any(|m| m.is_subset(&small)))
    })
}

/// Every intersection of finitely many (at least one) generators.
fn intersection_closure(gens: &SetFamily) -> Vec<VertexSet> {
    let mut seen: HashSet<VertexSet> = HashSet::new();
    let mut frontier: Vec<VertexSet> = gens.members.clone();
    while let Some(m) = frontier.pop() {
        if !seen.insert(m.clone()) {
            continue;
        }
        for g in &gens.members {
            let next = intersection_of(&m, g);
            if !seen.contains(&next) {
                frontier.push(next);
            }
        }
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort_by(VertexSet::canonical_cmp);
    out
}

/// `Leaf_v = {w | F(w) = {v}}`.
pub fn leaf_set(f: &MultiFunction, v: usize) -> Result<VertexSet> {
    f.check_vertex(v)?;
    let target = VertexSet::singleton(f.size(), v)?;
    let mut out = VertexSet::empty(f.size());
    for (w, row) in f.rows().iter().enumerate() {
        if *row == target {
            out.insert(w);
        }
    }
    Ok(out)
}

/// Whether the family has members of arbitrarily small diameter.
///
/// Distances are integers, so this holds exactly when some member has
/// diameter 0, i.e. is empty or a singleton.
pub fn is_cauchy(f: &MultiFunction, fam: &SetFamily) -> Result<bool> {
    require_nonempty(fam)?;
    let d = metric(f)?;
    Ok(fam.iter().any(|m| {
        m.iter()
            .all(|u| m.iter().all(|w| d.get(u, w) == Distance::Finite(0)))
    }))
}

/// Independent sets of `F`, i.e. `{U | U ∩ F_−(U) = ∅}`.
pub fn ind_family(f: &MultiFunction) -> Result<SetFamily> {
    SetFamily::filtered(f.size(), |u| Ok(!preimage_complete(f, u)?.intersects(u)))
}
