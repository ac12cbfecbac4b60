//! Vertex universes and dense bit-indexed vertex sets.
//!
//! Every vertex is a dense index `0..size`. A [`VertexSet`] stores one bit per
//! vertex; sets over universes of up to 128 vertices live inline without a heap
//! allocation, which keeps exhaustive enumeration over small universes cheap.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use smallvec::SmallVec;

use crate::error::{Error, Result};

const BITS: usize = 64;

fn block_count(size: usize) -> usize {
    size.div_ceil(BITS)
}

/// A finite, nonempty vertex universe `{0, .., size - 1}`.
///
/// An optional name table is carried for display only; two universes are equal
/// whenever their sizes agree.
#[derive(Clone)]
pub struct VertexUniverse {
    size: usize,
    names: Option<Arc<[String]>>,
}

impl VertexUniverse {
    pub fn new(size: usize) -> Result<Self> {
        if size == 0 {
            return Err(Error::EmptyUniverse);
        }
        Ok(Self { size, names: None })
    }

    pub fn with_names<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        Ok(Self {
            size: names.len(),
            names: Some(names.into()),
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Display name of `v`; falls back to the index.
    pub fn name(&self, v: usize) -> String {
        match &self.names {
            Some(names) if v < names.len() => names[v].clone(),
            _ => v.to_string(),
        }
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::empty(self.size)
    }

    pub fn full_set(&self) -> VertexSet {
        VertexSet::full(self.size)
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.size {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                size: self.size,
            })
        }
    }

    pub(crate) fn check_set(&self, set: &VertexSet) -> Result<()> {
        check_sizes(self.size, set.universe_size())
    }
}

impl PartialEq for VertexUniverse {
    fn eq(&self, other: &Self) -> bool {
        self.size == other.size
    }
}

impl Eq for VertexUniverse {}

impl fmt::Debug for VertexUniverse {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VertexUniverse({})", self.size)
    }
}

pub(crate) fn check_sizes(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::UniverseMismatch { left, right })
    }
}

/// A subset of a vertex universe.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    size: usize,
    blocks: SmallVec<[u64; 2]>,
}

impl VertexSet {
    pub fn empty(size: usize) -> Self {
        Self {
            size,
            blocks: SmallVec::from_elem(0, block_count(size)),
        }
    }

    pub fn full(size: usize) -> Self {
        let mut set = Self {
            size,
            blocks: SmallVec::from_elem(!0, block_count(size)),
        };
        set.trim();
        set
    }

    pub fn singleton(size: usize, v: usize) -> Result<Self> {
        let mut set = Self::empty(size);
        set.try_insert(v)?;
        Ok(set)
    }

    /// Builds a set from member indices, rejecting out-of-range vertices.
    pub fn from_members<I>(size: usize, members: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut set = Self::empty(size);
        for v in members {
            set.try_insert(v)?;
        }
        Ok(set)
    }

    /// Builds a set from the low `size` bits of `mask` (bit `i` is vertex `i`).
    pub fn from_mask(size: usize, mask: u64) -> Self {
        let mut set = Self::empty(size);
        if let Some(first) = set.blocks.first_mut() {
            *first = mask;
        }
        set.trim();
        set
    }

    /// The low 64 bits as a mask; exact whenever the universe has ≤ 64 vertices.
    pub fn to_mask(&self) -> u64 {
        self.blocks.first().copied().unwrap_or(0)
    }

    pub fn universe_size(&self) -> usize {
        self.size
    }

    fn trim(&mut self) {
        let rem = self.size % BITS;
        if rem != 0 {
            if let Some(last) = self.blocks.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.size && self.blocks[v / BITS] & (1 << (v % BITS)) != 0
    }

    pub fn try_insert(&mut self, v: usize) -> Result<()> {
        if v >= self.size {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                size: self.size,
            });
        }
        self.blocks[v / BITS] |= 1 << (v % BITS);
        Ok(())
    }

    /// Inserts `v`. Panics if `v` is outside the universe.
    pub fn insert(&mut self, v: usize) {
        assert!(v < self.size, "vertex {v} outside universe of {}", self.size);
        self.blocks[v / BITS] |= 1 << (v % BITS);
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.size {
            self.blocks[v / BITS] &= !(1 << (v % BITS));
        }
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn is_full(&self) -> bool {
        *self == Self::full(self.size)
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            blocks: &self.blocks,
            index: 0,
            current: self.blocks.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn complement(&self) -> Self {
        let mut out = self.clone();
        for b in out.blocks.iter_mut() {
            *b = !*b;
        }
        out.trim();
        out
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Result<Self> {
        check_sizes(self.size, other.size)?;
        let mut out = self.clone();
        for (a, &b) in out.blocks.iter_mut().zip(other.blocks.iter()) {
            *a = f(*a, b);
        }
        Ok(out)
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a & !b)
    }

    /// In-place union. Panics on a universe mismatch; callers check sizes first.
    pub(crate) fn union_with(&mut self, other: &Self) {
        debug_assert_eq!(self.size, other.size);
        for (a, &b) in self.blocks.iter_mut().zip(other.blocks.iter()) {
            *a |= b;
        }
    }

    pub(crate) fn intersect_with(&mut self, other: &Self) {
        debug_assert_eq!(self.size, other.size);
        for (a, &b) in self.blocks.iter_mut().zip(other.blocks.iter()) {
            *a &= b;
        }
    }

    pub(crate) fn difference_with(&mut self, other: &Self) {
        debug_assert_eq!(self.size, other.size);
        for (a, &b) in self.blocks.iter_mut().zip(other.blocks.iter()) {
            *a &= !b;
        }
    }

    /// `self ⊆ other`; sets from different universes are never comparable.
    pub fn is_subset(&self, other: &Self) -> bool {
        self.size == other.size
            && self
                .blocks
                .iter()
                .zip(other.blocks.iter())
                .all(|(&a, &b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.blocks
            .iter()
            .zip(other.blocks.iter())
            .all(|(&a, &b)| a & b == 0)
    }

    pub fn intersects(&self, other: &Self) -> bool {
        !self.is_disjoint(other)
    }

    /// Canonical family order: by cardinality, then lexicographically by
    /// the ascending member list.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.iter().cmp(other.iter()))
            .then_with(|| self.size.cmp(&other.size))
    }

    /// All subsets of a universe of `size ≤ 63` vertices, in mask order.
    pub fn all_subsets(size: usize) -> impl Iterator<Item = VertexSet> {
        assert!(size < 64, "subset enumeration needs fewer than 64 vertices");
        (0..(1u64 << size)).map(move |m| VertexSet::from_mask(size, m))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

pub struct Iter<'a> {
    blocks: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * BITS + bit);
            }
            self.index += 1;
            if self.index >= self.blocks.len() {
                return None;
            }
            self.current = self.blocks[self.index];
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}
