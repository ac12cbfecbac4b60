//! Images and preimages of vertex sets under a multifunction.
//!
//! | operator            | definition                    |
//! |---------------------|-------------------------------|
//! | `F_∪(A)`            | `⋃_{a∈A} F(a)`                |
//! | `F_∩(A)`, `A ≠ ∅`   | `⋂_{a∈A} F(a)`                |
//! | `F_−(B)`            | `{x | F(x) ∩ B ≠ ∅}`          |
//! | `F_+(B)`            | `{x | F(x) ⊆ B}`              |
//! | `∂(W)`              | `W ∩ F_−(Wᶜ)`                 |
//!
//! On a finite universe `∂(V) = ∅`, so every multifunction is amenable; no
//! separate predicate is provided for that.

use crate::error::{Error, Result};
use crate::multifunction::MultiFunction;
use crate::vertex_set::VertexSet;

/// The ∪-image `F_∪(A)`.
pub fn image_union(f: &MultiFunction, a: &VertexSet) -> Result<VertexSet> {
    f.check_set(a)?;
    let mut out = VertexSet::empty(f.size());
    for v in a {
        out.union_with(f.image(v));
    }
    Ok(out)
}

/// The ∩-image `F_∩(A)`; rejects `A = ∅`.
pub fn image_intersect(f: &MultiFunction, a: &VertexSet) -> Result<VertexSet> {
    f.check_set(a)?;
    let mut members = a.iter();
    let first = members.next().ok_or(Error::EmptyArgument("image_intersect"))?;
    let mut out = f.image(first).clone();
    for v in members {
        out.intersect_with(f.image(v));
    }
    Ok(out)
}

/// The complete preimage `F_−(B)`.
pub fn preimage_complete(f: &MultiFunction, b: &VertexSet) -> Result<VertexSet> {
    f.check_set(b)?;
    let mut out = VertexSet::empty(f.size());
    for (x, row) in f.rows().iter().enumerate() {
        if row.intersects(b) {
            out.insert(x);
        }
    }
    Ok(out)
}

/// The small preimage `F_+(B)`.
pub fn preimage_small(f: &MultiFunction, b: &VertexSet) -> Result<VertexSet> {
    f.check_set(b)?;
    let mut out = VertexSet::empty(f.size());
    for (x, row) in f.rows().iter().enumerate() {
        if row.is_subset(b) {
            out.insert(x);
        }
    }
    Ok(out)
}

/// The boundary `W ∩ F_−(Wᶜ)`.
pub fn boundary(f: &MultiFunction, w: &VertexSet) -> Result<VertexSet> {
    let mut out = preimage_complete(f, &w.complement())?;
    out.intersect_with(w);
    Ok(out)
}
