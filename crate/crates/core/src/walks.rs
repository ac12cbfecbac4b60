//! Words over the vertex alphabet and walks in a multifunction.
//!
//! A word `α = α₁…α_{n+1}` is a walk with `n` edges in `F` when
//! `αᵢ ∈ F(αᵢ₊₁)` for every `i ≤ n`. The orientation is deliberate: each letter
//! lies in the image of its successor, so `u ∈ F(w)` is the one-edge walk `uw`.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::multifunction::MultiFunction;
use crate::setops::image_union;
use crate::vertex_set::VertexSet;

/// Default bound on the edge count accepted by [`enumerate_walks`].
pub const DEFAULT_WALK_CAP: usize = 12;

/// A finite word over vertex indices; the empty word is ε.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn epsilon() -> Self {
        Self(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    /// `concat(self, other)`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// Drops the last letter; `tail(ε) = ε`.
    pub fn tail(&self) -> Word {
        let mut letters = self.0.clone();
        letters.pop();
        Word(letters)
    }

    pub fn reverse(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// The `n`-th letter, 1-based; `None` stands for ε when `n` is past the end.
    pub fn letter(&self, n: usize) -> Option<usize> {
        n.checked_sub(1).and_then(|i| self.0.get(i).copied())
    }
}

impl From<Vec<usize>> for Word {
    fn from(letters: Vec<usize>) -> Self {
        Self(letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "ε");
        }
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// A `(from → to)` walk request with `length` edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WalkQuery {
    pub from: usize,
    pub to: usize,
    pub length: u64,
}

impl WalkQuery {
    pub fn new(from: usize, to: usize, length: u64) -> Self {
        Self { from, to, length }
    }
}

/// Whether `word` is a walk in `f`.
pub fn is_walk(f: &MultiFunction, word: &Word) -> Result<bool> {
    if word.is_empty() {
        return Err(Error::EmptyWord);
    }
    for &v in word.letters() {
        f.check_vertex(v)?;
    }
    Ok(word.0.windows(2).all(|pair| f.relates(pair[1], pair[0])))
}

/// All walks answering `query`, in lexicographic order, with the default cap.
pub fn enumerate_walks(f: &MultiFunction, query: WalkQuery) -> Result<Vec<Word>> {
    enumerate_walks_capped(f, query, DEFAULT_WALK_CAP)
}

/// All walks answering `query`, refusing edge counts above `cap`.
pub fn enumerate_walks_capped(f: &MultiFunction, query: WalkQuery, cap: usize) -> Result<Vec<Word>> {
    f.check_vertex(query.from)?;
    f.check_vertex(query.to)?;
    let length = usize::try_from(query.length)
        .ok()
        .filter(|&l| l <= cap)
        .ok_or(Error::CapExceeded {
            what: "walk enumeration",
            requested: usize::try_from(query.length).unwrap_or(usize::MAX),
            cap,
        })?;

    // successor x of letter a must satisfy a ∈ F(x)
    let successors = f.invert();
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(length + 1);
    word.push(query.from);
    extend_walks(&successors, length, query.to, &mut word, &mut out);
    Ok(out)
}

fn extend_walks(successors: &MultiFunction, length: usize, to: usize, word: &mut Vec<usize>, out: &mut Vec<Word>) {
    let last = *word.last().expect("word starts nonempty");
    if word.len() == length + 1 {
        if last == to {
            out.push(Word(word.clone()));
        }
        return;
    }
    for next in successors.image(last) {
        word.push(next);
        extend_walks(successors, length, to, word, out);
        word.pop();
    }
}

/// Decides whether a `(from → to)` walk with `length` edges exists.
///
/// Iterates `S₀ = {to}`, `Sₖ₊₁ = F_∪(Sₖ)` and tests `from ∈ S_length`; the
/// sequence is eventually periodic, so arbitrarily large lengths are answered
/// after at most `2^|V|` distinct states.
pub fn walk_exists(f: &MultiFunction, query: WalkQuery) -> Result<bool> {
    f.check_vertex(query.from)?;
    f.check_vertex(query.to)?;
    let mut current = VertexSet::singleton(f.size(), query.to)?;
    let mut seen: HashMap<VertexSet, u64> = HashMap::new();
    let mut step = 0u64;
    while step < query.length {
        if let Some(&first) = seen.get(&current) {
            let period = step - first;
            let remaining = (query.length - step) % period;
            for _ in 0..remaining {
                current = image_union(f, &current)?;
            }
            return Ok(current.contains(query.from));
        }
        seen.insert(current.clone(), step);
        current = image_union(f, &current)?;
        step += 1;
    }
    Ok(current.contains(query.from))
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

    /// Every word of `length + 1` letters, filtered by `is_walk`.
    fn brute_force(f: &MultiFunction, q: WalkQuery) -> Vec<Word> {
        let n = f.size();
        let letters = q.length as u32 + 1;
        let mut out = Vec::new();
        for code in 0..n.pow(letters) {
            let mut c = code;
            let mut w = vec![0; letters as usize];
            for slot in w.iter_mut().rev() {
                *slot = c % n;
                c /= n;
            }
            let word = Word(w);
            if word.letter(1) == Some(q.from)
                && word.letter(letters as usize) == Some(q.to)
                && is_walk(f, &word).unwrap()
            {
                out.push(word);
            }
        }
        out
    }

    #[test]
    fn word_operations() {
        let w = Word(vec![0, 1, 2]);
        assert_eq!(w.reverse(), Word(vec![2, 1, 0]));
        assert_eq!(w.tail(), Word(vec![0, 1]));
        assert_eq!(Word(vec![0, 1]).tail().concat(&Word(vec![1, 2])), w);
        assert_eq!(Word::epsilon().tail(), Word::epsilon());
        assert_eq!(Word::epsilon().reverse(), Word::epsilon());
        assert_eq!(w.letter(1), Some(0));
        assert_eq!(w.letter(3), Some(2));
        assert_eq!(w.letter(4), None);
        assert_eq!(w.letter(0), None);
    }

    #[test]
    fn walk_predicate() {
        let f = p3();
        for v in 0..3 {
            assert!(is_walk(&f, &Word(vec![v])).unwrap());
        }
        assert!(is_walk(&f, &Word(vec![0, 1, 2])).unwrap());
        assert!(!is_walk(&f, &Word(vec![0, 2])).unwrap());
        assert_eq!(is_walk(&f, &Word::epsilon()), Err(Error::EmptyWord));
    }

    #[test]
    fn predicate_follows_the_reversed_orientation() {
        // 0 ∈ F(1) only: the one-edge walk is [0, 1], not [1, 0]
        let f = MultiFunction::from_lists([vec![], vec![0]]).unwrap();
        assert!(is_walk(&f, &Word(vec![0, 1])).unwrap());
        assert!(!is_walk(&f, &Word(vec![1, 0])).unwrap());
    }

    #[test]
    fn enumeration_examples() {
        let walks = enumerate_walks(&c3(), WalkQuery::new(0, 0, 3)).unwrap();
        assert_eq!(walks, vec![Word(vec![0, 1, 2, 0]), Word(vec![0, 2, 1, 0])]);
        assert_eq!(walks, brute_force(&c3(), WalkQuery::new(0, 0, 3)));
        for u in 0..3 {
            assert_eq!(enumerate_walks(&p3(), WalkQuery::new(u, u, 0)).unwrap(), vec![Word(vec![u])]);
        }
        assert!(enumerate_walks(&p3(), WalkQuery::new(0, 2, 1)).unwrap().is_empty());
    }

    #[test]
    fn enumeration_matches_word_scan() {
        let f = MultiFunction::from_lists([vec![1, 3], vec![1, 2], vec![0], vec![0, 2]]).unwrap();
        for len in 0..5 {
            for u in 0..4 {
                for w in 0..4 {
                    let q = WalkQuery::new(u, w, len);
                    assert_eq!(enumerate_walks(&f, q).unwrap(), brute_force(&f, q));
                }
            }
        }
    }

    #[test]
    fn enumeration_cap() {
        let err = enumerate_walks(&p3(), WalkQuery::new(0, 0, 13)).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { cap: 12, requested: 13, .. }));
        assert!(enumerate_walks_capped(&p3(), WalkQuery::new(0, 0, 13), 14).is_ok());
        assert!(enumerate_walks(&p3(), WalkQuery::new(0, 3, 1)).is_err());
    }

    #[test]
    fn existence_examples() {
        let f = p3();
        assert!(walk_exists(&f, WalkQuery::new(0, 2, 2)).unwrap());
        assert!(!walk_exists(&f, WalkQuery::new(0, 2, 3)).unwrap());
        for u in 0..3 {
            assert!(walk_exists(&f, WalkQuery::new(u, u, 0)).unwrap());
        }
    }

    #[test]
    fn existence_handles_huge_lengths() {
        let f = p3();
        assert!(walk_exists(&f, WalkQuery::new(0, 2, 1_000_000_000_000)).unwrap());
        assert!(!walk_exists(&f, WalkQuery::new(0, 2, 1_000_000_000_001)).unwrap());
        let c3 = c3();
        assert!(walk_exists(&c3, WalkQuery::new(0, 0, u64::MAX)).unwrap());
        // a directed chain dies out
        let chain = MultiFunction::from_lists([vec![], vec![0], vec![1]]).unwrap();
        assert!(walk_exists(&chain, WalkQuery::new(0, 2, 2)).unwrap());
        assert!(!walk_exists(&chain, WalkQuery::new(0, 2, 1 << 40)).unwrap());
    }

    #[test]
    fn existence_agrees_with_enumeration() {
        let f = MultiFunction::from_lists([vec![1, 3], vec![1, 2], vec![0], vec![0, 2]]).unwrap();
        for len in 0..8 {
            for u in 0..4 {
                for w in 0..4 {
                    let q = WalkQuery::new(u, w, len);
                    assert_eq!(walk_exists(&f, q).unwrap(), !enumerate_walks(&f, q).unwrap().is_empty());
                }
            }
        }
    }
}
