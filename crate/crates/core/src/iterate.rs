//! Integer powers and divisibility-indexed closures.
//!
//! `F^{0∪} = {·}`, `F^{n∪}(v) = F_∪(F^{(n−1)∪}(v))` for `n > 0`, and
//! `F^{n∪} = (F⁻¹)^{(−n)∪}` for `n < 0`. The closure `closure(F, m)` is the union
//! of `F^{(m·k)∪}` over all `k ≥ 0`, so it always contains the identity.

use crate::error::{Error, Result};
use crate::multifunction::MultiFunction;
use crate::setops::image_union;
use crate::vertex_set::VertexSet;

/// `(G ∘ H)(v) = G_∪(H(v))`, the composition under which powers add.
pub fn compose(g: &MultiFunction, h: &MultiFunction) -> Result<MultiFunction> {
    g.check_same_universe(h)?;
    let rows = h
        .rows()
        .iter()
        .map(|row| image_union(g, row))
        .collect::<Result<Vec<_>>>()?;
    MultiFunction::from_rows(&g.universe(), rows)
}

/// `F^{n∪}`, by repeated squaring.
pub fn power_image(f: &MultiFunction, n: i64) -> MultiFunction {
    let (mut base, mut exp) = if n < 0 {
        (f.invert(), n.unsigned_abs())
    } else {
        (f.clone(), n as u64)
    };
    let mut acc = MultiFunction::singleton(&f.universe());
    while exp > 0 {
        if exp & 1 == 1 {
            acc = compose(&base, &acc).expect("powers share one universe");
        }
        exp >>= 1;
        if exp > 0 {
            base = compose(&base, &base).expect("powers share one universe");
        }
    }
    acc
}

/// `F^n_∪(A) = ⋃_{a∈A} F^{n∪}(a)`.
pub fn power_image_set(f: &MultiFunction, n: i64, a: &VertexSet) -> Result<VertexSet> {
    f.check_set(a)?;
    image_union(&power_image(f, n), a)
}

/// `F^{n−} = (F⁻¹)^{n∪}`.
pub fn power_preimage(f: &MultiFunction, n: i64) -> MultiFunction {
    power_image(&f.invert(), n)
}

/// `⋃_{k≥0} F^{(m·k)∪}`.
///
/// Computed as the reflexive-transitive closure of `F^{m∪}` by a breadth-first
/// fixpoint from every vertex. A negative modulus is rewritten through
/// `closure(F, −m) = closure(F⁻¹, m)`.
pub fn closure(f: &MultiFunction, m: i64) -> Result<MultiFunction> {
    if m == 0 {
        return Err(Error::ZeroModulus);
    }
    let step = if m < 0 {
        power_image(&f.invert(), -m)
    } else {
        power_image(f, m)
    };
    let n = f.size();
    let rows = (0..n).map(|v| reach(&step, v)).collect();
    Ok(MultiFunction::from_rows_unchecked(n, rows))
}

/// `{v} ∪ G(v) ∪ G_∪(G(v)) ∪ …`
fn reach(step: &MultiFunction, v: usize) -> VertexSet {
    let n = step.size();
    let mut seen = VertexSet::empty(n);
    seen.insert(v);
    let mut stack = vec![v];
    while let Some(a) = stack.pop() {
        for u in step.image(a) {
            if !seen.contains(u) {
                seen.insert(u);
                stack.push(u);
            }
        }
    }
    seen
}

/// Pointwise containment `F ⊆ G`.
pub fn subset_mf(f: &MultiFunction, g: &MultiFunction) -> Result<bool> {
    f.is_subset(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vertex_set::VertexUniverse;

    fn p3() -> MultiFunction {
        MultiFunction::from_lists([vec![1], vec![0, 2], vec![1]]).unwrap()
    }

    fn c3() -> MultiFunction {
        MultiFunction::from_lists([vec![1, 2], vec![0, 2], vec![0, 1]]).unwrap()
    }

    fn c4() -> MultiFunction {
        MultiFunction::from_lists((0..4).map(|i| vec![(i + 1) % 4, (i + 3) % 4])).unwrap()
    }

    fn naive_power(f: &MultiFunction, n: u32) -> MultiFunction {
        let mut acc = MultiFunction::singleton(&f.universe());
        for _ in 0..n {
            let rows = acc.rows().iter().map(|r| image_union(f, r).unwrap()).collect();
            acc = MultiFunction::from_rows(&f.universe(), rows).unwrap();
        }
        acc
    }

    #[test]
    fn power_examples() {
        let u = VertexUniverse::new(4).unwrap();
        assert_eq!(power_image(&c4(), 0), MultiFunction::singleton(&u));
        assert_eq!(power_image(&c4(), 2).image(0).to_vec(), vec![0, 2]);
        let directed = MultiFunction::from_lists([vec![1], vec![2], vec![]]).unwrap();
        assert_eq!(power_image(&directed, -1), directed.invert());
    }

    #[test]
    fn squaring_matches_step_by_step_iteration() {
        let f = MultiFunction::from_lists([vec![1], vec![2, 3], vec![], vec![0, 4], vec![4]]).unwrap();
        for n in 0..20 {
            assert_eq!(power_image(&f, n as i64), naive_power(&f, n), "n = {n}");
        }
    }

    #[test]
    fn set_power_examples() {
        let f = c4();
        assert!(power_image_set(&f, 5, &VertexSet::empty(4)).unwrap().is_empty());
        let a = VertexSet::from_members(4, [0, 1]).unwrap();
        assert!(power_image_set(&f, 2, &a).unwrap().is_full());
        assert_eq!(power_image_set(&f, 0, &a).unwrap(), a);
        assert!(power_image_set(&f, 1, &VertexSet::empty(3)).is_err());
    }

    #[test]
    fn preimage_power_examples() {
        let directed = MultiFunction::from_lists([vec![1], vec![2], vec![0, 2]]).unwrap();
        assert_eq!(power_preimage(&directed, 1), directed.invert());
        for n in -3..=5 {
            assert_eq!(power_preimage(&c4(), n), power_image(&c4(), n));
        }
        assert_eq!(power_preimage(&directed, 0), MultiFunction::singleton(&directed.universe()));
    }

    #[test]
    fn closure_examples() {
        assert_eq!(closure(&c3(), 2).unwrap().image(0).to_vec(), vec![0, 1, 2]);
        assert_eq!(closure(&c4(), 2).unwrap().image(0).to_vec(), vec![0, 2]);
        assert_eq!(closure(&p3(), 1).unwrap().image(0).to_vec(), vec![0, 1, 2]);
        assert_eq!(closure(&p3(), 0), Err(Error::ZeroModulus));
    }

    #[test]
    fn negative_modulus_uses_the_inverse() {
        let chain = MultiFunction::from_lists([vec![], vec![0], vec![1]]).unwrap();
        assert_eq!(closure(&chain, -1).unwrap(), closure(&chain.invert(), 1).unwrap());
        assert_eq!(closure(&chain, 1).unwrap().image(2).to_vec(), vec![0, 1, 2]);
        assert_eq!(closure(&chain, -1).unwrap().image(2).to_vec(), vec![2]);
    }

    #[test]
    fn closure_is_the_union_of_multiples() {
        let f = MultiFunction::from_lists([vec![1], vec![2, 3], vec![], vec![0, 4], vec![4]]).unwrap();
        for m in 1..4 {
            let mut union = MultiFunction::trivial(&f.universe());
            for k in 0..=10 {
                union = union.union(&naive_power(&f, m * k)).unwrap();
            }
            assert_eq!(closure(&f, m as i64).unwrap(), union);
        }
    }

    #[test]
    fn subset_examples() {
        let f = p3();
        assert!(subset_mf(&f, &f).unwrap());
        assert!(subset_mf(&p3(), &c3()).unwrap());
        assert!(!subset_mf(&c3(), &p3()).unwrap());
        let strict = c4();
        let reach = closure(&strict, 1).unwrap();
        for n in 0..6 {
            assert!(subset_mf(&power_image(&strict, n), &reach).unwrap());
        }
    }
}
