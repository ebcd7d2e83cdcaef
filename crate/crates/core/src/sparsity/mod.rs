//! Counting conditions: `d`-sparsity, `k`-sets, cores and closure.
//!
//! A graph is `d`-sparse when `i(X) <= d|X| - C(d+1, 2)` for every vertex set
//! with `|X| >= d`. Two independent tests are provided. [`is_d_sparse_brute`]
//! scans every subset and serves as the oracle. [`is_3_sparse`] is polynomial:
//! for every anchor triple `T` it tries to assign each edge to one of its
//! endpoints with capacity 1 on `T` and 3 elsewhere. By Hall's theorem this
//! succeeds iff `i(X) <= 3|X| - 2|X ∩ T|` for all `X`. With `X ⊇ T` that is
//! exactly the 3-sparsity count, and every other Hall inequality already
//! holds in a simple 3-sparse graph.

mod assignment;
mod ksets;
pub mod lemmas;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

pub use ksets::{
    closure, enumerate_k_sets, is_core, k_set_value, maximal_proper_cores, proper_cores,
    KSetReport, CORE_SEARCH_LIMIT,
};

/// Largest graph handled by the exhaustive subset scans.
pub const BRUTE_LIMIT: usize = 24;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SparsityError {
    #[error("dimension {0} outside the supported range 1..=4")]
    Dimension(usize),
    #[error("exhaustive search limited to {limit} vertices, graph has {n}")]
    TooLarge { n: usize, limit: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SparsityMethod {
    Brute,
    Flow,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SparsityVerdict {
    pub sparse: bool,
    /// A violating set whose vertices all have induced degree at least `d + 1`.
    pub witness: Option<VertexSet>,
    pub method: SparsityMethod,
}

/// `d|X| - C(d+1, 2)`; may be negative for small sets.
#[inline]
pub fn sparsity_bound(d: usize, size: usize) -> i64 {
    (d * size) as i64 - (d * (d + 1) / 2) as i64
}

fn check_dimension(d: usize) -> Result<(), SparsityError> {
    if (1..=4).contains(&d) {
        Ok(())
    } else {
        Err(SparsityError::Dimension(d))
    }
}

pub(crate) fn check_brute_size(g: &Graph) -> Result<(), SparsityError> {
    if g.n() > BRUTE_LIMIT {
        Err(SparsityError::TooLarge {
            n: g.n(),
            limit: BRUTE_LIMIT,
        })
    } else {
        Ok(())
    }
}

/// Exhaustive `d`-sparsity check over all subsets with `|X| >= d`.
pub fn is_d_sparse_brute(g: &Graph, d: usize) -> Result<SparsityVerdict, SparsityError> {
    check_dimension(d)?;
    check_brute_size(g)?;
    let rows = g.row_masks().expect("n within word size");
    let n = g.n();
    // Gray-code walk: each step toggles one vertex and updates i(X) in O(1).
    let mut mask = 0u64;
    let mut count: i64 = 0;
    for step in 1u64..(1u64 << n) {
        let bit = step.trailing_zeros() as usize;
        let flip = 1u64 << bit;
        if mask & flip == 0 {
            count += i64::from((rows[bit] & mask).count_ones());
            mask |= flip;
        } else {
            mask &= !flip;
            count -= i64::from((rows[bit] & mask).count_ones());
        }
        let size = mask.count_ones() as usize;
        if size >= d && count > sparsity_bound(d, size) {
            let witness = minimize_violator(g, &VertexSet::from_mask(n, mask), d);
            return Ok(SparsityVerdict {
                sparse: false,
                witness: Some(witness),
                method: SparsityMethod::Brute,
            });
        }
    }
    Ok(SparsityVerdict {
        sparse: true,
        witness: None,
        method: SparsityMethod::Brute,
    })
}

/// Polynomial 3-sparsity test by anchored edge assignment.
pub fn is_3_sparse(g: &Graph) -> SparsityVerdict {
    let witness = assignment::find_violation(g).map(|x| minimize_violator(g, &x, 3));
    SparsityVerdict {
        sparse: witness.is_none(),
        witness,
        method: SparsityMethod::Flow,
    }
}

/// Dispatches to the flow test for `d = 3` and to the brute oracle otherwise.
pub fn is_d_sparse(g: &Graph, d: usize) -> Result<SparsityVerdict, SparsityError> {
    if d == 3 {
        Ok(is_3_sparse(g))
    } else {
        is_d_sparse_brute(g, d)
    }
}

/// Sparse with exactly `d|V| - C(d+1, 2)` edges.
pub fn is_d_tight(g: &Graph, d: usize) -> Result<bool, SparsityError> {
    check_dimension(d)?;
    if g.edge_count() as i64 != sparsity_bound(d, g.n()) {
        return Ok(false);
    }
    Ok(is_d_sparse(g, d)?.sparse)
}

/// Strips vertices of induced degree at most `d` from a violating set.
///
/// Deleting such a vertex lowers `i(X)` by at most `d` while the bound drops
/// by exactly `d`, so the set keeps violating. Sets of size `d` never
/// violate, so the loop cannot shrink below `d + 1`.
pub fn minimize_violator(g: &Graph, x: &VertexSet, d: usize) -> VertexSet {
    let mut set = x.clone();
    debug_assert!(violates(g, &set, d));
    while let Some(v) = set
        .iter()
        .find(|&v| g.neighbors(v).intersection_len(&set) <= d)
    {
        set.remove(v);
    }
    debug_assert!(violates(g, &set, d));
    set
}

/// `|X| >= d` and `i(X) > d|X| - C(d+1, 2)`.
pub fn violates(g: &Graph, x: &VertexSet, d: usize) -> bool {
    x.len() >= d && g.induced_edge_count(x) as i64 > sparsity_bound(d, x.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{enumerate, fixtures};

    #[test]
    fn brute_examples() {
        let v = is_d_sparse_brute(&fixtures::complete(5), 3).unwrap();
        assert!(!v.sparse);
        assert_eq!(v.witness.unwrap(), VertexSet::full(5));
        assert!(is_d_sparse_brute(&fixtures::double_banana(), 3).unwrap().sparse);
        assert!(!is_d_sparse_brute(&fixtures::complete_bipartite(5, 5), 3).unwrap().sparse);
    }

    #[test]
    fn flow_examples() {
        assert!(is_3_sparse(&fixtures::k66_minus()).sparse);
        let k5 = is_3_sparse(&fixtures::complete(5));
        assert!(!k5.sparse);
        assert_eq!(k5.witness.unwrap(), VertexSet::full(5));
        assert!(is_3_sparse(&fixtures::two_sum_k5()).sparse);
        assert!(!is_3_sparse(&fixtures::complete_bipartite(5, 5)).sparse);
    }

    #[test]
    fn tightness_examples() {
        assert_eq!(is_d_tight(&fixtures::k66_minus(), 3), Ok(true));
        assert_eq!(is_d_tight(&fixtures::octahedron(), 3), Ok(true));
        let k4e = fixtures::complete(4)
            .without_edge(crate::graph::Edge::new(0, 1))
            .unwrap();
        assert_eq!(is_d_tight(&k4e, 3), Ok(false));
        assert_eq!(is_d_tight(&fixtures::complete(4), 3), Ok(true));
        assert_eq!(is_d_tight(&fixtures::complete(3), 2), Ok(true));
    }

    #[test]
    fn errors() {
        assert_eq!(
            is_d_sparse_brute(&fixtures::complete(3), 5),
            Err(SparsityError::Dimension(5))
        );
        assert_eq!(
            is_d_sparse_brute(&fixtures::cycle(25), 2),
            Err(SparsityError::TooLarge { n: 25, limit: 24 })
        );
    }

    #[test]
    fn witnesses_are_minimal_in_degree() {
        for d in 1..=4 {
            for g in enumerate::random_corpus(300, 3..=9, 11 + d as u64) {
                let v = is_d_sparse_brute(&g, d).unwrap();
                if let Some(w) = v.witness {
                    assert!(violates(&g, &w, d));
                    assert!(w.len() > d);
                    assert!(g.induced_min_degree(&w) > d);
                }
            }
        }
    }

    #[test]
    fn d1_sparse_is_forest() {
        for g in enumerate::random_corpus(300, 2..=9, 5) {
            let acyclic = g.edge_count() + components(&g) == g.n();
            assert_eq!(is_d_sparse_brute(&g, 1).unwrap().sparse, acyclic);
        }
    }

    fn components(g: &Graph) -> usize {
        let mut seen = VertexSet::empty(g.n());
        let mut c = 0;
        for v in 0..g.n() {
            if !seen.contains(v) {
                c += 1;
                seen = seen.union(&g.component_within(v, &g.vertices()));
            }
        }
        c
    }

    #[test]
    fn flow_agrees_with_brute_on_all_small_graphs() {
        for n in 0..=6 {
            for g in enumerate::all_graphs(n) {
                let flow = is_3_sparse(&g);
                let brute = is_d_sparse_brute(&g, 3).unwrap();
                assert_eq!(flow.sparse, brute.sparse, "{g:?}");
                if let Some(w) = flow.witness {
                    assert!(violates(&g, &w, 3));
                }
            }
        }
    }
}
