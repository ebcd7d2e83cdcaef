//! Counting identities for `k`-sets in 3-sparse graphs, as executable checks.
//!
//! Each check returns `Err` with a description when the identity fails on the
//! given input. Checks whose hypotheses do not hold return `Ok(false)`;
//! `Ok(true)` means the statement was applicable and held.

use serde::{Deserialize, Serialize};

use super::{enumerate_k_sets, KSetReport, SparsityError};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaViolation {
    pub lemma: String,
    pub sets: Vec<VertexSet>,
    pub detail: String,
}

type Check = Result<bool, LemmaViolation>;

fn fail(lemma: &str, sets: &[&VertexSet], detail: String) -> LemmaViolation {
    LemmaViolation {
        lemma: lemma.to_string(),
        sets: sets.iter().map(|s| (*s).clone()).collect(),
        detail,
    }
}

fn k_of(g: &Graph, x: &VertexSet) -> i64 {
    3 * x.len() as i64 - g.induced_edge_count(x) as i64
}

/// In a 5-regular graph `d(X, V \ X) = 2k - |X|`, so `|X| <= 2k` with
/// equality exactly for `X = V`.
pub fn boundary_identity(g: &Graph, r: &KSetReport) -> Check {
    if g.regular_degree() != Some(5) {
        return Ok(false);
    }
    let expected = 2 * r.k - r.size as i64;
    if r.boundary_degree as i64 != expected {
        return Err(fail(
            "boundary-identity",
            &[&r.set],
            format!("d(X, V-X) = {}, 2k - |X| = {expected}", r.boundary_degree),
        ));
    }
    let is_v = r.size == g.n();
    if (r.size as i64 > 2 * r.k) || ((r.size as i64 == 2 * r.k) != is_v) {
        return Err(fail(
            "boundary-size",
            &[&r.set],
            format!("|X| = {}, k = {}, X = V: {is_v}", r.size, r.k),
        ));
    }
    Ok(true)
}

/// A `k`-set with `|X| >= 4` and `6 <= k <= 9` in a 3-sparse graph has
/// induced minimum degree at least `9 - k`.
pub fn degree_bound(g: &Graph, r: &KSetReport) -> Check {
    if r.size < 4 || !(6..=9).contains(&r.k) {
        return Ok(false);
    }
    let min = g.induced_min_degree(&r.set) as i64;
    if min < 9 - r.k {
        return Err(fail(
            "degree-bound",
            &[&r.set],
            format!("k = {}, induced min degree {min}", r.k),
        ));
    }
    Ok(true)
}

/// Triangle-free 7-sets have `|X| <= 3` or `|X| >= 9`; triangle-free 8-sets
/// have `|X| <= 4` or `|X| >= 8`.
pub fn triangle_free_size(g: &Graph, r: &KSetReport) -> Check {
    let allowed = match r.k {
        7 => r.size <= 3 || r.size >= 9,
        8 => r.size <= 4 || r.size >= 8,
        _ => return Ok(false),
    };
    if !g.induced_subgraph(&r.set).0.is_triangle_free() {
        return Ok(false);
    }
    if !allowed {
        return Err(fail(
            "triangle-free-size",
            &[&r.set],
            format!("triangle-free {}-set of size {}", r.k, r.size),
        ));
    }
    Ok(true)
}

/// `i(X ∪ Y) + i(X ∩ Y) = i(X) + i(Y) + d(X, Y)` for any graph.
pub fn inclusion_exclusion(g: &Graph, x: &VertexSet, y: &VertexSet) -> Check {
    let lhs = g.induced_edge_count(&x.union(y)) + g.induced_edge_count(&x.intersection(y));
    let rhs = g.induced_edge_count(x) + g.induced_edge_count(y) + g.cross_edge_count(x, y);
    if lhs != rhs {
        return Err(fail(
            "inclusion-exclusion",
            &[x, y],
            format!("{lhs} != {rhs}"),
        ));
    }
    Ok(true)
}

/// Union and intersection statements for pairs of 6-, 7- and 8-sets in a
/// 3-sparse 5-regular graph.
pub fn union_pair(g: &Graph, x: &KSetReport, y: &KSetReport) -> Check {
    if g.regular_degree() != Some(5) {
        return Ok(false);
    }
    let meet = x.set.intersection(&y.set);
    if meet.is_empty() {
        return Ok(false);
    }
    let join = x.set.union(&y.set);
    let d = g.cross_edge_count(&x.set, &y.set) as i64;
    let lemma = format!("union-{}-{}", x.k.min(y.k), x.k.max(y.k));
    let err = |detail: String| Err(fail(&lemma, &[&x.set, &y.set], detail));
    match (x.k.min(y.k), x.k.max(y.k)) {
        (6, 6) => {
            if x.size < 4 || y.size < 4 {
                return Ok(false);
            }
            if meet.len() < 3 {
                // two copies of K_4 sharing an edge are the only exception
                let pair = meet.to_vec();
                let k4_pair = x.size == 4 && y.size == 4 && pair.len() == 2 && g.has_edge(pair[0], pair[1]);
                if k4_pair {
                    return Ok(true);
                }
                return err(format!("|X∩Y| = {}, |X| = {}, |Y| = {}", meet.len(), x.size, y.size));
            }
            let (m, n) = (k_of(g, &join), k_of(g, &meet));
            if m != 6 || n != 6 || d != 0 {
                return err(format!(
                    "|X∩Y| = {}, union {m}-set, intersection {n}-set, d = {d}",
                    meet.len()
                ));
            }
            Ok(true)
        }
        (lo, hi) if (7..=8).contains(&lo) && (7..=8).contains(&hi) => {
            let sum = lo + hi;
            if meet.len() >= 3 {
                let (m, n) = (k_of(g, &join), k_of(g, &meet));
                if m + n != sum - d || m < 6 || n < 6 || d > sum - 12 {
                    return err(format!("m = {m}, n = {n}, d = {d}, expected m + n = {sum} - d"));
                }
                return Ok(true);
            }
            let pair = meet.to_vec();
            if pair.len() == 2 && g.has_edge(pair[0], pair[1]) {
                let i = g.induced_edge_count(&join) as i64;
                let expected = 3 * join.len() as i64 - (sum - 5) + d;
                if i != expected || d > sum - 11 {
                    return err(format!("i(X∪Y) = {i}, expected {expected}, d = {d}"));
                }
                return Ok(true);
            }
            Ok(false)
        }
        _ => Ok(false),
    }
}

/// Totals from running every check over the `k`-sets of a graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaAudit {
    pub sets: usize,
    pub pairs: usize,
    /// Number of (check, input) combinations where the hypotheses held.
    pub applied: usize,
    pub violations: Vec<LemmaViolation>,
}

/// Runs the single-set checks on all `k`-sets with `k <= k_max` and
/// `|X| >= min_size`, and the pair checks on all pairs of them.
pub fn audit(g: &Graph, k_max: i64, min_size: usize) -> Result<LemmaAudit, SparsityError> {
    let sets = enumerate_k_sets(g, k_max, min_size)?;
    let mut out = LemmaAudit {
        sets: sets.len(),
        ..LemmaAudit::default()
    };
    let record = |c: Check, out: &mut LemmaAudit| match c {
        Ok(true) => out.applied += 1,
        Ok(false) => {}
        Err(v) => out.violations.push(v),
    };
    for r in &sets {
        record(boundary_identity(g, r), &mut out);
        record(degree_bound(g, r), &mut out);
        record(triangle_free_size(g, r), &mut out);
    }
    for (i, x) in sets.iter().enumerate() {
        for y in &sets[i + 1..] {
            out.pairs += 1;
            record(inclusion_exclusion(g, &x.set, &y.set), &mut out);
            record(union_pair(g, x, y), &mut out);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn k66_minus_is_clean() {
        let a = audit(&fixtures::k66_minus(), 9, 3).unwrap();
        assert!(a.violations.is_empty(), "{:?}", a.violations);
        assert!(a.applied > 0);
    }

    #[test]
    fn detects_a_broken_report() {
        let g = fixtures::k66_minus();
        let mut r = super::super::k_set_value(&g, &g.vertices());
        r.boundary_degree = 1;
        assert!(boundary_identity(&g, &r).is_err());
    }

    #[test]
    fn two_k4_sharing_an_edge() {
        let g = crate::graph::graph6::parse_graph6("K?`reYw\\eUVC").unwrap();
        let x = VertexSet::from_vertices(12, [0, 4, 7, 10]);
        let y = VertexSet::from_vertices(12, [0, 4, 8, 11]);
        let (rx, ry) = (super::super::k_set_value(&g, &x), super::super::k_set_value(&g, &y));
        assert_eq!((rx.k, ry.k), (6, 6));
        // the union is a 7-set and the intersection an edge
        assert_eq!(k_of(&g, &x.union(&y)), 7);
        assert_eq!(union_pair(&g, &rx, &ry), Ok(true));
    }
}
