//! Reducible moves on 3-sparse graphs, admissibility, blockers, and the
//! certificate pipeline for `R_3`-independence.

mod bounded;
mod certificate;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, Vertex, VertexSet};
use crate::moves::{contract, ContractionKind, ContractionSpec};
use crate::sparsity::{enumerate_k_sets, is_3_sparse, is_core, KSetReport, SparsityError};

pub use bounded::{bounded_degree_independent, BoundedDegree, BoundedDegreeRule};
pub use certificate::{
    certify_independent, verify_certificate, Base, BaseRule, Certificate, CertifyError, Location,
    Step, StepMove, StepRule, VerifyFailure,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("{0:?} is not a reducible edge or vertex-pair")]
    NotReducible((Vertex, Vertex)),
    #[error(transparent)]
    Sparsity(#[from] SparsityError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoreMoveError {
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is not 5-regular")]
    NotFiveRegular,
    #[error("graph is not 3-sparse")]
    NotSparse,
    #[error("graph is K_6,6 minus a perfect matching")]
    K66Minus,
    #[error("vertex set is not a proper core")]
    NotAProperCore,
}

/// A witness for non-admissibility: a `k`-set containing both endpoints,
/// with the clause of the characterisation it satisfies.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Blocker {
    pub set: VertexSet,
    pub k: i64,
    /// `"1(a)"`, `"2(b)"`, ...: triangle or common-neighbour count, then case.
    pub clause: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionMove {
    pub kind: ContractionKind,
    pub target: (Vertex, Vertex),
    /// Triangles on the edge, or common neighbours of the pair.
    pub triangles_or_common: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub admissible: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub blocker: Option<Blocker>,
}

impl ReductionMove {
    pub fn contraction(&self) -> ContractionSpec {
        ContractionSpec {
            kind: self.kind,
            pair: self.target,
        }
    }

    pub fn crosses(&self, x: &VertexSet) -> bool {
        x.contains(self.target.0) != x.contains(self.target.1)
    }
}

/// Edges lying in one or two triangles, in lexicographic order.
pub fn reducible_edges(g: &Graph) -> Vec<ReductionMove> {
    g.edges()
        .iter()
        .filter_map(|e| {
            let t = g.common_neighbors(e.u(), e.v()).len();
            (1..=2).contains(&t).then(|| ReductionMove {
                kind: ContractionKind::Edge,
                target: (e.u(), e.v()),
                triangles_or_common: t,
                admissible: None,
                blocker: None,
            })
        })
        .collect()
}

/// Non-adjacent pairs with one to three common neighbours, in
/// lexicographic order.
pub fn reducible_pairs(g: &Graph) -> Vec<ReductionMove> {
    let mut out = Vec::new();
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if g.has_edge(u, v) {
                continue;
            }
            let c = g.common_neighbors(u, v).len();
            if (1..=3).contains(&c) {
                out.push(ReductionMove {
                    kind: ContractionKind::Spider,
                    target: (u, v),
                    triangles_or_common: c,
                    admissible: None,
                    blocker: None,
                });
            }
        }
    }
    out
}

/// Edges and pairs together, ordered by endpoints.
pub fn reducible_moves(g: &Graph) -> Vec<ReductionMove> {
    let mut all = reducible_edges(g);
    all.extend(reducible_pairs(g));
    all.sort_by_key(|m| m.target);
    all
}

fn check_reducible(g: &Graph, mv: &ReductionMove) -> Result<(), ReductionError> {
    let (u, v) = mv.target;
    let ok = u < v
        && v < g.n()
        && match mv.kind {
            ContractionKind::Edge => {
                g.has_edge(u, v) && (1..=2).contains(&g.common_neighbors(u, v).len())
            }
            ContractionKind::Spider => {
                !g.has_edge(u, v) && (1..=3).contains(&g.common_neighbors(u, v).len())
            }
        };
    if ok {
        Ok(())
    } else {
        Err(ReductionError::NotReducible(mv.target))
    }
}

/// The contraction is 3-sparse.
pub fn is_admissible(g: &Graph, mv: &ReductionMove) -> Result<bool, ReductionError> {
    check_reducible(g, mv)?;
    let h = contract(g, &mv.contraction()).expect("reducible move contracts");
    Ok(is_3_sparse(&h).sparse)
}

/// First set in (size, lexicographic) order with `|X| >= 6`, both endpoints
/// inside, and `k` plus excluded-vertex conditions matching a clause.
pub fn find_blocker(g: &Graph, mv: &ReductionMove) -> Result<Option<Blocker>, ReductionError> {
    Ok(find_blockers(g, std::slice::from_ref(mv))?.remove(0))
}

/// [`find_blocker`] for several moves, sharing one `k`-set enumeration.
pub fn find_blockers(
    g: &Graph,
    moves: &[ReductionMove],
) -> Result<Vec<Option<Blocker>>, ReductionError> {
    for mv in moves {
        check_reducible(g, mv)?;
    }
    if moves.is_empty() {
        return Ok(Vec::new());
    }
    let sets = enumerate_k_sets(g, 8, 6)?;
    Ok(moves.iter().map(|mv| match_blocker(g, mv, &sets)).collect())
}

fn match_blocker(g: &Graph, mv: &ReductionMove, sets: &[KSetReport]) -> Option<Blocker> {
    let (u, v) = mv.target;
    let common = g.common_neighbors(u, v);
    let t = common.len();
    for r in sets {
        if !(r.set.contains(u) && r.set.contains(v)) {
            continue;
        }
        let inside = common.intersection_len(&r.set);
        // contraction inside X removes 1 + inside (edge) or inside (pair) edges
        let lost = inside as i64 + i64::from(mv.kind == ContractionKind::Edge);
        if r.k + lost > 8 {
            continue;
        }
        let case = match r.k {
            6 => "a",
            7 => "b",
            8 => "c",
            _ => continue,
        };
        return Some(Blocker {
            set: r.set.clone(),
            k: r.k,
            clause: format!("{t}({case})"),
        });
    }
    None
}

/// Fills in `admissible` and, when non-admissible and the graph is small
/// enough, `blocker`.
pub fn evaluate(g: &Graph, mut mv: ReductionMove) -> Result<ReductionMove, ReductionError> {
    let ok = is_admissible(g, &mv)?;
    mv.admissible = Some(ok);
    if !ok && g.n() <= crate::sparsity::BRUTE_LIMIT {
        mv.blocker = find_blocker(g, &mv)?;
    }
    Ok(mv)
}

/// Recognises `K_{6,6}` minus a perfect matching: on 12 vertices it is the
/// only 5-regular bipartite graph with two sides of six.
pub fn is_k66_minus(g: &Graph) -> bool {
    if g.n() != 12 || g.regular_degree() != Some(5) || !g.is_connected() {
        return false;
    }
    let mut side = [None; 12];
    side[0] = Some(false);
    let mut stack = vec![0];
    while let Some(x) = stack.pop() {
        let s = side[x].expect("coloured before push");
        for y in g.neighbors(x).iter() {
            match side[y] {
                None => {
                    side[y] = Some(!s);
                    stack.push(y);
                }
                Some(t) if t == s => return false,
                Some(_) => {}
            }
        }
    }
    side.iter().filter(|s| **s == Some(true)).count() == 6
}

/// A reducible edge or pair with exactly one endpoint in the proper core
/// `core`, first in endpoint order.
pub fn find_reducible_crossing_core(
    g: &Graph,
    core: &VertexSet,
) -> Result<Option<ReductionMove>, CoreMoveError> {
    if !g.is_connected() {
        return Err(CoreMoveError::Disconnected);
    }
    if g.regular_degree() != Some(5) {
        return Err(CoreMoveError::NotFiveRegular);
    }
    if !is_3_sparse(g).sparse {
        return Err(CoreMoveError::NotSparse);
    }
    if is_k66_minus(g) {
        return Err(CoreMoveError::K66Minus);
    }
    if core.len() >= g.n() || !is_core(g, core) {
        return Err(CoreMoveError::NotAProperCore);
    }
    Ok(reducible_moves(g).into_iter().find(|m| m.crosses(core)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::sparsity::maximal_proper_cores;

    #[test]
    fn reducible_examples() {
        let k = fixtures::k66_minus();
        assert!(reducible_edges(&k).is_empty());
        assert!(reducible_pairs(&k).is_empty());
        let oct = fixtures::octahedron();
        assert_eq!(reducible_edges(&oct).len(), 12);
        assert!(reducible_edges(&oct).iter().all(|m| m.triangles_or_common == 2));
        assert!(reducible_pairs(&oct).is_empty());
        let db = reducible_edges(&fixtures::double_banana());
        assert_eq!(db.len(), 12);
        assert!(db.iter().all(|m| m.target.0 <= 1 && m.triangles_or_common == 2));
        let c5 = reducible_pairs(&fixtures::cycle(5));
        assert_eq!(c5.len(), 5);
        assert!(c5.iter().all(|m| m.triangles_or_common == 1));
    }

    #[test]
    fn admissibility_examples() {
        let oct = fixtures::octahedron();
        for m in reducible_edges(&oct) {
            assert_eq!(is_admissible(&oct, &m), Ok(true));
            assert_eq!(find_blocker(&oct, &m), Ok(None));
        }
        for m in reducible_pairs(&fixtures::cycle(5)) {
            assert_eq!(is_admissible(&fixtures::cycle(5), &m), Ok(true));
        }
        let db = fixtures::double_banana();
        // apex 2 to hinge 0; triangle partners 3, 4
        let au = reducible_edges(&db).into_iter().find(|m| m.target == (0, 2)).unwrap();
        assert_eq!(is_admissible(&db, &au), Ok(false));
        let b = find_blocker(&db, &au).unwrap().unwrap();
        assert_eq!(b.set.to_vec(), vec![0, 1, 2, 5, 6, 7]);
        assert_eq!((b.k, b.clause.as_str()), (7, "2(b)"));
        let bad = ReductionMove {
            kind: ContractionKind::Edge,
            target: (2, 3),
            triangles_or_common: 3,
            admissible: None,
            blocker: None,
        };
        assert_eq!(is_admissible(&db, &bad), Err(ReductionError::NotReducible((2, 3))));
    }

    #[test]
    fn k66_recognition() {
        assert!(is_k66_minus(&fixtures::k66_minus()));
        assert!(!is_k66_minus(&fixtures::complete_bipartite(6, 6)));
        assert!(!is_k66_minus(&fixtures::octahedron()));
    }

    #[test]
    fn crossing_core_preconditions() {
        let k = fixtures::k66_minus();
        let core = maximal_proper_cores(&k).unwrap().remove(0);
        assert_eq!(
            find_reducible_crossing_core(&k, &core),
            Err(CoreMoveError::K66Minus)
        );
        assert_eq!(
            find_reducible_crossing_core(&fixtures::octahedron(), &VertexSet::empty(6)),
            Err(CoreMoveError::NotFiveRegular)
        );
    }
}
