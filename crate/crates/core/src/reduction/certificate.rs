//! Certificates of `R_3`-independence: a base graph known to be independent
//! and a sequence of independence-preserving moves leading to the target.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{bounded_degree_independent, is_admissible, reducible_moves, ReductionMove};
use crate::graph::{Edge, Graph, Vertex, VertexSet};
use crate::moves::{
    contract, contraction_inverse, one_extension, zero_extension, ContractionKind,
    ContractionSpec, InverseSplit,
};
use crate::rigidity::{is_independent, isostatic_substitute, u64_string, RankResult};
use crate::sparsity::{is_3_sparse, maximal_proper_cores, CORE_SEARCH_LIMIT};

const D: usize = 3;
/// Graphs this small are subgraphs of `K_4` and always independent.
const SMALL_CASE: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BaseRule {
    RankCertified,
    SmallCase,
    BoundedDegreeTheorem,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StepRule {
    VertexSplit,
    SpiderSplit,
    SubgraphOfSplit,
    ZeroExtension,
    OneExtension,
    IsostaticSubstitution,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Base {
    pub graph6: Graph,
    pub rule: BaseRule,
    pub rank: usize,
    #[serde(with = "u64_string")]
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum StepMove {
    /// `inverse` applied to the previous graph gives the next one;
    /// `contracted` applied to the next graph gives back the previous one.
    Split {
        contracted: ContractionSpec,
        inverse: InverseSplit,
    },
    ZeroExtension {
        neighbours: VertexSet,
    },
    OneExtension {
        removed_edge: Edge,
        neighbours: VertexSet,
    },
    IsostaticSubstitution {
        vertices: VertexSet,
        edges: Vec<Edge>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub rule: StepRule,
    #[serde(rename = "move")]
    pub mv: StepMove,
    pub graph6_after: Graph,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub base: Base,
    pub steps: Vec<Step>,
    pub final_graph6: Graph,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertifyError {
    #[error("graph is not 3-sparse; violating set {witness:?}")]
    NotSparse { witness: VertexSet },
    #[error("graph is dependent: rank {} < {edges} edges", rank.rank)]
    Dependent { rank: RankResult, edges: usize },
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Location {
    Base,
    Step(usize),
    Final,
}

#[derive(Clone, Debug, PartialEq, Eq, Error, Serialize, Deserialize)]
pub struct VerifyFailure {
    pub location: Location,
    pub reason: String,
}

impl VerifyFailure {
    pub fn step_index(&self) -> Option<usize> {
        match self.location {
            Location::Step(i) => Some(i),
            _ => None,
        }
    }
}

impl fmt::Display for VerifyFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.location {
            Location::Base => write!(f, "base: {}", self.reason),
            Location::Step(i) => write!(f, "step {i}: {}", self.reason),
            Location::Final => write!(f, "final: {}", self.reason),
        }
    }
}

fn leaf_rule(h: &Graph) -> Option<BaseRule> {
    if h.n() <= SMALL_CASE {
        Some(BaseRule::SmallCase)
    } else if bounded_degree_independent(h, D, None).is_independent() {
        Some(BaseRule::BoundedDegreeTheorem)
    } else {
        None
    }
}

/// Admissible moves crossing a maximal proper core come first, then the
/// remaining admissible moves, each group in endpoint order.
fn select_move(h: &Graph) -> Option<(ReductionMove, InverseSplit)> {
    let moves = reducible_moves(h);
    if moves.is_empty() {
        return None;
    }
    let cores = if h.n() <= CORE_SEARCH_LIMIT {
        maximal_proper_cores(h).unwrap_or_default()
    } else {
        Vec::new()
    };
    let (crossing, rest): (Vec<_>, Vec<_>) = moves
        .into_iter()
        .partition(|m| cores.iter().any(|c| m.crosses(c)));
    crossing.into_iter().chain(rest).find_map(|m| {
        if !is_admissible(h, &m).ok()? {
            return None;
        }
        let inv = contraction_inverse(h, &m.contraction(), D).ok()??;
        Some((m, inv))
    })
}

/// Degree pattern forced by contracting a reducible move in a 5-regular
/// graph: partners drop to degree 4, the merged vertex has `8 - t` (edge)
/// or `10 - c` (pair) neighbours.
fn check_degrees(before: &Graph, mv: &ReductionMove, after: &Graph) -> Result<(), CertifyError> {
    if before.regular_degree() != Some(5) {
        return Ok(());
    }
    let (u, v) = mv.target;
    let c = mv.triangles_or_common;
    let merged = match mv.kind {
        ContractionKind::Edge => 8 - c,
        ContractionKind::Spider => 10 - c,
    };
    let down = |x: Vertex| if x > v { x - 1 } else { x };
    let partners_ok = before
        .common_neighbors(u, v)
        .iter()
        .all(|x| after.degree(down(x)) == 4);
    if after.degree(u) != merged || !partners_ok {
        return Err(CertifyError::InternalInconsistency(format!(
            "degree pattern after contracting {:?}",
            mv.target
        )));
    }
    Ok(())
}

fn step_for(after: &Graph, mv: &ReductionMove, inv: InverseSplit) -> Step {
    let rule = match (inv.is_exact(), inv.spider) {
        (false, _) => StepRule::SubgraphOfSplit,
        (true, false) => StepRule::VertexSplit,
        (true, true) => StepRule::SpiderSplit,
    };
    Step {
        rule,
        mv: StepMove::Split {
            contracted: mv.contraction(),
            inverse: inv,
        },
        graph6_after: after.clone(),
    }
}

/// Builds a certificate that `g` is `R_3`-independent.
///
/// Reducible moves are contracted while admissible ones exist; the input
/// graph is always reduced if it can be, and any later graph that satisfies
/// a leaf rule stops the descent. Without an admissible move the current
/// graph is rank-certified; if it turns out dependent, the deepest
/// independent graph on the path becomes the base instead.
pub fn certify_independent(g: &Graph, seed: u64) -> Result<Certificate, CertifyError> {
    let sparse = is_3_sparse(g);
    if let Some(witness) = sparse.witness {
        return Err(CertifyError::NotSparse { witness });
    }
    let mut chain: Vec<(Graph, ReductionMove, InverseSplit)> = Vec::new();
    let mut h = g.clone();
    let mut rule = None;
    loop {
        if !chain.is_empty() {
            rule = leaf_rule(&h);
            if rule.is_some() {
                break;
            }
        }
        match select_move(&h) {
            Some((mv, inv)) => {
                let next = contract(&h, &mv.contraction()).expect("reducible move contracts");
                check_degrees(&h, &mv, &next)?;
                chain.push((h, mv, inv));
                h = next;
            }
            None => {
                if chain.is_empty() {
                    rule = leaf_rule(&h);
                }
                break;
            }
        }
    }
    let (rule, rank) = match rule {
        Some(r) => (r, h.edge_count()),
        None => loop {
            let v = is_independent(&h, D, seed);
            if v.holds {
                break (BaseRule::RankCertified, v.rank.rank);
            }
            match chain.pop() {
                Some((before, _, _)) => h = before,
                None => {
                    return Err(CertifyError::Dependent {
                        edges: g.edge_count(),
                        rank: v.rank,
                    })
                }
            }
        },
    };
    let steps = chain
        .into_iter()
        .rev()
        .map(|(after, mv, inv)| step_for(&after, &mv, inv))
        .collect();
    let cert = Certificate {
        base: Base {
            graph6: h,
            rule,
            rank,
            seed,
        },
        steps,
        final_graph6: g.clone(),
    };
    verify_certificate(&cert, g, seed)
        .map_err(|f| CertifyError::InternalInconsistency(format!("own certificate rejected: {f}")))?;
    let check = is_independent(g, D, seed);
    if !check.holds {
        return Err(CertifyError::InternalInconsistency(format!(
            "certificate built but rank oracle reports {} < {}",
            check.rank.rank,
            g.edge_count()
        )));
    }
    Ok(cert)
}

fn fail(location: Location, reason: impl Into<String>) -> VerifyFailure {
    VerifyFailure {
        location,
        reason: reason.into(),
    }
}

fn verify_base(base: &Base, seed: u64) -> Result<(), VerifyFailure> {
    let b = &base.graph6;
    if base.rank != b.edge_count() {
        return Err(fail(Location::Base, "recorded rank differs from the edge count"));
    }
    match base.rule {
        BaseRule::SmallCase if b.n() <= SMALL_CASE => Ok(()),
        BaseRule::SmallCase => Err(fail(Location::Base, "too many vertices for the small case")),
        BaseRule::BoundedDegreeTheorem => {
            match bounded_degree_independent(b, D, None) {
                super::BoundedDegree::Independent { .. } => Ok(()),
                super::BoundedDegree::NotApplicable { reason } => Err(fail(Location::Base, reason)),
            }
        }
        BaseRule::RankCertified => {
            let v = is_independent(b, D, seed);
            if v.holds {
                Ok(())
            } else {
                Err(fail(
                    Location::Base,
                    format!("rank {} < {} edges", v.rank.rank, b.edge_count()),
                ))
            }
        }
    }
}

fn replay(cur: &Graph, step: &Step, seed: u64) -> Result<Graph, String> {
    let next = match (&step.mv, step.rule) {
        (StepMove::Split { contracted, inverse }, rule) => {
            let expected = match (inverse.is_exact(), inverse.spider) {
                (false, _) => StepRule::SubgraphOfSplit,
                (true, false) => StepRule::VertexSplit,
                (true, true) => StepRule::SpiderSplit,
            };
            if rule != expected {
                return Err(format!("rule {rule:?} does not match the split"));
            }
            let next = inverse.apply(cur, D).map_err(|e| e.to_string())?;
            if contract(&next, contracted).ok().as_ref() != Some(cur) {
                return Err("recorded contraction does not undo the split".into());
            }
            next
        }
        (StepMove::ZeroExtension { neighbours }, StepRule::ZeroExtension) => {
            zero_extension(cur, neighbours, D).map_err(|e| e.to_string())?
        }
        (
            StepMove::OneExtension {
                removed_edge,
                neighbours,
            },
            StepRule::OneExtension,
        ) => one_extension(cur, *removed_edge, neighbours, D).map_err(|e| e.to_string())?,
        (StepMove::IsostaticSubstitution { vertices, edges }, StepRule::IsostaticSubstitution) => {
            isostatic_substitute(cur, vertices, edges, D, seed).map_err(|e| e.to_string())?
        }
        (_, rule) => return Err(format!("rule {rule:?} does not match the move")),
    };
    if next != step.graph6_after {
        return Err("result differs from the recorded graph".into());
    }
    Ok(next)
}

/// Replays a certificate, re-checking every rule, and confirms it ends at
/// `g`. Rank-certified bases are recomputed with `seed`.
pub fn verify_certificate(cert: &Certificate, g: &Graph, seed: u64) -> Result<(), VerifyFailure> {
    verify_base(&cert.base, seed)?;
    let mut cur = cert.base.graph6.clone();
    for (i, step) in cert.steps.iter().enumerate() {
        cur = replay(&cur, step, seed).map_err(|r| fail(Location::Step(i), r))?;
    }
    if cur != cert.final_graph6 {
        return Err(fail(Location::Final, "replay does not reach the recorded final graph"));
    }
    if &cur != g {
        return Err(fail(Location::Final, "certificate is for a different graph"));
    }
    Ok(())
}
