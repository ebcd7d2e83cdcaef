//! Independence criteria for graphs of bounded degree, applied as inference
//! rules: under the degree hypotheses, `R_d`-independence is equivalent to
//! `d`-sparsity.

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, Vertex};
use crate::sparsity::is_d_sparse;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundedDegreeRule {
    /// Connected, minimum degree `<= d+1`, maximum degree `<= d+2`.
    MaxDegree,
    /// 2-connected, minimum degree `<= d+1`, every vertex except a
    /// designated one of degree `<= d+2`.
    DesignatedVertex,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum BoundedDegree {
    Independent {
        rule: BoundedDegreeRule,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        designated: Option<Vertex>,
    },
    NotApplicable {
        reason: String,
    },
}

impl BoundedDegree {
    pub fn is_independent(&self) -> bool {
        matches!(self, BoundedDegree::Independent { .. })
    }

    fn skip(reason: impl Into<String>) -> Self {
        BoundedDegree::NotApplicable {
            reason: reason.into(),
        }
    }
}

/// Never reports dependence: outside the hypotheses, or for non-sparse
/// graphs, the answer is `NotApplicable`. Without a designated vertex the
/// unique vertex of degree above `d + 2`, if any, is used; with no such
/// vertex the first rule applies and `designated` is ignored.
pub fn bounded_degree_independent(g: &Graph, d: usize, designated: Option<Vertex>) -> BoundedDegree {
    if g.n() == 0 || !g.is_connected() {
        return BoundedDegree::skip("not connected");
    }
    if g.min_degree() > d + 1 {
        return BoundedDegree::skip(format!("minimum degree {} exceeds d+1", g.min_degree()));
    }
    let high: Vec<Vertex> = (0..g.n()).filter(|&v| g.degree(v) > d + 2).collect();
    let chosen = match (high.as_slice(), designated) {
        ([], _) => None,
        ([h], None) => Some(*h),
        ([h], Some(v)) if *h == v => Some(v),
        _ => return BoundedDegree::skip("degree bound fails"),
    };
    let rule = match chosen {
        None => BoundedDegreeRule::MaxDegree,
        Some(_) => BoundedDegreeRule::DesignatedVertex,
    };
    if rule == BoundedDegreeRule::DesignatedVertex && !g.is_two_connected() {
        return BoundedDegree::skip("designated-vertex rule needs 2-connectivity");
    }
    match is_d_sparse(g, d) {
        Ok(v) if v.sparse => BoundedDegree::Independent {
            rule,
            designated: chosen,
        },
        Ok(_) => BoundedDegree::skip("not d-sparse"),
        Err(e) => BoundedDegree::skip(e.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn examples() {
        assert!(bounded_degree_independent(&fixtures::k5_minus_edge(), 3, None).is_independent());
        assert!(bounded_degree_independent(&fixtures::octahedron(), 3, None).is_independent());
        assert!(!bounded_degree_independent(&fixtures::complete_bipartite(5, 5), 3, None).is_independent());
        assert!(!bounded_degree_independent(&fixtures::complete(5), 3, None).is_independent());
        // wheel: hub of degree 6 designated, rim vertices of degree 3
        let mut edges: Vec<(usize, usize)> = (1..7).map(|i| (0, i)).collect();
        edges.extend((1..7).map(|i| (i, i % 6 + 1)));
        let wheel = Graph::from_edges(7, edges).unwrap();
        assert_eq!(
            bounded_degree_independent(&wheel, 3, None),
            BoundedDegree::Independent {
                rule: BoundedDegreeRule::DesignatedVertex,
                designated: Some(0)
            }
        );
        assert!(!bounded_degree_independent(&wheel, 3, Some(1)).is_independent());
    }
}
