//! Henneberg-type moves and their inverses.
//!
//! Labelling conventions: a new vertex from an extension gets label `n`.
//! Contracting `{u, v}` with `u < v` keeps `u`, deletes `v` and shifts the
//! labels above `v` down by one. A split keeps the split vertex as `v1` and
//! inserts `v2` at label `insert_at` (default `n`), shifting labels at or
//! above it up by one, so a split with `insert_at = v` undoes a contraction
//! of `{u, v}` exactly.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Edge, Graph, GraphError, Vertex, VertexSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MoveError {
    #[error("expected {expected} neighbours, got {got}")]
    NeighbourCount { expected: usize, got: usize },
    #[error("vertex {0} out of range")]
    VertexOutOfRange(Vertex),
    #[error("{0} is not an edge")]
    NotAnEdge(Edge),
    #[error("{0} is already an edge")]
    AlreadyAnEdge(Edge),
    #[error("{x} is not a neighbour of {v}")]
    NotANeighbour { v: Vertex, x: Vertex },
    #[error("vertex {v} has degree {degree}, expected {expected}")]
    DegreeMismatch {
        v: Vertex,
        degree: usize,
        expected: usize,
    },
    #[error("shared vertex {0} listed twice")]
    DuplicateShared(Vertex),
    #[error("vertex {0} is both shared and in N1")]
    SharedInN1(Vertex),
    #[error("edge {0} of the split graph does not touch the new vertices")]
    ForeignRemoval(Edge),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitSpec {
    pub v: Vertex,
    /// `x_1, ..., x_k`, joined to both new vertices.
    pub shared: Vec<Vertex>,
    /// Neighbours kept by `v1`; the rest of `N(v) \ shared` goes to `v2`.
    pub n1: VertexSet,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub insert_at: Option<Vertex>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ContractionKind {
    Edge,
    Spider,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContractionSpec {
    pub kind: ContractionKind,
    pub pair: (Vertex, Vertex),
}

fn check_vertex(g: &Graph, v: Vertex) -> Result<(), MoveError> {
    if v < g.n() {
        Ok(())
    } else {
        Err(MoveError::VertexOutOfRange(v))
    }
}

fn attach(g: &Graph, neighbours: &VertexSet, expected: usize) -> Result<Graph, MoveError> {
    if neighbours.len() != expected {
        return Err(MoveError::NeighbourCount {
            expected,
            got: neighbours.len(),
        });
    }
    for x in neighbours.iter() {
        check_vertex(g, x)?;
    }
    let n = g.n();
    let edges = g
        .edges()
        .iter()
        .copied()
        .chain(neighbours.iter().map(|x| Edge::new(x, n)));
    Ok(Graph::from_edges(n + 1, edges)?)
}

/// Adds a vertex joined to `d` existing vertices.
pub fn zero_extension(g: &Graph, neighbours: &VertexSet, d: usize) -> Result<Graph, MoveError> {
    attach(g, neighbours, d)
}

/// Deletes `xy` and adds a vertex joined to `d + 1` vertices including `x, y`.
pub fn one_extension(
    g: &Graph,
    removed: Edge,
    neighbours: &VertexSet,
    d: usize,
) -> Result<Graph, MoveError> {
    if !g.has_edge(removed.u(), removed.v()) {
        return Err(MoveError::NotAnEdge(removed));
    }
    for x in [removed.u(), removed.v()] {
        if !neighbours.contains(x) {
            return Err(MoveError::NotANeighbour { v: g.n(), x });
        }
    }
    attach(&g.without_edge(removed)?, neighbours, d + 1)
}

/// `G - v + xy` for a vertex of degree `d + 1` and non-adjacent `x, y` in
/// its neighbourhood.
pub fn one_reduction(g: &Graph, v: Vertex, add: Edge, d: usize) -> Result<Graph, MoveError> {
    check_vertex(g, v)?;
    if g.degree(v) != d + 1 {
        return Err(MoveError::DegreeMismatch {
            v,
            degree: g.degree(v),
            expected: d + 1,
        });
    }
    for x in [add.u(), add.v()] {
        if !g.has_edge(v, x) {
            return Err(MoveError::NotANeighbour { v, x });
        }
    }
    if g.has_edge(add.u(), add.v()) {
        return Err(MoveError::AlreadyAnEdge(add));
    }
    let h = g.with_edge(add.u(), add.v())?;
    Ok(h.remove_vertex(v))
}

fn split(g: &Graph, spec: &SplitSpec, k: usize, join: bool) -> Result<Graph, MoveError> {
    let v = spec.v;
    check_vertex(g, v)?;
    if spec.shared.len() != k {
        return Err(MoveError::NeighbourCount {
            expected: k,
            got: spec.shared.len(),
        });
    }
    let nv = g.neighbors(v);
    let mut shared = VertexSet::empty(g.n());
    for &x in &spec.shared {
        if !nv.contains(x) {
            return Err(MoveError::NotANeighbour { v, x });
        }
        if shared.contains(x) {
            return Err(MoveError::DuplicateShared(x));
        }
        shared.insert(x);
    }
    for x in spec.n1.iter() {
        if !nv.contains(x) {
            return Err(MoveError::NotANeighbour { v, x });
        }
        if shared.contains(x) {
            return Err(MoveError::SharedInN1(x));
        }
    }
    let n = g.n();
    let at = spec.insert_at.unwrap_or(n);
    if at > n {
        return Err(MoveError::VertexOutOfRange(at));
    }
    let s = |x: Vertex| if x >= at { x + 1 } else { x };
    let (v1, v2) = (s(v), at);
    let mut edges: Vec<Edge> = g
        .edges()
        .iter()
        .filter(|e| !e.contains(v))
        .map(|e| Edge::new(s(e.u()), s(e.v())))
        .collect();
    for x in nv.iter() {
        if shared.contains(x) {
            edges.push(Edge::new(v1, s(x)));
            edges.push(Edge::new(v2, s(x)));
        } else if spec.n1.contains(x) {
            edges.push(Edge::new(v1, s(x)));
        } else {
            edges.push(Edge::new(v2, s(x)));
        }
    }
    if join {
        edges.push(Edge::new(v1, v2));
    }
    Ok(Graph::from_edges(n + 1, edges)?)
}

/// Vertex split with `d - 1` shared neighbours; adds the edge `v1 v2`.
pub fn vertex_split(g: &Graph, spec: &SplitSpec, d: usize) -> Result<Graph, MoveError> {
    split(g, spec, d - 1, true)
}

/// Spider split with `d` shared neighbours; `v1, v2` stay non-adjacent.
pub fn spider_split(g: &Graph, spec: &SplitSpec, d: usize) -> Result<Graph, MoveError> {
    split(g, spec, d, false)
}

fn merge(g: &Graph, a: Vertex, b: Vertex) -> Graph {
    let (u, w) = (a.min(b), a.max(b));
    let map = |x: Vertex| {
        let x = if x == w { u } else { x };
        if x > w {
            x - 1
        } else {
            x
        }
    };
    let edges = g
        .edges()
        .iter()
        .map(|e| (map(e.u()), map(e.v())))
        .filter(|(x, y)| x != y);
    Graph::from_edges_merging(g.n() - 1, edges).expect("merged edges stay in range")
}

/// Merges the endpoints of an edge; parallel edges collapse.
pub fn edge_contract(g: &Graph, e: Edge) -> Result<Graph, MoveError> {
    if e.v() >= g.n() || !g.has_edge(e.u(), e.v()) {
        return Err(MoveError::NotAnEdge(e));
    }
    Ok(merge(g, e.u(), e.v()))
}

/// Merges a non-adjacent pair; each common neighbour keeps one edge.
pub fn spider_contract(g: &Graph, u: Vertex, v: Vertex) -> Result<Graph, MoveError> {
    check_vertex(g, u)?;
    check_vertex(g, v)?;
    if u == v {
        return Err(GraphError::Loop(u).into());
    }
    if g.has_edge(u, v) {
        return Err(MoveError::AlreadyAnEdge(Edge::new(u, v)));
    }
    Ok(merge(g, u, v))
}

pub fn contract(g: &Graph, c: &ContractionSpec) -> Result<Graph, MoveError> {
    match c.kind {
        ContractionKind::Edge => edge_contract(g, Edge::new(c.pair.0, c.pair.1)),
        ContractionKind::Spider => spider_contract(g, c.pair.0, c.pair.1),
    }
}

/// A split of the contracted graph followed by edge deletions that
/// reproduces the original graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InverseSplit {
    pub spider: bool,
    pub spec: SplitSpec,
    /// Edges of the split graph to delete, each touching `v1` or `v2`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub removed: Vec<Edge>,
}

impl InverseSplit {
    pub fn apply(&self, g: &Graph, d: usize) -> Result<Graph, MoveError> {
        let h = if self.spider {
            spider_split(g, &self.spec, d)?
        } else {
            vertex_split(g, &self.spec, d)?
        };
        let at = self.spec.insert_at.unwrap_or(g.n());
        let v1 = if self.spec.v >= at { self.spec.v + 1 } else { self.spec.v };
        for &e in &self.removed {
            if !h.has_edge(e.u(), e.v()) {
                return Err(MoveError::NotAnEdge(e));
            }
            if !(e.contains(v1) || e.contains(at)) {
                return Err(MoveError::ForeignRemoval(e));
            }
        }
        Ok(h.without_edges(&self.removed))
    }

    /// Whether the split reproduces the original exactly (no deletions).
    pub fn is_exact(&self) -> bool {
        self.removed.is_empty()
    }
}

/// Reconstructs a split of `contract(g, c)` that yields `g`, padding the
/// shared set with further neighbours of the merged vertex when the pair
/// has fewer than `d - 1` (edge) or `d` (spider) common neighbours.
/// Returns `None` when the merged vertex has too few neighbours to pad.
pub fn contraction_inverse(
    g: &Graph,
    c: &ContractionSpec,
    d: usize,
) -> Result<Option<InverseSplit>, MoveError> {
    contract(g, c)?;
    let (u, w) = (c.pair.0.min(c.pair.1), c.pair.0.max(c.pair.1));
    let down = |x: Vertex| if x > w { x - 1 } else { x };
    let spider = c.kind == ContractionKind::Spider;
    let k = if spider { d } else { d - 1 };
    let common = g.common_neighbors(u, w);
    if common.len() > k {
        return Ok(None);
    }
    let own_u: Vec<Vertex> = g
        .neighbors(u)
        .iter()
        .filter(|&x| x != w && !common.contains(x))
        .collect();
    let own_w: Vec<Vertex> = g
        .neighbors(w)
        .iter()
        .filter(|&x| x != u && !common.contains(x))
        .collect();
    let mut shared: Vec<Vertex> = common.iter().collect();
    let mut removed = Vec::new();
    // labels of g coincide with labels of the split graph, v2 taking w's place;
    // padding vertices gain a spurious edge to the new vertex on the other side
    for &x in own_u.iter().chain(&own_w) {
        if shared.len() == k {
            break;
        }
        shared.push(x);
        let other = if g.has_edge(u, x) { w } else { u };
        removed.push(Edge::new(other, x));
    }
    if shared.len() < k {
        return Ok(None);
    }
    let n1 = VertexSet::from_vertices(
        g.n() - 1,
        own_u.iter().filter(|x| !shared.contains(x)).map(|&x| down(x)),
    );
    let spec = SplitSpec {
        v: u,
        shared: shared.iter().map(|&x| down(x)).collect(),
        n1,
        insert_at: Some(w),
    };
    Ok(Some(InverseSplit {
        spider,
        spec,
        removed,
    }))
}

/// Every split spec at `v` with `d - 1` (vertex split) or `d` (spider split)
/// shared neighbours and every partition of the rest, `v2` appended as `n`.
pub fn split_specs(g: &Graph, v: Vertex, d: usize, spider: bool) -> Vec<SplitSpec> {
    let k = if spider { d } else { d - 1 };
    let nv: Vec<Vertex> = g.neighbors(v).iter().collect();
    let mut out = Vec::new();
    for shared in subsets_of_size(&nv, k) {
        let rest: Vec<Vertex> = nv.iter().copied().filter(|x| !shared.contains(x)).collect();
        for mask in 0u64..(1 << rest.len()) {
            let n1 = rest
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &x)| x);
            out.push(SplitSpec {
                v,
                shared: shared.clone(),
                n1: VertexSet::from_vertices(g.n(), n1),
                insert_at: None,
            });
        }
    }
    out
}

/// The `k`-element subsets of `items`, in lexicographic order of positions.
pub fn subsets_of_size<T: Copy>(items: &[T], k: usize) -> Vec<Vec<T>> {
    fn go<T: Copy>(items: &[T], k: usize, start: usize, cur: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            go(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, k, 0, &mut Vec::with_capacity(k), &mut out);
    out
}
