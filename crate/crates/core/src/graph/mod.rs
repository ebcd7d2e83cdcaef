//! Immutable simple undirected graphs on the dense vertex range `0..n`.
//!
//! Every other module consumes the counting primitives defined here: the
//! induced edge count `i(X)`, the cross count `d(X, Y)` between set
//! differences, common neighbourhoods and triangle counts.

mod connectivity;
pub mod graph6;
mod vertex_set;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use connectivity::{Connectivity, EDGE_CUT_SEARCH_LIMIT};
pub(crate) use connectivity::iter_bits;
pub use vertex_set::VertexSet;

/// Vertex labels are dense indices.
pub type Vertex = usize;

/// Largest vertex count accepted anywhere in the crate.
pub const MAX_VERTICES: usize = 1 << 18;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("loop at vertex {0}")]
    Loop(Vertex),
    #[error("parallel edge {0}")]
    DuplicateEdge(Edge),
    #[error("{0} is not an edge")]
    NotAnEdge(Edge),
    #[error("{n} vertices exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices { n: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("exhaustive search limited to {limit} vertices, graph has {n}")]
    TooLarge { n: usize, limit: usize },
}

/// An undirected edge stored with its smaller endpoint first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "[Vertex; 2]", from = "[Vertex; 2]")]
pub struct Edge(Vertex, Vertex);

impl Edge {
    pub fn new(a: Vertex, b: Vertex) -> Self {
        if a <= b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    #[inline]
    pub fn u(self) -> Vertex {
        self.0
    }

    #[inline]
    pub fn v(self) -> Vertex {
        self.1
    }

    pub fn other(self, x: Vertex) -> Vertex {
        if x == self.0 {
            self.1
        } else {
            self.0
        }
    }

    pub fn contains(self, x: Vertex) -> bool {
        self.0 == x || self.1 == x
    }
}

impl From<Edge> for [Vertex; 2] {
    fn from(e: Edge) -> Self {
        [e.0, e.1]
    }
}

impl From<[Vertex; 2]> for Edge {
    fn from(p: [Vertex; 2]) -> Self {
        Edge::new(p[0], p[1])
    }
}

impl From<(Vertex, Vertex)> for Edge {
    fn from(p: (Vertex, Vertex)) -> Self {
        Edge::new(p.0, p.1)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// A finite simple graph. Adjacency rows and the sorted edge list always agree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<VertexSet>,
    edges: Vec<Edge>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            rows: vec![VertexSet::empty(n); n],
            edges: Vec::new(),
        }
    }

    /// Builds a graph, rejecting loops, out-of-range endpoints and repeated edges.
    pub fn from_edges<E: Into<Edge>>(
        n: usize,
        edges: impl IntoIterator<Item = E>,
    ) -> Result<Self, GraphError> {
        Self::build(n, edges, false)
    }

    /// Like [`Graph::from_edges`] but silently merges repeated edges.
    pub fn from_edges_merging<E: Into<Edge>>(
        n: usize,
        edges: impl IntoIterator<Item = E>,
    ) -> Result<Self, GraphError> {
        Self::build(n, edges, true)
    }

    fn build<E: Into<Edge>>(
        n: usize,
        edges: impl IntoIterator<Item = E>,
        merge: bool,
    ) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let mut g = Graph::empty(n);
        for e in edges {
            let e = e.into();
            if e.v() >= n {
                return Err(GraphError::VertexOutOfRange { vertex: e.v(), n });
            }
            if e.u() == e.v() {
                return Err(GraphError::Loop(e.u()));
            }
            if g.rows[e.u()].contains(e.v()) {
                if merge {
                    continue;
                }
                return Err(GraphError::DuplicateEdge(e));
            }
            g.rows[e.u()].insert(e.v());
            g.rows[e.v()].insert(e.u());
            g.edges.push(e);
        }
        g.edges.sort_unstable();
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic order.
    #[inline]
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    #[inline]
    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        a < self.n && self.rows[a].contains(b)
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &VertexSet {
        &self.rows[v]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.rows[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// `Some(k)` when every vertex has degree `k`.
    pub fn regular_degree(&self) -> Option<usize> {
        if self.n == 0 {
            return None;
        }
        let k = self.degree(0);
        (0..self.n).all(|v| self.degree(v) == k).then_some(k)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Adjacency rows as single words, available when `n <= 64`.
    pub fn row_masks(&self) -> Option<Vec<u64>> {
        if self.n > 64 {
            return None;
        }
        Some(self.rows.iter().map(|r| r.as_mask().unwrap_or(0)).collect())
    }

    /// `i(X)`: number of edges with both endpoints in `x`.
    pub fn induced_edge_count(&self, x: &VertexSet) -> usize {
        x.iter().map(|v| self.rows[v].intersection_len(x)).sum::<usize>() / 2
    }

    /// `d(X, Y)`: edges joining `X \ Y` to `Y \ X`. Edges touching `X ∩ Y` never count.
    pub fn cross_edge_count(&self, x: &VertexSet, y: &VertexSet) -> usize {
        let xo = x.difference(y);
        let yo = y.difference(x);
        xo.iter().map(|v| self.rows[v].intersection_len(&yo)).sum()
    }

    /// `N(u) ∩ N(v)`.
    pub fn common_neighbors(&self, u: Vertex, v: Vertex) -> VertexSet {
        self.rows[u].intersection(&self.rows[v])
    }

    /// Number of triangles through the edge `e`.
    pub fn triangles_on_edge(&self, e: Edge) -> Result<usize, GraphError> {
        if !self.has_edge(e.u(), e.v()) {
            return Err(GraphError::NotAnEdge(e));
        }
        Ok(self.rows[e.u()].intersection_len(&self.rows[e.v()]))
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges
            .iter()
            .all(|e| self.rows[e.u()].intersection_len(&self.rows[e.v()]) == 0)
    }

    /// Minimum degree of the subgraph induced by `x` (0 for the empty set).
    pub fn induced_min_degree(&self, x: &VertexSet) -> usize {
        x.iter()
            .map(|v| self.rows[v].intersection_len(x))
            .min()
            .unwrap_or(0)
    }

    pub fn with_edge(&self, a: Vertex, b: Vertex) -> Result<Graph, GraphError> {
        Graph::from_edges(self.n, self.edges.iter().copied().chain([Edge::new(a, b)]))
    }

    pub fn without_edge(&self, e: Edge) -> Result<Graph, GraphError> {
        if !self.has_edge(e.u(), e.v()) {
            return Err(GraphError::NotAnEdge(e));
        }
        Ok(self.without_edges(&[e]))
    }

    pub(crate) fn without_edges(&self, removed: &[Edge]) -> Graph {
        let mut g = self.clone();
        for &e in removed {
            g.rows[e.u()].remove(e.v());
            g.rows[e.v()].remove(e.u());
        }
        g.edges.retain(|e| !removed.contains(e));
        g
    }

    /// Deletes `v`; vertices above it shift down by one.
    pub fn remove_vertex(&self, v: Vertex) -> Graph {
        let shift = |x: Vertex| if x > v { x - 1 } else { x };
        let edges = self
            .edges
            .iter()
            .filter(|e| !e.contains(v))
            .map(|e| Edge::new(shift(e.u()), shift(e.v())));
        Graph::from_edges(self.n - 1, edges).expect("relabelled edges stay simple")
    }

    /// Subgraph induced by `x`, relabelled to `0..|x|`, with the map back to
    /// the original labels.
    pub fn induced_subgraph(&self, x: &VertexSet) -> (Graph, Vec<Vertex>) {
        let members = x.to_vec();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in members.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| x.contains(e.u()) && x.contains(e.v()))
            .map(|e| Edge::new(index[e.u()], index[e.v()]));
        let g = Graph::from_edges(members.len(), edges).expect("induced subgraph is simple");
        (g, members)
    }

    /// Component containing `start` in `G[within]`.
    pub(crate) fn component_within(&self, start: Vertex, within: &VertexSet) -> VertexSet {
        let mut seen = VertexSet::empty(self.n).with(start);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for w in self.rows[v].intersection(within).iter() {
                if !seen.contains(w) {
                    seen.insert(w);
                    stack.push(w);
                }
            }
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.component_within(0, &self.vertices()).len() == self.n
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, ", self.n)?;
        f.debug_list().entries(self.edges.iter().map(|e| (e.0, e.1))).finish()?;
        write!(f, ")")
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&graph6::write_graph6(self))
    }
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&graph6::write_graph6(self))
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        graph6::parse_graph6(&text).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn rejects_loops_and_parallel_edges() {
        assert_eq!(
            Graph::from_edges(3, [(1, 1)]).unwrap_err(),
            GraphError::Loop(1)
        );
        assert_eq!(
            Graph::from_edges(3, [(0, 1), (1, 0)]).unwrap_err(),
            GraphError::DuplicateEdge(Edge::new(0, 1))
        );
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        ));
        let merged = Graph::from_edges_merging(3, [(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(merged.edge_count(), 2);
    }

    #[test]
    fn edge_list_sorted_and_matches_rows() {
        let g = Graph::from_edges(4, [(3, 2), (0, 3), (1, 0)]).unwrap();
        assert_eq!(
            g.edges(),
            &[Edge::new(0, 1), Edge::new(0, 3), Edge::new(2, 3)]
        );
        for e in g.edges() {
            assert!(g.has_edge(e.u(), e.v()) && g.has_edge(e.v(), e.u()));
        }
        assert_eq!(g.degrees(), vec![2, 1, 1, 2]);
    }

    #[test]
    fn induced_edge_count_examples() {
        let k5 = fixtures::complete(5);
        assert_eq!(k5.induced_edge_count(&k5.vertices()), 10);
        assert_eq!(k5.induced_edge_count(&VertexSet::empty(5)), 0);
        let db = fixtures::double_banana();
        let banana = VertexSet::from_vertices(8, fixtures::DOUBLE_BANANA_LEFT);
        assert_eq!(db.induced_edge_count(&banana), 9);
    }

    #[test]
    fn cross_edge_count_examples() {
        let k33 = fixtures::complete_bipartite(3, 3);
        let left = VertexSet::from_vertices(6, 0..3);
        let right = VertexSet::from_vertices(6, 3..6);
        assert_eq!(k33.cross_edge_count(&left, &right), 9);
        assert_eq!(k33.cross_edge_count(&left, &left), 0);
        let k = fixtures::k66_minus();
        let a = VertexSet::from_vertices(12, 0..6);
        let b = VertexSet::from_vertices(12, 6..12);
        assert_eq!(k.cross_edge_count(&a, &b), 30);
    }

    #[test]
    fn cross_count_ignores_intersection() {
        // 0 is shared: edges 0-1 and 0-2 touch X ∩ Y and are not counted.
        let g = Graph::from_edges(3, [(0, 1), (0, 2), (1, 2)]).unwrap();
        let x = VertexSet::from_vertices(3, [0, 1]);
        let y = VertexSet::from_vertices(3, [0, 2]);
        assert_eq!(g.cross_edge_count(&x, &y), 1);
    }

    #[test]
    fn common_neighbour_examples() {
        let c4 = fixtures::cycle(4);
        assert_eq!(c4.common_neighbors(0, 2).to_vec(), vec![1, 3]);
        let k4 = fixtures::complete(4);
        assert_eq!(k4.common_neighbors(0, 1).to_vec(), vec![2, 3]);
        let k = fixtures::k66_minus();
        // matched pair a_1 b_1 is non-adjacent with no common neighbour;
        // two vertices on the same side share the four unmatched opposites
        assert!(k.common_neighbors(0, 6).is_empty());
        assert_eq!(k.common_neighbors(0, 1).len(), 4);
    }

    #[test]
    fn triangle_examples() {
        let k4 = fixtures::complete(4);
        for &e in k4.edges() {
            assert_eq!(k4.triangles_on_edge(e), Ok(2));
        }
        let k = fixtures::k66_minus();
        assert!(k.edges().iter().all(|&e| k.triangles_on_edge(e) == Ok(0)));
        let db = fixtures::double_banana();
        let (a, u) = (fixtures::DOUBLE_BANANA_LEFT[2], fixtures::DOUBLE_BANANA_HINGE[0]);
        assert_eq!(db.triangles_on_edge(Edge::new(a, u)), Ok(2));
        assert_eq!(
            k4.without_edge(Edge::new(0, 1))
                .unwrap()
                .triangles_on_edge(Edge::new(0, 1)),
            Err(GraphError::NotAnEdge(Edge::new(0, 1)))
        );
    }

    #[test]
    fn remove_vertex_relabels() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let h = g.remove_vertex(1);
        assert_eq!(h.n(), 3);
        assert_eq!(h.edges(), &[Edge::new(1, 2)]);
    }

    #[test]
    fn induced_subgraph_maps_back() {
        let g = fixtures::double_banana();
        let x = VertexSet::from_vertices(8, fixtures::DOUBLE_BANANA_LEFT);
        let (h, map) = g.induced_subgraph(&x);
        assert_eq!(h.n(), 5);
        assert_eq!(h.edge_count(), 9);
        assert_eq!(map, fixtures::DOUBLE_BANANA_LEFT.to_vec());
    }
}
