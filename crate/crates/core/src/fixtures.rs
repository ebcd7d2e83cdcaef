//! Named graphs used throughout the test suites and the CLI gallery.

use crate::graph::{Edge, Graph, Vertex};

/// Hinge vertices `u, v` shared by the two bananas.
pub const DOUBLE_BANANA_HINGE: [Vertex; 2] = [0, 1];
/// Hinge plus apexes `a, b, c` of the first banana.
pub const DOUBLE_BANANA_LEFT: [Vertex; 5] = [0, 1, 2, 3, 4];
/// Hinge plus apexes `d, e, f` of the second banana.
pub const DOUBLE_BANANA_RIGHT: [Vertex; 5] = [0, 1, 5, 6, 7];

pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|j| (0..j).map(move |i| Edge::new(i, j)));
    Graph::from_edges(n, edges).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    Graph::from_edges(n, (0..n).map(|i| Edge::new(i, (i + 1) % n))).unwrap()
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| Edge::new(i - 1, i))).unwrap()
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges = (0..a).flat_map(|i| (a..a + b).map(move |j| Edge::new(i, j)));
    Graph::from_edges(a + b, edges).unwrap()
}

/// `K_{d+2,d+2}`, dependent in dimension `d` for `d >= 4` yet `d`-sparse.
pub fn k_d2_d2(d: usize) -> Graph {
    complete_bipartite(d + 2, d + 2)
}

/// `K_{6,6}` minus the perfect matching `a_i b_i`, with `a_i = i` and
/// `b_i = 6 + i`.
pub fn k66_minus() -> Graph {
    let edges = (0..6).flat_map(|i| {
        (0..6)
            .filter(move |&j| j != i)
            .map(move |j| Edge::new(i, 6 + j))
    });
    Graph::from_edges(12, edges).unwrap()
}

/// `K_5` with the edge `0 1` removed.
pub fn k5_minus_edge() -> Graph {
    complete(5).without_edge(Edge::new(0, 1)).unwrap()
}

/// Two copies of `K_5 - e` glued along the endpoints of the missing edge.
pub fn double_banana() -> Graph {
    let banana = |side: [Vertex; 5]| {
        let mut e = Vec::new();
        for j in 0..5 {
            for i in 0..j {
                if (side[i], side[j]) != (0, 1) {
                    e.push(Edge::new(side[i], side[j]));
                }
            }
        }
        e
    };
    let mut edges = banana(DOUBLE_BANANA_LEFT);
    edges.extend(banana(DOUBLE_BANANA_RIGHT));
    Graph::from_edges(8, edges).unwrap()
}

/// The 2-sum of two copies of `K_5`: glue along an edge, then delete it.
/// Isomorphic (in fact equal, with these labels) to [`double_banana`].
pub fn two_sum_k5() -> Graph {
    let mut edges: Vec<Edge> = complete(5).edges().to_vec();
    let shifted = [0, 1, 5, 6, 7];
    edges.extend(
        complete(5)
            .edges()
            .iter()
            .map(|e| Edge::new(shifted[e.u()], shifted[e.v()])),
    );
    edges.retain(|&e| e != Edge::new(0, 1));
    Graph::from_edges_merging(8, edges).unwrap()
}

/// `K_{2,2,2}` with antipodal pairs `{0,1}`, `{2,3}`, `{4,5}`.
pub fn octahedron() -> Graph {
    let mut edges = Vec::new();
    for j in 0..6 {
        for i in 0..j {
            if i / 2 != j / 2 {
                edges.push(Edge::new(i, j));
            }
        }
    }
    Graph::from_edges(6, edges).unwrap()
}

/// Petersen graph in the usual outer-cycle/spoke/pentagram labelling.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push(Edge::new(i, (i + 1) % 5));
        edges.push(Edge::new(i, i + 5));
        edges.push(Edge::new(5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, edges).unwrap()
}
