use serde::{Deserialize, Serialize};

use super::{Graph, GraphError};

/// Vertex-connectivity class of a graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Connectivity {
    Disconnected,
    ConnectedNotTwoConnected,
    TwoConnected,
}

/// Largest graph for which edge cuts are searched exhaustively.
pub const EDGE_CUT_SEARCH_LIMIT: usize = 24;

impl Graph {
    /// Standard classification: 2-connected means at least three vertices and
    /// no cut vertex, so `K_1` and `K_2` are connected but not 2-connected.
    pub fn connectivity(&self) -> Connectivity {
        if !self.is_connected() {
            return Connectivity::Disconnected;
        }
        if self.n < 3 || self.has_cut_vertex() {
            Connectivity::ConnectedNotTwoConnected
        } else {
            Connectivity::TwoConnected
        }
    }

    pub fn is_two_connected(&self) -> bool {
        self.connectivity() == Connectivity::TwoConnected
    }

    fn has_cut_vertex(&self) -> bool {
        // Tarjan low-link, iterative.
        let n = self.n;
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut time = 0;
        let root = 0;
        let mut root_children = 0;
        let neighbours: Vec<Vec<usize>> = (0..n).map(|v| self.rows[v].to_vec()).collect();
        // (vertex, parent, next neighbour index)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        disc[root] = time;
        low[root] = time;
        time += 1;
        while let Some(&mut (v, parent, ref mut next)) = stack.last_mut() {
            if *next < neighbours[v].len() {
                let w = neighbours[v][*next];
                *next += 1;
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, 0));
                } else if w != parent {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[v]);
                    if parent != root && low[v] >= disc[parent] {
                        return true;
                    }
                }
            }
        }
        root_children > 1
    }

    /// True iff every edge cutset with fewer than `k` edges leaves an isolated
    /// vertex as one of its components.
    ///
    /// Any violating cutset `S` contains the coboundary of one of its
    /// components `C`, and removing just `δ(C)` leaves components that are
    /// unions of components of `G - S`. So it suffices to scan vertex sets `A`
    /// and test whether `G - δ(A)` has no singleton component.
    pub fn is_essentially_k_edge_connected(&self, k: usize) -> Result<bool, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        if self.n > EDGE_CUT_SEARCH_LIMIT {
            return Err(GraphError::TooLarge {
                n: self.n,
                limit: EDGE_CUT_SEARCH_LIMIT,
            });
        }
        if self.n < 4 {
            return Ok(true);
        }
        let rows = self.row_masks().expect("n within word size");
        let full = (1u64 << self.n) - 1;
        // vertex 0 always on the A side; |A| >= 2 and |V \ A| >= 2
        for rest in 0..(1u64 << (self.n - 1)) {
            let a = (rest << 1) | 1;
            let b = full & !a;
            if a.count_ones() < 2 || b.count_ones() < 2 {
                continue;
            }
            let cut: u32 = iter_bits(a).map(|v| (rows[v] & b).count_ones()).sum();
            if cut as usize >= k {
                continue;
            }
            let no_singleton = |side: u64| iter_bits(side).all(|v| rows[v] & side != 0);
            if no_singleton(a) && no_singleton(b) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub(crate) fn iter_bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn two_triangles_sharing_vertex() -> Graph {
        Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap()
    }

    #[test]
    fn classification_examples() {
        let two = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(two.connectivity(), Connectivity::Disconnected);
        assert_eq!(
            two_triangles_sharing_vertex().connectivity(),
            Connectivity::ConnectedNotTwoConnected
        );
        assert_eq!(fixtures::k66_minus().connectivity(), Connectivity::TwoConnected);
        assert_eq!(Graph::empty(1).connectivity(), Connectivity::ConnectedNotTwoConnected);
        assert_eq!(
            fixtures::complete(2).connectivity(),
            Connectivity::ConnectedNotTwoConnected
        );
        assert_eq!(fixtures::complete(3).connectivity(), Connectivity::TwoConnected);
        assert_eq!(fixtures::cycle(7).connectivity(), Connectivity::TwoConnected);
    }

    #[test]
    fn path_has_cut_vertices() {
        let p = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(p.connectivity(), Connectivity::ConnectedNotTwoConnected);
    }

    #[test]
    fn cut_vertex_agrees_with_deletion_oracle() {
        for g in crate::enumerate::all_graphs(5) {
            if !g.is_connected() || g.n() < 3 {
                continue;
            }
            let oracle = (0..g.n()).any(|v| !g.remove_vertex(v).is_connected());
            assert_eq!(g.has_cut_vertex(), oracle, "{g:?}");
        }
    }

    #[test]
    fn essential_edge_connectivity_examples() {
        assert_eq!(fixtures::complete(4).is_essentially_k_edge_connected(3), Ok(true));
        // path on three vertices: every cut isolates an endpoint
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.is_essentially_k_edge_connected(2), Ok(true));
        // two triangles joined by a bridge
        let bridged =
            Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)]).unwrap();
        assert_eq!(bridged.is_essentially_k_edge_connected(2), Ok(false));
        assert_eq!(fixtures::octahedron().is_essentially_k_edge_connected(4), Ok(true));
        // the cut around two adjacent octahedron vertices has 6 edges
        assert_eq!(fixtures::octahedron().is_essentially_k_edge_connected(7), Ok(false));
        let disc = Graph::empty(3);
        assert_eq!(
            disc.is_essentially_k_edge_connected(1),
            Err(GraphError::Disconnected)
        );
    }
}
