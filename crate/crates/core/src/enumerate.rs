//! Small graph generators for cross-checks: exhaustive labelled enumeration
//! for tiny `n` and seeded Erdős–Rényi samples. Isomorph rejection is left
//! to external tools such as nauty's `geng`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Edge, Graph};
use crate::sparsity::is_3_sparse;

/// Largest `n` accepted by [`all_graphs`] (2^21 labelled graphs).
pub const ALL_GRAPHS_LIMIT: usize = 7;

/// Every labelled simple graph on `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= ALL_GRAPHS_LIMIT, "labelled enumeration limited to n <= 7");
    let pairs: Vec<Edge> = (0..n)
        .flat_map(|j| (0..j).map(move |i| Edge::new(i, j)))
        .collect();
    let total = 1u64 << pairs.len();
    (0..total).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask & (1 << k) != 0)
            .map(|(_, &e)| e);
        Graph::from_edges(n, edges).unwrap()
    })
}

/// `G(n, p)` from a seeded generator.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_graph_with(&mut rng, n, p)
}

pub fn random_graph_with<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for j in 0..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                edges.push(Edge::new(i, j));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// `count` graphs with `n` uniform in `n_range` and density uniform in
/// `[0.15, 0.85]`, reproducible from `seed`.
pub fn random_corpus(count: usize, n_range: std::ops::RangeInclusive<usize>, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(n_range.clone());
            let p = rng.gen_range(0.15..0.85);
            random_graph_with(&mut rng, n, p)
        })
        .collect()
}

/// Inserts random pairs in shuffled order, keeping those that leave the
/// graph 3-sparse, until `max_edges` edges are placed or no pair is left.
pub fn random_sparse_graph(n: usize, max_edges: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs: Vec<Edge> = (0..n)
        .flat_map(|j| (0..j).map(move |i| Edge::new(i, j)))
        .collect();
    pairs.shuffle(&mut rng);
    let mut g = Graph::empty(n);
    for e in pairs {
        if g.edge_count() >= max_edges {
            break;
        }
        let h = g.with_edge(e.u(), e.v()).expect("fresh pair");
        if is_3_sparse(&h).sparse {
            g = h;
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labelled_counts() {
        assert_eq!(all_graphs(0).count(), 1);
        assert_eq!(all_graphs(3).count(), 8);
        assert_eq!(all_graphs(4).count(), 64);
        // labelled connected graphs on 4 vertices: 38
        assert_eq!(all_graphs(4).filter(Graph::is_connected).count(), 38);
    }

    #[test]
    fn sparse_generator_stays_sparse() {
        for seed in 0..5 {
            let g = random_sparse_graph(9, usize::MAX, seed);
            assert!(g.edge_count() <= 3 * 9 - 6);
            assert!(is_3_sparse(&g).sparse);
        }
        assert_eq!(random_sparse_graph(8, 10, 1).edge_count(), 10);
    }

    #[test]
    fn corpus_is_reproducible() {
        assert_eq!(random_corpus(20, 3..=9, 7), random_corpus(20, 3..=9, 7));
        assert_ne!(random_corpus(20, 3..=9, 7), random_corpus(20, 3..=9, 8));
    }
}
