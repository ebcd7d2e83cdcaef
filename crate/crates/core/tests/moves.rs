mod common;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rigidkit::enumerate::random_corpus;
use rigidkit::fixtures;
use rigidkit::moves::{
    contract, contraction_inverse, edge_contract, one_extension, one_reduction, spider_contract,
    spider_split, split_specs, subsets_of_size, vertex_split, zero_extension, ContractionKind,
    ContractionSpec,
};
use rigidkit::reduction::reducible_moves;
use rigidkit::rigidity::is_independent;
use rigidkit::{Edge, Graph, VertexSet};

const D: usize = 3;
const SEED: u64 = 77;

fn small_independent_fixtures() -> Vec<Graph> {
    let banana_minus = fixtures::double_banana()
        .without_edge(Edge::new(0, 2))
        .unwrap();
    vec![
        fixtures::complete(3),
        fixtures::complete(4),
        fixtures::k5_minus_edge(),
        fixtures::octahedron(),
        fixtures::complete_bipartite(3, 3),
        fixtures::complete_bipartite(3, 4),
        fixtures::cycle(6),
        banana_minus,
    ]
}

#[test]
fn fixtures_used_for_preservation_are_independent() {
    for g in small_independent_fixtures() {
        assert!(g.n() <= 8);
        assert!(is_independent(&g, D, SEED).holds, "{g:?}");
    }
}

#[test]
fn splits_preserve_independence() {
    for g in small_independent_fixtures() {
        for v in 0..g.n() {
            for spider in [false, true] {
                for spec in split_specs(&g, v, D, spider) {
                    let h = if spider {
                        spider_split(&g, &spec, D)
                    } else {
                        vertex_split(&g, &spec, D)
                    }
                    .unwrap();
                    assert_eq!(h.edge_count(), g.edge_count() + D);
                    assert!(is_independent(&h, D, SEED).holds, "{g:?} {spec:?}");
                }
            }
        }
    }
}

#[test]
fn extensions_preserve_independence() {
    for g in small_independent_fixtures() {
        let all: Vec<usize> = (0..g.n()).collect();
        for nb in subsets_of_size(&all, D) {
            let h = zero_extension(&g, &VertexSet::from_vertices(g.n(), nb), D).unwrap();
            assert_eq!(h.edge_count(), g.edge_count() + D);
            assert!(is_independent(&h, D, SEED).holds);
        }
        for &e in g.edges() {
            let others: Vec<usize> = all.iter().copied().filter(|&x| !e.contains(x)).collect();
            for extra in subsets_of_size(&others, D - 1) {
                let nb = VertexSet::from_vertices(g.n(), extra).with(e.u()).with(e.v());
                let h = one_extension(&g, e, &nb, D).unwrap();
                assert_eq!(h.edge_count(), g.edge_count() + D);
                assert!(is_independent(&h, D, SEED).holds, "{g:?} {e} {nb:?}");
                assert_eq!(one_reduction(&h, g.n(), e, D).unwrap(), g);
            }
        }
    }
}

#[test]
fn contraction_edge_counts() {
    for g in random_corpus(300, 3..=11, 5) {
        for &e in g.edges() {
            let t = g.common_neighbors(e.u(), e.v()).len();
            let h = edge_contract(&g, e).unwrap();
            assert_eq!(h.n(), g.n() - 1);
            assert_eq!(h.edge_count(), g.edge_count() - 1 - t);
        }
        for v in 1..g.n() {
            if g.has_edge(0, v) {
                continue;
            }
            let c = g.common_neighbors(0, v).len();
            let h = spider_contract(&g, 0, v).unwrap();
            assert_eq!(h.edge_count(), g.edge_count() - c);
        }
    }
}

#[test]
fn random_split_specs_add_d_edges() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for g in random_corpus(300, 3..=11, 7) {
        for d in 1..=4 {
            let v = rng.gen_range(0..g.n());
            for spider in [false, true] {
                let specs = split_specs(&g, v, d, spider);
                let Some(spec) = specs.choose(&mut rng) else {
                    continue;
                };
                let mut spec = spec.clone();
                spec.insert_at = Some(rng.gen_range(0..=g.n()));
                let h = if spider {
                    spider_split(&g, &spec, d)
                } else {
                    vertex_split(&g, &spec, d)
                }
                .unwrap();
                assert_eq!(h.n(), g.n() + 1);
                assert_eq!(h.edge_count(), g.edge_count() + d);
            }
        }
    }
}

fn assert_round_trip(g: &Graph, c: &ContractionSpec) {
    let contracted = contract(g, c).unwrap();
    if let Some(inv) = contraction_inverse(g, c, D).unwrap() {
        assert_eq!(inv.apply(&contracted, D).unwrap(), *g, "{c:?}");
        let common = g.common_neighbors(c.pair.0, c.pair.1).len();
        let k = if c.kind == ContractionKind::Spider { D } else { D - 1 };
        assert_eq!(inv.is_exact(), common == k);
    }
}

#[test]
fn contraction_inverse_round_trips_on_corpus() {
    for g in common::every(&common::corpus12(), 7) {
        for mv in reducible_moves(&g) {
            assert_round_trip(&g, &mv.contraction());
        }
    }
}

#[test]
fn contraction_inverse_round_trips_on_random_graphs() {
    for g in random_corpus(300, 4..=10, 8) {
        for b in 1..g.n() {
            let kind = if g.has_edge(0, b) {
                ContractionKind::Edge
            } else {
                ContractionKind::Spider
            };
            assert_round_trip(&g, &ContractionSpec { kind, pair: (0, b) });
        }
    }
}

#[test]
fn exact_inverse_with_triangle_partners_shared() {
    // two triangles on 0 1: partners 2, 3 become the shared pair
    let g = fixtures::octahedron();
    let c = ContractionSpec {
        kind: ContractionKind::Edge,
        pair: (0, 2),
    };
    let inv = contraction_inverse(&g, &c, D).unwrap().unwrap();
    assert!(inv.is_exact());
    assert_eq!(inv.spec.shared, vec![3, 4]);
}
