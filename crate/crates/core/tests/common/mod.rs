#![allow(dead_code)]

use rigidkit::fixtures;
use rigidkit::graph::graph6::parse_graph6;
use rigidkit::sparsity::is_3_sparse;
use rigidkit::Graph;

pub fn corpus12() -> Vec<Graph> {
    let text = include_str!("../../../../data/conn5reg_n12.g6");
    text.lines().map(|l| parse_graph6(l).unwrap()).collect()
}

pub fn sparse_corpus12() -> Vec<Graph> {
    corpus12().into_iter().filter(|g| is_3_sparse(g).sparse).collect()
}

/// Every `step`-th graph of `v`.
pub fn every<T: Clone>(v: &[T], step: usize) -> Vec<T> {
    v.iter().step_by(step).cloned().collect()
}

pub fn named_fixtures() -> Vec<(&'static str, Graph)> {
    vec![
        ("k66minus", fixtures::k66_minus()),
        ("double-banana", fixtures::double_banana()),
        ("k55", fixtures::complete_bipartite(5, 5)),
        ("octahedron", fixtures::octahedron()),
        ("k5", fixtures::complete(5)),
        ("k5-e", fixtures::k5_minus_edge()),
        ("petersen", fixtures::petersen()),
        ("k44", fixtures::k_d2_d2(2)),
        ("k66", fixtures::k_d2_d2(4)),
    ]
}
