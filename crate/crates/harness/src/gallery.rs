//! Named graphs with tables of properties they are known to have.

use std::collections::BTreeMap;

use rigidkit::fixtures;
use rigidkit::reduction::reducible_moves;
use rigidkit::rigidity::{is_circuit, is_independent, is_rigid};
use rigidkit::sparsity::{is_d_sparse, is_d_tight};
use rigidkit::Graph;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

pub const NAMES: &[&str] = &[
    "k66minus",
    "double-banana",
    "two-sum-k5",
    "k55",
    "k_d2_d2(d)",
    "octahedron",
    "k_n(n)",
];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GalleryError {
    #[error("unknown fixture {0:?}; known: {known}", known = NAMES.join(", "))]
    Unknown(String),
    #[error("fixture parameter out of range: {0}")]
    Parameter(String),
}

#[derive(Clone, Debug, Serialize)]
pub struct Fixture {
    pub name: String,
    pub graph: Graph,
    /// Dimension the expectations refer to.
    pub d: usize,
    pub expected: BTreeMap<&'static str, Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Mismatch {
    pub property: String,
    pub expected: Value,
    pub actual: Value,
}

/// `k_d2_d2(4)`, `k_d2_d2:4`, `k_n(5)`, `k_n:5` and `k5` are accepted.
fn parameter(name: &str, prefix: &str) -> Option<Result<usize, GalleryError>> {
    let rest = name.strip_prefix(prefix)?;
    let inner = rest
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .or_else(|| rest.strip_prefix(':'))?;
    Some(
        inner
            .trim()
            .parse()
            .map_err(|_| GalleryError::Parameter(name.to_string())),
    )
}

pub fn gallery(name: &str) -> Result<Fixture, GalleryError> {
    let mut expected = BTreeMap::new();
    let (graph, d) = match name {
        "k66minus" => {
            expected.extend([
                ("vertices", json!(12)),
                ("edges", json!(30)),
                ("regular_degree", json!(5)),
                ("sparse", json!(true)),
                ("tight", json!(true)),
                ("triangle_free", json!(true)),
                ("reducible_moves", json!(0)),
                ("independent", json!(true)),
                ("rigid", json!(true)),
                ("rank", json!(30)),
            ]);
            (fixtures::k66_minus(), 3)
        }
        "double-banana" | "two-sum-k5" => {
            expected.extend([
                ("vertices", json!(8)),
                ("edges", json!(18)),
                ("sparse", json!(true)),
                ("independent", json!(false)),
                ("rigid", json!(false)),
                ("circuit", json!(true)),
                ("rank", json!(17)),
            ]);
            let g = if name == "two-sum-k5" {
                fixtures::two_sum_k5()
            } else {
                fixtures::double_banana()
            };
            (g, 3)
        }
        "k55" => {
            expected.extend([
                ("vertices", json!(10)),
                ("edges", json!(25)),
                ("regular_degree", json!(5)),
                ("sparse", json!(false)),
                ("independent", json!(false)),
                ("circuit", json!(true)),
                ("rank", json!(24)),
            ]);
            (fixtures::complete_bipartite(5, 5), 3)
        }
        "octahedron" => {
            expected.extend([
                ("vertices", json!(6)),
                ("edges", json!(12)),
                ("regular_degree", json!(4)),
                ("sparse", json!(true)),
                ("tight", json!(true)),
                ("independent", json!(true)),
                ("rigid", json!(true)),
                ("rank", json!(12)),
            ]);
            (fixtures::octahedron(), 3)
        }
        _ => {
            if let Some(d) = parameter(name, "k_d2_d2") {
                let d = d?;
                if !(1..=4).contains(&d) {
                    return Err(GalleryError::Parameter(name.to_string()));
                }
                expected.extend([
                    ("vertices", json!(2 * d + 4)),
                    ("edges", json!((d + 2) * (d + 2))),
                    ("regular_degree", json!(d + 2)),
                    ("sparse", json!(d >= 4)),
                    ("independent", json!(false)),
                ]);
                (fixtures::k_d2_d2(d), d)
            } else if let Some(n) = parameter(name, "k_n").or_else(|| {
                name.strip_prefix('k')
                    .filter(|r| !r.is_empty() && r.bytes().all(|b| b.is_ascii_digit()))
                    .map(|r| r.parse().map_err(|_| GalleryError::Parameter(name.into())))
            }) {
                let n = n?;
                if !(1..=24).contains(&n) {
                    return Err(GalleryError::Parameter(name.to_string()));
                }
                let m = n * (n - 1) / 2;
                let rank = if n >= 3 { m.min(3 * n - 6) } else { m };
                expected.extend([
                    ("vertices", json!(n)),
                    ("edges", json!(m)),
                    ("sparse", json!(n <= 4)),
                    ("independent", json!(n <= 4)),
                    ("rigid", json!(true)),
                    ("circuit", json!(n == 5)),
                    ("rank", json!(rank)),
                ]);
                (fixtures::complete(n), 3)
            } else {
                return Err(GalleryError::Unknown(name.to_string()));
            }
        }
    };
    Ok(Fixture {
        name: name.to_string(),
        graph,
        d,
        expected,
    })
}

/// Recomputes one named property of `g` in dimension `d`.
pub fn property(g: &Graph, d: usize, name: &str, seed: u64) -> Value {
    match name {
        "vertices" => json!(g.n()),
        "edges" => json!(g.edge_count()),
        "regular_degree" => json!(g.regular_degree()),
        "sparse" => json!(is_d_sparse(g, d).map(|v| v.sparse).ok()),
        "tight" => json!(is_d_tight(g, d).ok()),
        "triangle_free" => json!(g.is_triangle_free()),
        "reducible_moves" => json!(reducible_moves(g).len()),
        "independent" => json!(is_independent(g, d, seed).holds),
        "rigid" => json!(is_rigid(g, d, seed).holds),
        "circuit" => json!(is_circuit(g, d, seed).holds),
        "rank" => json!(is_independent(g, d, seed).rank.rank),
        other => json!({ "unknown_property": other }),
    }
}

impl Fixture {
    /// Every expected property that does not hold, recomputed with `seed`.
    pub fn verify(&self, seed: u64) -> Vec<Mismatch> {
        self.expected
            .iter()
            .filter_map(|(&k, want)| {
                let got = property(&self.graph, self.d, k, seed);
                (got != *want).then(|| Mismatch {
                    property: k.to_string(),
                    expected: want.clone(),
                    actual: got,
                })
            })
            .collect()
    }
}

/// Constructs and re-verifies a fixture.
pub fn load(name: &str, seed: u64) -> Result<(Fixture, Vec<Mismatch>), GalleryError> {
    let f = gallery(name)?;
    let m = f.verify(seed);
    Ok((f, m))
}
