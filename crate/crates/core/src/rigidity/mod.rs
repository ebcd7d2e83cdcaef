//! The generic `d`-dimensional rigidity matroid as a numeric oracle.
//!
//! Ranks are computed at random integer configurations, either modulo a
//! 62-bit prime or exactly over `Q`. Specialising points can only lower the
//! rank, so every computed rank is a lower bound on the generic rank. A
//! verdict that reaches its target (`|E|` for independence, `d|V| - C(d+1,2)`
//! for rigidity) is therefore certified; one that falls short is retried
//! with a second prime and then exactly before it is reported.

mod exact;
mod modp;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Edge, Graph, GraphError, VertexSet};

/// `2^62 - 57`.
pub const P1: u64 = 4_611_686_018_427_387_847;
/// `2^62 - 87`.
pub const P2: u64 = 4_611_686_018_427_387_817;
/// Coordinates are drawn uniformly from `[-2^COORD_BITS, 2^COORD_BITS)`.
pub const COORD_BITS: u32 = 40;
pub const DEFAULT_TRIALS: usize = 3;
pub const DEFAULT_SEED: u64 = 0x005E_ED0F_C0DE;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RigidityError {
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("configuration has {have} points, graph has {need} vertices")]
    MissingPoint { have: usize, need: usize },
    #[error("point {vertex} has {len} coordinates, expected {d}")]
    PointDimension { vertex: usize, len: usize, d: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SubstitutionError {
    #[error("substituted vertex set must be a proper subset of V")]
    NotProper,
    #[error("{0} is not minimally rigid")]
    NotMinimallyRigid(&'static str),
    #[error("replacement edge {0} leaves the substituted vertex set")]
    EdgeOutside(Edge),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Integer points for every vertex. The same coordinates are used over
/// `GF(p)` and over `Q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Configuration {
    pub d: usize,
    pub points: Vec<Vec<i64>>,
    #[serde(with = "u64_string")]
    pub seed: u64,
}

impl Configuration {
    /// Points drawn from ChaCha20 keyed by `seed`, on stream `stream`.
    pub fn random(n: usize, d: usize, seed: u64, stream: u64) -> Self {
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        let half = 1i64 << COORD_BITS;
        let points = (0..n)
            .map(|_| (0..d).map(|_| rng.gen_range(-half..half)).collect())
            .collect();
        Configuration { d, points, seed }
    }
}

/// Dense `|E| x d|V|` matrix; the row of `uv` holds `p(u) - p(v)` in the
/// block of `u` and `p(v) - p(u)` in the block of `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RigidityMatrix {
    pub rows: usize,
    pub cols: usize,
    pub d: usize,
    pub entries: Vec<i64>,
}

impl RigidityMatrix {
    pub fn row(&self, r: usize) -> &[i64] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn rank_mod(&self, p: u64) -> usize {
        modp::rank_mod_p(&self.entries, self.rows, self.cols, p)
    }

    pub fn rank_rational(&self) -> usize {
        exact::rank_rational(&self.entries, self.rows, self.cols)
    }
}

pub fn build_rigidity_matrix(g: &Graph, p: &Configuration) -> Result<RigidityMatrix, RigidityError> {
    let d = p.d;
    if d == 0 {
        return Err(RigidityError::ZeroDimension);
    }
    if p.points.len() < g.n() {
        return Err(RigidityError::MissingPoint {
            have: p.points.len(),
            need: g.n(),
        });
    }
    if let Some((vertex, pt)) = p.points.iter().enumerate().find(|(_, pt)| pt.len() != d) {
        return Err(RigidityError::PointDimension {
            vertex,
            len: pt.len(),
            d,
        });
    }
    let cols = d * g.n();
    let mut entries = vec![0i64; g.edge_count() * cols];
    for (r, e) in g.edges().iter().enumerate() {
        let row = &mut entries[r * cols..(r + 1) * cols];
        for k in 0..d {
            let diff = p.points[e.u()][k] - p.points[e.v()][k];
            row[e.u() * d + k] = diff;
            row[e.v() * d + k] = -diff;
        }
    }
    Ok(RigidityMatrix {
        rows: g.edge_count(),
        cols,
        d,
        entries,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Certainty {
    /// One prime-field evaluation; a lower bound on the generic rank.
    CertifiedLowerBound,
    /// Maximum over several evaluations, possibly in two fields.
    MultiTrialProbabilistic,
    /// Includes an exact evaluation over `Q`.
    ExactRational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankResult {
    pub rank: usize,
    pub trials: usize,
    pub certainty: Certainty,
    #[serde(with = "u64_string")]
    pub seed: u64,
    /// Primes used, as decimal strings.
    pub primes: Vec<String>,
    /// Whether `rank` meets [`rank_upper_bound`].
    pub tight: bool,
}

/// `C(d+1, 2)`.
pub fn trivial_motions(d: usize) -> usize {
    d * (d + 1) / 2
}

/// `min(|E|, d|V| - C(d+1,2))` for `|V| >= d`, and `min(|E|, C(|V|,2))` below.
pub fn rank_upper_bound(g: &Graph, d: usize) -> usize {
    let n = g.n();
    let frame = if n >= d {
        d * n - trivial_motions(d)
    } else {
        n * n.saturating_sub(1) / 2
    };
    frame.min(g.edge_count())
}

/// Per-graph seed derived from a master seed and a corpus index.
pub fn graph_seed(master: u64, index: u64) -> u64 {
    let mut z = master ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn rank_at(g: &Graph, d: usize, seed: u64, stream: u64, field: Option<u64>) -> usize {
    let p = Configuration::random(g.n(), d, seed, stream);
    let m = build_rigidity_matrix(g, &p).expect("configuration covers the graph");
    match field {
        Some(prime) => m.rank_mod(prime),
        None => m.rank_rational(),
    }
}

/// Maximum rank over `trials` configurations mod [`P1`], stopping early once
/// the upper bound is reached.
pub fn generic_rank(g: &Graph, d: usize, trials: usize, seed: u64) -> RankResult {
    assert!(d >= 1 && trials >= 1);
    let bound = rank_upper_bound(g, d);
    let mut rank = 0;
    let mut used = 0;
    for t in 0..trials {
        used += 1;
        rank = rank.max(rank_at(g, d, seed, t as u64, Some(P1)));
        if rank == bound {
            break;
        }
    }
    RankResult {
        rank,
        trials: used,
        certainty: if used == 1 {
            Certainty::CertifiedLowerBound
        } else {
            Certainty::MultiTrialProbabilistic
        },
        seed,
        primes: vec![P1.to_string()],
        tight: rank == bound,
    }
}

/// One exact evaluation over `Q`.
pub fn generic_rank_exact(g: &Graph, d: usize, seed: u64) -> RankResult {
    assert!(d >= 1);
    let rank = rank_at(g, d, seed, 0, None);
    RankResult {
        rank,
        trials: 1,
        certainty: Certainty::ExactRational,
        seed,
        primes: Vec::new(),
        tight: rank == rank_upper_bound(g, d),
    }
}

/// Rank search that stops as soon as `target` is reached: `trials` rounds
/// mod [`P1`], then `trials` mod [`P2`], then one exact evaluation.
pub fn rank_towards(g: &Graph, d: usize, target: usize, trials: usize, seed: u64) -> RankResult {
    let first = generic_rank(g, d, trials, seed);
    if first.rank >= target {
        return first;
    }
    let mut rank = first.rank;
    let mut used = first.trials;
    for t in 0..trials {
        used += 1;
        rank = rank.max(rank_at(g, d, seed, (trials + t) as u64, Some(P2)));
        if rank >= target {
            break;
        }
    }
    let mut certainty = Certainty::MultiTrialProbabilistic;
    if rank < target {
        used += 1;
        rank = rank.max(rank_at(g, d, seed, (2 * trials) as u64, None));
        certainty = Certainty::ExactRational;
    }
    RankResult {
        rank,
        trials: used,
        certainty,
        seed,
        primes: vec![P1.to_string(), P2.to_string()],
        tight: rank == rank_upper_bound(g, d),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub holds: bool,
    pub rank: RankResult,
}

/// Rows of `R_d(G,p)` are generically independent.
pub fn is_independent(g: &Graph, d: usize, seed: u64) -> Verdict {
    is_independent_with(g, d, DEFAULT_TRIALS, seed)
}

pub fn is_independent_with(g: &Graph, d: usize, trials: usize, seed: u64) -> Verdict {
    let rank = rank_towards(g, d, g.edge_count(), trials, seed);
    Verdict {
        holds: rank.rank == g.edge_count(),
        rank,
    }
}

/// Complete on fewer than `d` vertices, otherwise rank `d|V| - C(d+1,2)`.
pub fn is_rigid(g: &Graph, d: usize, seed: u64) -> Verdict {
    is_rigid_with(g, d, DEFAULT_TRIALS, seed)
}

pub fn is_rigid_with(g: &Graph, d: usize, trials: usize, seed: u64) -> Verdict {
    let n = g.n();
    if n < d {
        let complete = g.edge_count() == n * n.saturating_sub(1) / 2;
        return Verdict {
            holds: complete,
            rank: rank_towards(g, d, g.edge_count(), trials, seed),
        };
    }
    let target = d * n - trivial_motions(d);
    let rank = rank_towards(g, d, target, trials, seed);
    Verdict {
        holds: rank.rank == target,
        rank,
    }
}

/// Rigid and independent.
pub fn is_minimally_rigid(g: &Graph, d: usize, seed: u64) -> bool {
    let n = g.n();
    let target = if n < d {
        n * n.saturating_sub(1) / 2
    } else {
        d * n - trivial_motions(d)
    };
    g.edge_count() == target && is_independent(g, d, seed).holds
}

/// Dependent, and independent after deleting any single edge.
pub fn is_circuit(g: &Graph, d: usize, seed: u64) -> Verdict {
    let whole = is_independent(g, d, seed);
    let holds = g.edge_count() >= 1
        && !whole.holds
        && g.edges().iter().all(|&e| {
            let h = g.without_edge(e).expect("edge of g");
            is_independent(&h, d, seed).holds
        });
    Verdict {
        holds,
        rank: whole.rank,
    }
}

/// Replaces the edges of the induced subgraph on `h_vertices` by
/// `h_prime_edges`. Both sides must be minimally rigid in dimension `d`.
pub fn isostatic_substitute(
    g: &Graph,
    h_vertices: &VertexSet,
    h_prime_edges: &[Edge],
    d: usize,
    seed: u64,
) -> Result<Graph, SubstitutionError> {
    if h_vertices.len() >= g.n() {
        return Err(SubstitutionError::NotProper);
    }
    let (h, labels) = g.induced_subgraph(h_vertices);
    if !is_minimally_rigid(&h, d, seed) {
        return Err(SubstitutionError::NotMinimallyRigid("H"));
    }
    let mut local = vec![usize::MAX; g.n()];
    for (i, &v) in labels.iter().enumerate() {
        local[v] = i;
    }
    let mut mapped = Vec::with_capacity(h_prime_edges.len());
    for &e in h_prime_edges {
        if !h_vertices.contains(e.u()) || !h_vertices.contains(e.v()) {
            return Err(SubstitutionError::EdgeOutside(e));
        }
        mapped.push(Edge::new(local[e.u()], local[e.v()]));
    }
    let h_prime = Graph::from_edges(h.n(), mapped)?;
    if !is_minimally_rigid(&h_prime, d, seed) {
        return Err(SubstitutionError::NotMinimallyRigid("H'"));
    }
    let kept = g
        .edges()
        .iter()
        .copied()
        .filter(|e| !(h_vertices.contains(e.u()) && h_vertices.contains(e.v())));
    Ok(Graph::from_edges(g.n(), kept.chain(h_prime_edges.iter().copied()))?)
}

pub(crate) mod u64_string {
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &u64, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<u64, D::Error> {
        String::deserialize(d)?.parse().map_err(D::Error::custom)
    }
}
