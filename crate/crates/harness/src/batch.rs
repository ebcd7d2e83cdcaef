//! Corpus verification: for each connected 5-regular graph, 3-sparsity
//! implies `R_3`-independence.

use std::io::{self, BufRead};
use std::time::Instant;

use rayon::prelude::*;
use rigidkit::graph::graph6::parse_graph6;
use rigidkit::reduction::{certify_independent, verify_certificate};
use rigidkit::rigidity::{generic_rank, graph_seed, is_independent_with, P1, P2};
use rigidkit::sparsity::is_3_sparse;
use rigidkit::Graph;
use serde::{Deserialize, Serialize};

pub const SCHEMA: u32 = 1;
/// Lines handed to the worker pool at a time.
pub const CHUNK: usize = 4096;
/// Connected 5-regular graphs on 12 and 14 vertices.
pub const CONNECTED_5_REGULAR_12: usize = 7848;
pub const CONNECTED_5_REGULAR_14: usize = 3_459_383;

#[derive(Clone, Debug)]
pub struct BatchConfig {
    pub seed: u64,
    pub trials: usize,
    pub jobs: usize,
    pub certificates: bool,
    pub expected: Option<usize>,
}

impl Default for BatchConfig {
    fn default() -> Self {
        BatchConfig {
            seed: rigidkit::rigidity::DEFAULT_SEED,
            trials: rigidkit::rigidity::DEFAULT_TRIALS,
            jobs: rayon::current_num_threads(),
            certificates: false,
            expected: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub index: usize,
    pub graph6: String,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub seed: String,
    pub primes: Vec<String>,
    pub trials: usize,
    pub jobs: usize,
    pub certificates: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BatchReport {
    pub schema: u32,
    pub input_count: usize,
    pub connected_5regular_count: usize,
    pub sparse_count: usize,
    pub independent_count: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certified_count: Option<usize>,
    pub failures: Vec<Failure>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected_connected_5regular: Option<usize>,
    pub config: ConfigEcho,
    pub wall_time_seconds: f64,
}

impl BatchReport {
    /// No failures and, if an expected count was given, it matched.
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
            && self
                .expected_connected_5regular
                .is_none_or(|e| e == self.connected_5regular_count)
    }

    /// The report with `wall_time_seconds` zeroed, for reproducibility checks.
    pub fn without_timing(&self) -> BatchReport {
        BatchReport {
            wall_time_seconds: 0.0,
            ..self.clone()
        }
    }
}

enum Outcome {
    Malformed(String),
    Skipped,
    NotSparse,
    Independent { certified: Option<Result<(), String>> },
    Failed(String),
}

fn check_graph(g: &Graph, seed: u64, cfg: &BatchConfig) -> Outcome {
    if g.regular_degree() != Some(5) || !g.is_connected() {
        return Outcome::Skipped;
    }
    if !is_3_sparse(g).sparse {
        // a full-rank evaluation would certify independence of a
        // non-sparse graph, which is impossible
        let r = generic_rank(g, 3, 1, seed);
        if r.rank == g.edge_count() {
            return Outcome::Failed(format!("not 3-sparse yet rank {} = |E|", r.rank));
        }
        return Outcome::NotSparse;
    }
    let v = is_independent_with(g, 3, cfg.trials, seed);
    if !v.holds {
        return Outcome::Failed(format!(
            "3-sparse but rank {} < {} edges",
            v.rank.rank,
            g.edge_count()
        ));
    }
    let certified = cfg.certificates.then(|| {
        let cert = certify_independent(g, seed).map_err(|e| e.to_string())?;
        verify_certificate(&cert, g, seed.wrapping_add(1)).map_err(|f| f.to_string())
    });
    Outcome::Independent { certified }
}

fn check_line(index: usize, line: &str, cfg: &BatchConfig) -> Outcome {
    match parse_graph6(line) {
        Ok(g) => check_graph(&g, graph_seed(cfg.seed, index as u64), cfg),
        Err(e) => Outcome::Malformed(e.to_string()),
    }
}

/// Reads graph6 lines, checks them on `cfg.jobs` workers, and aggregates in
/// input order. Blank lines are ignored and do not consume an index.
pub fn verify_corpus<R: BufRead>(input: R, cfg: &BatchConfig) -> io::Result<BatchReport> {
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs.max(1))
        .build()
        .map_err(io::Error::other)?;
    let mut report = BatchReport {
        schema: SCHEMA,
        input_count: 0,
        connected_5regular_count: 0,
        sparse_count: 0,
        independent_count: 0,
        certified_count: cfg.certificates.then_some(0),
        failures: Vec::new(),
        expected_connected_5regular: cfg.expected,
        config: ConfigEcho {
            seed: cfg.seed.to_string(),
            primes: vec![P1.to_string(), P2.to_string()],
            trials: cfg.trials,
            jobs: cfg.jobs.max(1),
            certificates: cfg.certificates,
        },
        wall_time_seconds: 0.0,
    };
    let mut lines = input.lines();
    let mut chunk: Vec<(usize, String)> = Vec::with_capacity(CHUNK);
    loop {
        chunk.clear();
        for line in lines.by_ref() {
            let line = line?;
            let line = line.trim_end_matches('\r');
            if line.is_empty() {
                continue;
            }
            chunk.push((report.input_count + chunk.len(), line.to_string()));
            if chunk.len() == CHUNK {
                break;
            }
        }
        if chunk.is_empty() {
            break;
        }
        let outcomes: Vec<Outcome> = pool.install(|| {
            chunk
                .par_iter()
                .map(|(i, l)| check_line(*i, l, cfg))
                .collect()
        });
        for ((index, line), outcome) in chunk.iter().zip(outcomes) {
            report.input_count += 1;
            let mut fail = |reason: String| {
                report.failures.push(Failure {
                    index: *index,
                    graph6: line.clone(),
                    reason,
                })
            };
            match outcome {
                Outcome::Malformed(e) => fail(format!("malformed graph6: {e}")),
                Outcome::Skipped => {}
                Outcome::NotSparse => report.connected_5regular_count += 1,
                Outcome::Failed(reason) => {
                    report.connected_5regular_count += 1;
                    if reason.starts_with("3-sparse") {
                        report.sparse_count += 1;
                    }
                    fail(reason);
                }
                Outcome::Independent { certified } => {
                    report.connected_5regular_count += 1;
                    report.sparse_count += 1;
                    report.independent_count += 1;
                    match certified {
                        Some(Ok(())) => *report.certified_count.as_mut().expect("enabled") += 1,
                        Some(Err(e)) => fail(format!("certificate: {e}")),
                        None => {}
                    }
                }
            }
        }
    }
    report.wall_time_seconds = start.elapsed().as_secs_f64();
    Ok(report)
}
