use serde::{Deserialize, Serialize};

use super::{check_brute_size, is_3_sparse, SparsityError};
use crate::graph::iter_bits;
use crate::graph::{Graph, VertexSet};

/// Largest graph for which proper cores are enumerated exhaustively.
pub const CORE_SEARCH_LIMIT: usize = 20;

/// A vertex set `X` with `i(X) = 3|X| - k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KSetReport {
    pub set: VertexSet,
    pub k: i64,
    pub size: usize,
    pub is_core: bool,
    /// `d(X, V \ X)`.
    pub boundary_degree: usize,
}

pub fn k_set_value(g: &Graph, x: &VertexSet) -> KSetReport {
    let size = x.len();
    let rest = g.vertices().difference(x);
    KSetReport {
        set: x.clone(),
        k: 3 * size as i64 - g.induced_edge_count(x) as i64,
        size,
        is_core: !x.is_empty() && is_core(g, x),
        boundary_degree: g.cross_edge_count(x, &rest),
    }
}

/// Every `X` with `|X| >= min_size` and `k(X) <= k_max`, ordered by size and
/// then lexicographically.
///
/// In a 3-sparse graph every vertex of a `k`-set with `|X| >= 4` has induced
/// degree at least `9 - k`; the search drops branches that break this bound
/// once a vertex and all its neighbours have been decided.
pub fn enumerate_k_sets(
    g: &Graph,
    k_max: i64,
    min_size: usize,
) -> Result<Vec<KSetReport>, SparsityError> {
    check_brute_size(g)?;
    let n = g.n();
    let rows = g.row_masks().expect("n within word size");
    let prune = k_max <= 9 && min_size >= 4 && is_3_sparse(g).sparse;
    let need = if prune { (9 - k_max).max(0) as u32 } else { 0 };
    // settle[j]: vertices whose whole closed neighbourhood lies in 0..=j
    let mut settle = vec![0u64; n];
    for v in 0..n {
        let last = iter_bits(rows[v]).fold(v, usize::max);
        settle[last] |= 1 << v;
    }
    let mut found = Vec::new();
    let mut search = Search {
        rows: &rows,
        settle: &settle,
        need,
        k_max,
        min_size,
        found: &mut found,
    };
    if n > 0 {
        search.visit(0, 0, 0);
    } else if min_size == 0 && k_max >= 0 {
        found.push(0);
    }
    let mut reports: Vec<KSetReport> = found
        .into_iter()
        .map(|m| k_set_value(g, &VertexSet::from_mask(n, m)))
        .collect();
    reports.sort_by(|a, b| a.set.cmp(&b.set));
    Ok(reports)
}

struct Search<'a> {
    rows: &'a [u64],
    settle: &'a [u64],
    need: u32,
    k_max: i64,
    min_size: usize,
    found: &'a mut Vec<u64>,
}

impl Search<'_> {
    fn visit(&mut self, j: usize, mask: u64, count: i64) {
        if j == self.rows.len() {
            let size = mask.count_ones() as usize;
            if size >= self.min_size && 3 * size as i64 - count <= self.k_max {
                self.found.push(mask);
            }
            return;
        }
        for take in [false, true] {
            let (m, c) = if take {
                (mask | 1 << j, count + i64::from((self.rows[j] & mask).count_ones()))
            } else {
                (mask, count)
            };
            if self.need > 0 {
                let settled = self.settle[j] & m;
                if iter_bits(settled).any(|v| (self.rows[v] & m).count_ones() < self.need) {
                    continue;
                }
            }
            self.visit(j + 1, m, c);
        }
    }
}

/// `G[X]` has minimum degree at least 3 and no outside vertex has more than
/// two neighbours in `X`.
pub fn is_core(g: &Graph, x: &VertexSet) -> bool {
    if x.is_empty() {
        return false;
    }
    x.iter().all(|v| g.neighbors(v).intersection_len(x) >= 3)
        && (0..g.n())
            .filter(|v| !x.contains(*v))
            .all(|w| g.neighbors(w).intersection_len(x) <= 2)
}

/// Repeatedly absorbs outside vertices with at least three neighbours inside.
pub fn closure(g: &Graph, x: &VertexSet) -> VertexSet {
    let mut set = x.clone();
    loop {
        let next = (0..g.n())
            .find(|&w| !set.contains(w) && g.neighbors(w).intersection_len(&set) >= 3);
        match next {
            Some(w) => set.insert(w),
            None => return set,
        }
    }
}

/// All cores other than `V`, ordered by size and then lexicographically.
pub fn proper_cores(g: &Graph) -> Result<Vec<VertexSet>, SparsityError> {
    let n = g.n();
    if n > CORE_SEARCH_LIMIT {
        return Err(SparsityError::TooLarge {
            n,
            limit: CORE_SEARCH_LIMIT,
        });
    }
    let rows = g.row_masks().expect("n within word size");
    let full = if n == 0 { 0 } else { (1u64 << n) - 1 };
    let mut cores: Vec<VertexSet> = (1..full)
        .filter(|&m| m.count_ones() >= 4)
        .filter(|&m| iter_bits(m).all(|v| (rows[v] & m).count_ones() >= 3))
        .filter(|&m| iter_bits(full & !m).all(|w| (rows[w] & m).count_ones() <= 2))
        .map(|m| VertexSet::from_mask(n, m))
        .collect();
    cores.sort();
    Ok(cores)
}

/// Proper cores not contained in a larger proper core.
pub fn maximal_proper_cores(g: &Graph) -> Result<Vec<VertexSet>, SparsityError> {
    let cores = proper_cores(g)?;
    Ok(cores
        .iter()
        .filter(|c| !cores.iter().any(|d| d != *c && c.is_subset(d)))
        .cloned()
        .collect())
}
