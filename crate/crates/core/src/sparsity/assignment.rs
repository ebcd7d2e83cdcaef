//! Edge-to-endpoint assignment with vertex capacities, grown by augmenting
//! paths in the style of the pebble game.

use std::collections::VecDeque;

use crate::graph::{Graph, Vertex, VertexSet};

const CAPACITY: u32 = 3;

#[derive(Clone)]
struct Assignment {
    /// Current owner of each edge, indexed like `Graph::edges`.
    owner: Vec<Vertex>,
    load: Vec<u32>,
    cap: Vec<u32>,
    /// Edge indices incident to each vertex.
    incident: Vec<Vec<usize>>,
}

impl Assignment {
    /// Moves one unit of load away from `src` along a path of owned edges to
    /// a vertex with spare capacity. On failure returns the reachable set,
    /// whose induced edges all belong to its members and exceed their
    /// capacity.
    fn relieve(&mut self, g: &Graph, src: Vertex) -> Result<(), VertexSet> {
        let n = g.n();
        let mut parent: Vec<Option<usize>> = vec![None; n];
        let mut seen = VertexSet::empty(n);
        seen.insert(src);
        let mut queue = VecDeque::from([src]);
        while let Some(x) = queue.pop_front() {
            for &e in &self.incident[x] {
                if self.owner[e] != x {
                    continue;
                }
                let y = g.edges()[e].other(x);
                if seen.contains(y) {
                    continue;
                }
                seen.insert(y);
                parent[y] = Some(e);
                if self.load[y] < self.cap[y] {
                    self.flip_path(g, y, &parent);
                    self.load[src] -= 1;
                    self.load[y] += 1;
                    return Ok(());
                }
                queue.push_back(y);
            }
        }
        Err(seen)
    }

    fn flip_path(&mut self, g: &Graph, end: Vertex, parent: &[Option<usize>]) {
        let mut y = end;
        while let Some(e) = parent[y] {
            let x = g.edges()[e].other(y);
            self.owner[e] = y;
            y = x;
        }
    }
}

/// Returns a violating set of a graph that is not 3-sparse.
pub(super) fn find_violation(g: &Graph) -> Option<VertexSet> {
    let n = g.n();
    let mut incident = vec![Vec::new(); n];
    for (k, e) in g.edges().iter().enumerate() {
        incident[e.u()].push(k);
        incident[e.v()].push(k);
    }
    let mut base = Assignment {
        owner: vec![usize::MAX; g.edge_count()],
        load: vec![0; n],
        cap: vec![CAPACITY; n],
        incident,
    };
    for (k, e) in g.edges().iter().enumerate() {
        let (a, b) = (e.u(), e.v());
        if base.load[a] < CAPACITY {
            base.owner[k] = a;
            base.load[a] += 1;
        } else if base.load[b] < CAPACITY {
            base.owner[k] = b;
            base.load[b] += 1;
        } else {
            base.owner[k] = a;
            base.load[a] += 1;
            // i(R) > 3|R| for the reachable set R; a fortiori violating
            if let Err(reach) = base.relieve(g, a) {
                return Some(reach);
            }
        }
    }
    if n < 3 {
        return None;
    }
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if let Some(set) = anchored(g, &base, [a, b, c]) {
                    return Some(set);
                }
            }
        }
    }
    None
}

fn anchored(g: &Graph, base: &Assignment, anchor: [Vertex; 3]) -> Option<VertexSet> {
    let mut state = base.clone();
    for &t in &anchor {
        state.cap[t] = 1;
    }
    for &t in &anchor {
        while state.load[t] > state.cap[t] {
            if let Err(reach) = state.relieve(g, t) {
                return Some(reach);
            }
        }
    }
    None
}
