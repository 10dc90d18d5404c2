//! All-pairs hop distances by per-vertex BFS, plus diameter, girth and
//! distance-layer queries.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Exact hop distances between all vertex pairs of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u8>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> usize {
        self.dist[u * self.n + v] as usize
    }

    /// Row of distances from `v`, one entry per vertex.
    pub fn row(&self, v: usize) -> &[u8] {
        &self.dist[v * self.n..(v + 1) * self.n]
    }

    pub fn max_entry(&self) -> usize {
        self.dist.iter().copied().max().unwrap_or(0) as usize
    }
}

const UNREACHED: u8 = u8::MAX;

/// BFS from every vertex. Errs with a witness pair if the graph is
/// disconnected.
pub fn distances(g: &Graph) -> Result<DistanceMatrix> {
    let n = g.n();
    let mut dist = vec![UNREACHED; n * n];
    for src in 0..n {
        let row = &mut dist[src * n..(src + 1) * n];
        row[src] = 0;
        let mut seen = VertexSet::singleton(src);
        let mut frontier = seen;
        let mut depth = 0u8;
        while !frontier.is_empty() {
            depth += 1;
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next = next.union(g.neighbors(v));
            }
            frontier = next.difference(seen);
            seen = seen.union(frontier);
            for v in frontier.iter() {
                row[v] = depth;
            }
        }
        if seen != VertexSet::full(n) {
            let v = VertexSet::full(n).difference(seen).min().unwrap();
            return Err(Error::Disconnected(src, v));
        }
    }
    Ok(DistanceMatrix { n, dist })
}

pub fn diameter(g: &Graph) -> Result<usize> {
    Ok(distances(g)?.max_entry())
}

/// Girth of a graph; acyclic graphs get a distinguished marker instead of a
/// number.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Girth {
    Cycle(usize),
    Acyclic,
}

impl Girth {
    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Cycle(g) => Some(g),
            Girth::Acyclic => None,
        }
    }
}

impl std::fmt::Display for Girth {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Girth::Cycle(g) => write!(f, "{g}"),
            Girth::Acyclic => write!(f, "acyclic"),
        }
    }
}

/// Shortest cycle length via BFS from every root: a non-tree edge seen at
/// depths a and b closes a cycle of length at most a+b+1, and the minimum
/// over all roots is exact.
pub fn girth(g: &Graph) -> Result<Girth> {
    g.require_connected()?;
    let n = g.n();
    let mut best = usize::MAX;
    let mut depth = vec![0u8; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = Vec::with_capacity(n);
    for root in 0..n {
        let mut seen = VertexSet::singleton(root);
        depth[root] = 0;
        parent[root] = usize::MAX;
        queue.clear();
        queue.push(root);
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for y in g.neighbors(x).iter() {
                if !seen.contains(y) {
                    seen.insert(y);
                    depth[y] = depth[x] + 1;
                    parent[y] = x;
                    queue.push(y);
                } else if parent[x] != y {
                    best = best.min(depth[x] as usize + depth[y] as usize + 1);
                }
            }
        }
    }
    Ok(if best == usize::MAX {
        Girth::Acyclic
    } else {
        Girth::Cycle(best)
    })
}

/// Γ_i(v): the vertices at distance exactly `i` from `v`.
pub fn gamma(d: &DistanceMatrix, v: usize, i: usize) -> VertexSet {
    let mut out = VertexSet::EMPTY;
    for (u, &dv) in d.row(v).iter().enumerate() {
        if dv as usize == i {
            out.insert(u);
        }
    }
    out
}
