//! Simple undirected graphs on at most 64 labeled vertices.
//!
//! Adjacency is stored as one `u64` bit row per vertex, so neighborhood
//! operations and vertex subsets are single-word bit arithmetic.

use std::fmt;

use crate::error::{Error, Result};

/// Hard cap on the vertex count: a neighbor row and a vertex subset each
/// fit in one machine word.
pub const MAX_VERTICES: usize = 64;

/// A set of vertex indices, stored as a 64-bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> VertexSet {
        VertexSet(1u64 << v)
    }

    /// All vertices `0..n`.
    pub fn full(n: usize) -> VertexSet {
        if n >= 64 {
            VertexSet(!0)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(iter: I) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Lowest vertex index in the set, if any.
    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Ascending iterator over the member indices.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in self.iter() {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_indices(iter)
    }
}

/// Simple undirected graph with vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
        })
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange {
                    index: w,
                    order: self.n,
                });
            }
        }
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in VertexSet(self.adj[u] >> (u + 1) << (u + 1)).iter() {
                out.push((u, v));
            }
        }
        out
    }

    /// Vertices reachable from `start` by BFS.
    pub fn reachable_from(&self, start: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next = next.union(self.neighbors(v));
            }
            frontier = next.difference(seen);
            seen = seen.union(next);
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.reachable_from(0) == VertexSet::full(self.n)
    }

    /// Errs with a witness pair when the graph is disconnected.
    pub fn require_connected(&self) -> Result<()> {
        let reached = self.reachable_from(0);
        match VertexSet::full(self.n).difference(reached).min() {
            None => Ok(()),
            Some(v) => Err(Error::Disconnected(0, v)),
        }
    }

    /// Parses the plain edge-list format: first line `n m`, then `m` lines
    /// `u v` with 0-based indices.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (line_no, header) = lines.next().ok_or(Error::EdgeList {
            line: 1,
            reason: "missing header line".into(),
        })?;
        let mut parts = header.split_whitespace();
        let parse_num = |tok: Option<&str>, line: usize| -> Result<usize> {
            tok.ok_or(Error::EdgeList {
                line,
                reason: "expected two integers".into(),
            })?
            .parse()
            .map_err(|_| Error::EdgeList {
                line,
                reason: "invalid integer".into(),
            })
        };
        let n = parse_num(parts.next(), line_no + 1)?;
        let m = parse_num(parts.next(), line_no + 1)?;
        let mut g = Graph::empty(n)?;
        let mut count = 0;
        for (line_no, line) in lines {
            let mut parts = line.split_whitespace();
            let u = parse_num(parts.next(), line_no + 1)?;
            let v = parse_num(parts.next(), line_no + 1)?;
            g.add_edge(u, v)?;
            count += 1;
        }
        if count != m {
            return Err(Error::EdgeList {
                line: count + 1,
                reason: format!("header declares {m} edges but {count} were given"),
            });
        }
        Ok(g)
    }

    pub fn to_edge_list(&self) -> String {
        let edges = self.edges();
        let mut out = format!("{} {}\n", self.n, edges.len());
        for (u, v) in edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_k2_and_k3() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert!(k2.has_edge(0, 1) && k2.has_edge(1, 0));
        let k3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3.edge_count(), 3);
        assert_eq!(k3.max_degree(), 2);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            Graph::from_edges(3, &[(1, 1)]).unwrap_err(),
            Error::SelfLoop(1)
        );
        assert_eq!(
            Graph::from_edges(2, &[(0, 2)]).unwrap_err(),
            Error::VertexOutOfRange { index: 2, order: 2 }
        );
        assert_eq!(Graph::empty(0).unwrap_err(), Error::EmptyGraph);
        assert_eq!(Graph::empty(65).unwrap_err(), Error::TooManyVertices(65));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edges(2, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn connectivity_witness() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.require_connected().unwrap_err(), Error::Disconnected(0, 2));
        let p = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(p.require_connected().is_ok());
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let text = g.to_edge_list();
        assert_eq!(text, "4 4\n0 1\n0 3\n1 2\n2 3\n");
        let h = Graph::parse_edge_list(&text).unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(
            Graph::parse_edge_list(""),
            Err(Error::EdgeList { .. })
        ));
        assert!(matches!(
            Graph::parse_edge_list("2 2\n0 1\n"),
            Err(Error::EdgeList { .. })
        ));
    }

    #[test]
    fn vertex_set_basics() {
        let s = VertexSet::from_indices([3, 1, 5]);
        assert_eq!(s.to_vec(), vec![1, 3, 5]);
        assert_eq!(s.len(), 3);
        assert_eq!(s.min(), Some(1));
        assert!(s.is_subset_of(VertexSet::full(6)));
        assert_eq!(s.to_string(), "1 3 5");
    }
}
