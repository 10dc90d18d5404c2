//! Exhaustive enumeration of small connected graphs.
//!
//! Labeled graphs on n vertices are identified with upper-triangle edge
//! bitmasks: bit k of the mask is the k-th pair in lexicographic order
//! (0,1), (0,2), …, (0,n−1), (1,2), …. Enumeration walks masks in ascending
//! numeric order, which makes every search deterministic and resumable.
//! Isomorphism rejection keeps a graph iff its mask is minimal over all
//! vertex permutations; at n ≤ 8 the n! scan is cheap enough.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Built-in enumeration is capped here; larger orders come from external
/// graph6 streams.
pub const MAX_ENUM_VERTICES: usize = 8;

pub fn pair_count(n: usize) -> usize {
    n * (n - 1) / 2
}

/// Vertex pairs (u,v), u < v, in lexicographic order; pair k is edge bit k.
pub fn pair_list(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

/// Total number of labeled simple graphs on n vertices.
pub fn mask_count(n: usize) -> u64 {
    1u64 << pair_count(n)
}

pub fn graph_from_mask(n: usize, mask: u32) -> Graph {
    let mut g = Graph::empty(n).expect("valid enumeration order");
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> k & 1 == 1 {
                g.add_edge(u, v).unwrap();
            }
            k += 1;
        }
    }
    g
}

pub fn mask_of_graph(g: &Graph) -> u32 {
    let n = g.n();
    let mut mask = 0u32;
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                mask |= 1 << k;
            }
            k += 1;
        }
    }
    mask
}

/// For each permutation of the vertices, how edge bit k moves: entry k is
/// the bit index of the permuted pair.
pub struct EdgePermutations {
    n: usize,
    tables: Vec<Vec<u8>>,
}

impl EdgePermutations {
    pub fn new(n: usize) -> EdgePermutations {
        assert!(n <= MAX_ENUM_VERTICES);
        let pairs = pair_list(n);
        let mut pair_index = vec![[0u8; MAX_ENUM_VERTICES]; MAX_ENUM_VERTICES];
        for (k, &(u, v)) in pairs.iter().enumerate() {
            pair_index[u][v] = k as u8;
            pair_index[v][u] = k as u8;
        }
        let tables = (0..n)
            .permutations(n)
            .map(|perm| {
                pairs
                    .iter()
                    .map(|&(u, v)| pair_index[perm[u]][perm[v]])
                    .collect()
            })
            .collect();
        EdgePermutations { n, tables }
    }

    fn permute_mask(&self, mask: u32, table: &[u8]) -> u32 {
        let mut out = 0u32;
        let mut bits = mask;
        while bits != 0 {
            let k = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            out |= 1 << table[k];
        }
        out
    }

    /// Lexicographically minimal mask over all vertex relabelings.
    pub fn canonical_mask(&self, mask: u32) -> u32 {
        self.tables
            .iter()
            .map(|t| self.permute_mask(mask, t))
            .min()
            .unwrap_or(mask)
    }

    /// True iff no relabeling yields a smaller mask.
    pub fn is_canonical(&self, mask: u32) -> bool {
        self.tables.iter().all(|t| self.permute_mask(mask, t) >= mask)
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

/// Stream of connected graphs on n vertices, in ascending edge-bitmask
/// order. With `dedup` set, only one representative per isomorphism class
/// (the one with minimal mask) is yielded.
pub struct ConnectedGraphs {
    n: usize,
    next: u64,
    limit: u64,
    perms: Option<EdgePermutations>,
}

impl Iterator for ConnectedGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next < self.limit {
            let mask = self.next as u32;
            self.next += 1;
            let g = graph_from_mask(self.n, mask);
            if !g.is_connected() {
                continue;
            }
            if let Some(perms) = &self.perms {
                if !perms.is_canonical(mask) {
                    continue;
                }
            }
            return Some(g);
        }
        None
    }
}

pub fn enumerate_connected(n: usize, dedup: bool) -> Result<ConnectedGraphs> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > MAX_ENUM_VERTICES {
        return Err(Error::Unsupported(format!(
            "built-in enumeration stops at {MAX_ENUM_VERTICES} vertices; \
             feed larger orders as an external graph6 stream"
        )));
    }
    Ok(ConnectedGraphs {
        n,
        next: 0,
        limit: mask_count(n),
        perms: dedup.then(|| EdgePermutations::new(n)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_graph_on_two_vertices() {
        let graphs: Vec<_> = enumerate_connected(2, false).unwrap().collect();
        assert_eq!(graphs.len(), 1);
        assert!(graphs[0].has_edge(0, 1));
    }

    #[test]
    fn labeled_counts_match_brute_force() {
        // 3 labeled paths + the triangle; 2 isomorphism classes.
        assert_eq!(enumerate_connected(3, false).unwrap().count(), 4);
        assert_eq!(enumerate_connected(3, true).unwrap().count(), 2);
    }

    #[test]
    fn class_count_on_five_vertices() {
        // Brute-force count of connected isomorphism classes on 5 vertices.
        assert_eq!(enumerate_connected(5, true).unwrap().count(), 21);
    }

    #[test]
    fn labeled_count_on_five_vertices() {
        assert_eq!(enumerate_connected(5, false).unwrap().count(), 728);
    }

    #[test]
    fn dedup_agrees_with_canonical_grouping() {
        use std::collections::HashSet;
        let n = 5;
        let perms = EdgePermutations::new(n);
        let classes: HashSet<u32> = enumerate_connected(n, false)
            .unwrap()
            .map(|g| perms.canonical_mask(mask_of_graph(&g)))
            .collect();
        let reps: Vec<u32> = enumerate_connected(n, true)
            .unwrap()
            .map(|g| mask_of_graph(&g))
            .collect();
        assert_eq!(classes.len(), reps.len());
        for &m in &reps {
            assert!(classes.contains(&m));
            assert_eq!(perms.canonical_mask(m), m);
        }
    }

    #[test]
    fn ascending_mask_order() {
        let masks: Vec<u32> = enumerate_connected(4, false)
            .unwrap()
            .map(|g| mask_of_graph(&g))
            .collect();
        assert!(masks.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn refuses_large_orders() {
        assert!(matches!(
            enumerate_connected(9, false),
            Err(Error::Unsupported(_))
        ));
    }
}
