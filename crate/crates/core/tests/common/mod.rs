//! Shared test helpers: an independent brute-force oracle for metric
//! dimension and basis enumeration, plus small graph builders.
//!
//! The oracle compares metric representations directly and scans all
//! subsets in ascending cardinality; it never touches the hitting-set
//! machinery it is used to check.

#![allow(dead_code)]

use unidim_core::dist::DistanceMatrix;
use unidim_core::{distances, Graph, VertexSet};

/// Definition check, written independently of the solver: all n
/// representations with respect to W, compared pairwise.
pub fn naive_is_resolving(d: &DistanceMatrix, w: VertexSet) -> bool {
    let n = d.n();
    let landmarks = w.to_vec();
    let mut reps: Vec<Vec<usize>> = (0..n)
        .map(|v| landmarks.iter().map(|&l| d.get(v, l)).collect())
        .collect();
    reps.sort();
    reps.windows(2).all(|p| p[0] != p[1])
}

fn subsets_of_size(n: usize, k: usize) -> Vec<VertexSet> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<VertexSet>) {
        if cur.len() == k {
            out.push(VertexSet::from_indices(cur.iter().copied()));
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Full scan over all subsets in ascending cardinality: the dimension and
/// the complete list of minimum resolving sets.
pub fn naive_dimension_and_bases(g: &Graph) -> (usize, Vec<VertexSet>) {
    let n = g.n();
    if n == 1 {
        return (0, vec![VertexSet::EMPTY]);
    }
    let d = distances(g).unwrap();
    for k in 1..=n {
        let bases: Vec<VertexSet> = subsets_of_size(n, k)
            .into_iter()
            .filter(|&w| naive_is_resolving(&d, w))
            .collect();
        if !bases.is_empty() {
            return (k, bases);
        }
    }
    unreachable!("the full vertex set always resolves");
}
