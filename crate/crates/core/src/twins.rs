//! Twin vertices: u and v are twins when N(u)∖{v} = N(v)∖{u}.
//!
//! Twins are indistinguishable by distances from any third vertex, so every
//! resolving set must contain all but one vertex of each twin class.

use crate::graph::Graph;

/// Partition of the vertices into maximal classes of mutually twin vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwinClasses {
    classes: Vec<Vec<usize>>,
}

pub fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    let mut nu = g.neighbors(u);
    nu.remove(v);
    let mut nv = g.neighbors(v);
    nv.remove(u);
    nu == nv
}

/// Groups vertices by twin-ness with the first member of each class.
///
/// The partition is only meaningful if twin-ness is transitive on every
/// class; `TwinClasses::pairwise_consistent` checks that, and the test suite
/// asserts it on every enumerated small graph.
pub fn twin_classes(g: &Graph) -> TwinClasses {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in 0..g.n() {
        match classes.iter_mut().find(|c| are_twins(g, c[0], v)) {
            Some(c) => c.push(v),
            None => classes.push(vec![v]),
        }
    }
    TwinClasses { classes }
}

impl TwinClasses {
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.len()).collect()
    }

    /// True iff some class has two or more members.
    pub fn has_twins(&self) -> bool {
        self.classes.iter().any(|c| c.len() >= 2)
    }

    /// Σ over classes of (|class| − 1): a lower bound on the metric
    /// dimension, since a resolving set misses at most one vertex per class.
    pub fn dimension_lower_bound(&self) -> usize {
        self.classes.iter().map(|c| c.len() - 1).sum()
    }

    /// First twin pair, as a witness.
    pub fn twin_pair(&self) -> Option<(usize, usize)> {
        self.classes
            .iter()
            .find(|c| c.len() >= 2)
            .map(|c| (c[0], c[1]))
    }

    /// Every pair within a class is twin, and class representatives are
    /// pairwise non-twin.
    pub fn pairwise_consistent(&self, g: &Graph) -> bool {
        for c in &self.classes {
            for i in 0..c.len() {
                for j in i + 1..c.len() {
                    if !are_twins(g, c[i], c[j]) {
                        return false;
                    }
                }
            }
        }
        for i in 0..self.classes.len() {
            for j in i + 1..self.classes.len() {
                if are_twins(g, self.classes[i][0], self.classes[j][0]) {
                    return false;
                }
            }
        }
        true
    }
}
