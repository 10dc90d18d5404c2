//! Exact metric dimension and metric basis enumeration.
//!
//! A set W resolves G iff every vertex has a distinct vector of distances to
//! the members of W. Equivalently, W hits D(u,v) = { w : d(u,w) ≠ d(v,w) }
//! for every vertex pair, which turns the search into a minimum hitting set
//! over single-word vertex masks. The branch-and-bound searches cardinalities
//! in ascending order between a twin-class lower bound and a greedy upper
//! bound; basis enumeration then lists every minimum hitting set in
//! lexicographic order.

use crate::dist::{distances, DistanceMatrix};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::twins::{twin_classes, TwinClasses};

/// Distance tuple of `v` with respect to an ordered landmark list.
pub fn representation(d: &DistanceMatrix, v: usize, landmarks: &[usize]) -> Vec<usize> {
    landmarks.iter().map(|&w| d.get(v, w)).collect()
}

/// Direct definition check: representations of all vertices outside W are
/// pairwise distinct. (Vertices inside W are each uniquely identified by the
/// position of the zero in their representation, so only V∖W is compared.)
pub fn is_resolving(d: &DistanceMatrix, w_set: VertexSet) -> bool {
    let n = d.n();
    let landmarks = w_set.to_vec();
    let outside: Vec<usize> = (0..n).filter(|&v| !w_set.contains(v)).collect();
    let mut reps: Vec<Vec<usize>> = outside
        .iter()
        .map(|&v| representation(d, v, &landmarks))
        .collect();
    reps.sort_unstable();
    reps.windows(2).all(|w| w[0] != w[1])
}

/// For each unordered vertex pair, the set of vertices whose distances to
/// the two members differ. Always contains both members of the pair.
pub struct PairDistinguishers {
    n: usize,
    masks: Vec<u64>,
}

impl PairDistinguishers {
    pub fn new(d: &DistanceMatrix) -> PairDistinguishers {
        let n = d.n();
        let mut masks = Vec::with_capacity(n * (n - 1) / 2);
        for u in 0..n {
            let du = d.row(u);
            for v in u + 1..n {
                let dv = d.row(v);
                let mut mask = 0u64;
                for w in 0..n {
                    if du[w] != dv[w] {
                        mask |= 1u64 << w;
                    }
                }
                debug_assert!(mask >> u & 1 == 1 && mask >> v & 1 == 1);
                masks.push(mask);
            }
        }
        PairDistinguishers { n, masks }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn masks(&self) -> &[u64] {
        &self.masks
    }

    pub fn get(&self, u: usize, v: usize) -> VertexSet {
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        // Pair (u,v) sits at offset u*(2n-u-1)/2 + (v-u-1).
        VertexSet(self.masks[u * (2 * self.n - u - 1) / 2 + (v - u - 1)])
    }

    /// W hits every distinguisher set.
    pub fn hits_all(&self, w_set: VertexSet) -> bool {
        self.masks.iter().all(|&m| m & w_set.0 != 0)
    }
}

/// Metric dimension, complete basis list, and classification flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisReport {
    pub dimension: usize,
    /// Every metric basis, each sorted ascending, listed lexicographically.
    pub bases: Vec<VertexSet>,
    pub unique: bool,
    /// Whether every dimension-sized subset is a basis; `None` when the
    /// subset count is too large to evaluate (n > 20).
    pub randomly_k: Option<bool>,
}

const RANDOMLY_K_MAX_N: usize = 20;

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k.min(n - k) {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Precomputed search state for one connected graph.
pub struct Resolver {
    n: usize,
    dm: DistanceMatrix,
    pd: PairDistinguishers,
    twins: TwinClasses,
}

impl Resolver {
    pub fn new(g: &Graph) -> Result<Resolver> {
        let dm = distances(g)?;
        let pd = PairDistinguishers::new(&dm);
        Ok(Resolver {
            n: g.n(),
            dm,
            pd,
            twins: twin_classes(g),
        })
    }

    pub fn distance_matrix(&self) -> &DistanceMatrix {
        &self.dm
    }

    pub fn distinguishers(&self) -> &PairDistinguishers {
        &self.pd
    }

    pub fn twins(&self) -> &TwinClasses {
        &self.twins
    }

    /// Greedy cover: repeatedly take the vertex hitting the most uncovered
    /// pairs (lowest index on ties). Any (n−1)-subset resolves a connected
    /// graph, so the result is capped there.
    pub fn greedy_upper_bound(&self) -> usize {
        let masks = self.pd.masks();
        let mut chosen = 0u64;
        let mut size = 0;
        while masks.iter().any(|&m| m & chosen == 0) {
            let mut best = 0;
            let mut best_gain = 0;
            for v in 0..self.n {
                if chosen >> v & 1 == 1 {
                    continue;
                }
                let gain = masks
                    .iter()
                    .filter(|&&m| m & chosen == 0 && m >> v & 1 == 1)
                    .count();
                if gain > best_gain {
                    best_gain = gain;
                    best = v;
                }
            }
            chosen |= 1u64 << best;
            size += 1;
        }
        size.min(self.n.saturating_sub(1)).max(usize::from(self.n > 1))
    }

    /// Is there a resolving set of exactly `k` vertices?
    pub fn exists_resolving(&self, k: usize) -> bool {
        if self.n == 1 {
            return true;
        }
        self.branch(VertexSet::EMPTY, VertexSet::EMPTY, k)
    }

    fn branch(&self, chosen: VertexSet, banned: VertexSet, budget: usize) -> bool {
        // Branch on the uncovered pair with the fewest remaining candidates.
        let mut pick: Option<u64> = None;
        let mut pick_count = usize::MAX;
        for &m in self.pd.masks() {
            if m & chosen.0 != 0 {
                continue;
            }
            let cands = m & !banned.0;
            let c = cands.count_ones() as usize;
            if c < pick_count {
                pick_count = c;
                pick = Some(cands);
                if c == 0 {
                    break;
                }
            }
        }
        let Some(cands) = pick else { return true };
        if budget == 0 || cands == 0 {
            return false;
        }
        let mut banned = banned;
        for w in VertexSet(cands).iter() {
            let mut next = chosen;
            next.insert(w);
            if self.branch(next, banned, budget - 1) {
                return true;
            }
            banned.insert(w);
        }
        false
    }

    /// Minimum k with a resolving k-subset. K₁ gets dimension 0 by
    /// convention (the empty set resolves it).
    pub fn dimension(&self) -> usize {
        if self.n == 1 {
            return 0;
        }
        let lb = self.twins.dimension_lower_bound().max(1);
        let ub = self.greedy_upper_bound();
        for k in lb..=ub {
            if self.exists_resolving(k) {
                return k;
            }
        }
        unreachable!("greedy upper bound is achievable");
    }

    /// All resolving subsets of size `k`, in lexicographic order, stopping
    /// early once `limit` have been found.
    pub fn resolving_sets_of_size(&self, k: usize, limit: usize) -> Vec<VertexSet> {
        let mut out = Vec::new();
        if self.n == 1 {
            if k == 0 {
                out.push(VertexSet::EMPTY);
            }
            return out;
        }
        if k > self.n {
            return out;
        }
        self.collect(0, k, VertexSet::EMPTY, limit, &mut out);
        out
    }

    fn collect(
        &self,
        start: usize,
        left: usize,
        chosen: VertexSet,
        limit: usize,
        out: &mut Vec<VertexSet>,
    ) {
        if out.len() >= limit {
            return;
        }
        if left == 0 {
            if self.pd.hits_all(chosen) {
                out.push(chosen);
            }
            return;
        }
        // Prune: some uncovered pair has no candidate at or past `start`.
        let future = VertexSet::full(self.n).difference(VertexSet::full(start)).0;
        let reachable = chosen.0 | future;
        if self.pd.masks().iter().any(|&m| m & reachable == 0) {
            return;
        }
        for v in start..=self.n - left {
            let mut next = chosen;
            next.insert(v);
            self.collect(v + 1, left - 1, next, limit, out);
            if out.len() >= limit {
                return;
            }
        }
    }

    /// Complete basis report: dimension, every basis, uniqueness and the
    /// randomly-k flag.
    pub fn basis_report(&self) -> BasisReport {
        let k = self.dimension();
        let bases = self.resolving_sets_of_size(k, usize::MAX);
        let unique = bases.len() == 1;
        let randomly_k = if self.n <= RANDOMLY_K_MAX_N {
            Some(bases.len() as u128 == binomial(self.n, k))
        } else {
            None
        };
        BasisReport {
            dimension: k,
            bases,
            unique,
            randomly_k,
        }
    }

    /// True iff the graph has dimension exactly `k` with a single basis.
    /// Cheaper than a full report when scanning many graphs.
    pub fn is_uniquely_k_dimensional(&self, k: usize) -> bool {
        if self.n == 1 {
            return k == 0;
        }
        let lb = self.twins.dimension_lower_bound().max(1);
        if lb > k {
            return false;
        }
        for kk in lb..k {
            if self.exists_resolving(kk) {
                return false;
            }
        }
        self.resolving_sets_of_size(k, 2).len() == 1
    }
}

pub fn metric_dimension(g: &Graph) -> Result<usize> {
    Ok(Resolver::new(g)?.dimension())
}

pub fn all_bases(g: &Graph) -> Result<BasisReport> {
    Ok(Resolver::new(g)?.basis_report())
}

pub fn is_uniquely_dimensional(g: &Graph) -> Result<bool> {
    let r = Resolver::new(g)?;
    let k = r.dimension();
    Ok(r.resolving_sets_of_size(k, 2).len() == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn representation_zero_at_self() {
        let g = path(4);
        let d = distances(&g).unwrap();
        assert_eq!(representation(&d, 2, &[2]), vec![0]);
        assert_eq!(representation(&d, 0, &[0, 3]), vec![0, 3]);
    }

    #[test]
    fn full_vertex_set_resolves() {
        let g = cycle(5);
        let d = distances(&g).unwrap();
        assert!(is_resolving(&d, VertexSet::full(5)));
    }

    #[test]
    fn k4_pairs_never_resolve() {
        let g = complete(4);
        let d = distances(&g).unwrap();
        for u in 0..4 {
            for v in u + 1..4 {
                assert!(!is_resolving(&d, VertexSet::from_indices([u, v])));
            }
        }
    }

    #[test]
    fn paths_have_dimension_one() {
        for n in 2..=8 {
            assert_eq!(metric_dimension(&path(n)).unwrap(), 1, "P{n}");
        }
    }

    #[test]
    fn small_dimensions() {
        assert_eq!(metric_dimension(&cycle(4)).unwrap(), 2);
        assert_eq!(metric_dimension(&complete(4)).unwrap(), 3);
    }

    #[test]
    fn k3_is_randomly_2_dimensional() {
        let report = all_bases(&complete(3)).unwrap();
        assert_eq!(report.dimension, 2);
        assert_eq!(
            report.bases,
            vec![
                VertexSet::from_indices([0, 1]),
                VertexSet::from_indices([0, 2]),
                VertexSet::from_indices([1, 2]),
            ]
        );
        assert!(!report.unique);
        assert_eq!(report.randomly_k, Some(true));
    }

    #[test]
    fn k2_and_c5_are_not_uniquely_dimensional() {
        assert!(!is_uniquely_dimensional(&path(2)).unwrap());
        assert!(!is_uniquely_dimensional(&cycle(5)).unwrap());
    }

    #[test]
    fn k1_convention() {
        let k1 = Graph::empty(1).unwrap();
        let report = all_bases(&k1).unwrap();
        assert_eq!(report.dimension, 0);
        assert_eq!(report.bases, vec![VertexSet::EMPTY]);
        assert!(report.unique);
    }

    #[test]
    fn pair_distinguishers_contain_the_pair() {
        let g = cycle(6);
        let d = distances(&g).unwrap();
        let pd = PairDistinguishers::new(&d);
        for u in 0..6 {
            for v in u + 1..6 {
                let m = pd.get(u, v);
                assert!(m.contains(u) && m.contains(v));
            }
        }
    }

    #[test]
    fn supersets_of_resolving_sets_resolve() {
        let g = cycle(6);
        let r = Resolver::new(&g).unwrap();
        let report = r.basis_report();
        let d = distances(&g).unwrap();
        for b in &report.bases {
            for extra in 0..6 {
                let mut sup = *b;
                sup.insert(extra);
                assert!(is_resolving(&d, sup));
                assert!(r.distinguishers().hits_all(sup));
            }
        }
    }
}
