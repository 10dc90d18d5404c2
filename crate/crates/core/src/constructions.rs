//! Generators for the uniquely k-dimensional graph families, each returning
//! the graph together with its designated basis and the predicted
//! parameters. Minimality and uniqueness of the designated basis are not
//! assumed: the solver re-verifies them in the test suite.
//!
//! Vertex numbering is frozen per family (basis vertices first, then the
//! rest in index or tuple order) so fixtures and graph6 output are stable
//! across runs.

use std::fmt;

use crate::enumerate::enumerate_connected;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_VERTICES};
use crate::{dist, solver};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyTag {
    /// Order-3k family: independent U over a clique of 2k vertices.
    ThreeK { k: usize },
    /// Diameter-3 family of order k+3^k on ternary tuples.
    KPlus3K { k: usize },
    /// The order-9 uniquely 3-dimensional graph with a universal vertex.
    Order9,
    /// Uniquely 2-dimensional graph of order 6 with a universal vertex,
    /// found by exhaustive search.
    Base6,
    /// Recursive composition reaching order ⌈5k/2⌉+1.
    FiveHalves { k: usize },
    /// Join of two inputs with their universal vertices identified.
    JoinIdentify,
    /// A pendant path of m vertices attached to an earlier construction.
    PathExtended { m: usize },
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyTag::ThreeK { k } => write!(f, "3k k={k}"),
            FamilyTag::KPlus3K { k } => write!(f, "kplus3k k={k}"),
            FamilyTag::Order9 => write!(f, "order9"),
            FamilyTag::Base6 => write!(f, "base6"),
            FamilyTag::FiveHalves { k } => write!(f, "fivehalves k={k}"),
            FamilyTag::JoinIdentify => write!(f, "join"),
            FamilyTag::PathExtended { m } => write!(f, "extend m={m}"),
        }
    }
}

/// Parameters a construction promises; `None` marks values the family does
/// not pin down.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Predicted {
    pub order: usize,
    pub dimension: usize,
    pub diameter: Option<usize>,
    pub max_degree: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct ConstructedGraph {
    pub graph: Graph,
    pub designated_basis: VertexSet,
    pub predicted: Predicted,
    pub family: FamilyTag,
}

impl ConstructedGraph {
    /// Solver check of every promise: the designated basis must be the one
    /// and only metric basis, and the predicted parameters must hold.
    pub fn verify(&self) -> Result<()> {
        let n = self.graph.n();
        if n != self.predicted.order {
            return Err(Error::Unsupported(format!(
                "order {n} differs from predicted {}",
                self.predicted.order
            )));
        }
        let report = solver::all_bases(&self.graph)?;
        if report.dimension != self.predicted.dimension {
            return Err(Error::Unsupported(format!(
                "dimension {} differs from predicted {}",
                report.dimension, self.predicted.dimension
            )));
        }
        if report.bases != vec![self.designated_basis] {
            return Err(Error::Unsupported(format!(
                "basis list {:?} is not exactly the designated basis {:?}",
                report.bases, self.designated_basis
            )));
        }
        if let Some(d) = self.predicted.diameter {
            let actual = dist::diameter(&self.graph)?;
            if actual != d {
                return Err(Error::Unsupported(format!(
                    "diameter {actual} differs from predicted {d}"
                )));
            }
        }
        if let Some(md) = self.predicted.max_degree {
            let actual = self.graph.max_degree();
            if actual != md {
                return Err(Error::Unsupported(format!(
                    "max degree {actual} differs from predicted {md}"
                )));
            }
        }
        Ok(())
    }
}

/// Order-3k family: U = {u_1..u_k} independent, W = {w_1..w_2k} a clique,
/// u_k adjacent to every w_{2i}, and u_i (i < k) adjacent to w_{2i−1} and
/// w_{2i}. Vertices: u_i = i−1, w_j = k+j−1.
pub fn construct_3k(k: usize) -> Result<ConstructedGraph> {
    if !(2..=MAX_VERTICES / 3).contains(&k) {
        return Err(Error::Unsupported(format!(
            "3k family needs 2 <= k <= {}, got {k}",
            MAX_VERTICES / 3
        )));
    }
    let n = 3 * k;
    let w = |j: usize| k + j - 1;
    let mut g = Graph::empty(n)?;
    for a in k..n {
        for b in a + 1..n {
            g.add_edge(a, b)?;
        }
    }
    for i in 1..=k {
        g.add_edge(k - 1, w(2 * i))?;
    }
    for i in 1..k {
        g.add_edge(i - 1, w(2 * i - 1))?;
        g.add_edge(i - 1, w(2 * i))?;
    }
    Ok(ConstructedGraph {
        graph: g,
        designated_basis: VertexSet::full(k),
        predicted: Predicted {
            order: n,
            dimension: k,
            diameter: None,
            max_degree: None,
        },
        family: FamilyTag::ThreeK { k },
    })
}

/// All k-tuples over {1,2,3} in lexicographic order.
fn ternary_tuples(k: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|t| {
                [1u8, 2, 3].into_iter().map(move |c| {
                    let mut t = t.clone();
                    t.push(c);
                    t
                })
            })
            .collect();
    }
    out
}

/// Diameter-3 family of order k+3^k: W is the set of ternary k-tuples, two
/// tuples adjacent when they differ in exactly one coordinate by one, the
/// all-twos tuple adjacent to every other tuple, and u_i adjacent to the
/// tuples whose i-th coordinate is 1. Vertices: u_i = i−1, tuples follow in
/// lexicographic order.
pub fn construct_k_plus_3k(k: usize) -> Result<ConstructedGraph> {
    if !(2..=3).contains(&k) {
        return Err(Error::Unsupported(format!(
            "k+3^k family fits the vertex cap only for k in {{2, 3}}, got {k}"
        )));
    }
    let tuples = ternary_tuples(k);
    let n = k + tuples.len();
    let mut g = Graph::empty(n)?;
    let idx = |i: usize| k + i;
    for (a, ta) in tuples.iter().enumerate() {
        for (b, tb) in tuples.iter().enumerate().skip(a + 1) {
            let diffs: Vec<_> = ta
                .iter()
                .zip(tb)
                .filter(|(x, y)| x != y)
                .map(|(x, y)| x.abs_diff(*y))
                .collect();
            if diffs == [1] {
                g.add_edge(idx(a), idx(b))?;
            }
        }
    }
    let two = tuples.iter().position(|t| t.iter().all(|&c| c == 2)).unwrap();
    for a in 0..tuples.len() {
        if a != two {
            g.add_edge(idx(two), idx(a))?;
        }
    }
    for (a, t) in tuples.iter().enumerate() {
        for (i, &c) in t.iter().enumerate() {
            if c == 1 {
                g.add_edge(idx(a), i)?;
            }
        }
    }
    Ok(ConstructedGraph {
        graph: g,
        designated_basis: VertexSet::full(k),
        predicted: Predicted {
            order: n,
            dimension: k,
            diameter: Some(3),
            max_degree: None,
        },
        family: FamilyTag::KPlus3K { k },
    })
}

/// The order-9 uniquely 3-dimensional graph: w_1..w_6 a clique, u_i adjacent
/// to w_i, w_{i+1} and w_6. Vertices: u_i = i−1, w_j = 2+j.
pub fn construct_order9() -> ConstructedGraph {
    let mut g = Graph::empty(9).unwrap();
    let w = |j: usize| 2 + j;
    for i in 1..=6 {
        for j in i + 1..=6 {
            g.add_edge(w(i), w(j)).unwrap();
        }
    }
    for i in 1..=3 {
        for j in [i, i + 1, 6] {
            g.add_edge(i - 1, w(j)).unwrap();
        }
    }
    ConstructedGraph {
        graph: g,
        designated_basis: VertexSet::full(3),
        predicted: Predicted {
            order: 9,
            dimension: 3,
            diameter: Some(2),
            max_degree: Some(8),
        },
        family: FamilyTag::Order9,
    }
}

/// Frozen first hit of `find_base6`, recorded so downstream composites are
/// byte-stable. Unique basis {4, 5}; vertex 0 is universal.
pub const BASE6_EDGES: [(usize, usize); 10] = [
    (0, 1),
    (0, 2),
    (0, 3),
    (0, 4),
    (0, 5),
    (1, 2),
    (1, 3),
    (1, 5),
    (2, 3),
    (2, 4),
];

/// Exhaustive search for the lexicographically first connected 6-vertex
/// graph that is uniquely 2-dimensional with diameter 2 and a universal
/// vertex. Its existence is guaranteed (order 2+2² with diameter 2 and
/// maximum degree n−1), so an empty scan is a hard failure.
pub fn find_base6() -> Result<ConstructedGraph> {
    for g in enumerate_connected(6, false)? {
        if g.max_degree() != 5 || dist::diameter(&g)? != 2 {
            continue;
        }
        let resolver = solver::Resolver::new(&g)?;
        if !resolver.is_uniquely_k_dimensional(2) {
            continue;
        }
        let basis = resolver.resolving_sets_of_size(2, 2)[0];
        return Ok(ConstructedGraph {
            graph: g,
            designated_basis: basis,
            predicted: Predicted {
                order: 6,
                dimension: 2,
                diameter: Some(2),
                max_degree: Some(5),
            },
            family: FamilyTag::Base6,
        });
    }
    Err(Error::Unsupported(
        "no uniquely 2-dimensional graph of order 6 with diameter 2 and a \
         universal vertex exists; this contradicts the known construction"
            .into(),
    ))
}

fn universal_vertex(g: &Graph) -> Option<usize> {
    (0..g.n()).find(|&v| g.degree(v) == g.n() - 1)
}

/// Complete join of the two inputs with their universal vertices identified
/// into a single vertex v_0 of degree n_1+n_2−2. Vertices: the non-universal
/// vertices of `a` in order, then those of `b`, then v_0 last. The designated
/// basis is the union of the inputs' bases.
pub fn join_identify(a: &ConstructedGraph, b: &ConstructedGraph) -> Result<ConstructedGraph> {
    let (n1, n2) = (a.graph.n(), b.graph.n());
    let n = n1 + n2 - 1;
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let v1 = universal_vertex(&a.graph).ok_or_else(|| {
        Error::Unsupported("join requires a universal vertex in the first input".into())
    })?;
    let v2 = universal_vertex(&b.graph).ok_or_else(|| {
        Error::Unsupported("join requires a universal vertex in the second input".into())
    })?;
    if a.designated_basis.contains(v1) || b.designated_basis.contains(v2) {
        return Err(Error::Unsupported(
            "universal vertex may not be part of the designated basis".into(),
        ));
    }
    let v0 = n - 1;
    let map1: Vec<usize> = (0..n1)
        .map(|v| {
            if v == v1 {
                v0
            } else {
                v - usize::from(v > v1)
            }
        })
        .collect();
    let map2: Vec<usize> = (0..n2)
        .map(|v| {
            if v == v2 {
                v0
            } else {
                n1 - 1 + v - usize::from(v > v2)
            }
        })
        .collect();
    let mut g = Graph::empty(n)?;
    for (u, v) in a.graph.edges() {
        g.add_edge(map1[u], map1[v])?;
    }
    for (u, v) in b.graph.edges() {
        g.add_edge(map2[u], map2[v])?;
    }
    // Join: every cross pair is adjacent.
    for u in 0..n1 - 1 {
        for v in n1 - 1..n - 1 {
            g.add_edge(u, v)?;
        }
    }
    let basis = a
        .designated_basis
        .iter()
        .map(|v| map1[v])
        .chain(b.designated_basis.iter().map(|v| map2[v]))
        .collect();
    Ok(ConstructedGraph {
        graph: g,
        designated_basis: basis,
        predicted: Predicted {
            order: n,
            dimension: a.predicted.dimension + b.predicted.dimension,
            diameter: None,
            max_degree: Some(n - 1),
        },
        family: FamilyTag::JoinIdentify,
    })
}

/// Uniquely k-dimensional graph of order ⌈5k/2⌉+1: for even k = 2k', fold
/// k' copies of the order-6 base graph; for odd k = 2k'+1, fold k'−1 copies
/// plus one copy of the order-9 graph.
pub fn construct_5k_half(k: usize) -> Result<ConstructedGraph> {
    if k < 2 {
        return Err(Error::Unsupported(format!(
            "5k/2 composition needs k >= 2, got {k}"
        )));
    }
    let order = (5 * k).div_ceil(2) + 1;
    if order > MAX_VERTICES {
        return Err(Error::TooManyVertices(order));
    }
    let base = find_base6()?;
    let parts: Vec<ConstructedGraph> = if k % 2 == 0 {
        (0..k / 2).map(|_| base.clone()).collect()
    } else {
        let kp = (k - 1) / 2;
        (0..kp - 1)
            .map(|_| base.clone())
            .chain(std::iter::once(construct_order9()))
            .collect()
    };
    let mut iter = parts.into_iter();
    let mut acc = iter.next().expect("k >= 2 yields at least one part");
    for part in iter {
        acc = join_identify(&acc, &part)?;
    }
    acc.family = FamilyTag::FiveHalves { k };
    acc.predicted = Predicted {
        order,
        dimension: k,
        diameter: Some(2),
        max_degree: Some(order - 1),
    };
    Ok(acc)
}

/// Attaches a pendant path of `m` new vertices at a vertex v_0 outside the
/// basis that maximizes d(v_0, u) (lowest index on ties). The basis and
/// dimension are unchanged.
pub fn extend_by_path(c: &ConstructedGraph, u: usize, m: usize) -> Result<ConstructedGraph> {
    if m == 0 {
        return Err(Error::Unsupported("path extension needs m >= 1".into()));
    }
    if !c.designated_basis.contains(u) {
        return Err(Error::Unsupported(format!(
            "anchor vertex {u} is not in the designated basis {}",
            c.designated_basis
        )));
    }
    let n = c.graph.n();
    if n + m > MAX_VERTICES {
        return Err(Error::TooManyVertices(n + m));
    }
    let dm = dist::distances(&c.graph)?;
    let v0 = (0..n)
        .filter(|&v| !c.designated_basis.contains(v))
        .max_by_key(|&v| (dm.get(v, u), std::cmp::Reverse(v)))
        .ok_or_else(|| Error::Unsupported("no vertex outside the basis".into()))?;
    let mut g = Graph::empty(n + m)?;
    for (x, y) in c.graph.edges() {
        g.add_edge(x, y)?;
    }
    let mut prev = v0;
    for j in 0..m {
        g.add_edge(prev, n + j)?;
        prev = n + j;
    }
    Ok(ConstructedGraph {
        graph: g,
        designated_basis: c.designated_basis,
        predicted: Predicted {
            order: n + m,
            dimension: c.predicted.dimension,
            diameter: None,
            max_degree: None,
        },
        family: FamilyTag::PathExtended { m },
    })
}
