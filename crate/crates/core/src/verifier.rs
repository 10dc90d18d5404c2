//! Falsification harness: every theorem-backed bound is run as a check on
//! arbitrary graphs and exhaustively on all small graphs, and n₀(k) tables
//! are computed by exhaustive scan. A failing check carries a witness that
//! reproduces it; a failure here means either the code or the claimed bound
//! is wrong.

use rayon::prelude::*;

use crate::constructions::ConstructedGraph;
use crate::dist::{self, Girth};
use crate::enumerate::{self, EdgePermutations};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::emit_graph6;
use crate::solver::Resolver;
use crate::twins::twin_classes;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CheckId {
    /// β ≤ n − d for every connected graph.
    DimVsDiameter,
    /// n ≤ k + d^k for every connected graph.
    OrderBound,
    /// A uniquely dimensional graph has no twin vertices.
    UniqueNoTwins,
    /// Uniquely dimensional: β ≤ n − d − 2.
    UniqueDiameterBound,
    /// Uniquely dimensional with a cycle: β ≤ n − g + 1.
    UniqueGirthBound,
    /// Uniquely dimensional: 2β < n.
    UniqueHalfOrder,
}

pub const ALL_CHECKS: [CheckId; 6] = [
    CheckId::DimVsDiameter,
    CheckId::OrderBound,
    CheckId::UniqueNoTwins,
    CheckId::UniqueDiameterBound,
    CheckId::UniqueGirthBound,
    CheckId::UniqueHalfOrder,
];

impl CheckId {
    pub fn name(self) -> &'static str {
        match self {
            CheckId::DimVsDiameter => "dim_vs_diameter",
            CheckId::OrderBound => "order_bound",
            CheckId::UniqueNoTwins => "unique_no_twins",
            CheckId::UniqueDiameterBound => "unique_diameter_bound",
            CheckId::UniqueGirthBound => "unique_girth_bound",
            CheckId::UniqueHalfOrder => "unique_half_order",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail { witness: String },
    NotApplicable { reason: String },
}

impl Verdict {
    pub fn failed(&self) -> bool {
        matches!(self, Verdict::Fail { .. })
    }

    /// Single-letter code for record output: P / F / -.
    pub fn code(&self) -> &'static str {
        match self {
            Verdict::Pass => "P",
            Verdict::Fail { .. } => "F",
            Verdict::NotApplicable { .. } => "-",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckRecord {
    pub id: CheckId,
    pub verdict: Verdict,
}

/// Computed profile of one graph, shared by all checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphProfile {
    pub n: usize,
    pub dimension: usize,
    pub diameter: usize,
    pub girth: Girth,
    pub twin_class_sizes: Vec<usize>,
    pub unique: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditReport {
    pub profile: GraphProfile,
    pub checks: Vec<CheckRecord>,
}

impl AuditReport {
    pub fn all_pass(&self) -> bool {
        !self.checks.iter().any(|c| c.verdict.failed())
    }

    pub fn first_failure(&self) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.verdict.failed())
    }
}

fn saturating_pow(base: usize, exp: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u128);
    }
    acc
}

fn not_unique() -> Verdict {
    Verdict::NotApplicable {
        reason: "graph is not uniquely dimensional".into(),
    }
}

/// Runs every theorem check against one connected graph of order >= 2.
pub fn audit_graph(g: &Graph) -> Result<AuditReport> {
    if g.n() < 2 {
        return Err(Error::Unsupported(
            "audit is defined for graphs of order at least 2".into(),
        ));
    }
    let resolver = Resolver::new(g)?;
    let n = g.n();
    let beta = resolver.dimension();
    let d = resolver.distance_matrix().max_entry();
    let girth = dist::girth(g)?;
    let twins = twin_classes(g);
    let unique = resolver.is_uniquely_k_dimensional(beta);
    let profile = GraphProfile {
        n,
        dimension: beta,
        diameter: d,
        girth,
        twin_class_sizes: twins.class_sizes(),
        unique,
    };

    let mut checks = Vec::with_capacity(ALL_CHECKS.len());
    let mut push = |id, verdict| checks.push(CheckRecord { id, verdict });

    push(
        CheckId::DimVsDiameter,
        if beta <= n - d {
            Verdict::Pass
        } else {
            Verdict::Fail {
                witness: format!("beta={beta} > n-d={}", n - d),
            }
        },
    );
    push(
        CheckId::OrderBound,
        if (n as u128) <= beta as u128 + saturating_pow(d, beta) {
            Verdict::Pass
        } else {
            Verdict::Fail {
                witness: format!("n={n} > k+d^k={}", beta as u128 + saturating_pow(d, beta)),
            }
        },
    );
    push(
        CheckId::UniqueNoTwins,
        if !unique {
            not_unique()
        } else {
            match twins.twin_pair() {
                None => Verdict::Pass,
                Some((u, v)) => Verdict::Fail {
                    witness: format!("twin pair ({u}, {v})"),
                },
            }
        },
    );
    push(
        CheckId::UniqueDiameterBound,
        if !unique {
            not_unique()
        } else if beta + d + 2 <= n {
            Verdict::Pass
        } else {
            Verdict::Fail {
                witness: format!("beta={beta} > n-d-2={}", n as i64 - d as i64 - 2),
            }
        },
    );
    push(
        CheckId::UniqueGirthBound,
        if !unique {
            not_unique()
        } else {
            match girth.finite() {
                None => Verdict::NotApplicable {
                    reason: "graph is acyclic".into(),
                },
                Some(girth) => {
                    if beta + girth <= n + 1 {
                        Verdict::Pass
                    } else {
                        Verdict::Fail {
                            witness: format!(
                                "beta={beta} > n-g+1={}",
                                n as i64 - girth as i64 + 1
                            ),
                        }
                    }
                }
            }
        },
    );
    push(
        CheckId::UniqueHalfOrder,
        if !unique {
            not_unique()
        } else if 2 * beta < n {
            Verdict::Pass
        } else {
            Verdict::Fail {
                witness: format!("2*beta={} >= n={n}", 2 * beta),
            }
        },
    );

    Ok(AuditReport { profile, checks })
}

/// Necessary conditions for k-dimensional graphs of extremal order k + d^k:
/// d ≤ 3 and, for every basis B and every v ∈ B, |Γ_d(v)| ≥ d^(k−1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalReport {
    pub applicable: bool,
    pub records: Vec<(ExtremalCheck, Verdict)>,
}

impl ExtremalReport {
    pub fn all_pass(&self) -> bool {
        !self.records.iter().any(|(_, v)| v.failed())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExtremalCheck {
    DiameterAtMost3,
    LastLayerSize,
}

impl ExtremalCheck {
    pub fn name(self) -> &'static str {
        match self {
            ExtremalCheck::DiameterAtMost3 => "diameter_at_most_3",
            ExtremalCheck::LastLayerSize => "last_layer_size",
        }
    }
}

pub fn verify_extremal(g: &Graph) -> Result<ExtremalReport> {
    let resolver = Resolver::new(g)?;
    let n = g.n();
    let k = resolver.dimension();
    let d = resolver.distance_matrix().max_entry();
    if n as u128 != k as u128 + saturating_pow(d, k) {
        return Ok(ExtremalReport {
            applicable: false,
            records: Vec::new(),
        });
    }
    let mut records = Vec::new();
    records.push((
        ExtremalCheck::DiameterAtMost3,
        if d <= 3 {
            Verdict::Pass
        } else {
            Verdict::Fail {
                witness: format!("extremal graph with d={d} > 3"),
            }
        },
    ));
    let bases = resolver.resolving_sets_of_size(k, usize::MAX);
    let need = saturating_pow(d, k - 1);
    let mut layer_verdict = Verdict::Pass;
    'outer: for basis in &bases {
        for v in basis.iter() {
            let layer = dist::gamma(resolver.distance_matrix(), v, d);
            if (layer.len() as u128) < need {
                layer_verdict = Verdict::Fail {
                    witness: format!(
                        "basis vertex {v} has |Gamma_{d}| = {} < d^(k-1) = {need}",
                        layer.len()
                    ),
                };
                break 'outer;
            }
        }
    }
    records.push((ExtremalCheck::LastLayerSize, layer_verdict));
    Ok(ExtremalReport {
        applicable: true,
        records,
    })
}

/// Tally of one check across a stream.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CheckTally {
    pub applicable: usize,
    pub passed: usize,
}

/// Aggregate outcome of auditing a stream of graphs.
#[derive(Clone, Debug, Default)]
pub struct AuditAggregate {
    pub total: usize,
    pub failed_graphs: Vec<(usize, AuditReport)>,
    pub errors: Vec<(usize, String)>,
    pub tallies: [CheckTally; 6],
    pub stopped_early: bool,
}

impl AuditAggregate {
    pub fn clean(&self) -> bool {
        self.failed_graphs.is_empty() && self.errors.is_empty()
    }

    fn absorb(&mut self, index: usize, report: AuditReport) {
        self.total += 1;
        for (slot, rec) in self.tallies.iter_mut().zip(&report.checks) {
            match rec.verdict {
                Verdict::Pass => {
                    slot.applicable += 1;
                    slot.passed += 1;
                }
                Verdict::Fail { .. } => slot.applicable += 1,
                Verdict::NotApplicable { .. } => {}
            }
        }
        if !report.all_pass() {
            self.failed_graphs.push((index, report));
        }
    }
}

/// Audits every graph in the stream; per-graph errors become marked records
/// instead of aborting the stream. With `fail_fast`, stops after the first
/// failing graph.
pub fn audit_stream<I>(graphs: I, fail_fast: bool) -> AuditAggregate
where
    I: IntoIterator<Item = Result<Graph>>,
{
    let mut agg = AuditAggregate::default();
    for (index, item) in graphs.into_iter().enumerate() {
        match item.and_then(|g| audit_graph(&g)) {
            Ok(report) => {
                agg.absorb(index, report);
                if fail_fast && !agg.failed_graphs.is_empty() {
                    agg.stopped_early = true;
                    break;
                }
            }
            Err(e) => {
                agg.total += 1;
                agg.errors.push((index, e.to_string()));
                if fail_fast {
                    agg.stopped_early = true;
                    break;
                }
            }
        }
    }
    agg
}

/// Parallel audit of every connected labeled graph of order `n`. Aggregation
/// is order-independent; failures are reported by ascending edge bitmask.
pub fn audit_all_connected(n: usize) -> Result<AuditAggregate> {
    if !(2..=enumerate::MAX_ENUM_VERTICES).contains(&n) {
        return Err(Error::Unsupported(format!(
            "exhaustive audit supports orders 2..={}",
            enumerate::MAX_ENUM_VERTICES
        )));
    }
    let agg = (0..enumerate::mask_count(n))
        .into_par_iter()
        .fold(AuditAggregate::default, |mut agg, mask| {
            let g = enumerate::graph_from_mask(n, mask as u32);
            if g.is_connected() {
                match audit_graph(&g) {
                    Ok(report) => agg.absorb(mask as usize, report),
                    Err(e) => {
                        agg.total += 1;
                        agg.errors.push((mask as usize, e.to_string()));
                    }
                }
            }
            agg
        })
        .reduce(AuditAggregate::default, |mut a, b| {
            a.total += b.total;
            a.failed_graphs.extend(b.failed_graphs);
            a.errors.extend(b.errors);
            for (x, y) in a.tallies.iter_mut().zip(b.tallies) {
                x.applicable += y.applicable;
                x.passed += y.passed;
            }
            a
        });
    let mut agg = agg;
    agg.failed_graphs.sort_by_key(|(i, _)| *i);
    agg.errors.sort_by_key(|(i, _)| *i);
    Ok(agg)
}

/// Audit of every ConstructedGraph promise plus the theorem checks.
pub fn audit_construction(c: &ConstructedGraph) -> Result<AuditReport> {
    c.verify()?;
    audit_graph(&c.graph)
}

/// Scan of one order: how many connected graphs, how many uniquely
/// k-dimensional ones, and the lexicographically least example.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderScan {
    pub order: usize,
    pub connected: usize,
    pub hits: usize,
    pub example: Option<String>,
    pub skipped: bool,
}

/// Per-order existence table for uniquely k-dimensional graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct N0Result {
    pub k: usize,
    pub dedup: bool,
    pub scans: Vec<OrderScan>,
    /// Least scanned order with a hit.
    pub n0: Option<usize>,
}

impl N0Result {
    /// A hit at order ≤ 2k would contradict the half-order bound; this is a
    /// post-hoc consistency test, never a search shortcut.
    pub fn contradicts_half_order_bound(&self) -> bool {
        matches!(self.n0, Some(n0) if n0 <= 2 * self.k)
    }
}

/// Scans orders 2..=max_order for uniquely k-dimensional connected graphs.
/// With `skip_forced`, orders below 2k+1 are skipped (justified by the
/// half-order bound); the default scans them anyway as a falsification test.
pub fn search_n0(k: usize, max_order: usize, dedup: bool, skip_forced: bool) -> Result<N0Result> {
    if k == 0 {
        return Err(Error::Unsupported("k must be at least 1".into()));
    }
    if !(2..=enumerate::MAX_ENUM_VERTICES).contains(&max_order) {
        return Err(Error::Unsupported(format!(
            "built-in search supports max orders 2..={}; use an external \
             graph6 stream beyond that",
            enumerate::MAX_ENUM_VERTICES
        )));
    }
    let mut scans = Vec::new();
    let mut n0 = None;
    for order in 2..=max_order {
        if skip_forced && order < 2 * k + 1 {
            scans.push(OrderScan {
                order,
                connected: 0,
                hits: 0,
                example: None,
                skipped: true,
            });
            continue;
        }
        let perms = dedup.then(|| EdgePermutations::new(order));
        let (connected, hits, example) = (0..enumerate::mask_count(order))
            .into_par_iter()
            .fold(
                || (0usize, 0usize, None::<u64>),
                |(mut connected, mut hits, mut example), mask| {
                    let g = enumerate::graph_from_mask(order, mask as u32);
                    if !g.is_connected() {
                        return (connected, hits, example);
                    }
                    if let Some(perms) = &perms {
                        if !perms.is_canonical(mask as u32) {
                            return (connected, hits, example);
                        }
                    }
                    connected += 1;
                    let resolver = Resolver::new(&g).expect("connected");
                    if resolver.is_uniquely_k_dimensional(k) {
                        hits += 1;
                        example = Some(example.map_or(mask, |e: u64| e.min(mask)));
                    }
                    (connected, hits, example)
                },
            )
            .reduce(
                || (0, 0, None),
                |a, b| {
                    let example = match (a.2, b.2) {
                        (Some(x), Some(y)) => Some(x.min(y)),
                        (x, y) => x.or(y),
                    };
                    (a.0 + b.0, a.1 + b.1, example)
                },
            );
        if hits > 0 && n0.is_none() {
            n0 = Some(order);
        }
        scans.push(OrderScan {
            order,
            connected,
            hits,
            example: example.map(|m| emit_graph6(&enumerate::graph_from_mask(order, m as u32))),
            skipped: false,
        });
    }
    Ok(N0Result {
        k,
        dedup,
        scans,
        n0,
    })
}
