//! Acceptance suite: one test per headline claim, each printing a pass/fail
//! line with its runtime. Run with `cargo test --test acceptance -- --nocapture`
//! to see the lines; every tolerance is pinned in code.

mod common;

use std::time::{Duration, Instant};

use unidim_core::constructions::{
    construct_3k, construct_5k_half, construct_k_plus_3k, construct_order9, extend_by_path,
    find_base6, join_identify,
};
use unidim_core::enumerate::enumerate_connected;
use unidim_core::solver::Resolver;
use unidim_core::verifier::{audit_all_connected, search_n0, verify_extremal};
use unidim_core::{diameter, distances, gamma, VertexSet};

use common::naive_dimension_and_bases;

fn finish(name: &str, start: Instant, budget: Duration) {
    let elapsed = start.elapsed();
    println!("ACCEPT {name}: PASS in {:.2}s (budget {:?})", elapsed.as_secs_f64(), budget);
    assert!(
        elapsed <= budget,
        "{name} exceeded its runtime budget: {elapsed:?} > {budget:?}"
    );
}

#[test]
fn criterion_01_order9_graph() {
    let t = Instant::now();
    let c = construct_order9();
    let r = Resolver::new(&c.graph).unwrap();
    assert_eq!(r.dimension(), 3);
    let report = r.basis_report();
    assert_eq!(report.bases, vec![VertexSet::from_indices([0, 1, 2])]);
    assert!(report.unique);
    assert_eq!(diameter(&c.graph).unwrap(), 2);
    assert_eq!(c.graph.max_degree(), 8);
    finish("01 order-9 graph", t, Duration::from_secs(1));
}

#[test]
fn criterion_02_three_k_family() {
    let t = Instant::now();
    for k in 2..=5 {
        let c = construct_3k(k).unwrap();
        let r = Resolver::new(&c.graph).unwrap();
        assert_eq!(r.dimension(), k, "k={k}");
        // Complete subset enumeration at the dimension.
        let bases = r.resolving_sets_of_size(k, usize::MAX);
        assert_eq!(bases, vec![VertexSet::full(k)], "k={k}");
    }
    finish("02 3k family k=2..5", t, Duration::from_secs(5));
}

#[test]
fn criterion_03_k_plus_3k_family() {
    let t = Instant::now();
    // k=2 (n=11): fully verified unique.
    let c2 = construct_k_plus_3k(2).unwrap();
    c2.verify().unwrap();
    // k=3 (n=30): U resolves, no other 3-subset of the 4060 resolves,
    // diameter 3, and the extremal conditions hold.
    let c3 = construct_k_plus_3k(3).unwrap();
    let r = Resolver::new(&c3.graph).unwrap();
    let bases = r.resolving_sets_of_size(3, usize::MAX);
    assert_eq!(bases, vec![VertexSet::full(3)]);
    assert_eq!(diameter(&c3.graph).unwrap(), 3);
    let ext = verify_extremal(&c3.graph).unwrap();
    assert!(ext.applicable && ext.all_pass(), "{ext:?}");
    let d = distances(&c3.graph).unwrap();
    for u in 0..3 {
        assert!(gamma(&d, u, 3).len() >= 9, "u={u}");
    }
    for w in 3..30 {
        assert!(gamma(&d, w, 3).len() <= 3, "w={w}");
    }
    finish("03 k+3^k family k=2,3", t, Duration::from_secs(30));
}

#[test]
fn criterion_04_recursive_composition() {
    let t = Instant::now();
    let base = find_base6().unwrap();
    let bb = join_identify(&base, &base).unwrap();
    assert_eq!(bb.graph.n(), 11);
    let r = Resolver::new(&bb.graph).unwrap();
    assert_eq!(r.dimension(), 4);
    assert_eq!(r.resolving_sets_of_size(4, usize::MAX).len(), 1);

    let b9 = join_identify(&base, &construct_order9()).unwrap();
    assert_eq!(b9.graph.n(), 14);
    let r = Resolver::new(&b9.graph).unwrap();
    assert_eq!(r.dimension(), 5);
    assert_eq!(r.resolving_sets_of_size(5, usize::MAX).len(), 1);
    finish("04 recursive composition", t, Duration::from_secs(10));
}

#[test]
fn criterion_05_five_halves_bound() {
    let t = Instant::now();
    for (k, order) in [(4, 11), (5, 14)] {
        let c = construct_5k_half(k).unwrap();
        assert_eq!(c.graph.n(), order);
        let r = Resolver::new(&c.graph).unwrap();
        assert_eq!(r.dimension(), k);
        assert_eq!(
            r.resolving_sets_of_size(k, usize::MAX),
            vec![c.designated_basis]
        );
    }
    finish("05 5k/2 composition k=4,5", t, Duration::from_secs(10));
}

#[test]
fn criterion_06_path_extension() {
    let t = Instant::now();
    let base = find_base6().unwrap();
    let u = base.designated_basis.min().unwrap();
    for m in 1..=6 {
        let ext = extend_by_path(&base, u, m).unwrap();
        assert_eq!(ext.graph.n(), 6 + m);
        let r = Resolver::new(&ext.graph).unwrap();
        assert_eq!(r.dimension(), 2, "m={m}");
        assert_eq!(
            r.resolving_sets_of_size(2, usize::MAX),
            vec![base.designated_basis],
            "m={m}"
        );
    }
    finish("06 path extension m=1..6", t, Duration::from_secs(10));
}

#[test]
fn criterion_07_n0_of_2_is_6() {
    let t = Instant::now();
    let res = search_n0(2, 6, false, false).unwrap();
    assert_eq!(res.n0, Some(6));
    for scan in &res.scans {
        if scan.order < 6 {
            assert_eq!(scan.hits, 0, "order {}", scan.order);
        }
    }
    let last = res.scans.last().unwrap();
    assert_eq!(last.connected, 26704);
    // Frozen count of uniquely 2-dimensional labeled graphs of order 6,
    // established by an independent brute-force scan.
    assert_eq!(last.hits, 1080);
    assert!(!res.contradicts_half_order_bound());
    finish("07 n0(2) = 6", t, Duration::from_secs(10));
}

#[test]
fn criterion_08_no_uniquely_3_dimensional_graph_of_order_7() {
    let t = Instant::now();
    let res = search_n0(3, 7, false, false).unwrap();
    assert_eq!(res.n0, None);
    assert!(res.scans.iter().all(|s| s.hits == 0));
    assert_eq!(res.scans.last().unwrap().connected, 1866256);
    finish("08 no uniquely 3-dimensional order 7", t, Duration::from_secs(600));
}

#[test]
fn criterion_09_theorem_audit_sweep() {
    let t = Instant::now();
    for n in 2..=7 {
        let agg = audit_all_connected(n).unwrap();
        assert!(agg.clean(), "order {n}: {:?}", agg.failed_graphs.first());
        assert!(agg.errors.is_empty(), "order {n}");
        // Checks 1 and 2 apply to every graph.
        assert_eq!(agg.tallies[0].applicable, agg.total);
        assert_eq!(agg.tallies[0].passed, agg.total);
        assert_eq!(agg.tallies[1].passed, agg.tallies[1].applicable);
    }
    finish("09 theorem audit sweep n<=7", t, Duration::from_secs(900));
}

#[test]
fn criterion_10_solver_oracle_equivalence() {
    let t = Instant::now();
    let mut mismatches = 0;
    for n in 2..=6 {
        for g in enumerate_connected(n, false).unwrap() {
            let (k, bases) = naive_dimension_and_bases(&g);
            let r = Resolver::new(&g).unwrap();
            if r.dimension() != k || r.basis_report().bases != bases {
                mismatches += 1;
            }
        }
    }
    assert_eq!(mismatches, 0);
    finish("10 solver oracle equivalence n<=6", t, Duration::from_secs(120));
}
