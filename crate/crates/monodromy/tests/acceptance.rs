//! Acceptance suite: runs every bundled criterion at its stated tolerance
//! and prints one pass/fail line per criterion (visible with --nocapture;
//! the `verify-paper` CLI command prints the same lines unconditionally).

use monodromy::verify::{run_suite, CheckResult, DEFAULT_SEED};
use std::sync::OnceLock;

fn suite() -> &'static Vec<CheckResult> {
    static SUITE: OnceLock<Vec<CheckResult>> = OnceLock::new();
    SUITE.get_or_init(|| run_suite(DEFAULT_SEED))
}

fn criterion(name: &str, max_millis: Option<u128>) {
    let r = suite()
        .iter()
        .find(|c| c.name == name)
        .unwrap_or_else(|| panic!("no check named {name}"));
    let status = if r.passed { "PASS" } else { "FAIL" };
    println!("{status} {} ({} ms)", r.name, r.millis);
    assert!(r.passed, "{}: {}", r.name, r.detail);
    if let Some(bound) = max_millis {
        assert!(
            r.millis < bound,
            "{} took {} ms, bound {} ms",
            r.name,
            r.millis,
            bound
        );
    }
}

#[test]
fn criterion_01_cusp_cluster_product_identity() {
    criterion("cusp-cluster product identity", Some(100));
}

#[test]
fn criterion_02_cusp_cluster_chains() {
    criterion("cusp-cluster equivalence chains", Some(1000));
}

#[test]
fn criterion_03_vt_cluster_product_chain_centralizer() {
    criterion("vt-cluster product, chain and centralizer", Some(1000));
}

#[test]
fn criterion_04_stabilization_chain() {
    criterion("stabilization chain for full-twist conjugation", Some(1000));
}

#[test]
fn criterion_05_vt_cluster_linking_numbers() {
    criterion("vt-cluster linking numbers and exponent bookkeeping", None);
}

#[test]
fn criterion_06_count_formulas_grid() {
    criterion("count formulas on the parameter grid", Some(60_000));
}

#[test]
fn criterion_07_triangle_and_quadrangle_relations() {
    criterion("triangle and quadrangle relations", None);
}

#[test]
fn criterion_08_gf2_suite() {
    criterion("GF(2) forms suite", None);
}

#[test]
fn criterion_09_rho_suite() {
    criterion("rho invariance and node-orbit separation", None);
}

#[test]
fn criterion_10_comparison_desk_check() {
    criterion("stable-invariant comparison on the abc family", None);
}

#[test]
fn criterion_11_liftability_table() {
    criterion("liftability table", None);
}

#[test]
fn randomized_property_checks() {
    criterion("random words: action is a homomorphism", None);
    criterion("random words: conjugation invariants", None);
    criterion("factor expressibility in the monodromy generators", None);
}

#[test]
fn suite_runs_under_a_minute() {
    let total: u128 = suite().iter().map(|c| c.millis).sum();
    println!("suite total: {total} ms");
    assert!(total < 60_000, "suite took {total} ms");
}
