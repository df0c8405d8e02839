//! One test per release criterion. Each prints a single summary line
//! (visible under --nocapture or on failure) and then asserts, so a red
//! run names exactly the guarantee that broke.

use burnlab::suite::{self, CriterionResult, SuiteConfig};

fn gate(result: CriterionResult) {
    let verdict = if result.pass { "PASS" } else { "FAIL" };
    println!(
        "[acceptance] {}: {} — {} ({} ms)",
        result.name, verdict, result.detail, result.millis
    );
    assert!(result.pass, "{}: {}", result.name, result.detail);
}

fn cfg() -> SuiteConfig {
    SuiteConfig::default()
}

#[test]
fn paths_and_cycles_burn_in_ceil_sqrt_n() {
    gate(suite::path_cycle_square_root_law(&cfg()));
}

#[test]
fn exact_solver_agrees_with_brute_force() {
    gate(suite::solver_matches_oracle(&cfg()));
}

#[test]
fn edge_burning_stays_within_one_step() {
    gate(suite::edge_burning_within_one(&cfg()));
}

#[test]
fn trees_never_burn_faster_than_their_line_graphs() {
    gate(suite::tree_edge_burning_at_most_vertex(&cfg()));
}

#[test]
fn total_burning_is_sandwiched() {
    gate(suite::total_burning_sandwich(&cfg()));
}

#[test]
fn spiked_total_burning_costs_exactly_one_more() {
    gate(suite::spiked_total_equals_plus_one(&cfg()));
}

#[test]
fn witness_transports_revalidate_at_stated_horizons() {
    gate(suite::sequence_transforms_sound(&cfg()));
}

#[test]
fn path_free_graphs_burn_within_half_k() {
    gate(suite::path_free_recursion_bound(&cfg()));
}

#[test]
fn partition_gadgets_verify_and_certify() {
    gate(suite::hardness_gadget_structure(&cfg()));
}

#[test]
fn interval_graphs_obey_diameter_root_bounds() {
    gate(suite::interval_diameter_bounds(&cfg()));
}

#[test]
fn square_root_cap_holds_on_the_corpus() {
    gate(suite::square_root_conjecture_spot_check(&cfg()));
}
