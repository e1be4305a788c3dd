mod support;

use support::*;

const CASES: u32 = 200;

#[test]
fn division_re_expands() {
    run_property(CASES, ideal_data(3, 4), prop_division).unwrap();
}

#[test]
fn buchberger_is_idempotent() {
    run_property(CASES, ideal_data(3, 3), prop_buchberger_idempotent).unwrap();
}

#[test]
fn membership_agrees_across_orders() {
    run_property(CASES, ideal_data(3, 3), prop_membership_orders).unwrap();
}

#[test]
fn syzygies_are_relations() {
    run_property(CASES, ideal_data(3, 3), prop_syzygies).unwrap();
}

#[test]
fn quotient_and_annihilator_laws() {
    run_property(CASES, ideal_data(2, 3), prop_quotient_laws).unwrap();
}

#[test]
fn radical_is_certified() {
    run_property(CASES, ideal_data(2, 3), prop_radical).unwrap();
}
