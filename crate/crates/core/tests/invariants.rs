#[path = "support/invariants.rs"]
mod invariants;

const CASES: u32 = 100;

#[test]
fn s_polynomials_reduce_to_zero() {
    invariants::s_polynomials_reduce_to_zero(CASES).unwrap();
}

#[test]
fn normal_form_is_idempotent() {
    invariants::normal_form_is_idempotent(CASES).unwrap();
}

#[test]
fn lift_is_exact() {
    invariants::lift_is_exact(CASES).unwrap();
}

#[test]
fn w_columns_reconstruct() {
    invariants::w_columns_reconstruct(CASES).unwrap();
}

#[test]
fn minors_do_not_depend_on_divisor_order() {
    invariants::minors_do_not_depend_on_divisor_order(CASES).unwrap();
}

#[test]
fn asymmetric_castelnuovo_rules_out_strictness() {
    invariants::asymmetric_castelnuovo_rules_out_strictness(CASES).unwrap();
}

#[test]
fn determinant_matches_bareiss() {
    invariants::determinant_matches_bareiss(CASES).unwrap();
}

#[test]
fn field_axioms() {
    invariants::field_axioms(CASES).unwrap();
}
