use skewgroth::verify;

fn assert_pass(rep: verify::Report) {
    println!("{rep}");
    assert!(rep.passed(), "{rep}");
}

#[test]
fn coproduct_in_two_plus_two_variables() {
    assert_pass(verify::coproduct(5, 2, 2, 5));
}

#[test]
fn double_determinant_is_row_invariant() {
    assert_pass(verify::double_det_row_invariance(5, 6, 2));
}

#[test]
fn determinants_match_adjoints_at_larger_degree() {
    assert_pass(verify::double_det(6, 8));
}

#[test]
fn rook_strip_relation_small_inner() {
    assert_pass(verify::rook_strip(5, 7));
}

#[test]
fn bialternant_is_schur() {
    assert_pass(verify::oracle_bialternant(5, &[1, 2, 3, 4]));
}

#[test]
fn product_expansions_beyond_minimal_rows() {
    assert_pass(verify::product_expansions(2, 3, 2));
}

#[test]
fn perp_expansions_match_direct() {
    assert_pass(verify::perp_expansions(3, 4));
}
