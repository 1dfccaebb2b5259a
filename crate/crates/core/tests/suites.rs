//! Every suite at a small range through the public entry points.

use qtcat::verify::{
    check_ballot, check_equidistributions, check_gamma_theorems, check_mansour_alt, check_mfs, check_minus_one_des,
    check_minus_one_exc, check_properties, check_propositions, check_recurrences, check_section6,
    check_ten_interpretations, check_wex_variant, explore_conjecture, Report,
};

fn pass(r: Report) {
    assert!(r.passed(), "{r}");
}

#[test]
fn small_ranges() {
    pass(check_ten_interpretations(6));
    pass(check_gamma_theorems(6));
    pass(check_minus_one_exc(7));
    pass(check_minus_one_des(7));
    pass(check_equidistributions(5));
    pass(check_wex_variant(6));
    pass(check_propositions(7));
    pass(check_recurrences(7));
    pass(check_ballot(8));
    pass(check_section6(9, 8));
    pass(explore_conjecture(7));
    pass(check_mansour_alt(9));
    pass(check_mfs(5));
    pass(check_properties(50, 1));
}

#[test]
fn report_json_shape() {
    let r = check_mansour_alt(5);
    let v = serde_json::to_value(&r).unwrap();
    for k in ["suite", "params", "status", "counterexample", "elapsed_ms"] {
        assert!(v.get(k).is_some(), "missing {k}");
    }
    assert_eq!(v["status"], "pass");
    assert!(v["counterexample"].is_null());
}

#[test]
fn reports_are_deterministic() {
    assert_eq!(check_mansour_alt(7).to_string(), check_mansour_alt(7).to_string());
}
