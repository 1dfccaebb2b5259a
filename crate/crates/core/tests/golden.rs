//! Listed polynomial values and small hand-checked distributions.

use qtcat::cfrac::{named_family, qt_catalan, Family};
use qtcat::perm::distribution;
use qtcat::{ClassSpec, MultiPoly, Weight};

fn dist(class: &str, weights: &str) -> String {
    let spec: ClassSpec = class.parse().unwrap();
    distribution(&spec, &Weight::parse_list(weights).unwrap()).to_string()
}

#[test]
fn carlitz_values() {
    let listed = ["1", "1", "q+1", "q^3+q^2+2*q+1", "q^6+q^5+2*q^4+3*q^3+3*q^2+3*q+1"];
    for (n, want) in listed.iter().enumerate() {
        assert_eq!(named_family(Family::Carlitz, n).to_string(), *want, "C_{n}(q)");
    }
}

#[test]
fn alternating_families() {
    let cstar = ["1", "1", "2*q", "2*q^4+3*q^2", "2*q^9+2*q^7+6*q^5+4*q^3"];
    let cbar = ["1", "1", "q+1", "2*q^2+2*q+1", "5*q^3+5*q^2+3*q+1", "14*q^4+14*q^3+9*q^2+4*q+1"];
    for (n, want) in cstar.iter().enumerate() {
        assert_eq!(named_family(Family::CStar, n).to_string(), *want);
    }
    for (n, want) in cbar.iter().enumerate() {
        assert_eq!(named_family(Family::CBar, n).to_string(), *want);
    }
    assert_eq!(named_family(Family::CHat, 3).to_string(), "q^6+q^5+q^4+q^3+q^2");
}

#[test]
fn qt_catalan_small() {
    assert_eq!(qt_catalan(1).to_string(), "1");
    assert_eq!(qt_catalan(3).to_string(), "t^2+t*q+2*t+1");
    // Narayana numbers at q = 1
    let n4 = qt_catalan(4).specialize(qtcat::Var::Q, 1).unwrap();
    assert_eq!(n4.to_string(), "t^3+6*t^2+6*t+1");
}

#[test]
fn three_letter_enumerations() {
    // 123: 0, 132: 1, 213: 1, 231: 1, 312: 1, 321: 2
    assert_eq!(dist("av:231@n=3", "t^des,q^13-2"), "t^2+t*q+2*t+1");
    assert_eq!(dist("all@n=3", "t^des"), "t^2+4*t+1");
    assert_eq!(dist("av:321@n=2", "t^wex,q^inv"), "t^2+t*q");
    assert_eq!(dist("all@n=3", "(-1)^des"), "-2");
}

#[test]
fn minus_one_at_five() {
    // (-q)^2 C_2(q^2) = q^4 + q^2
    assert_eq!(dist("av:321@n=5", "(-1)^exc,q^inv,q^-exc"), "q^4+q^2");
    assert_eq!(dist("av:321@n=4", "(-1)^exc,q^inv,q^-exc"), "0");
}

#[test]
fn polynomial_text_round_trip() {
    for s in ["t^2+t*q+2*t+1", "2*q^4+3*q^2", "-t*q^-1+5", "0"] {
        assert_eq!(MultiPoly::parse(s).unwrap().to_string(), s);
    }
}
