use proptest::prelude::*;
use qtcat::algebra::{gamma_expand, reconstruct, GammaBasis, GammaResult};
use qtcat::mfs::{act, orbit, representative, ActionKind};
use qtcat::perm::{avoids, stat};
use qtcat::{MultiPoly, PatternSpec, Permutation, StatKey, Var, VarSet};

fn perm(max: usize) -> impl Strategy<Value = Permutation> {
    (1..=max).prop_flat_map(|n| {
        Just((1..=n as u8).collect::<Vec<u8>>()).prop_shuffle().prop_map(|v| Permutation::new(v).unwrap())
    })
}

fn key(s: &str) -> StatKey {
    s.parse().unwrap()
}

fn st(pi: &Permutation, s: &str) -> u32 {
    stat(pi, &key(s))
}

fn poly(vars: VarSet) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((-3i32..=3, -3i32..=3, -9i64..=9), 0..6).prop_map(move |terms| {
        terms.into_iter().fold(MultiPoly::zero(vars), |acc, (a, b, c)| {
            &acc + &MultiPoly::monomial(vars, c, &[(Var::T, a), (Var::Q, b)]).unwrap()
        })
    })
}

fn tq() -> VarSet {
    VarSet::new(&[Var::T, Var::Q])
}

proptest! {
    #[test]
    fn symmetries_are_involutions(pi in perm(9)) {
        prop_assert_eq!(pi.inverse().inverse(), pi.clone());
        prop_assert_eq!(pi.reverse().reverse(), pi.clone());
        prop_assert_eq!(pi.complement().complement(), pi.clone());
        prop_assert_eq!(pi.reverse_complement(), pi.reverse().complement());
    }

    #[test]
    fn statistic_relations(pi in perm(9)) {
        let n = pi.len() as u32;
        prop_assert_eq!(st(&pi, "des") + st(&pi, "asc"), n);
        prop_assert_eq!(st(&pi, "wex") + st(&pi, "drop"), n);
        prop_assert_eq!(st(&pi, "exc") + st(&pi, "fix"), st(&pi, "wex"));
        prop_assert_eq!(st(&pi, "mad"), st(&pi, "des") + st(&pi, "31-2") + 2 * st(&pi, "2-31"));
        prop_assert_eq!(st(&pi, "inv"), st(&pi.inverse(), "inv"));
        prop_assert_eq!(st(&pi, "ine"), st(&pi, "nest"));
        prop_assert_eq!(st(&pi, "des") + st(&pi, "31-2") + 1, st(&pi, "fl") + st(&pi, "13-2"));
    }

    #[test]
    fn avoidance_under_reversal(pi in perm(8), tau in prop::sample::select(vec!["123", "132", "213", "231", "312", "321"])) {
        let p: PatternSpec = tau.parse().unwrap();
        let rev: String = tau.chars().rev().collect();
        let r: PatternSpec = rev.parse().unwrap();
        prop_assert_eq!(avoids(&pi, &[p]).unwrap(), avoids(&pi.reverse(), &[r]).unwrap());
    }

    #[test]
    fn actions_commute_and_keep_invariants(pi in perm(8), x in 1usize..=8, y in 1usize..=8) {
        let n = pi.len();
        prop_assume!(x <= n && y <= n);
        for (kind, kept) in [(ActionKind::PhiPrimeZero, ["2-13", "31-2"]), (ActionKind::PhiPrimeNPlusOne, ["2-31", "13-2"])] {
            let a = act(&pi, x, kind).unwrap();
            prop_assert_eq!(act(&a, x, kind).unwrap(), pi.clone());
            let xy = act(&act(&pi, y, kind).unwrap(), x, kind).unwrap();
            let yx = act(&a, y, kind).unwrap();
            prop_assert_eq!(xy, yx);
            for s in kept {
                prop_assert_eq!(st(&a, s), st(&pi, s));
            }
        }
        let zero = act(&pi, x, ActionKind::PhiPrimeZero).unwrap();
        prop_assert_eq!(st(&zero, "adi"), st(&pi, "adi"));
    }

    #[test]
    fn representative_is_shared(pi in perm(7)) {
        for kind in [ActionKind::PhiPrimeZero, ActionKind::PhiPrimeNPlusOne] {
            let rep = representative(&pi, kind).unwrap();
            for other in orbit(&pi, kind) {
                prop_assert_eq!(representative(&other, kind).unwrap(), rep.clone());
            }
        }
    }

    #[test]
    fn ring_laws(a in poly(tq()), b in poly(tq()), c in poly(tq())) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn print_parse(a in poly(tq())) {
        let back = MultiPoly::parse_with_vars(&a.to_string(), tq()).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn gamma_round_trip(gs in prop::collection::vec(0i64..20, 1..5), extra in 0u32..2) {
        let span = 2 * (gs.len() as u32 - 1) + extra;
        let coeffs: Vec<MultiPoly> = gs.iter().map(|&g| MultiPoly::constant(VarSet::EMPTY, g)).collect();
        let p = reconstruct(&coeffs, Var::T, GammaBasis::one_plus_t(span)).unwrap();
        prop_assert!(p.is_palindromic(Var::T, 0, span as i32).unwrap());
        match gamma_expand(&p, GammaBasis::one_plus_t(span)).unwrap() {
            GammaResult::Success(back) => {
                let got: Vec<String> = back.iter().map(|c| c.to_string()).collect();
                let want: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
                prop_assert_eq!(got, want);
            }
            GammaResult::Failure { .. } => prop_assert!(false, "reconstructed polynomial failed to expand"),
        }
    }
}
