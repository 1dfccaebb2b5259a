use std::collections::BTreeMap;

use serde_json::json;

use crate::algebra::{gamma_expand, GammaBasis, GammaResult, Monomial, MultiPoly, Var, VarSet};
use crate::cfrac::{cf_series, ceks_gf, q_integer, quint_gf, CFSpec};
use crate::perm::{distribution_over, stat, ClassSpec, Permutation, StatKey};
use crate::verify::check::{dist, ensure, poly_eq, signed_shift, weights, Failure, Outcome};

use super::interpretations::rebuild;

fn key(s: &str) -> StatKey {
    s.parse().expect("built-in statistic")
}

fn keys(list: &[&str]) -> Vec<StatKey> {
    list.iter().map(|s| key(s)).collect()
}

fn multiset<F>(n: usize, f: F) -> BTreeMap<Vec<i64>, u64>
where
    F: Fn(&Permutation) -> Vec<i64>,
{
    let mut out = BTreeMap::new();
    for pi in Permutation::all(n) {
        *out.entry(f(&pi)).or_insert(0) += 1;
    }
    out
}

fn values(pi: &Permutation, ks: &[StatKey]) -> Vec<i64> {
    ks.iter().map(|k| stat(pi, k) as i64).collect()
}

fn multiset_eq(check: String, a: BTreeMap<Vec<i64>, u64>, b: BTreeMap<Vec<i64>, u64>) -> Outcome {
    let diff = a.iter().find(|(v, c)| b.get(*v) != Some(c)).or_else(|| b.iter().find(|(v, c)| a.get(*v) != Some(c)));
    ensure(check, diff.is_none(), || {
        let (v, _) = diff.expect("a differing vector");
        json!({ "vector": v, "left": a.get(v).copied().unwrap_or(0), "right": b.get(v).copied().unwrap_or(0) })
    })
}

fn tpq() -> VarSet {
    VarSet::new(&[Var::T, Var::Q, Var::P])
}

/// `c_{2i-1} = [i]_{p,q}`, `c_{2i} = t [i]_{p,q}`.
fn szl1_spec() -> CFSpec {
    CFSpec::stieltjes(tpq(), |h| {
        let vs = tpq();
        let i = h.div_ceil(2);
        let bracket = q_integer(i, &MultiPoly::var(vs, Var::P).expect("p"), &MultiPoly::var(vs, Var::Q).expect("q"));
        if h % 2 == 1 {
            bracket
        } else {
            &MultiPoly::var(vs, Var::T).expect("t") * &bracket
        }
    })
}

pub fn equidist(n_max: usize) -> Outcome {
    let des_side = keys(&["des", "fmax", "31-2", "2-31", "mad"]);
    let exc_side = keys(&["exc", "fix", "icr", "ine", "inv"]);
    let cyc = keys(&["nest", "cros", "drop", "cda", "cdd", "cvalley", "fix"]);
    let lin = keys(&["2-31", "31-2", "des", "da:mixed", "fmax", "dd:mixed", "valley:mixed"]);
    let szl1 = cf_series(&szl1_spec(), n_max);
    for n in 1..=n_max {
        multiset_eq(
            format!("(des, fmax, 31-2, 2-31, mad) against (exc, fix, icr, ine, inv) on S_{n}"),
            multiset(n, |p| values(p, &des_side)),
            multiset(n, |p| values(p, &exc_side)),
        )?;
        multiset_eq(
            format!("cyclic statistics against linear statistics on S_{n}"),
            multiset(n, |p| values(p, &cyc)),
            multiset(n, |p| {
                let v = values(p, &lin);
                vec![v[0], v[1], v[2], v[3] - v[4], v[5], v[6], v[4]]
            }),
        )?;

        let all = ClassSpec::all(n);
        let quint = quint_gf(n);
        for w in ["x^des,y^fmax,q^31-2,p^2-31,s^mad", "x^exc,y^fix,q^icr,p^ine,s^inv"] {
            poly_eq(format!("quintuple fraction against S_{n} with {w}"), &quint, &dist(&all, w))?;
        }

        let four = [
            "t^des,p^2-13,q^31-2",
            "t^des,p^31-2,q^2-13",
            "t^des,p^2-31,q^31-2",
            "t^des,p^31-2,q^2-31",
        ];
        let cf = szl1.coeff(n);
        for w in four {
            poly_eq(format!("Stieltjes fraction in p, q against S_{n} with {w}"), cf, &dist(&all, w))?;
        }

        let ine0: Vec<Permutation> = Permutation::all(n).filter(|p| stat(p, &StatKey::Ine) == 0).collect();
        let s321 = ClassSpec::avoiders(n, &["321"]);
        for pi in &ine0 {
            ensure(format!("ine = 0 implies 321-avoiding at n={n}"), s321.membership(pi), || {
                json!({ "permutation": pi.to_string() })
            })?;
        }
        let brute = distribution_over(ine0, &weights("q^inv,t^exc,y^fix"));
        poly_eq(format!("CEKS fraction against S_{n} with ine=0"), &ceks_gf(n), &brute)?;
        poly_eq(format!("CEKS fraction against S_{n}(321)"), &ceks_gf(n), &dist(&s321, "q^inv,t^exc,y^fix"))?;
    }
    Ok(())
}

fn times_t(p: &MultiPoly, e: usize) -> MultiPoly {
    p.embed(p.vars().with(Var::T)).expect("superset").mul_monomial(&Monomial::of(Var::T, e as i32))
}

/// `(τ, stat)` with `W_n(t,q) = t^n Σ_{S_n(τ)} (q/t)^des q^stat`.
pub const WEX_CHAIN: [(&str, &str); 10] = [
    ("231", "31-2"),
    ("231", "13-2"),
    ("231", "adi*"),
    ("312", "2-31"),
    ("312", "2-13"),
    ("312", "adi"),
    ("213", "31-2"),
    ("213", "13-2"),
    ("132", "2-31"),
    ("132", "2-13"),
];

/// Classes for the coefficients `q^{n-k} Σ_{S~_{n,k-1}(τ)} q^stat`.
const WEX_GAMMA: [(&str, &str); 4] = [("231", "q^13-2"), ("132", "q^2-31"), ("312", "q^2-13"), ("213", "q^31-2")];

fn expand_in(p: &MultiPoly, basis: GammaBasis, what: String) -> Result<Vec<MultiPoly>, Failure> {
    match gamma_expand(p, basis) {
        Ok(GammaResult::Success(g)) => Ok(g),
        Ok(GammaResult::Failure { remainder, .. }) => Err(Failure::new(
            format!("gamma expansion of {what}"),
            json!({ "polynomial": p.to_string(), "remainder": remainder.to_string() }),
        )),
        Err(e) => Err(Failure::new(format!("gamma expansion of {what}"), json!({ "error": e.to_string() }))),
    }
}

pub fn wex(n_max: usize) -> Outcome {
    let w2 = dist(&ClassSpec::avoiders(2, &["321"]), "t^wex,q^inv");
    poly_eq("W_2(t,q)", &w2, &MultiPoly::parse("t^2+t*q").expect("literal"))?;
    for n in 1..=n_max {
        let w = dist(&ClassSpec::avoiders(n, &["321"]), "t^wex,q^inv");
        for (tau, st) in WEX_CHAIN {
            let rhs = times_t(&dist(&ClassSpec::avoiders(n, &[tau]), &format!("t^-des,q^des,q^{st}")), n);
            poly_eq(format!("W_{n} against S_{n}({tau}) with (q/t)^des q^{st}"), &w, &rhs)?;
        }
        let rhs = times_t(&dist(&ClassSpec::avoiders(n, &["321"]), "t^-drop,q^drop,q^cros"), n);
        poly_eq(format!("W_{n} against S_{n}(321) with (q/t)^drop q^cros"), &w, &rhs)?;

        let basis = GammaBasis::one_plus_t_over_q(n as u32 + 1);
        let gs = expand_in(&w, basis, format!("W_{n} in t(1+t/q)"))?;
        poly_eq(format!("W_{n} rebuilt from its gamma coefficients"), &rebuild(&gs, basis), &w)?;
        for (k, g) in gs.iter().enumerate() {
            let k32 = k as u32;
            let ndw = dist(&ClassSpec::ndw(n, k32), "q^inv");
            poly_eq(format!("gamma_{n},{k} of W_{n} over NDW({n},{k})"), g, &ndw)?;
            if k == 0 {
                continue;
            }
            for (tau, wt) in WEX_GAMMA {
                let e = dist(&ClassSpec::tilde(n, k32 - 1, tau), wt);
                let rhs = signed_shift(&e, 0, (n - k) as i32);
                poly_eq(format!("gamma_{n},{k} of W_{n} over tilde S({n},{})({tau})", k - 1), g, &rhs)?;
            }
        }

        let d = dist(&ClassSpec::derangement(n, &["321"]), "t^exc,q^inv");
        let basis = GammaBasis::one_plus_t(n as u32);
        let gs = expand_in(&d, basis, format!("D_{n}(321) t^exc q^inv"))?;
        for (k, g) in gs.iter().enumerate() {
            let nde = dist(&ClassSpec::nde(n, k as u32), "q^inv");
            poly_eq(format!("gamma_{n},{k} of D_{n}(321) over NDE({n},{k})"), g, &nde)?;
        }
        let from_nde: Vec<MultiPoly> =
            (0..basis.len()).map(|k| dist(&ClassSpec::nde(n, k as u32), "q^inv")).collect();
        poly_eq(format!("D_{n}(321) rebuilt from NDE classes"), &rebuild(&from_nde, basis), &d)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranges_pass() {
        equidist(5).unwrap();
        wex(6).unwrap();
    }

    #[test]
    fn szl1_fraction_at_two() {
        // S_2: 12 contributes 1, 21 contributes t.
        assert_eq!(cf_series(&szl1_spec(), 2).coeff(2).to_string(), "t+1");
    }
}
