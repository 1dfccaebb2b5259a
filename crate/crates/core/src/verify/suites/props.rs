#![allow(clippy::needless_range_loop)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use serde_json::json;

use crate::algebra::{MultiPoly, Var};
use crate::cfrac::{named_family, qt_catalan, Family};
use crate::perm::{enumerate, stat, ClassSpec, Permutation, StatKey};
use crate::verify::ballot::{alpha, alpha_inv, ballot_index, beta, beta_inv, last_minus_one_is_peak};
use crate::verify::check::{
    carlitz, carlitz_sq, count, dist, ensure, int_eq, mono, poly_eq, q_vars, signed_shift, tq_vars, Outcome,
};
use crate::verify::oracle::{ballot_closed, ballot_rows};

use super::interpretations::{expand, rebuild};
use crate::algebra::GammaBasis;

fn key(s: &str) -> StatKey {
    s.parse().expect("built-in statistic")
}

/// `C_n(q^2)` read three ways, `C_n(q)` through `3-12`, and the admissible
/// inversion facts on down-up permutations. `n` runs while `2n+1 <= len_max`.
pub fn propositions(len_max: usize) -> Outcome {
    let (inv, adi, p312, p312_) = (key("inv"), key("adi"), key("3-12"), key("31-2"));
    for n in 1..=(len_max.saturating_sub(1) / 2) {
        let n32 = n as u32;
        let c2 = carlitz_sq(n);
        let hat = dist(&ClassSpec::hat_s321(2 * n + 1, n32), "q^inv");
        poly_eq(format!("C_{n}(q^2) over hat S({},{n})(321)", 2 * n + 1), &signed_shift(&c2, 0, 2 * n as i32), &hat)?;
        let ndw = dist(&ClassSpec::ndw(2 * n + 1, n32 + 1), "q^inv");
        poly_eq(format!("C_{n}(q^2) over NDW({},{})", 2 * n + 1, n + 1), &signed_shift(&c2, 0, 2 * n as i32), &ndw)?;
        let nde = dist(&ClassSpec::nde(2 * n, n32), "q^inv");
        poly_eq(format!("C_{n}(q^2) over NDE({},{n})", 2 * n), &signed_shift(&c2, 0, n as i32), &nde)?;

        for (label, spec, parity) in [
            ("hat S(321)", ClassSpec::hat_s321(2 * n + 1, n32), 0),
            ("NDW", ClassSpec::ndw(2 * n + 1, n32 + 1), 0),
            ("NDE", ClassSpec::nde(2 * n, n32), n as u32 % 2),
        ] {
            for pi in enumerate(&spec) {
                ensure(format!("parity of inv on {label} at n={n}"), stat(&pi, &inv) % 2 == parity, || {
                    json!({ "permutation": pi.to_string() })
                })?;
            }
        }

        let tilde = ClassSpec::tilde(2 * n + 1, n32, "213");
        let sum = dist(&tilde, "q^-3-12");
        poly_eq(format!("C_{n}(q) over tilde S({},{n})(213)", 2 * n + 1), &carlitz(n), &signed_shift(&sum, 0, (n * n) as i32))?;
        let du = ClassSpec::down_up(2 * n + 1);
        for pi in enumerate(&tilde) {
            let r = pi.reverse();
            let (a, ar) = (stat(&pi, &adi), stat(&r, &adi));
            let ok = du.membership(&pi)
                && pi.at(1) == 2 * n + 1
                && a + ar == (2 * n * n + n) as u32
                && a == 2 * stat(&pi, &p312)
                && ar == stat(&pi, &p312_);
            ensure(format!("admissible inversions on tilde S({},{n})(213)", 2 * n + 1), ok, || {
                json!({ "permutation": pi.to_string(), "adi": a, "adi_reverse": ar })
            })?;
        }
        for pi in enumerate(&du) {
            ensure(format!("adi = inv on down-up permutations of length {}", 2 * n + 1), stat(&pi, &adi) == stat(&pi, &inv), || {
                json!({ "permutation": pi.to_string() })
            })?;
        }
    }
    Ok(())
}

fn qt(c: i64, t: i32, q: i32) -> MultiPoly {
    mono(tq_vars(), c, &[(Var::T, t), (Var::Q, q)])
}

/// `P_n`, `Q_n`, `R_n` from their convolutions, indices `0..=n_max`.
fn convolutions(n_max: usize) -> [Vec<MultiPoly>; 3] {
    let c: Vec<MultiPoly> = (0..=n_max).map(qt_catalan).map(|p| p.embed(tq_vars()).expect("t and q")).collect();
    let zero = || MultiPoly::zero(tq_vars());
    let one = || MultiPoly::one(tq_vars());
    let (mut p, mut q, mut r) = (vec![one(), zero()], vec![one(), zero()], vec![zero(), one()]);
    for n in 2..=n_max {
        let mut pn = zero();
        let mut qn = zero();
        let mut rn = zero();
        for m in 0..=n - 2 {
            // the ascent into n exists only when the left block is nonempty
            let e = if m == 0 { 0 } else { n - m - 1 };
            pn = &pn + &(&(&qt(1, 1, e as i32) * &p[m]) * &c[n - m - 1]);
            qn = &qn + &(&(&qt(1, 1, m as i32) * &q[m]) * &c[n - m - 1]);
        }
        for m in 1..=n - 1 {
            rn = &rn + &(&(&qt(1, 1, (n - m - 1) as i32) * &r[m]) * &c[n - m - 1]);
        }
        p.push(pn);
        q.push(qn);
        r.push(rn);
    }
    [p, q, r]
}

pub fn recurrences(n_max: usize, full_max: usize) -> Outcome {
    let [p, q, r] = convolutions(n_max);
    for n in 2..=n_max {
        let cases = [
            ("P", &p[n], "231", "t^des,q^13-2"),
            ("Q", &q[n], "132", "t^des,q^2-31"),
            ("R", &r[n], "213", "t^des,q^31-2"),
        ];
        for (name, conv, tau, w) in cases {
            let e = dist(&ClassSpec::coderangement(n, &[tau]), w);
            poly_eq(format!("{name}_{n} convolution against D*_{n}({tau})"), conv, &e)?;
        }
        let lhs = dist(&ClassSpec::coderangement(n, &["213"]), "t^des,q^13-2");
        let rhs = &dist(&ClassSpec::avoiders(n - 1, &["213"]), "t^des,q^13-2").embed(tq_vars()).expect("t and q")
            * &qt(1, 1, 0);
        poly_eq(format!("D*_{n}(213) against t S_{}(213)", n - 1), &lhs, &rhs)?;

        let fl = dist(&ClassSpec::coderangement(n, &["132"]), "t^des,q^fl");
        let basis = GammaBasis::one_plus_t(n as u32);
        let gs = expand(&fl, n as u32, &format!("D*_{n}(132) t^des q^fl"))?;
        let bar: Vec<MultiPoly> =
            (0..basis.len()).map(|k| dist(&ClassSpec::overline_dstar132(n, k as u32), "q^fl")).collect();
        for (k, (g, b)) in gs.iter().zip(&bar).enumerate() {
            poly_eq(format!("gamma_{n},{k} of D*_{n}(132) over Dbar*({n},{k})(132)"), g, b)?;
        }
        poly_eq(format!("D*_{n}(132) rebuilt from Dbar* classes"), &rebuild(&bar, basis), &fl)?;

        if n % 2 == 0 {
            let m = n / 2;
            let top: BTreeSet<Permutation> =
                enumerate(&ClassSpec::overline_dstar132(n, m as u32)).map(|p| p.reverse()).collect();
            let alt: BTreeSet<Permutation> = enumerate(&ClassSpec::alternating(n, &["231"])).collect();
            ensure(format!("reversal maps Dbar*({n},{m})(132) onto A_{n}(231)"), top == alt, || {
                json!({ "left": top.len(), "right": alt.len() })
            })?;
        }
    }

    for j in 0..=(n_max.saturating_sub(1) / 2) {
        let e = dist(&ClassSpec::alternating(2 * j + 1, &["132"]), "q^2-31");
        poly_eq(format!("q^{j} C_{j}(q^2) over A_{}(132)", 2 * j + 1), &signed_shift(&carlitz_sq(j), 0, j as i32), &e)?;
    }

    let cstar: Vec<MultiPoly> = (0..=n_max / 2).map(|m| named_family(Family::CStar, m).embed(q_vars()).expect("q")).collect();
    for n in 1..cstar.len() {
        let mut acc = MultiPoly::zero(q_vars());
        for m in 0..n {
            // an empty right block has no descent out of the maximum
            let shift = if m == 0 { n - 1 } else { 3 * n - 3 * m - 2 } as i32;
            acc = &acc + &signed_shift(&(&cstar[m] * &carlitz_sq(n - m - 1)), 0, shift);
        }
        poly_eq(format!("C*_{n} convolution"), &cstar[n], &acc)?;
    }

    let (des, p312, p132, fl) = (key("des"), key("31-2"), key("13-2"), key("fl"));
    for n in 1..=full_max {
        for pi in Permutation::all(n) {
            let left = stat(&pi, &des) + stat(&pi, &p312) + 1;
            let right = stat(&pi, &fl) + stat(&pi, &p132);
            ensure(format!("des + (31-2) + 1 = fl + (13-2) on S_{n}"), left == right, || {
                json!({ "permutation": pi.to_string(), "left": left, "right": right })
            })?;
        }
    }
    Ok(())
}

fn perms(list: &[&str]) -> BTreeSet<Permutation> {
    list.iter().map(|s| s.parse().expect("literal permutation")).collect()
}

/// The listed classes `a_{m,k}` for `m <= 3`.
pub const LISTED_CLASSES: [(usize, u32, &[&str]); 6] = [
    (1, 0, &["12"]),
    (2, 0, &["1423"]),
    (2, 1, &["1324"]),
    (3, 0, &["162534"]),
    (3, 1, &["162435", "132645"]),
    (3, 2, &["132546", "152436"]),
];

/// The worked `alpha` and `beta` images at `m = 4`: source class, images.
pub const ALPHA_TABLE: [(u32, &[&str], &[&str]); 3] = [
    (
        3,
        &["13254768", "13274658", "15243768", "17243658", "17263548"],
        &["13254867", "13284657", "15243867", "18243657", "18263547"],
    ),
    (2, &["13284657", "18243657", "18263547"], &["13284756", "18243756", "18273546"]),
    (1, &["18273546"], &["18273645"]),
];

pub const BETA_TABLE: [(u32, &[&str], &[&str]); 3] = [
    (2, &["13254867", "15243867"], &["132546", "152436"]),
    (1, &["13284756", "18243756"], &["132645", "162435"]),
    (0, &["18273645"], &["162534"]),
];

pub fn ballot_suite(len_max: usize) -> Outcome {
    let rows = ballot_rows(31);
    for (n, row) in rows.iter().enumerate() {
        for (k, v) in row.iter().enumerate() {
            int_eq(format!("ballot recurrence against closed form at ({n},{k})"), v.clone(), ballot_closed(n, k))?;
        }
    }

    let m_max = len_max / 2;
    let classes: Vec<Vec<BTreeSet<Permutation>>> = (0..=m_max)
        .map(|m| {
            if m == 0 {
                return Vec::new();
            }
            (0..m as u32).map(|k| enumerate(&ClassSpec::ballot(m, k)).collect()).collect()
        })
        .collect();

    for m in 1..=m_max {
        let mut cbar = MultiPoly::zero(q_vars());
        for (k, class) in classes[m].iter().enumerate() {
            int_eq(format!("|a({m},{k})| = f({},{k})", m - 1), class.len(), ballot_closed(m - 1, k))?;
            cbar = &cbar + &mono(q_vars(), class.len() as i64, &[(Var::Q, k as i32)]);
        }
        int_eq(format!("a({m},{m}) is empty"), count(&ClassSpec::ballot(m, m as u32)), BigInt::from(0))?;
        poly_eq(format!("Cbar_{m} from the ballot classes"), &named_family(Family::CBar, m), &cbar)?;
        let via_last: MultiPoly = enumerate(&ClassSpec::alternating(2 * m, &["231"]))
            .map(|p| mono(q_vars(), 1, &[(Var::Q, *p.values().last().expect("nonempty") as i32 - m as i32 - 1)]))
            .fold(MultiPoly::zero(q_vars()), |a, b| &a + &b);
        poly_eq(format!("Cbar_{m} through the last letter"), &cbar, &via_last)?;
        let bad = enumerate(&ClassSpec::alternating(2 * m, &["231"])).find(|p| p.at(1) != 1);
        ensure(format!("A_{}(231) starts with 1", 2 * m), bad.is_none(), || {
            json!({ "permutation": bad.as_ref().map(|p| p.to_string()) })
        })?;
    }

    for (m, k, list) in LISTED_CLASSES {
        if 2 * m > len_max {
            continue;
        }
        let got = &classes[m][k as usize];
        ensure(format!("listed a({m},{k})"), *got == perms(list), || {
            json!({ "enumerated": got.iter().map(|p| p.to_string()).collect::<Vec<_>>(), "listed": list })
        })?;
    }

    if len_max >= 8 {
        for (k, src, dst) in ALPHA_TABLE {
            let ap: BTreeSet<Permutation> =
                classes[4][k as usize].iter().filter(|p| last_minus_one_is_peak(p) == Some(true)).cloned().collect();
            ensure(format!("a^p(4,{k}) as listed"), ap == perms(src), || json!({ "size": ap.len() }))?;
            for (s, d) in src.iter().zip(dst) {
                let img = alpha(&s.parse().expect("literal")).map(|p| p.to_string());
                ensure(format!("alpha({s})"), img.as_deref() == Ok(*d), || json!({ "got": format!("{img:?}"), "listed": d }))?;
            }
        }
        for (k, src, dst) in BETA_TABLE {
            let av: BTreeSet<Permutation> =
                classes[4][k as usize].iter().filter(|p| last_minus_one_is_peak(p) == Some(false)).cloned().collect();
            ensure(format!("a^v(4,{k}) as listed"), av == perms(src), || json!({ "size": av.len() }))?;
            for (s, d) in src.iter().zip(dst) {
                let img = beta(&s.parse().expect("literal")).map(|p| p.to_string());
                ensure(format!("beta({s})"), img.as_deref() == Ok(*d), || json!({ "got": format!("{img:?}"), "listed": d }))?;
            }
        }
    }

    for m in 2..=m_max {
        for k in 0..m {
            let mut alpha_images = BTreeSet::new();
            let mut beta_images = BTreeSet::new();
            for pi in &classes[m][k] {
                let peak = last_minus_one_is_peak(pi).expect("member of the class");
                let (img, back, target) = if peak {
                    let a = alpha(pi).expect("peak case");
                    let back = alpha_inv(&a).ok();
                    alpha_images.insert(a.clone());
                    (a, back, (m, k.wrapping_sub(1)))
                } else {
                    let b = beta(pi).expect("valley case");
                    let back = beta_inv(&b).ok();
                    beta_images.insert(b.clone());
                    (b, back, (m - 1, k))
                };
                let ok = ballot_index(&img) == Some(target) && back.as_ref() == Some(pi);
                ensure(format!("bijection step on a({m},{k})"), ok, || {
                    json!({ "permutation": pi.to_string(), "image": img.to_string() })
                })?;
            }
            let expect_alpha = if k == 0 { BTreeSet::new() } else { classes[m][k - 1].clone() };
            ensure(format!("alpha maps a^p({m},{k}) onto a({m},{})", k as i64 - 1), alpha_images == expect_alpha, || {
                json!({ "images": alpha_images.len(), "target": expect_alpha.len() })
            })?;
            let expect_beta = classes[m - 1].get(k).cloned().unwrap_or_default();
            ensure(format!("beta maps a^v({m},{k}) onto a({},{k})", m - 1), beta_images == expect_beta, || {
                json!({ "images": beta_images.len(), "target": expect_beta.len() })
            })?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranges_pass() {
        propositions(7).unwrap();
        recurrences(7, 6).unwrap();
        ballot_suite(8).unwrap();
    }

    #[test]
    fn convolution_start() {
        let [p, q, r] = convolutions(3);
        assert_eq!(p[2].to_string(), "t");
        assert_eq!(q[2].to_string(), "t");
        assert_eq!(r[2].to_string(), "t");
        assert!(p[1].is_zero() && q[1].is_zero());
    }
}
