use serde_json::json;

use crate::algebra::{gamma_expand, reconstruct, GammaBasis, GammaResult, MultiPoly, Var};
use crate::cfrac::qt_catalan;
use crate::perm::ClassSpec;
use crate::verify::check::{dist, poly_eq, Failure, Outcome};

/// `(τ, stat)` with `C_n(t,q) = Σ_{S_n(τ)} t^des q^stat`, in table order.
pub const TEN: [(&str, &str); 10] = [
    ("231", "13-2"),
    ("231", "adi*"),
    ("312", "2-13"),
    ("312", "adi"),
    ("213", "31-2"),
    ("132", "2-31"),
    ("231", "31-2"),
    ("312", "2-31"),
    ("213", "13-2"),
    ("132", "2-13"),
];

/// Gamma coefficient interpretations: class builder and weight.
pub const GAMMA_CLASSES: [(&str, &str); 4] =
    [("213", "q^31-2"), ("312", "q^2-13"), ("132", "q^2-31"), ("231", "q^13-2")];

pub fn ten(n_max: usize) -> Outcome {
    for n in 1..=n_max {
        let cf = qt_catalan(n);
        for (i, (tau, st)) in TEN.iter().enumerate() {
            let lhs = dist(&ClassSpec::avoiders(n, &[tau]), &format!("t^des,q^{st}"));
            poly_eq(format!("interpretation {} (S_{n}({tau}), {st})", i + 1), &lhs, &cf)?;
        }
        let lhs = dist(&ClassSpec::avoiders(n, &["321"]), "t^exc,q^inv,q^-exc");
        poly_eq(format!("S_{n}(321) t^exc q^(inv-exc)"), &lhs, &cf)?;
    }
    Ok(())
}

pub fn expand(p: &MultiPoly, span: u32, what: &str) -> Result<Vec<MultiPoly>, Failure> {
    match gamma_expand(p, GammaBasis::one_plus_t(span)) {
        Ok(GammaResult::Success(g)) => Ok(g),
        Ok(GammaResult::Failure { remainder, .. }) => Err(Failure::new(
            format!("gamma expansion of {what}"),
            json!({ "polynomial": p.to_string(), "remainder": remainder.to_string() }),
        )),
        Err(e) => Err(Failure::new(format!("gamma expansion of {what}"), json!({ "error": e.to_string() }))),
    }
}

pub fn rebuild(gs: &[MultiPoly], basis: GammaBasis) -> MultiPoly {
    reconstruct(gs, Var::T, basis).expect("coefficients free of t")
}

pub fn gamma(n_max: usize) -> Outcome {
    for n in 1..=n_max {
        let span = n as u32 - 1;
        let basis = GammaBasis::one_plus_t(span);
        let cf = qt_catalan(n);
        let gs = expand(&cf, span, &format!("C_{n}(t,q)"))?;
        poly_eq(format!("gamma reconstruction of C_{n}(t,q)"), &rebuild(&gs, basis), &cf)?;

        let mut from_hat = Vec::new();
        for (k, g) in gs.iter().enumerate() {
            let k32 = k as u32;
            let hat = dist(&ClassSpec::hat_s321(n, k32), "q^inv,q^-exc");
            poly_eq(format!("gamma_{n},{k} over hat S({n},{k})(321)"), g, &hat)?;
            for (tau, w) in GAMMA_CLASSES {
                let e = dist(&ClassSpec::tilde(n, k32, tau), w);
                poly_eq(format!("gamma_{n},{k} over tilde S({n},{k})({tau}) with {w}"), g, &e)?;
            }
            from_hat.push(hat);
        }
        poly_eq(format!("C_{n}(t,q) rebuilt from enumerated gammas"), &rebuild(&from_hat, basis), &cf)?;

        let adi = dist(&ClassSpec::avoiders(n, &["213"]), "t^des,q^adi");
        let adi_star = dist(&ClassSpec::avoiders(n, &["132"]), "t^des,q^adi*");
        poly_eq(format!("S_{n}(213) adi = S_{n}(132) adi*"), &adi, &adi_star)?;
        let k_max = (n - 1) / 2;
        let g213: Vec<MultiPoly> =
            (0..=k_max).map(|k| dist(&ClassSpec::tilde(n, k as u32, "213"), "q^adi")).collect();
        let g132: Vec<MultiPoly> =
            (0..=k_max).map(|k| dist(&ClassSpec::tilde(n, k as u32, "132"), "q^adi*")).collect();
        poly_eq(format!("adi gamma expansion over S_{n}(213)"), &rebuild(&g213, basis), &adi)?;
        poly_eq(format!("adi* gamma expansion over S_{n}(132)"), &rebuild(&g132, basis), &adi_star)?;
    }
    Ok(())
}
