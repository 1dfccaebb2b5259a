//! Seeded random checks of the polynomial and continued fraction machinery.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::algebra::{gamma_expand, reconstruct, GammaBasis, GammaResult, MultiPoly, Var, VarSet};
use crate::cfrac::{cf_series_at_depth, contraction_check, CFSpec, Coef};
use crate::verify::check::{ensure, poly_eq, same, Outcome};

fn tq() -> VarSet {
    VarSet::new(&[Var::T, Var::Q])
}

fn random_poly(rng: &mut impl Rng, vars: VarSet, terms: usize, max_exp: i32, neg: bool) -> MultiPoly {
    let vs: Vec<Var> = Var::ALL.into_iter().filter(|v| vars.contains(*v)).collect();
    let lo = if neg { -max_exp } else { 0 };
    let mut acc = MultiPoly::zero(vars);
    for _ in 0..rng.gen_range(0..=terms) {
        let exps: Vec<(Var, i32)> = vs.iter().map(|&v| (v, rng.gen_range(lo..=max_exp))).collect();
        let c: i64 = rng.gen_range(-5..=5);
        acc = &acc + &MultiPoly::monomial(vars, c, &exps).expect("declared");
    }
    acc
}

fn ring_axioms(rng: &mut impl Rng) -> Outcome {
    let [a, b, c] = [0; 3].map(|_| random_poly(rng, tq(), 5, 3, true));
    let shown = || json!({ "a": a.to_string(), "b": b.to_string(), "c": c.to_string() });
    ensure("addition is associative", same(&(&(&a + &b) + &c), &(&a + &(&b + &c))), shown)?;
    ensure("multiplication is commutative", same(&(&a * &b), &(&b * &a)), shown)?;
    ensure("multiplication is associative", same(&(&(&a * &b) * &c), &(&a * &(&b * &c))), shown)?;
    ensure("multiplication distributes", same(&(&a * &(&b + &c)), &(&(&a * &b) + &(&a * &c))), shown)?;
    ensure("a + (0 - a) = 0", (&a + &(&MultiPoly::zero(tq()) - &a)).is_zero(), shown)?;
    ensure("a * 1 = a", same(&(&a * &MultiPoly::one(tq())), &a), shown)?;
    ensure("(a + b) - b = a", same(&(&(&a + &b) - &b), &a), shown)?;
    Ok(())
}

fn round_trip(rng: &mut impl Rng) -> Outcome {
    let a = random_poly(rng, tq(), 6, 4, true);
    let printed = a.to_string();
    let back = MultiPoly::parse_with_vars(&printed, tq());
    ensure("print then parse", back.as_ref().is_ok_and(|b| same(b, &a)), || {
        json!({ "printed": printed, "parsed": back.map(|b| b.to_string()).map_err(|e| e.to_string()) })
    })
}

fn gamma_round_trip(rng: &mut impl Rng) -> Outcome {
    let span = rng.gen_range(0..=8u32);
    for basis in [GammaBasis::one_plus_t(span), GammaBasis::one_plus_t_over_q(span)] {
        let vars = VarSet::new(&[Var::Q]);
        let gs: Vec<MultiPoly> = (0..basis.len()).map(|_| random_poly(rng, vars, 3, 3, false)).collect();
        let p = reconstruct(&gs, Var::T, basis).expect("reconstruct");
        let shown = || json!({ "span": span, "gamma": gs.iter().map(|g| g.to_string()).collect::<Vec<_>>() });
        match gamma_expand(&p, basis) {
            Ok(GammaResult::Success(back)) => {
                for (k, (g, h)) in gs.iter().zip(&back).enumerate() {
                    poly_eq(format!("gamma coefficient {k} recovered at span {span}"), h, g)?;
                }
            }
            _ => ensure("a reconstructed polynomial expands", false, shown)?,
        }
        if basis == GammaBasis::one_plus_t(span) {
            let pal = p.is_palindromic(Var::T, 0, span as i32).unwrap_or(false);
            ensure("a reconstructed polynomial is palindromic", pal, shown)?;
        }
    }

    // A generic polynomial in t expands exactly when it is palindromic.
    let p = random_poly(rng, VarSet::new(&[Var::T]), 4, span as i32, false);
    let pal = p.is_palindromic(Var::T, 0, span as i32).unwrap_or(false);
    let ok = matches!(gamma_expand(&p, GammaBasis::one_plus_t(span)), Ok(GammaResult::Success(_)));
    ensure("gamma expansion exists iff palindromic", pal == ok, || {
        json!({ "polynomial": p.to_string(), "span": span, "palindromic": pal, "expands": ok })
    })
}

fn random_coef(rng: &mut impl Rng) -> Coef {
    let table: Vec<MultiPoly> = (0..16).map(|_| random_poly(rng, tq(), 3, 2, false)).collect();
    Arc::new(move |h: usize| table[h % table.len()].clone())
}

fn fractions(rng: &mut impl Rng, order: usize) -> Outcome {
    let c = random_coef(rng);
    let spec = {
        let c = c.clone();
        CFSpec::stieltjes(tq(), move |h| c(h))
    };
    let d = spec.depth(order);
    let a = cf_series_at_depth(&spec, order, d);
    let b = cf_series_at_depth(&spec, order, d + 3);
    let first = (0..=order).find(|&k| !same(a.coeff(k), b.coeff(k)));
    ensure("fraction depth stability", first.is_none(), || {
        json!({ "order": order, "power": first })
    })?;
    contraction_check(tq(), c, order).map_err(|m| {
        crate::verify::Failure::new(
            "Stieltjes contraction",
            json!({ "form": m.form, "power": m.power, "left": m.left.to_string(), "right": m.right.to_string() }),
        )
    })?;
    Ok(())
}

pub fn properties(trials: usize, seed: u64, n_max: usize) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let order = n_max.clamp(1, 8);
    for _ in 0..trials {
        ring_axioms(&mut rng)?;
        round_trip(&mut rng)?;
        gamma_round_trip(&mut rng)?;
    }
    for _ in 0..trials.div_ceil(10) {
        fractions(&mut rng, order)?;
    }
    Ok(())
}
