use std::collections::BTreeSet;

use serde_json::json;

use crate::algebra::{MultiPoly, Var, VarSet};
use crate::mfs::{act, orbit, representative, ActionKind};
use crate::perm::{enumerate, stat, ClassSpec, Permutation, StatKey};
use crate::verify::check::{ensure, poly_eq, Outcome};

fn key(s: &str) -> StatKey {
    s.parse().expect("built-in statistic")
}

/// Statistics constant on orbits, and the classes each action preserves.
fn invariants(kind: ActionKind) -> (Vec<StatKey>, Vec<&'static str>) {
    match kind {
        ActionKind::PhiPrimeZero => (vec![key("adi"), key("2-13"), key("31-2")], vec!["213", "312"]),
        ActionKind::PhiPrimeNPlusOne => (vec![key("adi*"), key("2-31"), key("13-2")], vec!["132", "231"]),
        ActionKind::PhiBar => (vec![key("fl")], vec![]),
    }
}

/// Members the action runs over.
fn domain(kind: ActionKind, n: usize) -> Vec<Permutation> {
    match kind {
        ActionKind::PhiBar => enumerate(&ClassSpec::coderangement(n, &["132"])).collect(),
        _ => Permutation::all(n).collect(),
    }
}

fn t_vars() -> VarSet {
    VarSet::new(&[Var::T])
}

fn t_poly(perms: &[Permutation]) -> MultiPoly {
    perms.iter().fold(MultiPoly::zero(t_vars()), |acc, p| {
        &acc + &MultiPoly::monomial(t_vars(), 1, &[(Var::T, stat(p, &StatKey::Des) as i32)]).expect("t")
    })
}

fn orbit_closed_form(rep: &Permutation, kind: ActionKind) -> MultiPoly {
    let n = rep.len() as i32;
    let d = stat(rep, &StatKey::Des) as i32;
    let free = match kind {
        ActionKind::PhiBar => n - 2 * d,
        _ => n - 1 - 2 * d,
    };
    let one_plus_t = &MultiPoly::one(t_vars()) + &MultiPoly::var(t_vars(), Var::T).expect("t");
    &MultiPoly::monomial(t_vars(), 1, &[(Var::T, d)]).expect("t") * &one_plus_t.pow(free.max(0) as u32)
}

pub fn mfs(n_max: usize) -> Outcome {
    for kind in ActionKind::ALL {
        let (stats, classes) = invariants(kind);
        for n in 1..=n_max {
            let members = domain(kind, n);
            let inside: BTreeSet<&Permutation> = members.iter().collect();
            for pi in &members {
                for x in 1..=n {
                    let img = act(pi, x, kind).expect("x in range");
                    ensure(format!("{kind} generator {x} is an involution at {pi}"), act(&img, x, kind).ok().as_ref() == Some(pi), || {
                        json!({ "permutation": pi.to_string(), "x": x })
                    })?;
                    if kind == ActionKind::PhiBar {
                        ensure(format!("{kind} keeps D*_{n}(132)"), inside.contains(&img), || {
                            json!({ "permutation": pi.to_string(), "x": x, "image": img.to_string() })
                        })?;
                    }
                    for s in &stats {
                        ensure(format!("{kind} preserves {s}"), stat(&img, s) == stat(pi, s), || {
                            json!({ "permutation": pi.to_string(), "x": x, "image": img.to_string() })
                        })?;
                    }
                    for tau in &classes {
                        let spec = ClassSpec::avoiders(n, &[tau]);
                        ensure(format!("{kind} keeps S_{n}({tau})"), spec.membership(pi) == spec.membership(&img), || {
                            json!({ "permutation": pi.to_string(), "x": x, "image": img.to_string() })
                        })?;
                    }
                    for y in x + 1..=n {
                        let xy = act(&img, y, kind).expect("y in range");
                        let yx = act(&act(pi, y, kind).expect("y in range"), x, kind).expect("x in range");
                        ensure(format!("{kind} generators {x} and {y} commute"), xy == yx, || {
                            json!({ "permutation": pi.to_string(), "x": x, "y": y })
                        })?;
                    }
                }
            }

            let mut seen = BTreeSet::new();
            for pi in &members {
                if seen.contains(pi) {
                    continue;
                }
                let orb = orbit(pi, kind);
                let rep = representative(pi, kind).map_err(|e| {
                    crate::verify::Failure::new(format!("{kind} orbit representative"), json!({ "error": e.to_string() }))
                })?;
                poly_eq(format!("{kind} orbit sum of {rep}"), &t_poly(&orb), &orbit_closed_form(&rep, kind))?;
                seen.extend(orb);
            }
            ensure(format!("{kind} orbits cover the domain at n={n}"), seen.len() == members.len(), || {
                json!({ "covered": seen.len(), "domain": members.len() })
            })?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_range_passes() {
        mfs(5).unwrap();
    }

    #[test]
    fn orbit_of_a_valley_word() {
        let rep: Permutation = "213".parse().unwrap();
        assert_eq!(orbit_closed_form(&rep, ActionKind::PhiPrimeZero).to_string(), "t");
    }
}
