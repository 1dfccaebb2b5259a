//! The modified Foata–Strehl action: hopping letters between double ascents
//! and double descents, with the orbits it produces.
//!
//! Under the boundary `π(0) = π(n+1) = 0` the blocks next to `x` are the
//! letters larger than `x` and valleys stay put. The `n+1` boundary uses the
//! complementary construction: blocks of smaller letters, and peaks stay put.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::perm::{letter_type, Boundary, LetterType, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MfsError {
    #[error("letter {x} is not in 1..={n}")]
    LetterOutOfRange { x: usize, n: usize },
    #[error("the action is only defined for the 0 and n+1 boundaries")]
    UnsupportedBoundary,
    #[error("orbit of {0} has no representative")]
    NoRepresentative(String),
    #[error("orbit of {pi} has {count} candidate representatives")]
    AmbiguousRepresentative { pi: String, count: usize },
    #[error("unknown action `{0}` (expected zero, n+1 or bar)")]
    UnknownKind(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ActionKind {
    /// Boundary 0; valleys are fixed.
    PhiPrimeZero,
    /// Boundary `n+1`; peaks are fixed.
    PhiPrimeNPlusOne,
    /// Boundary `n+1`; peaks, valleys and left-to-right maxima are fixed.
    PhiBar,
}

impl ActionKind {
    pub const ALL: [ActionKind; 3] =
        [ActionKind::PhiPrimeZero, ActionKind::PhiPrimeNPlusOne, ActionKind::PhiBar];

    pub fn boundary(self) -> Boundary {
        match self {
            ActionKind::PhiPrimeZero => Boundary::Zero,
            ActionKind::PhiPrimeNPlusOne | ActionKind::PhiBar => Boundary::NPlusOne,
        }
    }
}

impl fmt::Display for ActionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ActionKind::PhiPrimeZero => "zero",
            ActionKind::PhiPrimeNPlusOne => "n+1",
            ActionKind::PhiBar => "bar",
        })
    }
}

impl FromStr for ActionKind {
    type Err = MfsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "zero" | "0" | "phi0" => Ok(ActionKind::PhiPrimeZero),
            "n+1" | "star" | "*" | "phi*" => Ok(ActionKind::PhiPrimeNPlusOne),
            "bar" | "phibar" => Ok(ActionKind::PhiBar),
            other => Err(MfsError::UnknownKind(other.to_string())),
        }
    }
}

/// `π = w1 w2 x w3 w4`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub w1: Vec<u8>,
    pub w2: Vec<u8>,
    pub x: u8,
    pub w3: Vec<u8>,
    pub w4: Vec<u8>,
}

impl Factorization {
    /// `w1 w3 x w2 w4`.
    pub fn swapped(&self) -> Vec<u8> {
        let mut out = self.w1.clone();
        out.extend(&self.w3);
        out.push(self.x);
        out.extend(&self.w2);
        out.extend(&self.w4);
        out
    }
}

/// `w2` and `w3` are the maximal runs beside `x` of letters larger than `x`
/// (boundary 0) or smaller than `x` (boundary `n+1`).
pub fn x_factorization(pi: &Permutation, x: usize, boundary: Boundary) -> Result<Factorization, MfsError> {
    let n = pi.len();
    if x == 0 || x > n {
        return Err(MfsError::LetterOutOfRange { x, n });
    }
    let in_block: fn(u8, u8) -> bool = match boundary {
        Boundary::Zero => |v, x| v > x,
        Boundary::NPlusOne => |v, x| v < x,
        Boundary::Mixed => return Err(MfsError::UnsupportedBoundary),
    };
    let w = pi.values();
    let x = x as u8;
    let pos = w.iter().position(|&v| v == x).expect("x is a letter");
    let mut a = pos;
    while a > 0 && in_block(w[a - 1], x) {
        a -= 1;
    }
    let mut b = pos + 1;
    while b < n && in_block(w[b], x) {
        b += 1;
    }
    Ok(Factorization {
        w1: w[..a].to_vec(),
        w2: w[a..pos].to_vec(),
        x,
        w3: w[pos + 1..b].to_vec(),
        w4: w[b..].to_vec(),
    })
}

fn is_left_to_right_max(w: &[u8], pos: usize) -> bool {
    w[..pos].iter().all(|&v| v < w[pos])
}

/// The generator for letter `x`.
pub fn act(pi: &Permutation, x: usize, kind: ActionKind) -> Result<Permutation, MfsError> {
    let b = kind.boundary();
    let f = x_factorization(pi, x, b)?;
    let w = pi.values();
    let pos = f.w1.len() + f.w2.len();
    let ty = letter_type(w, pos + 1, b);
    let fixed = match kind {
        ActionKind::PhiPrimeZero => ty == LetterType::Valley,
        ActionKind::PhiPrimeNPlusOne => ty == LetterType::Peak,
        ActionKind::PhiBar => {
            matches!(ty, LetterType::Peak | LetterType::Valley) || is_left_to_right_max(w, pos)
        }
    };
    if fixed {
        return Ok(pi.clone());
    }
    Ok(Permutation::new(f.swapped()).expect("a rearrangement of π"))
}

/// Closure of `{π}` under every generator, sorted.
pub fn orbit(pi: &Permutation, kind: ActionKind) -> Vec<Permutation> {
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(pi.clone());
    queue.push_back(pi.clone());
    while let Some(s) = queue.pop_front() {
        for x in 1..=s.len() {
            let next = act(&s, x, kind).expect("x in range");
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen.into_iter().collect()
}

fn is_representative(pi: &Permutation, kind: ActionKind) -> bool {
    let b = kind.boundary();
    let w = pi.values();
    let dd: Vec<usize> =
        (1..=w.len()).filter(|&i| letter_type(w, i, b) == LetterType::DoubleDescent).collect();
    match kind {
        ActionKind::PhiPrimeZero | ActionKind::PhiPrimeNPlusOne => dd.is_empty(),
        ActionKind::PhiBar => dd == [1],
    }
}

/// The orbit element with no double descent, or for `PhiBar` the one whose
/// only double descent is its first letter.
pub fn representative(pi: &Permutation, kind: ActionKind) -> Result<Permutation, MfsError> {
    let candidates: Vec<Permutation> =
        orbit(pi, kind).into_iter().filter(|s| is_representative(s, kind)).collect();
    match candidates.len() {
        1 => Ok(candidates.into_iter().next().expect("one element")),
        0 => Err(MfsError::NoRepresentative(pi.to_string())),
        count => Err(MfsError::AmbiguousRepresentative { pi: pi.to_string(), count }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{MultiPoly, Var, VarSet};
    use crate::perm::{distribution_over, enumerate, stat, ClassSpec, StatKey, Weight};

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn factorization_examples() {
        let f = x_factorization(&p("28531746"), 3, Boundary::Zero).unwrap();
        assert_eq!((f.w1, f.w2, f.w3, f.w4), (vec![2], vec![8, 5], vec![], vec![1, 7, 4, 6]));
        let f = x_factorization(&p("596137428"), 5, Boundary::Zero).unwrap();
        assert!(f.w2.is_empty());
        let f = x_factorization(&p("2413"), 4, Boundary::Zero).unwrap();
        assert!(f.w2.is_empty() && f.w3.is_empty());
        assert!(x_factorization(&p("21"), 3, Boundary::Zero).is_err());
    }

    #[test]
    fn action_examples() {
        assert_eq!(act(&p("28531746"), 3, ActionKind::PhiPrimeZero).unwrap(), p("23851746"));
        // 1 is a valley of 596137428
        assert_eq!(act(&p("596137428"), 1, ActionKind::PhiPrimeZero).unwrap(), p("596137428"));
        // with a left boundary of 10, 5 is a valley and stays put
        let pi = p("596137428");
        assert_eq!(letter_type(pi.values(), 1, Boundary::NPlusOne), LetterType::Valley);
        assert_ne!(act(&pi, 5, ActionKind::PhiPrimeZero).unwrap(), pi);
        assert_eq!(act(&pi, 5, ActionKind::PhiPrimeNPlusOne).unwrap(), pi);
    }

    #[test]
    fn generators_are_commuting_involutions() {
        for n in 1..=6 {
            for pi in Permutation::all(n) {
                for kind in [ActionKind::PhiPrimeZero, ActionKind::PhiPrimeNPlusOne] {
                    for x in 1..=n {
                        let once = act(&pi, x, kind).unwrap();
                        assert_eq!(act(&once, x, kind).unwrap(), pi);
                        for y in 1..=n {
                            let xy = act(&act(&pi, x, kind).unwrap(), y, kind).unwrap();
                            let yx = act(&act(&pi, y, kind).unwrap(), x, kind).unwrap();
                            assert_eq!(xy, yx, "{kind} {pi} x={x} y={y}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn orbit_sums_are_gamma_terms() {
        let t = VarSet::new(&[Var::T]);
        let w = [Weight::new(Var::T, StatKey::Des)];
        for n in 1..=6 {
            for kind in [ActionKind::PhiPrimeZero, ActionKind::PhiPrimeNPlusOne] {
                for pi in Permutation::all(n) {
                    let orb = orbit(&pi, kind);
                    assert!(orb.len().is_power_of_two());
                    let rep = representative(&pi, kind).unwrap();
                    let d = stat(&rep, &StatKey::Des) as i32;
                    let one_plus_t = MultiPoly::parse_with_vars("1+t", t).unwrap();
                    let expect = one_plus_t
                        .pow((n as i32 - 1 - 2 * d) as u32)
                        .mul_monomial(&crate::algebra::Monomial::of(Var::T, d));
                    assert_eq!(distribution_over(orb, &w).embed(t).unwrap(), expect, "{kind} {pi}");
                }
            }
        }
    }

    #[test]
    fn orbits_stay_in_their_classes() {
        let cases = [
            ("213", ActionKind::PhiPrimeZero),
            ("312", ActionKind::PhiPrimeZero),
            ("132", ActionKind::PhiPrimeNPlusOne),
            ("231", ActionKind::PhiPrimeNPlusOne),
        ];
        for n in 1..=7 {
            for (tau, kind) in cases {
                let spec = ClassSpec::avoiders(n, &[tau]);
                for pi in enumerate(&spec) {
                    for x in 1..=n {
                        assert!(spec.membership(&act(&pi, x, kind).unwrap()), "{tau} {pi} {x}");
                    }
                }
            }
        }
    }

    #[test]
    fn phi_bar_on_coderangements() {
        for n in 2..=7 {
            let spec = ClassSpec::coderangement(n, &["132"]);
            let w = [Weight::new(Var::T, StatKey::Des)];
            for pi in enumerate(&spec) {
                let orb = orbit(&pi, ActionKind::PhiBar);
                assert!(orb.iter().all(|s| spec.membership(s)));
                assert!(orb.iter().all(|s| s.at(1) == pi.at(1)));
                let rep = representative(&pi, ActionKind::PhiBar).unwrap();
                let d = stat(&rep, &StatKey::Des) as i32;
                let t = VarSet::new(&[Var::T]);
                let expect = MultiPoly::parse_with_vars("1+t", t)
                    .unwrap()
                    .pow((n as i32 - 2 * d) as u32)
                    .mul_monomial(&crate::algebra::Monomial::of(Var::T, d));
                assert_eq!(distribution_over(orb, &w).embed(t).unwrap(), expect, "{pi}");
            }
        }
    }

    #[test]
    fn fixed_representatives() {
        assert_eq!(representative(&p("312"), ActionKind::PhiPrimeZero).unwrap(), p("312"));
        let all_peaks_and_valleys = p("2143");
        assert_eq!(orbit(&all_peaks_and_valleys, ActionKind::PhiPrimeZero).len(), 2);
        assert_eq!(orbit(&p("1"), ActionKind::PhiPrimeNPlusOne), vec![p("1")]);
    }

    #[test]
    fn kind_names() {
        for k in ActionKind::ALL {
            assert_eq!(k.to_string().parse::<ActionKind>().unwrap(), k);
        }
        assert!("sideways".parse::<ActionKind>().is_err());
    }
}
