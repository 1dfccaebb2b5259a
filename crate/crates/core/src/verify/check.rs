use std::fmt::Display;

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::algebra::{MonomialBinding, MultiPoly, Var, VarSet};
use crate::cfrac::{named_family, Family};
use crate::perm::{distribution, enumerate, ClassSpec, Weight};

/// The first identity that did not hold, with enough data to re-check it.
#[derive(Debug, Clone, PartialEq)]
pub struct Failure {
    pub check: String,
    pub detail: Map<String, Value>,
}

impl Failure {
    pub fn new(check: impl Display, detail: Value) -> Self {
        let detail = match detail {
            Value::Object(m) => m,
            Value::Null => Map::new(),
            other => {
                let mut m = Map::new();
                m.insert("value".into(), other);
                m
            }
        };
        Failure { check: check.to_string(), detail }
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("check".into(), Value::String(self.check.clone()));
        for (k, v) in &self.detail {
            m.insert(k.clone(), v.clone());
        }
        Value::Object(m)
    }
}

pub type Outcome = Result<(), Failure>;

/// Equality of polynomials declared over possibly different variable sets.
pub fn same(a: &MultiPoly, b: &MultiPoly) -> bool {
    let vars = a.vars().union(b.vars());
    a.embed(vars).ok() == b.embed(vars).ok()
}

pub fn poly_eq(check: impl Display, left: &MultiPoly, right: &MultiPoly) -> Outcome {
    if same(left, right) {
        Ok(())
    } else {
        Err(Failure::new(check, json!({ "left": left.to_string(), "right": right.to_string() })))
    }
}

pub fn int_eq(check: impl Display, left: impl Into<BigInt>, right: impl Into<BigInt>) -> Outcome {
    let (l, r) = (left.into(), right.into());
    if l == r {
        Ok(())
    } else {
        Err(Failure::new(check, json!({ "left": l.to_string(), "right": r.to_string() })))
    }
}

pub fn ensure(check: impl Display, cond: bool, detail: impl FnOnce() -> Value) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(Failure::new(check, detail()))
    }
}

pub fn weights(s: &str) -> Vec<Weight> {
    Weight::parse_list(s).expect("built-in weight list")
}

pub fn dist(spec: &ClassSpec, w: &str) -> MultiPoly {
    distribution(spec, &weights(w))
}

pub fn count(spec: &ClassSpec) -> u64 {
    enumerate(spec).count() as u64
}

pub fn q_vars() -> VarSet {
    VarSet::new(&[Var::Q])
}

pub fn tq_vars() -> VarSet {
    VarSet::new(&[Var::T, Var::Q])
}

/// `c · v1^e1 · v2^e2 ...`
pub fn mono(vars: VarSet, c: i64, exps: &[(Var, i32)]) -> MultiPoly {
    MultiPoly::monomial(vars, c, exps).expect("declared variables")
}

/// Carlitz `C_m(q)`, read off the continued fraction.
pub fn carlitz(m: usize) -> MultiPoly {
    named_family(Family::Carlitz, m).embed(q_vars()).expect("a polynomial in q")
}

/// `C_m(q^2)`.
pub fn carlitz_sq(m: usize) -> MultiPoly {
    carlitz(m).substitute_monomial(&[(Var::Q, MonomialBinding::power(Var::Q, 2))])
}

/// `(-1)^sign_exp · q^q_exp · f`.
pub fn signed_shift(f: &MultiPoly, sign_exp: usize, q_exp: i32) -> MultiPoly {
    let c = if sign_exp.is_multiple_of(2) { 1 } else { -1 };
    let vars = f.vars().with(Var::Q);
    &f.embed(vars).expect("superset") * &mono(vars, c, &[(Var::Q, q_exp)])
}

pub fn catalan(n: usize) -> BigInt {
    super::oracle::binomial(2 * n as u64, n as u64) / BigInt::from(n as u64 + 1)
}

pub fn zero_q() -> MultiPoly {
    MultiPoly::zero(q_vars())
}
