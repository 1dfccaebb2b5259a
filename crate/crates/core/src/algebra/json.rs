use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::MultiPoly;
use super::var::{Monomial, Var, VarSet};
use super::AlgebraError;

/// Wire form of a [`MultiPoly`]: exponents listed over the declared variables
/// only, coefficients as decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<Var>,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<i32>,
    pub coef: String,
}

impl From<&MultiPoly> for PolyJson {
    fn from(p: &MultiPoly) -> Self {
        let vars = p.vars();
        PolyJson {
            vars: vars.to_vec(),
            terms: p
                .terms()
                .rev()
                .map(|(m, c)| TermJson { exp: m.project(vars), coef: c.to_string() })
                .collect(),
        }
    }
}

impl TryFrom<PolyJson> for MultiPoly {
    type Error = AlgebraError;

    fn try_from(j: PolyJson) -> Result<Self, Self::Error> {
        let mut sorted = j.vars.clone();
        sorted.sort();
        sorted.dedup();
        if sorted != j.vars {
            return Err(AlgebraError::Parse {
                pos: 0,
                msg: "vars must be distinct and in the order t, q, x, y, p, s".into(),
            });
        }
        let vars = VarSet::new(&j.vars);
        let mut terms = Vec::with_capacity(j.terms.len());
        for t in j.terms {
            if t.exp.len() != j.vars.len() {
                return Err(AlgebraError::Parse {
                    pos: 0,
                    msg: format!("exponent vector {:?} has the wrong length", t.exp),
                });
            }
            let pairs: Vec<(Var, i32)> = j.vars.iter().copied().zip(t.exp).collect();
            let coef = BigInt::from_str(&t.coef)
                .map_err(|e| AlgebraError::Parse { pos: 0, msg: e.to_string() })?;
            terms.push((Monomial::from_pairs(&pairs), coef));
        }
        MultiPoly::from_terms(vars, terms)
    }
}

impl Serialize for MultiPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = PolyJson::deserialize(d)?;
        MultiPoly::try_from(j).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let p = MultiPoly::parse("3*t^2*q^-1-t+123456789012345678901234567890").unwrap();
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(
            s,
            r#"{"vars":["t","q"],"terms":[{"exp":[2,-1],"coef":"3"},{"exp":[1,0],"coef":"-1"},{"exp":[0,0],"coef":"123456789012345678901234567890"}]}"#
        );
        let back: MultiPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn json_rejects_ragged_exponents() {
        let bad = r#"{"vars":["t"],"terms":[{"exp":[1,2],"coef":"1"}]}"#;
        assert!(serde_json::from_str::<MultiPoly>(bad).is_err());
    }
}
