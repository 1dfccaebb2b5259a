use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use super::class::ClassSpec;
use super::enumerate::enumerate;
use super::permutation::Permutation;
use super::stats::{stat, StatKey};
use super::PermError;
use crate::algebra::{Monomial, MultiPoly, Var, VarSet, NVARS};

/// One factor `(±v)^(power·stat)` of a permutation weight; with no variable
/// it is the sign `(-1)^stat`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weight {
    pub stat: StatKey,
    pub var: Option<Var>,
    pub power: i32,
    pub negate: bool,
}

impl Weight {
    pub fn new(var: Var, stat: StatKey) -> Self {
        Weight { stat, var: Some(var), power: 1, negate: false }
    }

    pub fn sign(stat: StatKey) -> Self {
        Weight { stat, var: None, power: 1, negate: true }
    }

    pub fn parse_list(s: &str) -> Result<Vec<Weight>, PermError> {
        s.split(',').map(str::trim).filter(|w| !w.is_empty()).map(str::parse).collect()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.var, self.negate) {
            (None, _) => f.write_str("(-1)")?,
            (Some(v), true) => write!(f, "(-{v})")?,
            (Some(v), false) => write!(f, "{v}")?,
        }
        f.write_str("^")?;
        match self.power {
            1 => {}
            -1 => f.write_str("-")?,
            p => write!(f, "{p}*")?,
        }
        write!(f, "{}", self.stat)
    }
}

impl FromStr for Weight {
    type Err = PermError;

    /// `t^des`, `q^31-2`, `(-1)^exc`, `(-q)^des`, `q^-exc`, `q^2*inv`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = |msg: &str| PermError::BadWeight(format!("`{s}`: {msg}"));
        let (base, exp) = s.split_once('^').ok_or_else(|| bad("expected base^stat"))?;
        let (var, negate) = match base.trim() {
            "(-1)" => (None, true),
            b if b.starts_with("(-") && b.ends_with(')') => {
                (Some(b[2..b.len() - 1].parse::<Var>().map_err(|_| bad("unknown variable"))?), true)
            }
            b => (Some(b.parse::<Var>().map_err(|_| bad("unknown variable"))?), false),
        };
        let exp = exp.trim();
        let (power, key) = if let Some((c, k)) = exp.split_once('*').filter(|(_, k)| !k.trim().is_empty()) {
            (c.trim().parse::<i32>().map_err(|_| bad("bad multiplier"))?, k.trim())
        } else if let Some(k) = exp.strip_prefix('-') {
            (-1, k.trim())
        } else {
            (1, exp)
        };
        if var.is_none() && power != 1 {
            return Err(bad("a sign factor takes a plain statistic"));
        }
        Ok(Weight { stat: key.parse()?, var, power, negate })
    }
}

fn vars_of(weights: &[Weight]) -> VarSet {
    weights.iter().filter_map(|w| w.var).collect()
}

/// `Σ_π Π_w weight_w(π)` over an explicit collection of permutations.
pub fn distribution_over(
    perms: impl IntoIterator<Item = Permutation>,
    weights: &[Weight],
) -> MultiPoly {
    let mut acc: HashMap<[i32; NVARS], i64> = HashMap::new();
    for pi in perms {
        let mut exps = [0i32; NVARS];
        let mut sign = 1i64;
        for w in weights {
            let value = stat(&pi, &w.stat);
            if let Some(v) = w.var {
                exps[v.index()] += w.power * value as i32;
            }
            if w.negate && value % 2 == 1 {
                sign = -sign;
            }
        }
        *acc.entry(exps).or_insert(0) += sign;
    }
    MultiPoly::from_terms(
        vars_of(weights),
        acc.into_iter().map(|(e, c)| (Monomial(e), BigInt::from(c))),
    )
    .expect("monomials only use weight variables")
}

/// The generating polynomial of `spec` under `weights`.
pub fn distribution(spec: &ClassSpec, weights: &[Weight]) -> MultiPoly {
    distribution_over(enumerate(spec), weights)
}

/// How many members take each vector of statistic values.
pub fn stat_multiset(
    perms: impl IntoIterator<Item = Permutation>,
    keys: &[StatKey],
) -> BTreeMap<Vec<u32>, u64> {
    let mut out = BTreeMap::new();
    for pi in perms {
        let v: Vec<u32> = keys.iter().map(|k| stat(&pi, k)).collect();
        *out.entry(v).or_insert(0) += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_syntax() {
        for s in ["t^des", "q^31-2", "(-1)^exc", "(-q)^des", "q^-exc", "q^2*inv", "y^dd:n+1"] {
            let w: Weight = s.parse().unwrap();
            assert_eq!(w.to_string(), s);
        }
        for s in ["des", "z^des", "(-1)^2*des", "t^", "t^bogus"] {
            assert!(s.parse::<Weight>().is_err(), "{s}");
        }
    }

    #[test]
    fn eulerian_polynomial() {
        let w = Weight::parse_list("t^des").unwrap();
        let p = distribution(&ClassSpec::all(4), &w);
        assert_eq!(p.to_string(), "t^3+11*t^2+11*t+1");
    }

    #[test]
    fn mahonian_polynomial() {
        let w = Weight::parse_list("q^inv").unwrap();
        let p = distribution(&ClassSpec::all(3), &w);
        assert_eq!(p.to_string(), "q^3+2*q^2+2*q+1");
    }

    #[test]
    fn signs_and_negative_powers() {
        let w = Weight::parse_list("(-1)^des").unwrap();
        // 1 - 4 + 1 over S_3
        assert_eq!(distribution(&ClassSpec::all(3), &w).to_string(), "-2");
        let w = Weight::parse_list("(-t)^des,q^-exc").unwrap();
        let p = distribution(&ClassSpec::all(2), &w);
        assert_eq!(p.to_string(), "-t*q^-1+1");
    }

    #[test]
    fn multiset_of_two_statistics() {
        let m = stat_multiset(Permutation::all(3), &[StatKey::Des, StatKey::Exc]);
        assert_eq!(m.values().sum::<u64>(), 6);
        assert_eq!(m[&vec![0, 0]], 1);
    }
}
