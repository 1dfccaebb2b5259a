use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::AlgebraError;

/// Number of variables in the global order.
pub const NVARS: usize = 6;

/// A polynomial variable. The declaration order `t, q, x, y, p, s` is the
/// global order used for exponent vectors, printing and equality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Var {
    T,
    Q,
    X,
    Y,
    P,
    S,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::T, Var::Q, Var::X, Var::Y, Var::P, Var::S];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::T => "t",
            Var::Q => "q",
            Var::X => "x",
            Var::Y => "y",
            Var::P => "p",
            Var::S => "s",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Var {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Var::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| AlgebraError::UnknownVar(s.to_string()))
    }
}

/// An ordered set of declared variables, always iterated in the global order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VarSet(u8);

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);

    pub fn new(vars: &[Var]) -> Self {
        vars.iter().fold(VarSet::EMPTY, |acc, &v| acc.with(v))
    }

    pub fn with(self, v: Var) -> Self {
        VarSet(self.0 | (1 << v.index()))
    }

    pub fn without(self, v: Var) -> Self {
        VarSet(self.0 & !(1 << v.index()))
    }

    pub fn contains(self, v: Var) -> bool {
        self.0 & (1 << v.index()) != 0
    }

    pub fn union(self, other: VarSet) -> Self {
        VarSet(self.0 | other.0)
    }

    pub fn is_subset(self, other: VarSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = Var> {
        Var::ALL.into_iter().filter(move |&v| self.contains(v))
    }

    pub fn to_vec(self) -> Vec<Var> {
        self.iter().collect()
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.iter()).finish()
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<_> = self.iter().map(Var::name).collect();
        write!(f, "({})", names.join(","))
    }
}

impl FromIterator<Var> for VarSet {
    fn from_iter<I: IntoIterator<Item = Var>>(iter: I) -> Self {
        iter.into_iter().fold(VarSet::EMPTY, |acc, v| acc.with(v))
    }
}

/// Exponent vector over the full global order. Exponents of variables that a
/// polynomial does not declare are always zero, so lexicographic order on the
/// full array coincides with lexicographic order on the declared projection.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Debug)]
pub struct Monomial(pub [i32; NVARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NVARS]);

    pub fn of(v: Var, e: i32) -> Self {
        let mut m = Monomial::ONE;
        m.0[v.index()] = e;
        m
    }

    pub fn from_pairs(pairs: &[(Var, i32)]) -> Self {
        let mut m = Monomial::ONE;
        for &(v, e) in pairs {
            m.0[v.index()] += e;
        }
        m
    }

    pub fn exp(&self, v: Var) -> i32 {
        self.0[v.index()]
    }

    pub fn set(&mut self, v: Var, e: i32) {
        self.0[v.index()] = e;
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for (a, b) in out.0.iter_mut().zip(other.0) {
            *a += b;
        }
        out
    }

    /// Variables with a nonzero exponent.
    pub fn support(&self) -> VarSet {
        Var::ALL.into_iter().filter(|v| self.exp(*v) != 0).collect()
    }

    pub fn project(&self, vars: VarSet) -> Vec<i32> {
        vars.iter().map(|v| self.exp(v)).collect()
    }
}
