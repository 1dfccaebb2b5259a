use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::var::{Monomial, Var, VarSet};
use super::AlgebraError;

/// Sparse multivariate Laurent polynomial with arbitrary-precision integer
/// coefficients over a declared set of variables.
///
/// Terms with a zero coefficient are never stored, so structural equality is
/// polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    vars: VarSet,
    terms: BTreeMap<Monomial, BigInt>,
}

/// A signed monomial image for [`MultiPoly::substitute_monomial`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialBinding {
    pub negate: bool,
    pub exps: Vec<(Var, i32)>,
}

impl MonomialBinding {
    pub fn new(negate: bool, exps: &[(Var, i32)]) -> Self {
        MonomialBinding { negate, exps: exps.to_vec() }
    }

    /// Binding to a bare power of one variable.
    pub fn power(v: Var, e: i32) -> Self {
        MonomialBinding::new(false, &[(v, e)])
    }

    pub fn constant(negate: bool) -> Self {
        MonomialBinding::new(negate, &[])
    }
}

impl MultiPoly {
    pub fn zero(vars: VarSet) -> Self {
        MultiPoly { vars, terms: BTreeMap::new() }
    }

    pub fn one(vars: VarSet) -> Self {
        Self::constant(vars, 1)
    }

    pub fn constant(vars: VarSet, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(Monomial::ONE, c.into());
        p
    }

    /// The polynomial consisting of the single variable `v`.
    pub fn var(vars: VarSet, v: Var) -> Result<Self, AlgebraError> {
        Self::monomial(vars, 1, &[(v, 1)])
    }

    pub fn monomial(
        vars: VarSet,
        coef: impl Into<BigInt>,
        exps: &[(Var, i32)],
    ) -> Result<Self, AlgebraError> {
        let m = Monomial::from_pairs(exps);
        if !m.support().is_subset(vars) {
            return Err(AlgebraError::UndeclaredVar { vars, monomial: format!("{m:?}") });
        }
        let mut p = Self::zero(vars);
        p.add_term(m, coef.into());
        Ok(p)
    }

    pub fn from_terms(
        vars: VarSet,
        terms: impl IntoIterator<Item = (Monomial, BigInt)>,
    ) -> Result<Self, AlgebraError> {
        let mut p = Self::zero(vars);
        for (m, c) in terms {
            if !m.support().is_subset(vars) {
                return Err(AlgebraError::UndeclaredVar { vars, monomial: format!("{m:?}") });
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn vars(&self) -> VarSet {
        self.vars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(&Monomial::ONE).is_one()
    }

    /// Constant term, if the polynomial is a constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Sum of all coefficients.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn has_negative_exponents(&self) -> bool {
        self.terms.keys().any(|m| m.0.iter().any(|&e| e < 0))
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Re-declares the polynomial over a larger variable set.
    pub fn embed(&self, vars: VarSet) -> Result<Self, AlgebraError> {
        if !self.vars.is_subset(vars) {
            return Err(AlgebraError::VarMismatch { left: self.vars, right: vars });
        }
        Ok(MultiPoly { vars, terms: self.terms.clone() })
    }

    /// Re-declares the polynomial over `vars`, which must contain every
    /// variable that actually occurs.
    pub fn redeclare(&self, vars: VarSet) -> Result<Self, AlgebraError> {
        let used = self.used_vars();
        if !used.is_subset(vars) {
            return Err(AlgebraError::VarMismatch { left: used, right: vars });
        }
        Ok(MultiPoly { vars, terms: self.terms.clone() })
    }

    /// Variables occurring with a nonzero exponent in some term.
    pub fn used_vars(&self) -> VarSet {
        self.terms.keys().fold(VarSet::EMPTY, |acc, m| acc.union(m.support()))
    }

    fn check_vars(&self, other: &MultiPoly) -> Result<(), AlgebraError> {
        if self.vars != other.vars {
            return Err(AlgebraError::VarMismatch { left: self.vars, right: other.vars });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &MultiPoly) -> Result<Self, AlgebraError> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &MultiPoly) -> Result<Self, AlgebraError> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &MultiPoly) -> Result<Self, AlgebraError> {
        self.check_vars(other)?;
        let mut acc: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                *acc.entry(ma.mul(mb)).or_default() += ca * cb;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(MultiPoly { vars: self.vars, terms: acc })
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(self.vars);
        }
        MultiPoly {
            vars: self.vars,
            terms: self.terms.iter().map(|(m, c)| (*m, c * k)).collect(),
        }
    }

    /// Multiplies by a monomial; the monomial's variables must be declared.
    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        debug_assert!(m.support().is_subset(self.vars));
        MultiPoly {
            vars: self.vars,
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one(self.vars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Divides every coefficient by `d`, failing unless all are multiples of `d`.
    pub fn div_exact(&self, d: &BigInt) -> Result<Self, AlgebraError> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            if !(c % d).is_zero() {
                return Err(AlgebraError::NotDivisible { divisor: d.to_string() });
            }
            terms.insert(*m, c / d);
        }
        Ok(MultiPoly { vars: self.vars, terms })
    }

    /// Smallest and largest exponent of `v`; `None` for the zero polynomial.
    pub fn degree_range(&self, v: Var) -> Option<(i32, i32)> {
        let mut it = self.terms.keys().map(|m| m.exp(v));
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), e| (lo.min(e), hi.max(e))))
    }

    /// Coefficient of `v^e`, as a polynomial in the remaining variables (same
    /// declared variable set, `v` absent from every term).
    pub fn coefficient_of(&self, v: Var, e: i32) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exp(v) == e)
            .map(|(m, c)| {
                let mut m = *m;
                m.set(v, 0);
                (m, c.clone())
            })
            .collect();
        MultiPoly { vars: self.vars, terms }
    }

    /// Simultaneous substitution of signed monomials for variables.
    ///
    /// The result is declared over the unbound variables of `self` together
    /// with every variable occurring in an image.
    pub fn substitute_monomial(&self, bindings: &[(Var, MonomialBinding)]) -> Self {
        let bound: VarSet = bindings.iter().map(|(v, _)| *v).collect();
        let image_vars = bindings
            .iter()
            .flat_map(|(_, b)| b.exps.iter().map(|(v, _)| *v))
            .collect::<VarSet>();
        let mut vars = image_vars;
        for v in self.vars.iter().filter(|v| !bound.contains(*v)) {
            vars = vars.with(v);
        }
        let mut out = Self::zero(vars);
        for (m, c) in &self.terms {
            let mut target = *m;
            let mut negate = false;
            for (v, _) in bindings {
                target.set(*v, 0);
            }
            for (v, b) in bindings {
                let e = m.exp(*v);
                if e == 0 {
                    continue;
                }
                for &(w, k) in &b.exps {
                    target.0[w.index()] += k * e;
                }
                if b.negate && e % 2 != 0 {
                    negate = !negate;
                }
            }
            out.add_term(target, if negate { -c.clone() } else { c.clone() });
        }
        out
    }

    /// Simultaneous substitution of arbitrary polynomials for variables.
    ///
    /// Negative powers are only allowed when the image is a unit monomial
    /// (`±` a monomial with coefficient one).
    pub fn substitute(&self, bindings: &[(Var, MultiPoly)]) -> Result<Self, AlgebraError> {
        let bound: VarSet = bindings.iter().map(|(v, _)| *v).collect();
        let mut vars = VarSet::EMPTY;
        for v in self.vars.iter().filter(|v| !bound.contains(*v)) {
            vars = vars.with(v);
        }
        for (_, img) in bindings {
            vars = vars.union(img.vars);
        }
        let images: Vec<(Var, MultiPoly, Option<MultiPoly>)> = bindings
            .iter()
            .map(|(v, img)| {
                let img = img.embed(vars).expect("image variables are declared");
                let inv = img.unit_inverse();
                (*v, img, inv)
            })
            .collect();
        let mut out = Self::zero(vars);
        for (m, c) in &self.terms {
            let mut rest = *m;
            for (v, _, _) in &images {
                rest.set(*v, 0);
            }
            let mut term = Self::zero(vars);
            term.add_term(rest, c.clone());
            for (v, img, inv) in &images {
                let e = m.exp(*v);
                let factor = if e >= 0 {
                    img.pow(e as u32)
                } else {
                    match inv {
                        Some(inv) => inv.pow((-e) as u32),
                        None => return Err(AlgebraError::NegativePowerOfNonMonomial(*v)),
                    }
                };
                term = &term * &factor;
            }
            out = &out + &term;
        }
        Ok(out)
    }

    fn unit_inverse(&self) -> Option<MultiPoly> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next()?;
        if !c.abs().is_one() {
            return None;
        }
        let mut inv = Monomial::ONE;
        for (a, b) in inv.0.iter_mut().zip(m.0) {
            *a = -b;
        }
        let mut p = Self::zero(self.vars);
        p.add_term(inv, c.clone());
        Some(p)
    }

    /// Evaluates `v` at an integer, dropping it from the variable set.
    pub fn specialize(&self, v: Var, value: i64) -> Result<Self, AlgebraError> {
        self.substitute(&[(v, MultiPoly::constant(VarSet::EMPTY, value))])
    }

    /// Whether the coefficients of `v^(lo+i)` and `v^(hi-i)` agree for all `i`.
    pub fn is_palindromic(&self, v: Var, lo: i32, hi: i32) -> Result<bool, AlgebraError> {
        if let Some((a, b)) = self.degree_range(v) {
            if a < lo || b > hi {
                return Err(AlgebraError::SupportOutside { var: v, lo, hi, found: (a, b) });
            }
        }
        Ok((0..=(hi - lo)).all(|i| self.coefficient_of(v, lo + i) == self.coefficient_of(v, hi - i)))
    }

    /// The polynomial with `v^e` replaced by `v^(lo+hi-e)`.
    pub fn reflect(&self, v: Var, lo: i32, hi: i32) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut m = *m;
                m.set(v, lo + hi - m.exp(v));
                (m, c.clone())
            })
            .collect();
        MultiPoly { vars: self.vars, terms }
    }
}

impl fmt::Display for MultiPoly {
    /// Terms in descending lexicographic order of exponent vectors,
    /// coefficient first: `2*t^2*q^-1-t+3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let factors: Vec<String> = Var::ALL
                .into_iter()
                .filter(|v| m.exp(*v) != 0)
                .map(|v| match m.exp(v) {
                    1 => v.name().to_string(),
                    e => format!("{}^{}", v.name(), e),
                })
                .collect();
            let negative = c.is_negative();
            if negative {
                f.write_str("-")?;
            } else if i > 0 {
                f.write_str("+")?;
            }
            let mag = c.abs();
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&factors.join("*"))?;
            } else {
                write!(f, "{}*{}", mag, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.vars, self)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            /// Panics if the variable sets differ; use the `checked_*` form to
            /// handle that case.
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }

        impl $trait<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }

        impl $trait<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            vars: self.vars,
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tq() -> VarSet {
        VarSet::new(&[Var::T, Var::Q])
    }

    fn p(s: &str, vars: VarSet) -> MultiPoly {
        MultiPoly::parse_with_vars(s, vars).unwrap()
    }

    #[test]
    fn cancellation_and_binomial() {
        let q = VarSet::new(&[Var::Q]);
        assert_eq!(&p("q+1", q) + &p("q-1", q), p("2*q", q));
        let t = VarSet::new(&[Var::T]);
        assert_eq!(&p("1+t", t) * &p("1+t", t), p("t^2+2*t+1", t));
    }

    #[test]
    fn product_of_small_carlitz_numbers() {
        // Schoolbook: (q+1)(q^3+q^2+2q+1)
        //   = q^4+q^3+2q^2+q + q^3+q^2+2q+1 = q^4+2q^3+3q^2+3q+1
        let q = VarSet::new(&[Var::Q]);
        let prod = &p("q+1", q) * &p("q^3+q^2+2*q+1", q);
        assert_eq!(prod.to_string(), "q^4+2*q^3+3*q^2+3*q+1");
    }

    #[test]
    fn mismatched_vars_are_rejected() {
        let a = p("q", VarSet::new(&[Var::Q]));
        let b = p("t", VarSet::new(&[Var::T]));
        assert!(matches!(a.checked_add(&b), Err(AlgebraError::VarMismatch { .. })));
    }

    #[test]
    fn printing_orders_terms_and_signs() {
        let poly = p("q^-1*t^2*3 - t + 3", tq());
        assert_eq!(poly.to_string(), "3*t^2*q^-1-t+3");
        assert_eq!(MultiPoly::zero(tq()).to_string(), "0");
        assert_eq!(p("-1", tq()).to_string(), "-1");
    }

    #[test]
    fn simultaneous_monomial_substitution() {
        let poly = p("t*q + t^2", tq());
        let out = poly.substitute_monomial(&[
            (Var::T, MonomialBinding::power(Var::Q, 1)),
            (Var::Q, MonomialBinding::power(Var::Q, 2)),
        ]);
        assert_eq!(out.vars(), VarSet::new(&[Var::Q]));
        assert_eq!(out.to_string(), "q^3+q^2");
    }

    #[test]
    fn narayana_at_minus_one() {
        let poly = p("1+3*t+t^2", VarSet::new(&[Var::T]));
        let out = poly.substitute_monomial(&[(Var::T, MonomialBinding::constant(true))]);
        assert_eq!(out.to_string(), "-1");
        assert_eq!(poly.specialize(Var::T, -1).unwrap().to_string(), "-1");
        let one = MultiPoly::one(tq());
        assert!(one
            .substitute_monomial(&[(Var::T, MonomialBinding::power(Var::Q, 3))])
            .is_one());
    }

    #[test]
    fn laurent_substitution_through_general_route() {
        let poly = p("t^-2*q + 1", tq());
        let out = poly
            .substitute(&[(Var::T, p("-q", VarSet::new(&[Var::Q])))])
            .unwrap();
        assert_eq!(out.to_string(), "1+q^-1");
        let bad = poly.substitute(&[(Var::T, p("1+q", VarSet::new(&[Var::Q])))]);
        assert!(matches!(bad, Err(AlgebraError::NegativePowerOfNonMonomial(Var::T))));
    }

    #[test]
    fn palindromicity() {
        let t = VarSet::new(&[Var::T]);
        assert!(p("1+3*t+t^2", t).is_palindromic(Var::T, 0, 2).unwrap());
        assert!(p("2*t^2+62*t^3+2*t^4", t).is_palindromic(Var::T, 2, 4).unwrap());
        assert!(!p("1+2*t", t).is_palindromic(Var::T, 0, 1).unwrap());
        assert!(matches!(
            p("t^3", t).is_palindromic(Var::T, 0, 2),
            Err(AlgebraError::SupportOutside { .. })
        ));
    }
}
