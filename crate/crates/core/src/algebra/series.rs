use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::poly::MultiPoly;
use super::var::VarSet;
use super::AlgebraError;

/// Power series in an implicit variable `z`, truncated after `z^order`, with
/// polynomial coefficients over a common variable list.
#[derive(Clone, PartialEq, Eq)]
pub struct PowerSeries {
    vars: VarSet,
    coeffs: Vec<MultiPoly>,
}

impl PowerSeries {
    pub fn zero(vars: VarSet, order: usize) -> Self {
        PowerSeries { vars, coeffs: vec![MultiPoly::zero(vars); order + 1] }
    }

    pub fn one(vars: VarSet, order: usize) -> Self {
        Self::constant(MultiPoly::one(vars), order)
    }

    pub fn constant(c: MultiPoly, order: usize) -> Self {
        let mut s = Self::zero(c.vars(), order);
        s.coeffs[0] = c;
        s
    }

    /// `c * z^k`.
    pub fn monomial(c: MultiPoly, k: usize, order: usize) -> Self {
        let mut s = Self::zero(c.vars(), order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Builds a series from leading coefficients; missing ones are zero and
    /// extra ones are dropped.
    pub fn from_coeffs(
        vars: VarSet,
        order: usize,
        coeffs: impl IntoIterator<Item = MultiPoly>,
    ) -> Result<Self, AlgebraError> {
        let mut s = Self::zero(vars, order);
        for (i, c) in coeffs.into_iter().take(order + 1).enumerate() {
            if c.vars() != vars {
                return Err(AlgebraError::VarMismatch { left: vars, right: c.vars() });
            }
            s.coeffs[i] = c;
        }
        Ok(s)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn vars(&self) -> VarSet {
        self.vars
    }

    pub fn coeff(&self, k: usize) -> &MultiPoly {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<MultiPoly> {
        self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        PowerSeries { vars: self.vars, coeffs: self.coeffs[..=order].to_vec() }
    }

    fn check(&self, other: &PowerSeries) -> Result<usize, AlgebraError> {
        if self.vars != other.vars {
            return Err(AlgebraError::VarMismatch { left: self.vars, right: other.vars });
        }
        Ok(self.order().min(other.order()))
    }

    pub fn add(&self, other: &PowerSeries) -> Result<Self, AlgebraError> {
        let n = self.check(other)?;
        Ok(PowerSeries {
            vars: self.vars,
            coeffs: (0..=n).map(|k| &self.coeffs[k] + &other.coeffs[k]).collect(),
        })
    }

    pub fn sub(&self, other: &PowerSeries) -> Result<Self, AlgebraError> {
        let n = self.check(other)?;
        Ok(PowerSeries {
            vars: self.vars,
            coeffs: (0..=n).map(|k| &self.coeffs[k] - &other.coeffs[k]).collect(),
        })
    }

    pub fn mul(&self, other: &PowerSeries) -> Result<Self, AlgebraError> {
        let n = self.check(other)?;
        let mut coeffs = vec![MultiPoly::zero(self.vars); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] = &coeffs[i + j] + &(a * b);
                }
            }
        }
        Ok(PowerSeries { vars: self.vars, coeffs })
    }

    pub fn scale(&self, c: &MultiPoly) -> Result<Self, AlgebraError> {
        if c.vars() != self.vars {
            return Err(AlgebraError::VarMismatch { left: self.vars, right: c.vars() });
        }
        Ok(PowerSeries { vars: self.vars, coeffs: self.coeffs.iter().map(|a| a * c).collect() })
    }

    /// Multiplies by `z^k`, keeping the order.
    pub fn shift(&self, k: usize) -> Self {
        let mut s = Self::zero(self.vars, self.order());
        for i in k..=self.order() {
            s.coeffs[i] = self.coeffs[i - k].clone();
        }
        s
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.vars, self.order());
        for _ in 0..e {
            acc = acc.mul(self).expect("same variables");
        }
        acc
    }

    /// Multiplicative inverse; the constant term must be `1` or `-1`.
    pub fn reciprocal(&self) -> Result<Self, AlgebraError> {
        let a0 = match self.coeffs[0].as_constant() {
            Some(c) if c.abs().is_one() => c,
            _ => return Err(AlgebraError::NonUnitConstant),
        };
        let n = self.order();
        let mut r: Vec<MultiPoly> = Vec::with_capacity(n + 1);
        r.push(MultiPoly::constant(self.vars, a0.clone()));
        let neg_a0 = -a0;
        for k in 1..=n {
            let mut acc = MultiPoly::zero(self.vars);
            for j in 1..=k {
                if !self.coeffs[j].is_zero() && !r[k - j].is_zero() {
                    acc = &acc + &(&self.coeffs[j] * &r[k - j]);
                }
            }
            r.push(acc.scale(&neg_a0));
        }
        Ok(PowerSeries { vars: self.vars, coeffs: r })
    }

    /// Exact coefficientwise division by an integer.
    pub fn div_exact(&self, d: &BigInt) -> Result<Self, AlgebraError> {
        Ok(PowerSeries {
            vars: self.vars,
            coeffs: self.coeffs.iter().map(|c| c.div_exact(d)).collect::<Result<_, _>>()?,
        })
    }
}

impl fmt::Display for PowerSeries {
    /// One `z^k: <poly>` line per coefficient.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.coeffs.iter().enumerate() {
            writeln!(f, "z^{k}: {c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}

/// Iterates `S <- F(S)` from `S = 0` until the truncated series stops
/// changing. `F` must gain at least one exact coefficient per step.
pub fn solve_algebraic_fixed_point<F>(
    vars: VarSet,
    order: usize,
    f: F,
) -> Result<PowerSeries, AlgebraError>
where
    F: Fn(&PowerSeries) -> Result<PowerSeries, AlgebraError>,
{
    let limit = order + 2;
    let mut s = PowerSeries::zero(vars, order);
    for _ in 0..limit {
        let next = f(&s)?.truncate(order);
        if next == s {
            return Ok(s);
        }
        s = next;
    }
    Err(AlgebraError::NotContracting(limit))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Var;

    fn t() -> VarSet {
        VarSet::new(&[Var::T])
    }

    fn ser(cs: &[&str], order: usize) -> PowerSeries {
        let vs = t();
        PowerSeries::from_coeffs(
            vs,
            order,
            cs.iter().map(|c| MultiPoly::parse_with_vars(c, vs).unwrap()),
        )
        .unwrap()
    }

    fn show(s: &PowerSeries) -> Vec<String> {
        s.coeffs().iter().map(|c| c.to_string()).collect()
    }

    #[test]
    fn geometric_series() {
        let r = ser(&["1", "-1"], 3).reciprocal().unwrap();
        assert_eq!(show(&r), ["1", "1", "1", "1"]);
    }

    #[test]
    fn difference_of_squares() {
        let p = ser(&["1", "1"], 2).mul(&ser(&["1", "-1"], 2)).unwrap();
        assert_eq!(show(&p), ["1", "0", "-1"]);
    }

    #[test]
    fn fibonacci_like_reciprocal() {
        // c_n = c_{n-1} + t c_{n-2}: 1, 1, 1+t, 1+2t
        let r = ser(&["1", "-1", "-t"], 3).reciprocal().unwrap();
        assert_eq!(show(&r), ["1", "1", "t+1", "2*t+1"]);
    }

    #[test]
    fn reciprocal_needs_unit_constant() {
        assert_eq!(ser(&["2", "1"], 2).reciprocal(), Err(AlgebraError::NonUnitConstant));
        let r = ser(&["-1", "1"], 3).reciprocal().unwrap();
        assert_eq!(show(&r), ["-1", "-1", "-1", "-1"]);
    }

    #[test]
    fn fixed_point_for_separable_odd_alternating() {
        // R = x(R+1)^2 + x(R+1)^3
        let vs = VarSet::EMPTY;
        let one = PowerSeries::one(vs, 3);
        let r = solve_algebraic_fixed_point(vs, 3, |s| {
            let s1 = s.add(&one)?;
            s1.pow(2).add(&s1.pow(3)).map(|x| x.shift(1))
        })
        .unwrap();
        assert_eq!(show(&r), ["0", "2", "10", "66"]);
    }

    #[test]
    fn fixed_point_of_constant_rhs() {
        let vs = VarSet::EMPTY;
        let x = PowerSeries::monomial(MultiPoly::one(vs), 1, 4);
        let s = solve_algebraic_fixed_point(vs, 4, |_| Ok(x.clone())).unwrap();
        assert_eq!(s, x);
    }

    #[test]
    fn fixed_point_detects_divergence() {
        let vs = VarSet::EMPTY;
        let one = PowerSeries::one(vs, 2);
        let res = solve_algebraic_fixed_point(vs, 2, |s| s.add(&one));
        assert_eq!(res, Err(AlgebraError::NotContracting(4)));
    }
}
