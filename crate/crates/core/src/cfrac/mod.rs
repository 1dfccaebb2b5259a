//! Stieltjes and Jacobi continued fractions expanded as power series, and the
//! polynomial families defined through them.

mod families;

pub use families::{
    ceks_gf, ceks_spec, named_family, named_spec, q_integer, qt_catalan, qt_catalan_series,
    qt_catalan_spec, quint_gf, quint_spec, u_series_spec, Family,
};

use std::fmt;
use std::sync::Arc;

use crate::algebra::{MultiPoly, PowerSeries, VarSet};

/// A coefficient sequence `h ↦ c_h`.
pub type Coef = Arc<dyn Fn(usize) -> MultiPoly + Send + Sync>;

/// A continued fraction in `z`.
///
/// Stieltjes: `1/(1 - c_1 z/(1 - c_2 z/(1 - ...)))`, coefficients from `h = 1`.
/// Jacobi: `1/(1 - b_0 z - λ_1 z²/(1 - b_1 z - λ_2 z²/...))`.
#[derive(Clone)]
pub enum CFSpec {
    Stieltjes { vars: VarSet, c: Coef },
    Jacobi { vars: VarSet, b: Coef, lambda: Coef },
}

impl fmt::Debug for CFSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CFSpec::Stieltjes { vars, .. } => write!(f, "Stieltjes over {vars}"),
            CFSpec::Jacobi { vars, .. } => write!(f, "Jacobi over {vars}"),
        }
    }
}

impl CFSpec {
    pub fn stieltjes(vars: VarSet, c: impl Fn(usize) -> MultiPoly + Send + Sync + 'static) -> Self {
        CFSpec::Stieltjes { vars, c: Arc::new(c) }
    }

    pub fn jacobi(
        vars: VarSet,
        b: impl Fn(usize) -> MultiPoly + Send + Sync + 'static,
        lambda: impl Fn(usize) -> MultiPoly + Send + Sync + 'static,
    ) -> Self {
        CFSpec::Jacobi { vars, b: Arc::new(b), lambda: Arc::new(lambda) }
    }

    pub fn vars(&self) -> VarSet {
        match self {
            CFSpec::Stieltjes { vars, .. } | CFSpec::Jacobi { vars, .. } => *vars,
        }
    }

    /// Number of levels that fixes every coefficient up to `z^order`.
    pub fn depth(&self, order: usize) -> usize {
        match self {
            CFSpec::Stieltjes { .. } => order + 1,
            CFSpec::Jacobi { .. } => order.div_ceil(2) + 1,
        }
    }
}

/// The series of `spec` to order `N`.
pub fn cf_series(spec: &CFSpec, order: usize) -> PowerSeries {
    cf_series_at_depth(spec, order, spec.depth(order))
}

/// The series of `spec` cut after `depth` levels.
pub fn cf_series_at_depth(spec: &CFSpec, order: usize, depth: usize) -> PowerSeries {
    let vars = spec.vars();
    let one = PowerSeries::one(vars, order);
    let coef = |f: &Coef, h: usize| f(h).embed(vars).expect("coefficient over the spec variables");
    let invert = |s: PowerSeries| s.reciprocal().expect("constant term is one");
    match spec {
        CFSpec::Stieltjes { c, .. } => {
            let mut tail = one.clone();
            for h in (1..=depth).rev() {
                let step = tail.shift(1).scale(&coef(c, h)).expect("same variables");
                tail = invert(one.sub(&step).expect("same variables"));
            }
            tail
        }
        CFSpec::Jacobi { b, lambda, .. } => {
            if depth == 0 {
                return one;
            }
            let level = |h: usize| PowerSeries::monomial(coef(b, h), 1, order);
            let mut tail = invert(one.sub(&level(depth - 1)).expect("same variables"));
            for h in (0..depth - 1).rev() {
                let inner = tail.shift(2).scale(&coef(lambda, h + 1)).expect("same variables");
                let denom = one.sub(&level(h)).and_then(|d| d.sub(&inner)).expect("same variables");
                tail = invert(denom);
            }
            tail
        }
    }
}

/// Where two series first differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesMismatch {
    pub form: &'static str,
    pub power: usize,
    pub left: MultiPoly,
    pub right: MultiPoly,
}

fn first_mismatch(form: &'static str, a: &PowerSeries, b: &PowerSeries) -> Option<SeriesMismatch> {
    a.coeffs().iter().zip(b.coeffs()).enumerate().find(|(_, (x, y))| x != y).map(|(k, (x, y))| {
        SeriesMismatch { form, power: k, left: x.clone(), right: y.clone() }
    })
}

/// Checks the contraction of a Stieltjes fraction into its two Jacobi forms:
/// `b_0 = c_1, b_h = c_{2h} + c_{2h+1}, λ_h = c_{2h-1} c_{2h}`, and
/// `1 + c_1 z J'` with `b'_h = c_{2h+1} + c_{2h+2}, λ'_h = c_{2h} c_{2h+1}`.
pub fn contraction_check(vars: VarSet, c: Coef, order: usize) -> Result<(), SeriesMismatch> {
    let cc = {
        let c = c.clone();
        move |h: usize| c(h).embed(vars).expect("coefficient over the declared variables")
    };
    let s = cf_series(&CFSpec::Stieltjes { vars, c: c.clone() }, order);

    let (c1, c2) = (cc.clone(), cc.clone());
    let even = CFSpec::jacobi(
        vars,
        move |h| if h == 0 { c1(1) } else { &c1(2 * h) + &c1(2 * h + 1) },
        move |h| &c2(2 * h - 1) * &c2(2 * h),
    );
    let j = cf_series(&even, order);
    if let Some(m) = first_mismatch("even contraction", &s, &j) {
        return Err(m);
    }

    let (c3, c4) = (cc.clone(), cc.clone());
    let odd = CFSpec::jacobi(
        vars,
        move |h| &c3(2 * h + 1) + &c3(2 * h + 2),
        move |h| &c4(2 * h) * &c4(2 * h + 1),
    );
    let inner = cf_series(&odd, order).shift(1).scale(&cc(1)).expect("same variables");
    let j2 = PowerSeries::one(vars, order).add(&inner).expect("same variables");
    match first_mismatch("odd contraction", &s, &j2) {
        Some(m) => Err(m),
        None => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Var;

    fn ones() -> CFSpec {
        CFSpec::stieltjes(VarSet::EMPTY, |_| MultiPoly::one(VarSet::EMPTY))
    }

    fn ints(s: &PowerSeries) -> Vec<String> {
        s.coeffs().iter().map(|c| c.to_string()).collect()
    }

    #[test]
    fn catalan_from_all_ones() {
        assert_eq!(ints(&cf_series(&ones(), 5)), ["1", "1", "2", "5", "14", "42"]);
    }

    #[test]
    fn jacobi_motzkin() {
        let one = |_| MultiPoly::one(VarSet::EMPTY);
        let m = CFSpec::jacobi(VarSet::EMPTY, one, one);
        assert_eq!(ints(&cf_series(&m, 6)), ["1", "1", "2", "4", "9", "21", "51"]);
    }

    #[test]
    fn depth_stability() {
        let specs = [ones(), qt_catalan_spec(), quint_spec(), ceks_spec(), u_series_spec()];
        for spec in &specs {
            for order in 0..=6 {
                let d = spec.depth(order);
                assert_eq!(
                    cf_series_at_depth(spec, order, d),
                    cf_series_at_depth(spec, order, d + 3),
                    "{spec:?} order {order}"
                );
            }
        }
    }

    #[test]
    fn contraction_of_constant_and_qt_coefficients() {
        let one: Coef = Arc::new(|_| MultiPoly::one(VarSet::EMPTY));
        assert!(contraction_check(VarSet::EMPTY, one, 8).is_ok());
        let vars = VarSet::new(&[Var::T, Var::Q]);
        let CFSpec::Stieltjes { c, .. } = qt_catalan_spec() else { unreachable!() };
        assert!(contraction_check(vars, c, 8).is_ok());
    }

    #[test]
    fn first_difference_is_located() {
        let vars = VarSet::new(&[Var::T]);
        let c: Coef = Arc::new(move |h| MultiPoly::monomial(vars, 1, &[(Var::T, h as i32)]).unwrap());
        let s = cf_series(&CFSpec::Stieltjes { vars, c }, 5);
        let wrong = cf_series(&ones(), 5);
        let wrong = PowerSeries::from_coeffs(
            vars,
            5,
            wrong.coeffs().iter().map(|p| p.embed(vars).unwrap()),
        )
        .unwrap();
        assert_eq!(first_mismatch("x", &s, &wrong).map(|m| m.power), Some(1));
    }
}
