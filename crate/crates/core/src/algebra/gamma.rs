use serde::{Deserialize, Serialize};

use super::poly::{MonomialBinding, MultiPoly};
use super::var::{Monomial, Var, VarSet};
use super::AlgebraError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GammaKind {
    /// `t^k (1+t)^(span-2k)`
    OnePlusT,
    /// `t^k (1+t/q)^(span-2k)`
    OnePlusTOverQ,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GammaBasis {
    pub kind: GammaKind,
    pub span: u32,
}

impl GammaBasis {
    pub fn one_plus_t(span: u32) -> Self {
        GammaBasis { kind: GammaKind::OnePlusT, span }
    }

    pub fn one_plus_t_over_q(span: u32) -> Self {
        GammaBasis { kind: GammaKind::OnePlusTOverQ, span }
    }

    /// Number of basis elements, `floor(span/2) + 1`.
    pub fn len(&self) -> usize {
        self.span as usize / 2 + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GammaResult {
    Success(Vec<MultiPoly>),
    /// The peeling stopped with a nonzero remainder; `partial` holds the
    /// coefficients extracted before that.
    Failure { partial: Vec<MultiPoly>, remainder: MultiPoly },
}

impl GammaResult {
    pub fn is_success(&self) -> bool {
        matches!(self, GammaResult::Success(_))
    }

    pub fn coefficients(&self) -> &[MultiPoly] {
        match self {
            GammaResult::Success(g) => g,
            GammaResult::Failure { partial, .. } => partial,
        }
    }

    pub fn into_success(self) -> Option<Vec<MultiPoly>> {
        match self {
            GammaResult::Success(g) => Some(g),
            GammaResult::Failure { .. } => None,
        }
    }
}

/// Gamma expansion in `t`.
pub fn gamma_expand(p: &MultiPoly, basis: GammaBasis) -> Result<GammaResult, AlgebraError> {
    gamma_expand_in(p, Var::T, basis)
}

/// Gamma expansion in an arbitrary variable. For the `(1+v/q)` basis, `v`
/// must not be `q` and the auxiliary variable `s` must be unused.
pub fn gamma_expand_in(
    p: &MultiPoly,
    v: Var,
    basis: GammaBasis,
) -> Result<GammaResult, AlgebraError> {
    let span = basis.span as i32;
    if let Some((lo, hi)) = p.degree_range(v) {
        if lo < 0 || hi > span {
            return Err(AlgebraError::SupportOutside { var: v, lo: 0, hi: span, found: (lo, hi) });
        }
    }
    match basis.kind {
        GammaKind::OnePlusT => Ok(peel(p.embed(p.vars().with(v))?, v, span)),
        GammaKind::OnePlusTOverQ => {
            if v == Var::Q || v == Var::S {
                return Err(AlgebraError::VarConflict(v));
            }
            if p.vars().contains(Var::S) {
                return Err(AlgebraError::VarConflict(Var::S));
            }
            let target = p.vars().with(v).with(Var::Q);
            // v = q*s
            let shifted = p
                .substitute_monomial(&[(v, MonomialBinding::new(false, &[(Var::Q, 1), (Var::S, 1)]))])
                .embed(p.vars().without(v).with(Var::Q).with(Var::S))?;
            let back = |g: MultiPoly, k: i32| -> MultiPoly {
                g.redeclare(target)
                    .expect("no s or v left in a coefficient")
                    .mul_monomial(&Monomial::of(Var::Q, -k))
            };
            Ok(match peel(shifted, Var::S, span) {
                GammaResult::Success(gs) => GammaResult::Success(
                    gs.into_iter().enumerate().map(|(k, g)| back(g, k as i32)).collect(),
                ),
                GammaResult::Failure { partial, remainder } => {
                    let partial =
                        partial.into_iter().enumerate().map(|(k, g)| back(g, k as i32)).collect();
                    let remainder = remainder
                        .substitute_monomial(&[(
                            Var::S,
                            MonomialBinding::new(false, &[(v, 1), (Var::Q, -1)]),
                        )])
                        .embed(target)?;
                    GammaResult::Failure { partial, remainder }
                }
            })
        }
    }
}

fn one_plus(vars: VarSet, v: Var) -> MultiPoly {
    &MultiPoly::one(vars) + &MultiPoly::var(vars, v).expect("declared")
}

fn peel(p: MultiPoly, v: Var, span: i32) -> GammaResult {
    let vars = p.vars();
    let base = one_plus(vars, v);
    let mut rem = p;
    let mut gammas = Vec::new();
    for k in 0..=span / 2 {
        let g = rem.coefficient_of(v, k);
        if !g.is_zero() {
            let term = (&g * &base.pow((span - 2 * k) as u32)).mul_monomial(&Monomial::of(v, k));
            rem = &rem - &term;
        }
        gammas.push(g);
    }
    if rem.is_zero() {
        GammaResult::Success(gammas)
    } else {
        GammaResult::Failure { partial: gammas, remainder: rem }
    }
}

/// `sum_k gamma_k v^k (1+v)^(span-2k)` or the `(1+v/q)` analogue.
pub fn reconstruct(
    gammas: &[MultiPoly],
    v: Var,
    basis: GammaBasis,
) -> Result<MultiPoly, AlgebraError> {
    let mut vars = gammas.iter().fold(VarSet::EMPTY.with(v), |acc, g| acc.union(g.vars()));
    if basis.kind == GammaKind::OnePlusTOverQ {
        vars = vars.with(Var::Q);
    }
    let step = match basis.kind {
        GammaKind::OnePlusT => one_plus(vars, v),
        GammaKind::OnePlusTOverQ => {
            &MultiPoly::one(vars) + &MultiPoly::monomial(vars, 1, &[(v, 1), (Var::Q, -1)])?
        }
    };
    let span = basis.span as i32;
    let mut acc = MultiPoly::zero(vars);
    for (k, g) in gammas.iter().enumerate() {
        let k = k as i32;
        if span - 2 * k < 0 {
            break;
        }
        let term = (&g.embed(vars)? * &step.pow((span - 2 * k) as u32))
            .mul_monomial(&Monomial::of(v, k));
        acc = &acc + &term;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> MultiPoly {
        MultiPoly::parse(s).unwrap()
    }

    fn strs(g: &[MultiPoly]) -> Vec<String> {
        g.iter().map(|x| x.to_string()).collect()
    }

    #[test]
    fn conjecture_g6() {
        let g = gamma_expand(&p("2*t^2+62*t^3+2*t^4"), GammaBasis::one_plus_t(6)).unwrap();
        assert_eq!(strs(g.coefficients()), ["0", "0", "2", "58"]);
        assert!(g.is_success());
    }

    #[test]
    fn constant_with_empty_span() {
        let g = gamma_expand(&p("1"), GammaBasis::one_plus_t(0)).unwrap();
        assert_eq!(strs(g.coefficients()), ["1"]);
    }

    #[test]
    fn narayana_four() {
        // (1+t)^3 = 1+3t+3t^2+t^3, t(1+t) = t+t^2:
        // 1+6t+6t^2+t^3 - (1+t)^3 = 3t+3t^2 = 3 t(1+t).
        let g = gamma_expand(&p("1+6*t+6*t^2+t^3"), GammaBasis::one_plus_t(3)).unwrap();
        assert_eq!(strs(g.coefficients()), ["1", "3"]);
    }

    #[test]
    fn asymmetric_input_fails_with_remainder() {
        let g = gamma_expand(&p("1+2*t"), GammaBasis::one_plus_t(1)).unwrap();
        match g {
            GammaResult::Failure { remainder, .. } => assert_eq!(remainder.to_string(), "t"),
            other => panic!("expected failure, got {other:?}"),
        }
    }

    #[test]
    fn support_is_checked() {
        assert!(matches!(
            gamma_expand(&p("t^5"), GammaBasis::one_plus_t(4)),
            Err(AlgebraError::SupportOutside { .. })
        ));
    }

    #[test]
    fn q_shifted_basis_round_trip() {
        // W_2(t,q) = t^2 + t q = t (1 + t/q)^0 * q ... expands as q t (1+t/q)
        let w = p("t^2+t*q");
        let g = gamma_expand(&w, GammaBasis::one_plus_t_over_q(3)).unwrap();
        assert_eq!(strs(g.coefficients()), ["0", "q"]);
        let back = reconstruct(g.coefficients(), Var::T, GammaBasis::one_plus_t_over_q(3)).unwrap();
        assert_eq!(back, w);
    }

    #[test]
    fn q_gamma_coefficients_of_qt_catalan_three() {
        // C_3(t,q) = 1 + (2+q) t + t^2 = (1+t)^2 + q t
        let c3 = p("1+2*t+q*t+t^2");
        let g = gamma_expand(&c3, GammaBasis::one_plus_t(2)).unwrap();
        assert_eq!(strs(g.coefficients()), ["1", "q"]);
        assert_eq!(reconstruct(g.coefficients(), Var::T, GammaBasis::one_plus_t(2)).unwrap(), c3);
    }
}
