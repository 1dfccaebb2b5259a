//! Exact polynomial and truncated power-series arithmetic.

mod gamma;
mod json;
mod parse;
mod poly;
mod series;
mod var;

pub use gamma::{gamma_expand, gamma_expand_in, reconstruct, GammaBasis, GammaKind, GammaResult};
pub use json::PolyJson;
pub use poly::{MonomialBinding, MultiPoly};
pub use series::{solve_algebraic_fixed_point, PowerSeries};
pub use var::{Monomial, Var, VarSet, NVARS};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("variable lists differ: {left} vs {right}")]
    VarMismatch { left: VarSet, right: VarSet },
    #[error("unknown variable `{0}` (expected one of t, q, x, y, p, s)")]
    UnknownVar(String),
    #[error("monomial {monomial} uses a variable outside {vars}")]
    UndeclaredVar { vars: VarSet, monomial: String },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("support in {var} is [{}, {}], outside [{lo}, {hi}]", found.0, found.1)]
    SupportOutside { var: Var, lo: i32, hi: i32, found: (i32, i32) },
    #[error("series constant term must be 1 or -1")]
    NonUnitConstant,
    #[error("negative power of {0} needs a unit monomial image")]
    NegativePowerOfNonMonomial(Var),
    #[error("fixed-point iteration did not stabilise within {0} steps")]
    NotContracting(usize),
    #[error("coefficients are not all divisible by {divisor}")]
    NotDivisible { divisor: String },
    #[error("variable {0} is already in use")]
    VarConflict(Var),
}
