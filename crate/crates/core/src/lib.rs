//! Exact computation and verification of (q,t)-Catalan polynomials: continued
//! fractions, pattern-avoiding permutation statistics and gamma expansions.

pub mod algebra;
pub mod cfrac;
pub mod mfs;
pub mod perm;
pub mod verify;

pub use algebra::{GammaBasis, GammaKind, GammaResult, Monomial, MultiPoly, PowerSeries, Var, VarSet};

pub use perm::{ClassSpec, PatternSpec, PermError, Permutation, StatKey, Weight};
pub use verify::{run_suite, Report, Status, Suite, SuiteConfig};
