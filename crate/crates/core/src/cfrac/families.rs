use std::fmt;
use std::str::FromStr;

use crate::algebra::{MonomialBinding, MultiPoly, Var, VarSet};
use crate::perm::{distribution, ClassSpec, Weight};

use super::{cf_series, CFSpec};

fn mono(vars: VarSet, exps: &[(Var, i32)]) -> MultiPoly {
    MultiPoly::monomial(vars, 1, exps).expect("monomial over declared variables")
}

/// `[h]_{u,v} = Σ_{i<h} u^i v^{h-1-i}`, kept as a sum so no division occurs.
pub fn q_integer(h: usize, u: &MultiPoly, v: &MultiPoly) -> MultiPoly {
    let mut acc = MultiPoly::zero(u.vars());
    for i in 0..h {
        acc = &acc + &(&u.pow(i as u32) * &v.pow((h - 1 - i) as u32));
    }
    acc
}

fn tq() -> VarSet {
    VarSet::new(&[Var::T, Var::Q])
}

/// `c_{2k-1} = q^{k-1}`, `c_{2k} = t q^{k-1}`.
pub fn qt_catalan_spec() -> CFSpec {
    CFSpec::stieltjes(tq(), |h| {
        let k = h.div_ceil(2) as i32;
        if h % 2 == 1 {
            mono(tq(), &[(Var::Q, k - 1)])
        } else {
            mono(tq(), &[(Var::T, 1), (Var::Q, k - 1)])
        }
    })
}

/// `C_0(t,q), ..., C_order(t,q)`.
pub fn qt_catalan_series(order: usize) -> Vec<MultiPoly> {
    cf_series(&qt_catalan_spec(), order).into_coeffs()
}

pub fn qt_catalan(n: usize) -> MultiPoly {
    qt_catalan_series(n).pop().expect("order n has n+1 coefficients")
}

fn quint_vars() -> VarSet {
    VarSet::new(&[Var::X, Var::Y, Var::Q, Var::P, Var::S])
}

/// The Jacobi fraction for `x^des y^fmax q^(31-2) p^(2-31) s^MAD` over `S_n`.
pub fn quint_spec() -> CFSpec {
    let vs = quint_vars();
    let bracket = move |h: usize| {
        q_integer(h, &mono(vs, &[(Var::Q, 1)]), &mono(vs, &[(Var::P, 1), (Var::S, 1)]))
    };
    let a = move |h: usize| &mono(vs, &[(Var::S, 2 * h as i32 + 1)]) * &bracket(h + 1);
    let c = move |h: usize| &mono(vs, &[(Var::X, 1)]) * &bracket(h);
    let b = move |h: usize| {
        let h32 = h as i32;
        let first = mono(vs, &[(Var::Y, 1), (Var::P, h32), (Var::S, 2 * h32)]);
        let x_plus_q = &mono(vs, &[(Var::X, 1)]) + &mono(vs, &[(Var::Q, 1)]);
        &first + &(&(&x_plus_q * &mono(vs, &[(Var::S, h32)])) * &bracket(h))
    };
    CFSpec::jacobi(vs, b, move |h| &a(h - 1) * &c(h))
}

pub fn quint_gf(n: usize) -> MultiPoly {
    cf_series(&quint_spec(), n).into_coeffs().pop().expect("nonempty")
}

fn tyq() -> VarSet {
    VarSet::new(&[Var::T, Var::Y, Var::Q])
}

/// `b_0 = y`, `b_h = (1+t) q^h`, `λ_h = t q^{2h-1}`: `q^inv t^exc y^fix` over `S_n(321)`.
pub fn ceks_spec() -> CFSpec {
    CFSpec::jacobi(
        tyq(),
        |h| {
            if h == 0 {
                mono(tyq(), &[(Var::Y, 1)])
            } else {
                let h = h as i32;
                &mono(tyq(), &[(Var::Q, h)]) + &mono(tyq(), &[(Var::T, 1), (Var::Q, h)])
            }
        },
        |h| mono(tyq(), &[(Var::T, 1), (Var::Q, 2 * h as i32 - 1)]),
    )
}

pub fn ceks_gf(n: usize) -> MultiPoly {
    cf_series(&ceks_spec(), n).into_coeffs().pop().expect("nonempty")
}

/// Stieltjes coefficients `2, 2, 1, 1, 1, ...`: the series `Σ u_n x^n`.
pub fn u_series_spec() -> CFSpec {
    CFSpec::stieltjes(VarSet::EMPTY, |h| MultiPoly::constant(VarSet::EMPTY, if h <= 2 { 2 } else { 1 }))
}

/// Continued fractions available by name: `catalan`, `qt-catalan`, `quint`,
/// `ceks`, `u-series`.
pub fn named_spec(id: &str) -> Option<CFSpec> {
    match id {
        "catalan" => Some(CFSpec::stieltjes(VarSet::EMPTY, |_| MultiPoly::one(VarSet::EMPTY))),
        "qt-catalan" => Some(qt_catalan_spec()),
        "quint" => Some(quint_spec()),
        "ceks" => Some(ceks_spec()),
        "u-series" => Some(u_series_spec()),
        _ => None,
    }
}

/// Polynomial families with a name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    QtCatalan,
    /// `C_n(q, q²)`
    Carlitz,
    /// `C_n(t, 1)`
    Narayana,
    /// `C_n(tq, q²)`
    DyckBp,
    /// `Σ_{A_{2n}(132)} q^(2-31)`
    CStar,
    /// `Σ_{A_{2n}(231)} q^(13-2)`
    CHat,
    /// `Σ_{A_{2n}(231)} q^(2-13)`
    CBar,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::QtCatalan,
        Family::Carlitz,
        Family::Narayana,
        Family::DyckBp,
        Family::CStar,
        Family::CHat,
        Family::CBar,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::QtCatalan => "qt-catalan",
            Family::Carlitz => "carlitz",
            Family::Narayana => "narayana",
            Family::DyckBp => "dyck-bp",
            Family::CStar => "cstar",
            Family::CHat => "chat",
            Family::CBar => "cbar",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.trim().to_ascii_lowercase().replace('_', "-");
        Family::ALL.into_iter().find(|f| f.name() == norm).ok_or_else(|| {
            let names: Vec<&str> = Family::ALL.iter().map(|f| f.name()).collect();
            format!("unknown family `{s}` (expected one of {})", names.join(", "))
        })
    }
}

fn alternating_sum(n: usize, pattern: &str, weight: &str) -> MultiPoly {
    let spec = ClassSpec::alternating(2 * n, &[pattern]);
    let w = Weight::parse_list(weight).expect("valid built-in weight");
    distribution(&spec, &w).embed(VarSet::new(&[Var::Q])).expect("only q occurs")
}

pub fn named_family(family: Family, n: usize) -> MultiPoly {
    let c = || qt_catalan(n);
    match family {
        Family::QtCatalan => c(),
        Family::Carlitz => c().substitute_monomial(&[
            (Var::T, MonomialBinding::power(Var::Q, 1)),
            (Var::Q, MonomialBinding::power(Var::Q, 2)),
        ]),
        Family::Narayana => c().specialize(Var::Q, 1).expect("polynomial in q").embed(VarSet::new(&[Var::T])).expect("only t remains"),
        Family::DyckBp => c().substitute_monomial(&[
            (Var::T, MonomialBinding::new(false, &[(Var::T, 1), (Var::Q, 1)])),
            (Var::Q, MonomialBinding::power(Var::Q, 2)),
        ]),
        Family::CStar => alternating_sum(n, "132", "q^2-31"),
        Family::CHat => alternating_sum(n, "231", "q^13-2"),
        Family::CBar => alternating_sum(n, "231", "q^2-13"),
    }
}
