//! Integer sequences with several independent ways of computing them.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::json;

use super::check::{Failure, Outcome};
use crate::algebra::{gamma_expand, solve_algebraic_fixed_point, GammaBasis, MultiPoly, PowerSeries, Var, VarSet};
use crate::cfrac::{cf_series, named_spec, u_series_spec};
use crate::perm::{distribution, enumerate, ClassSpec, Weight};

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Ballot numbers `f(n,k)` from `f(n,k) = f(n,k-1) + f(n-1,k)`, rows `0..rows`.
pub fn ballot_rows(rows: usize) -> Vec<Vec<BigInt>> {
    let mut out: Vec<Vec<BigInt>> = Vec::with_capacity(rows);
    for n in 0..rows {
        let mut row: Vec<BigInt> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let v = if n == 0 {
                BigInt::one()
            } else {
                let left = if k == 0 { BigInt::zero() } else { row[k - 1].clone() };
                let up = out[n - 1].get(k).cloned().unwrap_or_default();
                left + up
            };
            row.push(v);
        }
        out.push(row);
    }
    out
}

/// `f(n,k) = (n-k+1)/(n+1) · binom(n+k, k)`, zero outside `0 <= k <= n`.
pub fn ballot_closed(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    binomial((n + k) as u64, k as u64) * (n - k + 1) / (n + 1)
}

pub fn ballot(n: usize, k: usize) -> BigInt {
    ballot_rows(n + 1)[n].get(k).cloned().unwrap_or_default()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SequenceName {
    Catalan,
    /// The ballot triangle read by rows.
    Ballot,
    /// `|A_{2n+1}(2413,3142)|`
    R,
    /// `|A_{2n}(2413,3142)|`
    T,
    /// `|A_{2n+1}(1342,2431)|`
    U,
    /// `|G_{2n}(-1)|`
    F,
    /// `G_n(1) = |D_n(123)|`
    Gat1,
}

impl SequenceName {
    pub const ALL: [SequenceName; 7] = [
        SequenceName::Catalan,
        SequenceName::Ballot,
        SequenceName::R,
        SequenceName::T,
        SequenceName::U,
        SequenceName::F,
        SequenceName::Gat1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SequenceName::Catalan => "catalan",
            SequenceName::Ballot => "ballot",
            SequenceName::R => "r",
            SequenceName::T => "t",
            SequenceName::U => "u",
            SequenceName::F => "F",
            SequenceName::Gat1 => "Gat1",
        }
    }

    /// Index of the first term.
    pub fn offset(self) -> usize {
        match self {
            SequenceName::Catalan | SequenceName::Ballot | SequenceName::R | SequenceName::U => 0,
            SequenceName::T | SequenceName::F | SequenceName::Gat1 => 1,
        }
    }
}

impl fmt::Display for SequenceName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SequenceName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        SequenceName::ALL
            .into_iter()
            .find(|n| n.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                let names: Vec<&str> = SequenceName::ALL.iter().map(|n| n.name()).collect();
                format!("unknown sequence `{s}` (expected one of {})", names.join(", "))
            })
    }
}

/// One way of computing a sequence; `None` past the range the route covers.
#[derive(Debug, Clone, PartialEq)]
pub struct Route {
    pub name: &'static str,
    pub values: Vec<Option<BigInt>>,
}

/// The first `count` terms of a named sequence and the routes that produce them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SequenceOracle {
    pub name: SequenceName,
    pub count: usize,
}

// Lengths past which the enumeration routes stop.
const ENUM_LEN: usize = 11;

impl SequenceOracle {
    pub fn new(name: SequenceName, count: usize) -> Self {
        SequenceOracle { name, count }
    }

    /// Terms from the first route. For `ballot`, `count` is the number of rows.
    pub fn values(&self) -> Vec<BigInt> {
        let first = self.routes().into_iter().next().expect("every sequence has a route");
        first.values.into_iter().map(|v| v.expect("the first route is total")).collect()
    }

    pub fn routes(&self) -> Vec<Route> {
        let c = self.count;
        let off = self.name.offset();
        let idx = move |i: usize| i + off;
        let total = |name, f: &dyn Fn(usize) -> BigInt| Route {
            name,
            values: (0..c).map(|i| Some(f(idx(i)))).collect(),
        };
        let from_vec = |name, v: Vec<BigInt>| Route {
            name,
            values: (0..c).map(|i| v.get(idx(i)).cloned()).collect(),
        };
        let limited = |name, max: usize, f: &dyn Fn(usize) -> BigInt| Route {
            name,
            values: (0..c).map(|i| (idx(i) <= max).then(|| f(idx(i)))).collect(),
        };
        match self.name {
            SequenceName::Catalan => vec![
                total("closed form", &super::check::catalan),
                from_vec("recurrence", catalan_recurrence(c)),
                from_vec("continued fraction", series_ints(&cf_series(&named_spec("catalan").expect("built in"), c))),
                limited("enumeration S_n(231)", ENUM_LEN, &|n| {
                    BigInt::from(enumerate(&ClassSpec::avoiders(n, &["231"])).count())
                }),
            ],
            SequenceName::Ballot => {
                let rows = ballot_rows(c);
                let flat = |f: &dyn Fn(usize, usize) -> BigInt| {
                    let mut v = Vec::new();
                    for n in 0..c {
                        for k in 0..=n {
                            v.push(Some(f(n, k)));
                        }
                    }
                    v
                };
                vec![
                    Route { name: "recurrence", values: flat(&|n, k| rows[n][k].clone()) },
                    Route { name: "closed form", values: flat(&ballot_closed) },
                ]
            }
            SequenceName::R => vec![
                total("closed form", &r_closed),
                from_vec("fixed point", series_ints(&r_series(c))),
                from_vec("convolution", r_convolution(c)),
                limited("enumeration", (ENUM_LEN - 1) / 2, &|n| {
                    BigInt::from(enumerate(&ClassSpec::alternating(2 * n + 1, &["2413", "3142"])).count())
                }),
            ],
            SequenceName::T => {
                let r = r_series(c + 1);
                vec![
                    total("closed form", &t_closed),
                    from_vec("x(R+1)^2", series_ints(&t_from_r(&r))),
                    from_vec("R/(R+2)", series_ints(&t_from_ratio(&r))),
                    limited("enumeration", ENUM_LEN / 2, &|n| {
                        BigInt::from(enumerate(&ClassSpec::alternating(2 * n, &["2413", "3142"])).count())
                    }),
                ]
            }
            SequenceName::U => vec![
                total("multiple sum", &u_multiple_sum),
                from_vec("continued fraction", series_ints(&cf_series(&u_series_spec(), c))),
                from_vec("catalan recurrence", u_recurrence(c)),
                limited("enumeration", (ENUM_LEN - 1) / 2, &|n| {
                    BigInt::from(enumerate(&ClassSpec::alternating(2 * n + 1, &["1342", "2431"])).count())
                }),
            ],
            SequenceName::F => vec![
                limited("G_2n(-1)", 5, &|n| {
                    let g = g_poly(2 * n);
                    let v = g.specialize(Var::T, -1).expect("polynomial").as_constant().expect("constant");
                    if n % 2 == 0 { v } else { -v }
                }),
                limited("top gamma coefficient", 5, &|n| {
                    let g = g_poly(2 * n);
                    let gs = gamma_expand(&g, GammaBasis::one_plus_t(2 * n as u32))
                        .expect("support inside the span")
                        .into_success()
                        .expect("G_2n is palindromic");
                    gs[n].as_constant().expect("integer")
                }),
            ],
            SequenceName::Gat1 => vec![
                limited("pruned D_n(123)", 10, &|n| BigInt::from(enumerate(&ClassSpec::derangement(n, &["123"])).count())),
                limited("fix-free S_n(123)", 10, &|n| {
                    let fix = crate::perm::StatKey::Fix;
                    let c = enumerate(&ClassSpec::avoiders(n, &["123"]))
                        .filter(|p| crate::perm::stat(p, &fix) == 0)
                        .count();
                    BigInt::from(c)
                }),
            ],
        }
    }

    /// All routes agree wherever at least two of them are defined.
    pub fn check(&self) -> Outcome {
        let routes = self.routes();
        let len = routes.first().map_or(0, |r| r.values.len());
        for i in 0..len {
            let defined: Vec<(&str, &BigInt)> =
                routes.iter().filter_map(|r| r.values[i].as_ref().map(|v| (r.name, v))).collect();
            if let Some((name0, v0)) = defined.first() {
                for (name, v) in &defined[1..] {
                    if v != v0 {
                        return Err(Failure::new(
                            format!("sequence {}", self.name),
                            json!({
                                "index": i,
                                "routes": [name0, name],
                                "left": v0.to_string(),
                                "right": v.to_string(),
                            }),
                        ));
                    }
                }
            }
        }
        Ok(())
    }
}

/// `G_n(t) = Σ_{D_n(123)} t^exc`.
pub fn g_poly(n: usize) -> MultiPoly {
    let w = [Weight::new(Var::T, crate::perm::StatKey::Exc)];
    distribution(&ClassSpec::derangement(n, &["123"]), &w)
        .embed(VarSet::new(&[Var::T]))
        .expect("only t occurs")
}

fn series_ints(s: &PowerSeries) -> Vec<BigInt> {
    s.coeffs().iter().map(|c| c.as_constant().expect("integer series")).collect()
}

fn catalan_recurrence(count: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::one()];
    for n in 1..count {
        let s = (0..n).map(|i| &c[i] * &c[n - 1 - i]).sum();
        c.push(s);
    }
    c.truncate(count);
    c
}

/// `r_0 = 1`, `r_n = (2/n) Σ_{i<n} 2^i binom(2n,i) binom(n,i+1)`.
pub fn r_closed(n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let n64 = n as u64;
    let s: BigInt = (0..n64)
        .map(|i| (BigInt::one() << i) * binomial(2 * n64, i) * binomial(n64, i + 1))
        .sum();
    s * 2 / n
}

/// `t_1 = 1`, `t_n = 4/(n-1) Σ_{i<=n-2} 2^i binom(2n-1,i) binom(n-1,i+1)`.
pub fn t_closed(n: usize) -> BigInt {
    match n {
        0 => BigInt::zero(),
        1 => BigInt::one(),
        _ => {
            let n64 = n as u64;
            let s: BigInt = (0..=n64 - 2)
                .map(|i| (BigInt::one() << i) * binomial(2 * n64 - 1, i) * binomial(n64 - 1, i + 1))
                .sum();
            s * 4 / (n - 1)
        }
    }
}

/// `1 + R(x)` where `R = x(R+1)^2 + x(R+1)^3`.
pub fn r_series(order: usize) -> PowerSeries {
    let vars = VarSet::EMPTY;
    let one = PowerSeries::one(vars, order);
    let r = solve_algebraic_fixed_point(vars, order, |r| {
        let r1 = one.add(r)?;
        let sq = r1.mul(&r1)?;
        Ok(sq.add(&sq.mul(&r1)?)?.shift(1))
    })
    .expect("each step fixes one more coefficient");
    one.add(&r).expect("same variables")
}

/// `x (R+1)^2` from `1 + R`.
pub fn t_from_r(r1: &PowerSeries) -> PowerSeries {
    r1.mul(r1).expect("same variables").shift(1)
}

/// `T = R/(R+2)`, computed as `(R/2)·(1 + R/2)^{-1}`.
pub fn t_from_ratio(r1: &PowerSeries) -> PowerSeries {
    let one = PowerSeries::one(r1.vars(), r1.order());
    let half = r1.sub(&one).and_then(|r| r.div_exact(&BigInt::from(2))).expect("r_n is even for n >= 1");
    let inv = one.add(&half).and_then(|d| d.reciprocal()).expect("unit constant term");
    half.mul(&inv).expect("same variables")
}

fn r_convolution(count: usize) -> Vec<BigInt> {
    let mut r = vec![BigInt::one()];
    for n in 1..count {
        let mut s = BigInt::zero();
        for m in 0..n {
            s += &r[m] * &r[n - m - 1];
            for l in 0..n - m {
                s += &r[m] * &r[l] * &r[n - m - l - 1];
            }
        }
        r.push(s);
    }
    r.truncate(count);
    r
}

/// `u_n = Σ_{m=1}^n 2^m Σ_{k_1+..+k_m = n-m} Π binom(2k_i, k_i)`, `u_0 = 1`.
pub fn u_multiple_sum(n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let central: Vec<BigInt> = (0..n as u64).map(|k| binomial(2 * k, k)).collect();
    // conv[j] = Σ over compositions of j into the current number of parts
    let mut conv = vec![BigInt::zero(); n];
    conv[0] = BigInt::one();
    let mut total = BigInt::zero();
    for m in 1..=n {
        let mut next = vec![BigInt::zero(); n];
        for (j, slot) in next.iter_mut().enumerate() {
            for k in 0..=j {
                *slot += &conv[j - k] * &central[k];
            }
        }
        conv = next;
        total += (BigInt::one() << m) * &conv[n - m];
    }
    total
}

fn u_recurrence(count: usize) -> Vec<BigInt> {
    let c: Vec<BigInt> = (0..=count).map(super::check::catalan).collect();
    let mut u = vec![BigInt::one()];
    for n in 1..count {
        let mut s = BigInt::zero();
        for m in 0..n {
            s += BigInt::from(2) * &u[m] * &c[n - 1 - m];
        }
        for m in 1..n {
            s += &u[m] * &c[n - m];
        }
        u.push(s);
    }
    u.truncate(count);
    u
}

/// Terms of `seq` as printed by the command line; `ballot` is read by rows.
pub fn sequence(name: SequenceName, count: usize) -> Vec<BigInt> {
    SequenceOracle::new(name, count).values()
}

/// A route-agreement failure for any sequence up to `count` terms.
pub fn check_all(count: usize) -> Outcome {
    for name in SequenceName::ALL {
        let c = match name {
            SequenceName::F => count.min(5),
            SequenceName::Gat1 => count.min(10),
            SequenceName::Ballot => count.min(12),
            _ => count,
        };
        SequenceOracle::new(name, c).check()?;
    }
    Ok(())
}
