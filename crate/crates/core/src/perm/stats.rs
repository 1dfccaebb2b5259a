use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::pattern::PatternSpec;
use super::permutation::Permutation;
use super::PermError;

/// Virtual values `π(0)` and `π(n+1)` used by the three-letter statistics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Boundary {
    /// `π(0) = π(n+1) = 0`
    Zero,
    /// `π(0) = π(n+1) = n+1`, the starred statistics.
    NPlusOne,
    /// `π(0) = 0` and `π(n+1) = n+1`.
    Mixed,
}

impl Boundary {
    pub fn left(self, n: usize) -> usize {
        match self {
            Boundary::Zero | Boundary::Mixed => 0,
            Boundary::NPlusOne => n + 1,
        }
    }

    pub fn right(self, n: usize) -> usize {
        match self {
            Boundary::Zero => 0,
            Boundary::NPlusOne | Boundary::Mixed => n + 1,
        }
    }

    fn suffix(self) -> &'static str {
        match self {
            Boundary::Zero => "0",
            Boundary::NPlusOne => "n+1",
            Boundary::Mixed => "mixed",
        }
    }
}

impl FromStr for Boundary {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "0" | "zero" => Ok(Boundary::Zero),
            "n+1" | "*" | "star" => Ok(Boundary::NPlusOne),
            "mixed" => Ok(Boundary::Mixed),
            other => Err(PermError::BadStat(format!("unknown boundary `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LetterType {
    Peak,
    Valley,
    DoubleAscent,
    DoubleDescent,
}

/// A permutation statistic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StatKey {
    Des,
    Asc,
    Exc,
    Fix,
    Wex,
    Inv,
    Fmax,
    Fl,
    Mad,
    Cros,
    Nest,
    Icr,
    Ine,
    Drop,
    Cda,
    Cdd,
    Cvalley,
    Peak(Boundary),
    Valley(Boundary),
    Da(Boundary),
    Dd(Boundary),
    Adi,
    AdiStar,
    Pattern(PatternSpec),
}

impl StatKey {
    pub fn pattern(s: &str) -> Result<Self, PermError> {
        Ok(StatKey::Pattern(s.parse()?))
    }
}

impl fmt::Display for StatKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let simple = match self {
            StatKey::Des => "des",
            StatKey::Asc => "asc",
            StatKey::Exc => "exc",
            StatKey::Fix => "fix",
            StatKey::Wex => "wex",
            StatKey::Inv => "inv",
            StatKey::Fmax => "fmax",
            StatKey::Fl => "fl",
            StatKey::Mad => "mad",
            StatKey::Cros => "cros",
            StatKey::Nest => "nest",
            StatKey::Icr => "icr",
            StatKey::Ine => "ine",
            StatKey::Drop => "drop",
            StatKey::Cda => "cda",
            StatKey::Cdd => "cdd",
            StatKey::Cvalley => "cvalley",
            StatKey::Adi => "adi",
            StatKey::AdiStar => "adi*",
            StatKey::Peak(b) => return write!(f, "peak:{}", b.suffix()),
            StatKey::Valley(b) => return write!(f, "valley:{}", b.suffix()),
            StatKey::Da(b) => return write!(f, "da:{}", b.suffix()),
            StatKey::Dd(b) => return write!(f, "dd:{}", b.suffix()),
            StatKey::Pattern(p) => return write!(f, "{p}"),
        };
        f.write_str(simple)
    }
}

impl FromStr for StatKey {
    type Err = PermError;

    /// Accepts `des`, `peak:0`, `peak:n+1`, `peak*`, `adi*`, `31-2`, `231`, ...
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.starts_with(|c: char| c.is_ascii_digit()) {
            return StatKey::pattern(s);
        }
        let lower = s.to_ascii_lowercase();
        let (name, boundary) = match lower.split_once(':') {
            Some((a, b)) => (a.to_string(), Some(b.parse::<Boundary>()?)),
            None => match lower.strip_suffix('*') {
                Some(a) if a != "adi" => (a.to_string(), Some(Boundary::NPlusOne)),
                _ => (lower.clone(), None),
            },
        };
        let boundary_key = |mk: fn(Boundary) -> StatKey| match boundary {
            Some(b) => Ok(mk(b)),
            None => Err(PermError::MissingBoundary(name.clone())),
        };
        let plain = |k: StatKey| match boundary {
            None => Ok(k),
            Some(_) => Err(PermError::BadStat(format!("`{s}` takes no boundary"))),
        };
        match name.as_str() {
            "des" => plain(StatKey::Des),
            "asc" => plain(StatKey::Asc),
            "exc" => plain(StatKey::Exc),
            "fix" => plain(StatKey::Fix),
            "wex" => plain(StatKey::Wex),
            "inv" => plain(StatKey::Inv),
            "fmax" => plain(StatKey::Fmax),
            "fl" => plain(StatKey::Fl),
            "mad" => plain(StatKey::Mad),
            "cros" => plain(StatKey::Cros),
            "nest" => plain(StatKey::Nest),
            "icr" => plain(StatKey::Icr),
            "ine" => plain(StatKey::Ine),
            "drop" => plain(StatKey::Drop),
            "cda" => plain(StatKey::Cda),
            "cdd" => plain(StatKey::Cdd),
            "cvalley" => plain(StatKey::Cvalley),
            "adi" => plain(StatKey::Adi),
            "adi*" | "adistar" => plain(StatKey::AdiStar),
            "peak" => boundary_key(StatKey::Peak),
            "valley" => boundary_key(StatKey::Valley),
            "da" => boundary_key(StatKey::Da),
            "dd" => boundary_key(StatKey::Dd),
            _ => Err(PermError::BadStat(format!("unknown statistic `{s}`"))),
        }
    }
}

impl Serialize for StatKey {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for StatKey {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// Value of `key` on `pi`.
pub fn stat(pi: &Permutation, key: &StatKey) -> u32 {
    let w = pi.values();
    match key {
        StatKey::Des => des(w),
        StatKey::Asc => w.len() as u32 - des(w),
        StatKey::Exc => count(w, |i, v| v > i),
        StatKey::Fix => count(w, |i, v| v == i),
        StatKey::Wex => count(w, |i, v| v >= i),
        StatKey::Drop => count(w, |i, v| v < i),
        StatKey::Inv => inv(w),
        StatKey::Fmax => fmax(w),
        StatKey::Fl => w.first().map_or(0, |&v| v as u32),
        StatKey::Mad => {
            des(w) + vincular(w, "31-2") + 2 * vincular(w, "2-31")
        }
        StatKey::Cros => cros(w),
        StatKey::Nest => nest(w),
        StatKey::Icr => cros(pi.inverse().values()),
        StatKey::Ine => nest(pi.inverse().values()),
        StatKey::Cda | StatKey::Cdd | StatKey::Cvalley => {
            let inv = pi.inverse();
            let iv = inv.values();
            (1..=w.len())
                .filter(|&x| {
                    let before = iv[x - 1] as usize;
                    let after = w[x - 1] as usize;
                    match key {
                        StatKey::Cda => before < x && x < after,
                        StatKey::Cdd => before > x && x > after,
                        _ => before > x && x < after,
                    }
                })
                .count() as u32
        }
        StatKey::Peak(b) => letter_count(w, *b, LetterType::Peak),
        StatKey::Valley(b) => letter_count(w, *b, LetterType::Valley),
        StatKey::Da(b) => letter_count(w, *b, LetterType::DoubleAscent),
        StatKey::Dd(b) => letter_count(w, *b, LetterType::DoubleDescent),
        StatKey::Adi => adi(w),
        StatKey::AdiStar => adi_star(w),
        StatKey::Pattern(p) => p.count_in(w) as u32,
    }
}

/// Values of several statistics at once.
pub fn stat_vector(pi: &Permutation, keys: &[StatKey]) -> Vec<u32> {
    keys.iter().map(|k| stat(pi, k)).collect()
}

fn count(w: &[u8], pred: impl Fn(usize, usize) -> bool) -> u32 {
    w.iter().enumerate().filter(|&(i, &v)| pred(i + 1, v as usize)).count() as u32
}

fn des(w: &[u8]) -> u32 {
    w.windows(2).filter(|p| p[0] > p[1]).count() as u32
}

fn inv(w: &[u8]) -> u32 {
    let mut c = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                c += 1;
            }
        }
    }
    c
}

fn fmax(w: &[u8]) -> u32 {
    let n = w.len();
    let mut max = 0;
    let mut c = 0;
    for i in 0..n {
        max = max.max(w[i]);
        let next = if i + 1 < n { w[i + 1] as usize } else { n + 1 };
        if w[i] == max && (w[i] as usize) < next {
            c += 1;
        }
    }
    c
}

fn vincular(w: &[u8], s: &str) -> u32 {
    s.parse::<PatternSpec>().expect("built-in pattern").count_in(w) as u32
}

fn cros(w: &[u8]) -> u32 {
    let n = w.len();
    let mut c = 0;
    for i in 1..=n {
        for j in i + 1..=n {
            let (pi, pj) = (w[i - 1] as usize, w[j - 1] as usize);
            if (j <= pi && pi < pj) || (pi < pj && pj < i) {
                c += 1;
            }
        }
    }
    c
}

fn nest(w: &[u8]) -> u32 {
    let n = w.len();
    let mut c = 0;
    for i in 1..=n {
        for j in i + 1..=n {
            let (pi, pj) = (w[i - 1] as usize, w[j - 1] as usize);
            if (j <= pj && pj < pi) || (pj < pi && pi < i) {
                c += 1;
            }
        }
    }
    c
}

/// Type of the letter at 1-based position `i` under a boundary.
pub fn letter_type(w: &[u8], i: usize, b: Boundary) -> LetterType {
    let n = w.len();
    let at = |k: usize| -> usize {
        if k == 0 {
            b.left(n)
        } else if k == n + 1 {
            b.right(n)
        } else {
            w[k - 1] as usize
        }
    };
    let (a, x, c) = (at(i - 1), at(i), at(i + 1));
    match (a < x, x < c) {
        (true, false) => LetterType::Peak,
        (false, true) => LetterType::Valley,
        (true, true) => LetterType::DoubleAscent,
        (false, false) => LetterType::DoubleDescent,
    }
}

fn letter_count(w: &[u8], b: Boundary, ty: LetterType) -> u32 {
    (1..=w.len()).filter(|&i| letter_type(w, i, b) == ty).count() as u32
}

fn adi(w: &[u8]) -> u32 {
    let n = w.len();
    let mut c = 0;
    for i in 0..n {
        for j in i + 1..n {
            if w[i] <= w[j] {
                continue;
            }
            let rises = j + 1 < n && w[j] < w[j + 1];
            if rises || (i + 1..j).any(|l| w[j] > w[l]) {
                c += 1;
            }
        }
    }
    c
}

fn adi_star(w: &[u8]) -> u32 {
    let n = w.len();
    let mut c = 0;
    for i in 0..n {
        for j in i + 1..n {
            if w[i] <= w[j] {
                continue;
            }
            let rose = i > 0 && w[i - 1] < w[i];
            if rose || (i + 1..j).any(|l| w[i] < w[l]) {
                c += 1;
            }
        }
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn k(s: &str) -> StatKey {
        s.parse().unwrap()
    }

    #[test]
    fn admissible_inversions_of_231() {
        assert_eq!(stat(&p("231"), &StatKey::Adi), 0);
        assert_eq!(stat(&p("231"), &StatKey::AdiStar), 2);
    }

    #[test]
    fn identity_values() {
        for n in 0..7 {
            let id = Permutation::identity(n);
            let n = n as u32;
            assert_eq!(stat(&id, &StatKey::Des), 0);
            assert_eq!(stat(&id, &StatKey::Inv), 0);
            assert_eq!(stat(&id, &StatKey::Exc), 0);
            assert_eq!(stat(&id, &StatKey::Fix), n);
            assert_eq!(stat(&id, &StatKey::Wex), n);
            assert_eq!(stat(&id, &StatKey::Fmax), n);
        }
    }

    #[test]
    fn mad_of_231() {
        assert_eq!(stat(&p("231"), &StatKey::Mad), 3);
    }

    #[test]
    fn letter_types_depend_on_boundary() {
        let w = p("596137428");
        assert_eq!(letter_type(w.values(), 1, Boundary::Zero), LetterType::DoubleAscent);
        assert_eq!(letter_type(w.values(), 1, Boundary::NPlusOne), LetterType::Valley);
        assert_eq!(stat(&w, &k("peak:0")), 3);
        assert_eq!(stat(&w, &k("valley:0")), 2);
        assert_eq!(stat(&w, &k("da:0")), 2);
        assert_eq!(stat(&w, &k("dd:0")), 2);
        assert_eq!(stat(&p("12"), &k("dd*")), 0);
        assert_eq!(stat(&p("21"), &k("dd:n+1")), 1);
        assert_eq!(stat(&p("21"), &k("dd:0")), 1);
        assert_eq!(stat(&p("21"), &k("dd:mixed")), 0);
    }

    #[test]
    fn key_parsing() {
        assert_eq!(k("peak*"), StatKey::Peak(Boundary::NPlusOne));
        assert_eq!(k("adi*"), StatKey::AdiStar);
        assert_eq!(k("MAD"), StatKey::Mad);
        assert_eq!(k("31-2").to_string(), "31-2");
        assert!(matches!("peak".parse::<StatKey>(), Err(PermError::MissingBoundary(_))));
        assert!("des:0".parse::<StatKey>().is_err());
        for s in ["des", "peak:0", "dd:n+1", "valley:mixed", "adi*", "2-13", "321"] {
            assert_eq!(k(s).to_string(), s);
        }
    }

    #[test]
    fn inverse_nesting_equals_nesting() {
        for n in 0..=7 {
            for pi in Permutation::all(n) {
                assert_eq!(stat(&pi, &StatKey::Ine), stat(&pi, &StatKey::Nest), "{pi}");
            }
        }
    }

    #[test]
    fn drop_complements_wex_and_asc_complements_des() {
        for pi in Permutation::all(6) {
            assert_eq!(stat(&pi, &StatKey::Drop) + stat(&pi, &StatKey::Wex), 6);
            assert_eq!(stat(&pi, &StatKey::Asc) + stat(&pi, &StatKey::Des), 6);
        }
    }

    #[test]
    fn inversion_decomposition() {
        // inv = drop + cros + 2 nest
        for n in 0..=6 {
            for pi in Permutation::all(n) {
                let lhs = stat(&pi, &StatKey::Inv);
                let rhs = stat(&pi, &StatKey::Drop)
                    + stat(&pi, &StatKey::Cros)
                    + 2 * stat(&pi, &StatKey::Nest);
                assert_eq!(lhs, rhs, "{pi}");
            }
        }
    }
}
