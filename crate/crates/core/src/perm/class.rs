use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::pattern::PatternSpec;
use super::permutation::Permutation;
use super::stats::{letter_type, stat, Boundary, LetterType, StatKey};
use super::PermError;

/// One defining condition of a permutation class.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Constraint {
    /// `π(1) < π(2) > π(3) < ...`
    Alternating,
    /// `π(1) > π(2) < π(3) > ...`
    DownUp,
    Derangement,
    /// `fmax = 0`
    Coderangement,
    /// The value 1 appears to the left of the value n.
    Normal,
    /// No double descent under `boundary` and `des = k`.
    TildeS { k: u32, boundary: Boundary },
    /// `exc = k`, and whenever `i < π(i)`, the value `i+1` is a nonexcedance bottom.
    HatS { k: u32 },
    /// `wex = k`, and no `1 <= i <= n-1` with `π(i+1) >= i+1` and `i >= π⁻¹(i)`.
    Ndw { k: u32 },
    /// Derangement with `exc = k` and no `π⁻¹(i) < i < π(i)`.
    Nde { k: u32 },
    /// Coderangement with `dd* = 1` and `des = k`.
    DBarStar { k: u32 },
    /// Alternating of length `2m` with last letter `m+k+1`.
    Ballot { k: u32 },
}

impl Constraint {
    pub fn holds(&self, pi: &Permutation) -> bool {
        let w = pi.values();
        let n = w.len();
        match *self {
            Constraint::Alternating => is_alternating(w, true),
            Constraint::DownUp => is_alternating(w, false),
            Constraint::Derangement => stat(pi, &StatKey::Fix) == 0,
            Constraint::Coderangement => stat(pi, &StatKey::Fmax) == 0,
            Constraint::Normal => {
                let p1 = w.iter().position(|&v| v == 1);
                let pn = w.iter().position(|&v| v as usize == n);
                n >= 2 && p1 < pn
            }
            Constraint::TildeS { k, boundary } => {
                stat(pi, &StatKey::Des) == k
                    && (1..=n).all(|i| letter_type(w, i, boundary) != LetterType::DoubleDescent)
            }
            Constraint::HatS { k } => {
                let inv = pi.inverse();
                stat(pi, &StatKey::Exc) == k
                    && (1..=n).all(|i| {
                        // value i+1 sits at a position j with π(j) <= j, i.e. π⁻¹(i+1) >= i+1
                        pi.at(i) <= i || (i < n && inv.at(i + 1) > i)
                    })
            }
            Constraint::Ndw { k } => {
                let inv = pi.inverse();
                stat(pi, &StatKey::Wex) == k
                    && !(1..n).any(|i| pi.at(i + 1) > i && i >= inv.at(i))
            }
            Constraint::Nde { k } => {
                let inv = pi.inverse();
                stat(pi, &StatKey::Fix) == 0
                    && stat(pi, &StatKey::Exc) == k
                    && !(1..=n).any(|i| inv.at(i) < i && i < pi.at(i))
            }
            Constraint::DBarStar { k } => {
                stat(pi, &StatKey::Fmax) == 0
                    && stat(pi, &StatKey::Dd(Boundary::NPlusOne)) == 1
                    && stat(pi, &StatKey::Des) == k
            }
            Constraint::Ballot { k } => {
                n.is_multiple_of(2)
                    && n >= 2
                    && is_alternating(w, true)
                    && w[n - 1] as usize == n / 2 + k as usize + 1
            }
        }
    }

    fn name(&self) -> &'static str {
        match self {
            Constraint::Alternating => "alt",
            Constraint::DownUp => "du",
            Constraint::Derangement => "der",
            Constraint::Coderangement => "coder",
            Constraint::Normal => "normal",
            Constraint::TildeS { .. } => "tilde",
            Constraint::HatS { .. } => "hat",
            Constraint::Ndw { .. } => "ndw",
            Constraint::Nde { .. } => "nde",
            Constraint::DBarStar { .. } => "dbar",
            Constraint::Ballot { .. } => "ballot",
        }
    }

    fn params(&self) -> String {
        match self {
            Constraint::TildeS { k, boundary } => {
                let b = match boundary {
                    Boundary::Zero => "0",
                    Boundary::NPlusOne => "n+1",
                    Boundary::Mixed => "mixed",
                };
                format!("k={k},b={b}")
            }
            Constraint::HatS { k }
            | Constraint::Ndw { k }
            | Constraint::Nde { k }
            | Constraint::DBarStar { k }
            | Constraint::Ballot { k } => format!("k={k}"),
            _ => String::new(),
        }
    }
}

fn is_alternating(w: &[u8], up_first: bool) -> bool {
    w.windows(2).enumerate().all(|(i, p)| (p[0] < p[1]) == ((i % 2 == 0) == up_first))
}

/// A class of permutations of one length: constraints plus avoided classical patterns.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClassSpec {
    pub n: usize,
    pub constraints: Vec<Constraint>,
    pub patterns: Vec<PatternSpec>,
}

fn pats(ps: &[&str]) -> Vec<PatternSpec> {
    ps.iter().map(|p| p.parse().expect("valid built-in pattern")).collect()
}

impl ClassSpec {
    pub fn all(n: usize) -> Self {
        ClassSpec { n, constraints: Vec::new(), patterns: Vec::new() }
    }

    pub fn avoiders(n: usize, patterns: &[&str]) -> Self {
        ClassSpec::all(n).avoiding(patterns)
    }

    pub fn alternating(n: usize, patterns: &[&str]) -> Self {
        ClassSpec::all(n).with(Constraint::Alternating).avoiding(patterns)
    }

    pub fn down_up(n: usize) -> Self {
        ClassSpec::all(n).with(Constraint::DownUp)
    }

    pub fn derangement(n: usize, patterns: &[&str]) -> Self {
        ClassSpec::all(n).with(Constraint::Derangement).avoiding(patterns)
    }

    pub fn coderangement(n: usize, patterns: &[&str]) -> Self {
        ClassSpec::all(n).with(Constraint::Coderangement).avoiding(patterns)
    }

    pub fn normal(n: usize, patterns: &[&str]) -> Self {
        ClassSpec::all(n).with(Constraint::Normal).avoiding(patterns)
    }

    /// `S~_{n,k}(τ)`: boundary 0 for 213 and 312, `n+1` for 132 and 231.
    pub fn tilde(n: usize, k: u32, tau: &str) -> Self {
        let boundary = match tau {
            "213" | "312" => Boundary::Zero,
            _ => Boundary::NPlusOne,
        };
        ClassSpec::all(n).with(Constraint::TildeS { k, boundary }).avoiding(&[tau])
    }

    /// Avoiders of `patterns` with `dd* = 0` and `des = k`.
    pub fn tilde_star(n: usize, k: u32, patterns: &[&str]) -> Self {
        ClassSpec::all(n)
            .with(Constraint::TildeS { k, boundary: Boundary::NPlusOne })
            .avoiding(patterns)
    }

    pub fn hat_s321(n: usize, k: u32) -> Self {
        ClassSpec::all(n).with(Constraint::HatS { k }).avoiding(&["321"])
    }

    pub fn ndw(n: usize, k: u32) -> Self {
        ClassSpec::all(n).with(Constraint::Ndw { k }).avoiding(&["321"])
    }

    pub fn nde(n: usize, k: u32) -> Self {
        ClassSpec::all(n).with(Constraint::Nde { k }).avoiding(&["321"])
    }

    pub fn overline_dstar132(n: usize, k: u32) -> Self {
        ClassSpec::all(n).with(Constraint::DBarStar { k }).avoiding(&["132"])
    }

    /// The ballot class `a_{m,k}` of alternating 231-avoiders of length `2m`.
    pub fn ballot(m: usize, k: u32) -> Self {
        ClassSpec::all(2 * m).with(Constraint::Ballot { k }).avoiding(&["231"])
    }

    pub fn with(mut self, c: Constraint) -> Self {
        if !self.constraints.contains(&c) {
            self.constraints.push(c);
        }
        self
    }

    pub fn avoiding(mut self, patterns: &[&str]) -> Self {
        for p in pats(patterns) {
            if !self.patterns.contains(&p) {
                self.patterns.push(p);
            }
        }
        self
    }

    pub fn has(&self, c: &Constraint) -> bool {
        self.constraints.contains(c)
    }

    pub fn membership(&self, pi: &Permutation) -> bool {
        pi.len() == self.n
            && self.constraints.iter().all(|c| c.holds(pi))
            && self.patterns.iter().all(|p| !p.occurs_in(pi.values()))
    }
}

impl fmt::Display for ClassSpec {
    /// Canonical form, e.g. `av:231,132@n=6` or `alt@n=9;av:2413,3142`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut clauses: Vec<String> = Vec::new();
        for c in &self.constraints {
            let params = c.params();
            clauses.push(if params.is_empty() {
                c.name().to_string()
            } else {
                format!("{}@{params}", c.name())
            });
        }
        if !self.patterns.is_empty() {
            let ps: Vec<String> = self.patterns.iter().map(|p| p.to_string()).collect();
            clauses.push(format!("av:{}", ps.join(",")));
        }
        if clauses.is_empty() {
            clauses.push("all".to_string());
        }
        let first = &mut clauses[0];
        if first.contains('@') {
            let (name, rest) = first.split_once('@').expect("checked");
            *first = format!("{name}@n={},{rest}", self.n);
        } else {
            first.push_str(&format!("@n={}", self.n));
        }
        f.write_str(&clauses.join(";"))
    }
}

impl FromStr for ClassSpec {
    type Err = PermError;

    /// Clauses `name[:args][@key=value,...]` joined by `;`. Names: `all`,
    /// `av`, `alt`, `du`, `der`, `coder`, `normal`, `tilde`, `hat`, `ndw`,
    /// `nde`, `dbar`, `ballot`. `tilde:213` picks the boundary of that pattern
    /// and avoids it; `hat`, `ndw`, `nde`, `dbar` and `ballot` bring their own
    /// pattern, and `ballot` takes `m` in place of `n`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |msg: String| PermError::BadClass(format!("`{s}`: {msg}"));
        let mut n: Option<usize> = None;
        let mut constraints = Vec::new();
        let mut patterns: Vec<String> = Vec::new();
        for clause in s.split(';').map(str::trim).filter(|c| !c.is_empty()) {
            let (head, params) = match clause.split_once('@') {
                Some((h, p)) => (h, p),
                None => (clause, ""),
            };
            let (name, args) = match head.split_once(':') {
                Some((a, b)) => (a.trim(), Some(b.trim())),
                None => (head.trim(), None),
            };
            let mut k: Option<u32> = None;
            let mut b: Option<Boundary> = None;
            for kv in params.split(',').map(str::trim).filter(|x| !x.is_empty()) {
                let (key, val) =
                    kv.split_once('=').ok_or_else(|| bad(format!("expected key=value, got `{kv}`")))?;
                let num = || val.trim().parse::<usize>().map_err(|_| bad(format!("bad number `{val}`")));
                let set_n = |v: usize, n: &mut Option<usize>| match *n {
                    Some(old) if old != v => Err(bad(format!("conflicting lengths {old} and {v}"))),
                    _ => {
                        *n = Some(v);
                        Ok(())
                    }
                };
                match key.trim() {
                    "n" => set_n(num()?, &mut n)?,
                    "m" if name == "ballot" => set_n(2 * num()?, &mut n)?,
                    "k" => k = Some(num()? as u32),
                    "b" => b = Some(val.parse()?),
                    other => return Err(bad(format!("unknown parameter `{other}`"))),
                }
            }
            let need_k = || k.ok_or_else(|| bad(format!("`{name}` needs k")));
            let no_args = |c: Constraint| match args {
                None => Ok(c),
                Some(_) => Err(bad(format!("`{name}` takes no pattern list"))),
            };
            match name {
                "all" => {
                    if args.is_some() {
                        return Err(bad("`all` takes no pattern list".into()));
                    }
                }
                "av" => {
                    let list = args.ok_or_else(|| bad("`av` needs patterns".into()))?;
                    patterns.extend(list.split(',').map(|p| p.trim().to_string()));
                }
                "alt" | "du" | "der" | "coder" | "normal" => {
                    let c = match name {
                        "alt" => Constraint::Alternating,
                        "du" => Constraint::DownUp,
                        "der" => Constraint::Derangement,
                        "coder" => Constraint::Coderangement,
                        _ => Constraint::Normal,
                    };
                    constraints.push(c);
                    if let Some(list) = args {
                        patterns.extend(list.split(',').map(|p| p.trim().to_string()));
                    }
                }
                "tilde" => {
                    let boundary = match (args, b) {
                        (_, Some(b)) => b,
                        (Some("213") | Some("312"), None) => Boundary::Zero,
                        (Some(_), None) => Boundary::NPlusOne,
                        (None, None) => return Err(bad("`tilde` needs a pattern or b=".into())),
                    };
                    if let Some(list) = args {
                        patterns.extend(list.split(',').map(|p| p.trim().to_string()));
                    }
                    constraints.push(Constraint::TildeS { k: need_k()?, boundary });
                }
                "hat" | "ndw" | "nde" | "dbar" | "ballot" => {
                    let k = need_k()?;
                    let (c, implied) = match name {
                        "hat" => (Constraint::HatS { k }, "321"),
                        "ndw" => (Constraint::Ndw { k }, "321"),
                        "nde" => (Constraint::Nde { k }, "321"),
                        "dbar" => (Constraint::DBarStar { k }, "132"),
                        _ => (Constraint::Ballot { k }, "231"),
                    };
                    constraints.push(no_args(c)?);
                    patterns.push(implied.to_string());
                }
                other => return Err(bad(format!("unknown class `{other}`"))),
            }
        }
        let n = n.ok_or_else(|| bad("missing n=".into()))?;
        let mut spec = ClassSpec::all(n);
        for c in constraints {
            spec = spec.with(c);
        }
        for p in &patterns {
            let parsed: PatternSpec = p.parse()?;
            if !parsed.is_classical() {
                return Err(PermError::VincularNotAllowed(p.clone()));
            }
            if !spec.patterns.contains(&parsed) {
                spec.patterns.push(parsed);
            }
        }
        Ok(spec)
    }
}

impl Serialize for ClassSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for ClassSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn members(spec: &ClassSpec) -> Vec<String> {
        Permutation::all(spec.n).filter(|x| spec.membership(x)).map(|x| x.to_string()).collect()
    }

    #[test]
    fn alternating_shape() {
        let spec = ClassSpec::alternating(2, &["231"]);
        assert!(spec.membership(&p("12")));
        assert!(!spec.membership(&p("21")));
        assert!(ClassSpec::alternating(1, &[]).membership(&p("1")));
        assert!(ClassSpec::down_up(3).membership(&p("213")));
    }

    #[test]
    fn ballot_examples() {
        assert_eq!(members(&ClassSpec::ballot(2, 0)), ["1423"]);
        assert_eq!(members(&ClassSpec::ballot(2, 1)), ["1324"]);
        assert_eq!(members(&ClassSpec::ballot(3, 1)), ["132645", "162435"]);
        assert_eq!(members(&ClassSpec::ballot(3, 2)), ["132546", "152436"]);
        assert_eq!(members(&ClassSpec::ballot(3, 0)), ["162534"]);
    }

    #[test]
    fn hat_class_of_length_five() {
        // brute-force filter over S_5 gives C_2 members
        let m = members(&ClassSpec::hat_s321(5, 2));
        assert_eq!(m.len(), 2);
    }

    #[test]
    fn coderangements_are_counted_like_derangements() {
        for n in 1..=6 {
            let a = members(&ClassSpec::coderangement(n, &[])).len();
            let b = members(&ClassSpec::derangement(n, &[])).len();
            assert_eq!(a, b, "n={n}");
        }
    }

    #[test]
    fn normal_examples() {
        assert_eq!(members(&ClassSpec::normal(3, &[])), ["123", "132", "213"]);
    }

    #[test]
    fn canonical_strings() {
        let a = ClassSpec::avoiders(6, &["231", "132"]);
        assert_eq!(a.to_string(), "av:231,132@n=6");
        let b = ClassSpec::alternating(9, &["2413", "3142"]);
        assert_eq!(b.to_string(), "alt@n=9;av:2413,3142");
        for spec in [
            a,
            b,
            ClassSpec::all(4),
            ClassSpec::tilde(7, 3, "213"),
            ClassSpec::ndw(5, 2),
            ClassSpec::ballot(3, 1),
            ClassSpec::overline_dstar132(6, 2),
        ] {
            let back: ClassSpec = spec.to_string().parse().unwrap();
            assert_eq!(back, spec, "{spec}");
        }
        assert_eq!("tilde:231@n=5,k=1".parse::<ClassSpec>().unwrap(), ClassSpec::tilde(5, 1, "231"));
        assert_eq!("ballot@m=3,k=1".parse::<ClassSpec>().unwrap(), ClassSpec::ballot(3, 1));
    }

    #[test]
    fn malformed_strings() {
        for s in ["av:231", "bogus@n=3", "av:2-31@n=4", "tilde@n=4", "all@n=3;alt@n=4", "hat@n=3"] {
            assert!(s.parse::<ClassSpec>().is_err(), "{s}");
        }
    }
}
