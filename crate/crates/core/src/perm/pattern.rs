use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::permutation::Permutation;
use super::PermError;

/// A classical or vincular pattern in dash notation.
///
/// Letters written next to each other must be adjacent in an occurrence when
/// the pattern contains at least one dash; a pattern without dashes is
/// classical. So `31-2` asks for `π(i) π(i+1) ... π(j)` with the first two
/// adjacent, while `231` is the classical pattern.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PatternSpec {
    pattern: Vec<u8>,
    /// `adjacent[r]` ties pattern letters `r` and `r+1` to consecutive positions.
    adjacent: Vec<bool>,
}

impl PatternSpec {
    pub fn classical(p: &Permutation) -> Self {
        PatternSpec {
            pattern: p.values().to_vec(),
            adjacent: vec![false; p.len().saturating_sub(1)],
        }
    }

    pub fn new(p: &Permutation, adjacent: Vec<bool>) -> Result<Self, PermError> {
        if adjacent.len() != p.len().saturating_sub(1) {
            return Err(PermError::BadPattern(format!(
                "{} letters need {} adjacency flags",
                p.len(),
                p.len().saturating_sub(1)
            )));
        }
        Ok(PatternSpec { pattern: p.values().to_vec(), adjacent })
    }

    pub fn len(&self) -> usize {
        self.pattern.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pattern.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.pattern
    }

    pub fn adjacency(&self) -> &[bool] {
        &self.adjacent
    }

    pub fn is_classical(&self) -> bool {
        self.adjacent.iter().all(|a| !a)
    }

    /// The underlying pattern with adjacency forgotten.
    pub fn underlying(&self) -> Permutation {
        Permutation::from_vec_unchecked(self.pattern.clone())
    }

    /// Number of occurrences in `w`, any word of distinct letters.
    pub fn count_in(&self, w: &[u8]) -> u64 {
        let mut chosen = Vec::with_capacity(self.len());
        let mut count = 0u64;
        self.search(w, 0, &mut chosen, None, &mut |_| {
            count += 1;
            true
        });
        count
    }

    /// Whether `w` contains at least one occurrence.
    pub fn occurs_in(&self, w: &[u8]) -> bool {
        let mut found = false;
        let mut chosen = Vec::with_capacity(self.len());
        self.search(w, 0, &mut chosen, None, &mut |_| {
            found = true;
            false
        });
        found
    }

    /// Whether `w` has an occurrence using its last letter. Extending a word
    /// one letter at a time, this is exactly the new occurrences.
    pub fn occurs_ending_at_last(&self, w: &[u8]) -> bool {
        if w.is_empty() || self.is_empty() {
            return self.is_empty();
        }
        let mut found = false;
        let mut chosen = Vec::with_capacity(self.len());
        self.search(w, 0, &mut chosen, Some(w.len() - 1), &mut |_| {
            found = true;
            false
        });
        found
    }

    /// Depth-first search over position tuples; `visit` returns false to stop.
    /// With `last = Some(l)` the final pattern letter must sit at position `l`.
    fn search(
        &self,
        w: &[u8],
        start: usize,
        chosen: &mut Vec<usize>,
        last: Option<usize>,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let r = chosen.len();
        let k = self.len();
        if r == k {
            return visit(chosen);
        }
        let after = k - r - 1;
        let (lo, hi) = match last {
            Some(l) if after == 0 => (l, l),
            Some(l) => match l.checked_sub(after) {
                Some(h) => (start, h),
                None => return true,
            },
            None => match w.len().checked_sub(after + 1) {
                Some(h) => (start, h),
                None => return true,
            },
        };
        let (lo, hi) = if r > 0 && self.adjacent[r - 1] {
            let p = chosen[r - 1] + 1;
            (p.max(lo), p.min(hi))
        } else {
            (lo, hi)
        };
        if lo < start || lo > hi || hi >= w.len() {
            return true;
        }
        let pv = self.pattern[r];
        for pos in lo..=hi {
            let v = w[pos];
            let consistent = chosen
                .iter()
                .zip(&self.pattern)
                .all(|(&c, &pc)| (w[c] < v) == (pc < pv));
            if !consistent {
                continue;
            }
            chosen.push(pos);
            let go_on = self.search(w, pos + 1, chosen, last, visit);
            chosen.pop();
            if !go_on {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for PatternSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dashed = !self.is_classical();
        for (i, v) in self.pattern.iter().enumerate() {
            if i > 0 && dashed && !self.adjacent[i - 1] {
                f.write_str("-")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PatternSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PatternSpec({self})")
    }
}

impl FromStr for PatternSpec {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = |msg: &str| PermError::BadPattern(format!("`{s}`: {msg}"));
        if s.is_empty() {
            return Err(bad("empty pattern"));
        }
        let dashed = s.contains('-');
        let mut letters = Vec::new();
        let mut adjacent = Vec::new();
        let mut after_dash = true;
        for c in s.chars() {
            if c == '-' {
                if after_dash {
                    return Err(bad("misplaced dash"));
                }
                after_dash = true;
                continue;
            }
            let d = c.to_digit(10).ok_or_else(|| bad("letters must be digits 1-9"))?;
            if !letters.is_empty() {
                adjacent.push(dashed && !after_dash);
            }
            letters.push(d as u8);
            after_dash = false;
        }
        if after_dash {
            return Err(bad("trailing dash"));
        }
        let p = Permutation::new(letters).map_err(|_| bad("letters must form a permutation"))?;
        PatternSpec::new(&p, adjacent)
    }
}

impl Serialize for PatternSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for PatternSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// Whether `pi` avoids every pattern; classical patterns only.
pub fn avoids(pi: &Permutation, patterns: &[PatternSpec]) -> Result<bool, PermError> {
    if let Some(v) = patterns.iter().find(|p| !p.is_classical()) {
        return Err(PermError::VincularNotAllowed(v.to_string()));
    }
    Ok(patterns.iter().all(|p| !p.occurs_in(pi.values())))
}

/// Number of occurrences of a classical or vincular pattern.
pub fn count_vincular(pi: &Permutation, spec: &PatternSpec) -> u64 {
    spec.count_in(pi.values())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pat(s: &str) -> PatternSpec {
        s.parse().unwrap()
    }

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    /// Occurrence count by checking every position subset.
    fn brute(w: &[u8], spec: &PatternSpec) -> u64 {
        let n = w.len();
        let k = spec.len();
        let mut count = 0;
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != k {
                continue;
            }
            let pos: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
            let adj_ok = spec
                .adjacency()
                .iter()
                .enumerate()
                .all(|(r, &a)| !a || pos[r + 1] == pos[r] + 1);
            let sub: Vec<u8> = pos.iter().map(|&i| w[i]).collect();
            if adj_ok && Permutation::standardize(&sub).unwrap().values() == spec.letters() {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn dash_notation() {
        assert_eq!(pat("31-2").adjacency(), [true, false]);
        assert_eq!(pat("2-31").adjacency(), [false, true]);
        assert_eq!(pat("231").adjacency(), [false, false]);
        assert_eq!(pat("2-3-1"), pat("231"));
        assert_eq!(pat("13-2").to_string(), "13-2");
        assert!("2--31".parse::<PatternSpec>().is_err());
        assert!("-231".parse::<PatternSpec>().is_err());
        assert!("224".parse::<PatternSpec>().is_err());
    }

    #[test]
    fn classical_avoidance() {
        assert!(avoids(&perm("15324"), &[pat("231")]).unwrap());
        assert!(avoids(&perm("15324"), &[]).unwrap());
        assert!(!avoids(&perm("2413"), &[pat("2413"), pat("3142")]).unwrap());
        assert!(matches!(
            avoids(&perm("123"), &[pat("2-31")]),
            Err(PermError::VincularNotAllowed(_))
        ));
    }

    #[test]
    fn vincular_counts() {
        assert_eq!(count_vincular(&perm("312"), &pat("31-2")), 1);
        assert_eq!(count_vincular(&perm("231"), &pat("2-31")), 1);
        for s in ["31-2", "2-31", "2-13", "13-2", "3-12"] {
            assert_eq!(count_vincular(&Permutation::identity(6), &pat(s)), 0);
        }
    }

    #[test]
    fn search_matches_subset_enumeration() {
        let specs: Vec<PatternSpec> = ["31-2", "2-31", "2-13", "13-2", "3-12", "231", "2413", "1-32", "321", "12"]
            .iter()
            .map(|s| pat(s))
            .collect();
        for n in 0..=7 {
            for pi in Permutation::all(n) {
                for spec in &specs {
                    let b = brute(pi.values(), spec);
                    assert_eq!(spec.count_in(pi.values()), b, "{spec} in {pi}");
                    assert_eq!(spec.occurs_in(pi.values()), b > 0, "{spec} in {pi}");
                    if n > 0 {
                        let before = brute(&pi.values()[..n - 1], spec);
                        assert_eq!(
                            spec.occurs_ending_at_last(pi.values()),
                            b > before,
                            "{spec} ending at last of {pi}"
                        );
                    }
                }
            }
        }
    }
}
