use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::PermError;

/// Largest supported length; values are stored as bytes and sets of values
/// as 64-bit masks.
pub const MAX_LEN: usize = 63;

/// A permutation of `{1..n}` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Permutation(Vec<u8>);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Involution {
    Inverse,
    Reverse,
    Complement,
    ReverseComplement,
}

impl Involution {
    pub const ALL: [Involution; 4] = [
        Involution::Inverse,
        Involution::Reverse,
        Involution::Complement,
        Involution::ReverseComplement,
    ];
}

impl Permutation {
    pub fn new(values: Vec<u8>) -> Result<Self, PermError> {
        let n = values.len();
        if n > MAX_LEN {
            return Err(PermError::TooLong(n));
        }
        let mut seen = 0u64;
        for &v in &values {
            if v == 0 || v as usize > n || seen & (1 << v) != 0 {
                return Err(PermError::NotAPermutation(format!("{values:?}")));
            }
            seen |= 1 << v;
        }
        Ok(Permutation(values))
    }

    /// Caller guarantees `values` is a permutation of `1..=len`.
    pub(crate) fn from_vec_unchecked(values: Vec<u8>) -> Self {
        debug_assert!(Permutation::new(values.clone()).is_ok());
        Permutation(values)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u8).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[u8] {
        &self.0
    }

    /// `π(i)` for `1 <= i <= n`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1] as usize
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = i as u8 + 1;
        }
        Permutation(inv)
    }

    pub fn reverse(&self) -> Self {
        Permutation(self.0.iter().rev().copied().collect())
    }

    pub fn complement(&self) -> Self {
        let n = self.len() as u8;
        Permutation(self.0.iter().map(|&v| n + 1 - v).collect())
    }

    pub fn reverse_complement(&self) -> Self {
        let n = self.len() as u8;
        Permutation(self.0.iter().rev().map(|&v| n + 1 - v).collect())
    }

    pub fn apply(&self, kind: Involution) -> Self {
        match kind {
            Involution::Inverse => self.inverse(),
            Involution::Reverse => self.reverse(),
            Involution::Complement => self.complement(),
            Involution::ReverseComplement => self.reverse_complement(),
        }
    }

    /// The permutation order-isomorphic to a word of distinct letters.
    pub fn standardize<T: Ord + Copy + fmt::Debug>(word: &[T]) -> Result<Self, PermError> {
        if word.len() > MAX_LEN {
            return Err(PermError::TooLong(word.len()));
        }
        let mut idx: Vec<usize> = (0..word.len()).collect();
        idx.sort_by_key(|&i| word[i]);
        if idx.windows(2).any(|w| word[w[0]] == word[w[1]]) {
            return Err(PermError::RepeatedLetter(format!("{word:?}")));
        }
        let mut out = vec![0u8; word.len()];
        for (rank, &i) in idx.iter().enumerate() {
            out[i] = rank as u8 + 1;
        }
        Ok(Permutation(out))
    }

    /// Direct sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &Permutation) -> Self {
        let k = self.len() as u8;
        Permutation(self.0.iter().copied().chain(other.0.iter().map(|&v| v + k)).collect())
    }

    /// Skew sum `self ⊖ other`.
    pub fn skew_sum(&self, other: &Permutation) -> Self {
        let k = other.len() as u8;
        Permutation(self.0.iter().map(|&v| v + k).chain(other.0.iter().copied()).collect())
    }

    /// All permutations of length `n` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        let mut cur: Option<Vec<u8>> = Some((1..=n as u8).collect());
        std::iter::from_fn(move || {
            let out = cur.clone()?;
            cur = next_lex(out.clone());
            Some(Permutation(out))
        })
    }
}

fn next_lex(mut v: Vec<u8>) -> Option<Vec<u8>> {
    let n = v.len();
    if n < 2 {
        return None;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return None;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    Some(v)
}

impl fmt::Display for Permutation {
    /// Digits run together for `n <= 9`, space separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for v in &self.0 {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
            f.write_str(&parts.join(" "))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || PermError::NotAPermutation(s.to_string());
        let values: Vec<u8> = if s.contains(|c: char| c.is_whitespace() || c == ',') {
            s.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<u8>().map_err(|_| bad()))
                .collect::<Result<_, _>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as u8).ok_or_else(bad))
                .collect::<Result<_, _>>()?
        };
        Permutation::new(values)
    }
}

impl Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Permutation::new(Vec::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn inverse_of_231() {
        assert_eq!(p("231").inverse(), p("312"));
    }

    #[test]
    fn reverse_identity() {
        assert_eq!(Permutation::identity(5).reverse(), p("54321"));
    }

    #[test]
    fn reverse_complement_composes() {
        let x = p("596137428");
        assert_eq!(x.reverse_complement(), x.reverse().complement());
        assert_eq!(x.reverse_complement(), x.complement().reverse());
        assert_eq!(x.reverse_complement(), p("286379415"));
    }

    #[test]
    fn standardization() {
        assert_eq!(Permutation::standardize(&[5, 8, 2]).unwrap(), p("231"));
        assert_eq!(Permutation::standardize(p("4132").values()).unwrap(), p("4132"));
        assert_eq!(Permutation::standardize(&[5, 3, 2]).unwrap(), p("321"));
        assert!(matches!(Permutation::standardize(&[1, 1]), Err(PermError::RepeatedLetter(_))));
    }

    #[test]
    fn parsing_and_printing() {
        assert_eq!(p("2 3 1"), p("231"));
        let long = Permutation::identity(10).reverse();
        assert_eq!(long.to_string(), "10 9 8 7 6 5 4 3 2 1");
        assert_eq!(long.to_string().parse::<Permutation>().unwrap(), long);
        assert!("1 1".parse::<Permutation>().is_err());
        assert!("13".parse::<Permutation>().is_err());
    }

    #[test]
    fn lexicographic_listing() {
        let all: Vec<String> = Permutation::all(3).map(|x| x.to_string()).collect();
        assert_eq!(all, ["123", "132", "213", "231", "312", "321"]);
        assert_eq!(Permutation::all(0).count(), 1);
    }

    #[test]
    fn sums() {
        assert_eq!(p("123").direct_sum(&p("21")), p("12354"));
        assert_eq!(p("123").skew_sum(&p("21")), p("34521"));
    }
}
