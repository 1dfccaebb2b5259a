//! The bijections behind `a_{n+1,k} = a_{n+1,k-1} + a_{n,k}` on alternating
//! 231-avoiders of even length, sorted by their last letter.

use thiserror::Error;

use crate::perm::{avoids, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BallotError {
    #[error("{0} is not an alternating 231-avoider of even length")]
    NotInClass(String),
    #[error("{pi}: the value {value} is not a {expected}")]
    WrongKind { pi: String, value: usize, expected: &'static str },
}

fn in_class(pi: &Permutation) -> bool {
    let w = pi.values();
    let n = w.len();
    n >= 2
        && n.is_multiple_of(2)
        && w.windows(2).enumerate().all(|(i, p)| (p[0] < p[1]) == (i % 2 == 0))
        && avoids(pi, &["231".parse().expect("pattern")]).expect("valid pattern")
}

/// The `k` with `π ∈ a_{n,k}`: the last letter is `n + k + 1`.
pub fn ballot_index(pi: &Permutation) -> Option<(usize, usize)> {
    if !in_class(pi) {
        return None;
    }
    let n = pi.len() / 2;
    let last = *pi.values().last()? as usize;
    last.checked_sub(n + 1).map(|k| (n, k))
}

/// Whether `last - 1` sits at a peak (an even position).
pub fn last_minus_one_is_peak(pi: &Permutation) -> Option<bool> {
    if !in_class(pi) {
        return None;
    }
    let w = pi.values();
    let target = *w.last()? - 1;
    let pos = w.iter().position(|&v| v == target)?;
    Some(pos % 2 == 1)
}

fn require(pi: &Permutation, peak: bool) -> Result<(), BallotError> {
    match last_minus_one_is_peak(pi) {
        None => Err(BallotError::NotInClass(pi.to_string())),
        Some(p) if p == peak => Ok(()),
        Some(_) => Err(BallotError::WrongKind {
            pi: pi.to_string(),
            value: *pi.values().last().unwrap_or(&1) as usize - 1,
            expected: if peak { "peak" } else { "valley" },
        }),
    }
}

/// `a^p_{n+1,k} → a_{n+1,k-1}`: swap the last letter with the letter one below it.
pub fn alpha(pi: &Permutation) -> Result<Permutation, BallotError> {
    require(pi, true)?;
    let w = pi.values();
    let last = *w.last().expect("nonempty");
    let out = w
        .iter()
        .map(|&v| if v == last { last - 1 } else if v == last - 1 { last } else { v })
        .collect();
    Ok(Permutation::new(out).expect("a relabelling"))
}

/// Inverse of [`alpha`]: swap the last letter with the letter one above it.
pub fn alpha_inv(sigma: &Permutation) -> Result<Permutation, BallotError> {
    if !in_class(sigma) {
        return Err(BallotError::NotInClass(sigma.to_string()));
    }
    let w = sigma.values();
    let last = *w.last().expect("nonempty");
    if last as usize == w.len() {
        return Err(BallotError::WrongKind { pi: sigma.to_string(), value: last as usize, expected: "letter below the maximum" });
    }
    let out = w
        .iter()
        .map(|&v| if v == last { last + 1 } else if v == last + 1 { last } else { v })
        .collect();
    Ok(Permutation::new(out).expect("a relabelling"))
}

/// `a^v_{n+1,k} → a_{n,k}`: drop the last two letters and close the gap.
pub fn beta(pi: &Permutation) -> Result<Permutation, BallotError> {
    require(pi, false)?;
    let w = pi.values();
    let m = w.len();
    if m < 4 {
        return Err(BallotError::NotInClass(pi.to_string()));
    }
    let last = w[m - 1];
    let out = w[..m - 2].iter().map(|&v| if v > last { v - 2 } else { v }).collect();
    Ok(Permutation::new(out).expect("the removed letters close a gap of two"))
}

/// Inverse of [`beta`]: raise letters `>= σ(2n)` by two and append `σ(2n), σ(2n)+1`.
pub fn beta_inv(sigma: &Permutation) -> Result<Permutation, BallotError> {
    if !in_class(sigma) {
        return Err(BallotError::NotInClass(sigma.to_string()));
    }
    let w = sigma.values();
    let last = *w.last().expect("nonempty");
    let mut out: Vec<u8> = w.iter().map(|&v| if v >= last { v + 2 } else { v }).collect();
    out.push(last);
    out.push(last + 1);
    Ok(Permutation::new(out).expect("two fresh letters"))
}
