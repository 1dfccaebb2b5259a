//! Permutations, patterns, statistics and the classes summed over.

mod class;
mod distribution;
mod enumerate;
mod pattern;
mod permutation;
mod stats;

pub use class::{ClassSpec, Constraint};
pub use distribution::{distribution, distribution_over, stat_multiset, Weight};
pub use enumerate::{enumerate, enumerate_from, prefixes, ClassIter};
pub use pattern::{avoids, count_vincular, PatternSpec};
pub use permutation::{Involution, Permutation, MAX_LEN};
pub use stats::{letter_type, stat, stat_vector, Boundary, LetterType, StatKey};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("length {0} exceeds the supported maximum")]
    TooLong(usize),
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("word has a repeated letter: {0}")]
    RepeatedLetter(String),
    #[error("bad pattern {0}")]
    BadPattern(String),
    #[error("vincular pattern {0} where only classical patterns are allowed")]
    VincularNotAllowed(String),
    #[error("{0}")]
    BadStat(String),
    #[error("statistic `{0}` needs a boundary, e.g. `{0}:0` or `{0}:n+1`")]
    MissingBoundary(String),
    #[error("bad class spec: {0}")]
    BadClass(String),
    #[error("bad weight: {0}")]
    BadWeight(String),
}
