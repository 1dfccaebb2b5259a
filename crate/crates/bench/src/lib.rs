//! Inputs shared by the benches in `benches/`.

use qtcat::{ClassSpec, Permutation, Weight};

/// Every permutation of length `n`, for benches over whole symmetric groups.
pub fn symmetric_group(n: usize) -> Vec<Permutation> {
    Permutation::all(n).collect()
}

pub fn class(s: &str) -> ClassSpec {
    s.parse().expect("bench class spec")
}

pub fn weights(s: &str) -> Vec<Weight> {
    Weight::parse_list(s).expect("bench weight list")
}
