use super::class::{ClassSpec, Constraint};
use super::permutation::Permutation;
use super::stats::Boundary;
use super::PermError;

/// Lexicographic depth-first walk over the members of a class.
///
/// Partial words are cut as soon as one of the class conditions is already
/// broken; every finished word is then tested in full.
pub struct ClassIter<'a> {
    spec: &'a ClassSpec,
    prefix: Vec<u8>,
    used: u64,
    next: Vec<u8>,
    fixed: usize,
    stop: usize,
    done: bool,
}

/// All members of `spec` in lexicographic order.
pub fn enumerate(spec: &ClassSpec) -> ClassIter<'_> {
    ClassIter::new(spec, &[], spec.n)
}

/// Members of `spec` that start with `prefix`.
pub fn enumerate_from<'a>(spec: &'a ClassSpec, prefix: &[u8]) -> ClassIter<'a> {
    ClassIter::new(spec, prefix, spec.n)
}

/// Every prefix of length `depth` that survives pruning. Enumerating from each
/// of them covers the class exactly once, which is how work is split.
pub fn prefixes(spec: &ClassSpec, depth: usize) -> Result<Vec<Vec<u8>>, PermError> {
    if spec.n > super::MAX_LEN {
        return Err(PermError::TooLong(spec.n));
    }
    let depth = depth.min(spec.n);
    let mut it = ClassIter::new(spec, &[], depth);
    let mut out = Vec::new();
    while let Some(p) = it.advance() {
        out.push(p);
    }
    Ok(out)
}

impl<'a> ClassIter<'a> {
    fn new(spec: &'a ClassSpec, prefix: &[u8], stop: usize) -> Self {
        let n = spec.n;
        let mut it = ClassIter {
            spec,
            prefix: Vec::with_capacity(n),
            used: 0,
            next: vec![1; n + 1],
            fixed: prefix.len(),
            stop,
            done: n > super::MAX_LEN || prefix.len() > n,
        };
        for &v in prefix {
            if it.done || v == 0 || v as usize > n || it.used & (1 << v) != 0 || !it.extends(v) {
                it.done = true;
                break;
            }
            it.push(v);
        }
        it
    }

    fn push(&mut self, v: u8) {
        self.prefix.push(v);
        self.used |= 1 << v;
        if let Some(slot) = self.next.get_mut(self.prefix.len()) {
            *slot = 1;
        }
    }

    fn pop(&mut self) {
        if let Some(v) = self.prefix.pop() {
            self.used &= !(1 << v);
        }
    }

    /// Whether appending `v` keeps the prefix viable.
    fn extends(&self, v: u8) -> bool {
        let n = self.spec.n;
        let w = &self.prefix;
        let i = w.len(); // 0-based position of v
        let prev = w.last().copied();
        for c in &self.spec.constraints {
            let ok = match *c {
                Constraint::Alternating | Constraint::Ballot { .. } => {
                    prev.is_none_or(|p| (p < v) == (i % 2 == 1))
                }
                Constraint::DownUp => prev.is_none_or(|p| (p > v) == (i % 2 == 1)),
                Constraint::Derangement | Constraint::Nde { .. } => v as usize != i + 1,
                Constraint::Coderangement | Constraint::DBarStar { .. } => {
                    // an ascent bottom that is a left-to-right maximum is forbidden
                    let bad_prev = match prev {
                        Some(p) => p < v && w.iter().all(|&x| x <= p),
                        None => false,
                    };
                    let bad_last = i + 1 == n && w.iter().all(|&x| x < v);
                    !bad_prev && !bad_last
                }
                Constraint::Normal => v as usize != n || self.used & 0b10 != 0 || v == 1,
                Constraint::TildeS { k, boundary } => {
                    let descents = w.windows(2).filter(|p| p[0] > p[1]).count()
                        + usize::from(prev.is_some_and(|p| p > v));
                    let dd_prev = match prev {
                        Some(p) => {
                            let before = if i >= 2 {
                                w[i - 2] as usize
                            } else {
                                boundary_left(boundary, n)
                            };
                            before > p as usize && p > v
                        }
                        None => false,
                    };
                    descents <= k as usize && !dd_prev
                }
                Constraint::HatS { .. } | Constraint::Ndw { .. } => true,
            };
            if !ok {
                return false;
            }
        }
        if self.spec.patterns.is_empty() {
            return true;
        }
        let mut word = w.clone();
        word.push(v);
        self.spec.patterns.iter().all(|p| !p.occurs_ending_at_last(&word))
    }

    /// The next member (or surviving prefix when stopping early).
    fn advance(&mut self) -> Option<Vec<u8>> {
        let n = self.spec.n as u8;
        loop {
            if self.done {
                return None;
            }
            let depth = self.prefix.len();
            if depth == self.stop {
                let word = self.prefix.clone();
                let keep = self.stop < self.spec.n
                    || self.spec.membership(&Permutation::from_vec_unchecked(word.clone()));
                if depth == self.fixed {
                    self.done = true;
                } else {
                    self.pop();
                }
                if keep {
                    return Some(word);
                }
                continue;
            }
            let mut found = None;
            let mut v = self.next[depth];
            while v <= n {
                if self.used & (1 << v) == 0 && self.extends(v) {
                    found = Some(v);
                    break;
                }
                v += 1;
            }
            match found {
                Some(v) => {
                    self.next[depth] = v + 1;
                    self.push(v);
                }
                None if depth == self.fixed => self.done = true,
                None => self.pop(),
            }
        }
    }
}

fn boundary_left(b: Boundary, n: usize) -> usize {
    match b {
        Boundary::NPlusOne => n + 1,
        Boundary::Zero | Boundary::Mixed => 0,
    }
}

impl Iterator for ClassIter<'_> {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        self.advance().map(Permutation::from_vec_unchecked)
    }
}
