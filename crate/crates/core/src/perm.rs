//! Permutations in one-line notation, their basic statistics, pattern
//! containment, and the height profile that drives the class membership tests.
//!
//! Indices and values are 1-based throughout the public interface, matching
//! the usual combinatorial convention. The empty permutation (n = 0) is valid
//! and is the unique element of size 0.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("not a bijection: value {value} at position {position} is out of range or repeated")]
    NotABijection { value: usize, position: usize },
    #[error("invalid entry {text:?} at position {position}")]
    BadEntry { text: String, position: usize },
}

/// A permutation of {1, ..., n} stored in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Permutation {
    values: Vec<usize>,
}

impl Permutation {
    /// Validates that `values` is a rearrangement of {1, .., n}.
    pub fn new(values: Vec<usize>) -> Result<Self, PermError> {
        let n = values.len();
        let mut seen = vec![false; n];
        for (idx, &v) in values.iter().enumerate() {
            if v < 1 || v > n || seen[v - 1] {
                return Err(PermError::NotABijection {
                    value: v,
                    position: idx + 1,
                });
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { values })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            values: (1..=n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// π(i) with 1-based `i`.
    pub fn at(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.values.len()];
        for (idx, &v) in self.values.iter().enumerate() {
            inv[v - 1] = idx + 1;
        }
        Permutation { values: inv }
    }

    pub fn is_involution(&self) -> bool {
        *self == self.inverse()
    }

    /// The profile (h_1, ..., h_n) with h_i = |{j : j <= i and π(j) > i}|.
    ///
    /// Always ends at 0 and changes by at most 1 between consecutive entries.
    pub fn height_profile(&self) -> Vec<usize> {
        let n = self.values.len();
        // Direct O(n^2) definition scan; n is desk-scale everywhere this runs.
        let mut profile = Vec::with_capacity(n);
        for i in 1..=n {
            profile.push((1..=i).filter(|&j| self.at(j) > i).count());
        }
        profile
    }

    /// True iff some subsequence of `self` is order-isomorphic to `pattern`.
    pub fn contains_pattern(&self, pattern: &Permutation) -> bool {
        let m = pattern.len();
        if m == 0 {
            return true;
        }
        if m > self.len() {
            return false;
        }
        let mut chosen: Vec<usize> = Vec::with_capacity(m);
        self.match_from(pattern, 0, &mut chosen)
    }

    fn match_from(&self, pattern: &Permutation, start: usize, chosen: &mut Vec<usize>) -> bool {
        let k = chosen.len();
        if k == pattern.len() {
            return true;
        }
        let remaining = pattern.len() - k;
        let n = self.len();
        for pos in start..n {
            if n - pos < remaining {
                return false;
            }
            let v = self.values[pos];
            // the new value must compare to each chosen value the way
            // pattern[k+1] compares to that pattern entry
            let consistent = chosen.iter().enumerate().all(|(j, &cv)| {
                (v > cv) == (pattern.at(k + 1) > pattern.at(j + 1))
            });
            if consistent {
                chosen.push(v);
                if self.match_from(pattern, pos + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }

    pub fn stats(&self) -> StatVector {
        let n = self.values.len();
        let mut fp = 0;
        let mut exc = 0;
        let mut inv = 0;
        for i in 1..=n {
            let v = self.at(i);
            if v == i {
                fp += 1;
            } else if v > i {
                exc += 1;
            }
            for j in (i + 1)..=n {
                if v > self.at(j) {
                    inv += 1;
                }
            }
        }
        let mut cyc = 0;
        let mut seen = vec![false; n];
        for start in 0..n {
            if !seen[start] {
                cyc += 1;
                let mut cur = start;
                while !seen[cur] {
                    seen[cur] = true;
                    cur = self.values[cur] - 1;
                }
            }
        }
        StatVector { cyc, fp, exc, inv }
    }
}

/// The four statistics the refined generating functions track.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct StatVector {
    pub cyc: usize,
    pub fp: usize,
    pub exc: usize,
    pub inv: usize,
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.values {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Permutation {
    type Err = PermError;

    /// Parses comma-separated one-line notation, e.g. "5,7,2,4,3,8,1,6".
    /// The empty string parses to the empty permutation.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Permutation { values: vec![] });
        }
        let mut values = Vec::new();
        for (idx, part) in s.split(',').enumerate() {
            let v = part.trim().parse::<usize>().map_err(|_| PermError::BadEntry {
                text: part.to_string(),
                position: idx + 1,
            })?;
            values.push(v);
        }
        Permutation::new(values)
    }
}
