//! Membership tests for the two permutation classes: k-almost-increasing
//! permutations and the X-class, plus the Σ^(k) pattern set and the corner
//! dot of an X-class array.

use crate::perm::Permutation;

use itertools::Itertools;
use serde::Serialize;

/// True iff at most `k` of the first `i` entries exceed `i`, for every `i`.
///
/// This is the O(n^2) direct test via the height profile; the pattern-based
/// test below exists to cross-check the characterization, not for production.
pub fn is_almost_increasing(p: &Permutation, k: usize) -> bool {
    p.height_profile().into_iter().all(|h| h <= k)
}

/// The pattern set Σ^(k): all σ in S_{2k+2} whose first k+1 entries are
/// exactly {k+2, ..., 2k+2} and last k+1 entries exactly {1, ..., k+1}.
/// Cardinality ((k+1)!)^2.
pub fn sigma_set(k: usize) -> Vec<Permutation> {
    let half = k + 1;
    let high: Vec<usize> = (half + 1..=2 * half).collect();
    let low: Vec<usize> = (1..=half).collect();
    let mut out = Vec::new();
    for first in high.iter().copied().permutations(half) {
        for last in low.iter().copied().permutations(half) {
            let mut values = first.clone();
            values.extend_from_slice(&last);
            out.push(Permutation::new(values).expect("halves partition 1..=2k+2"));
        }
    }
    out
}

/// Membership in A^(k)_n by avoidance of every pattern in Σ^(k).
///
/// Agrees with [`is_almost_increasing`] on all inputs; exponentially slower.
pub fn is_almost_increasing_by_patterns(p: &Permutation, k: usize) -> bool {
    sigma_set(k).iter().all(|sigma| !p.contains_pattern(sigma))
}

/// The four forbidden patterns of the X-class: 2143, 2413, 3142, 3412.
pub fn x_patterns() -> Vec<Permutation> {
    [
        vec![2, 1, 4, 3],
        vec![2, 4, 1, 3],
        vec![3, 1, 4, 2],
        vec![3, 4, 1, 2],
    ]
    .into_iter()
    .map(|v| Permutation::new(v).unwrap())
    .collect()
}

/// True iff `p` avoids 2143, 2413, 3142, and 3412.
pub fn is_x_class(p: &Permutation) -> bool {
    x_patterns().iter().all(|sigma| !p.contains_pattern(sigma))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Corner {
    LowerLeft,
    LowerRight,
    UpperLeft,
    UpperRight,
}

/// Which corner of the array of `p` holds a dot, if any.
///
/// When two (necessarily opposite) corners hold a dot the upper one is
/// reported; in the degenerate n = 1 case all four conditions coincide and
/// UpperRight is returned ("prefer upper, then right" is the frozen tiebreak).
/// `None` is only possible when `p` is outside the X-class.
pub fn corner_dot(p: &Permutation) -> Option<Corner> {
    let n = p.len();
    assert!(n >= 1, "corner_dot requires a nonempty permutation");
    if p.at(n) == n {
        Some(Corner::UpperRight)
    } else if p.at(1) == n {
        Some(Corner::UpperLeft)
    } else if p.at(1) == 1 {
        Some(Corner::LowerLeft)
    } else if p.at(n) == 1 {
        Some(Corner::LowerRight)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(values: &[usize]) -> Permutation {
        Permutation::new(values.to_vec()).unwrap()
    }

    #[test]
    fn identity_is_zero_almost_increasing() {
        for n in 0..8 {
            assert!(is_almost_increasing(&Permutation::identity(n), 0));
        }
    }

    #[test]
    fn figure_permutation_membership() {
        let q = p(&[5, 7, 2, 4, 3, 8, 1, 6, 9, 12, 10, 11]);
        assert!(is_almost_increasing(&q, 2));
        assert!(!is_almost_increasing(&q, 1));
    }

    #[test]
    fn sigma_set_k1_is_knuth_patterns() {
        let set: Vec<String> = sigma_set(1).iter().map(|s| s.to_string()).collect();
        assert_eq!(set.len(), 4);
        for want in ["3,4,1,2", "3,4,2,1", "4,3,1,2", "4,3,2,1"] {
            assert!(set.contains(&want.to_string()), "missing {want}");
        }
    }

    #[test]
    fn sigma_set_k0_and_k2() {
        let k0 = sigma_set(0);
        assert_eq!(k0.len(), 1);
        assert_eq!(k0[0].to_string(), "2,1");

        let k2 = sigma_set(2);
        assert_eq!(k2.len(), 36);
        for sigma in &k2 {
            assert_eq!(sigma.len(), 6);
            assert!(sigma.values()[..3].iter().all(|&v| v >= 4));
        }
    }

    // Independent oracle for Σ^(k): filter S_{2k+2} by the defining inequality.
    #[test]
    fn sigma_set_matches_filter_oracle() {
        use itertools::Itertools;
        for k in 0..=2usize {
            let m = 2 * k + 2;
            let by_filter: std::collections::BTreeSet<Vec<usize>> = (1..=m)
                .permutations(m)
                .filter(|v| {
                    (0..=k).all(|i| (k + 1..m).all(|j| v[i] > v[j]))
                })
                .collect();
            let generated: std::collections::BTreeSet<Vec<usize>> =
                sigma_set(k).iter().map(|s| s.values().to_vec()).collect();
            assert_eq!(generated, by_filter, "k={k}");
        }
    }

    #[test]
    fn pattern_membership_examples() {
        assert!(is_almost_increasing_by_patterns(&Permutation::identity(5), 1));
        assert!(!is_almost_increasing_by_patterns(&p(&[4, 3, 2, 1]), 1));
        assert!(is_almost_increasing_by_patterns(
            &p(&[2, 6, 1, 4, 5, 8, 7, 3, 10, 9, 11]),
            1
        ));
    }

    #[test]
    fn x_class_examples() {
        assert!(is_x_class(&Permutation::identity(6)));
        assert!(!is_x_class(&p(&[2, 1, 4, 3])));
        assert!(is_x_class(&p(&[2, 12, 10, 4, 9, 6, 8, 7, 5, 11, 13, 3, 1])));
    }

    #[test]
    fn corner_dot_examples() {
        assert_eq!(corner_dot(&p(&[1])), Some(Corner::UpperRight));
        assert_eq!(corner_dot(&p(&[2, 4, 1, 3])), None);
        assert_eq!(
            corner_dot(&p(&[2, 12, 10, 4, 9, 6, 8, 7, 5, 11, 13, 3, 1])),
            Some(Corner::LowerRight)
        );
        // opposite-corner tie prefers the upper dot
        assert_eq!(corner_dot(&p(&[1, 3, 2, 4])), Some(Corner::UpperRight));
        assert_eq!(corner_dot(&p(&[4, 2, 3, 1])), Some(Corner::UpperLeft));
    }
}
