//! Runs the full bijection verification suite and property-based checks on
//! the serialization formats.

use proptest::prelude::*;

use permclass_core::words::{BoundedPath, ColoredMotzkinPath};
use permclass_core::{run_suite, Caps, Permutation, SuiteOptions, XWord};

#[test]
fn bijection_suite_is_clean() {
    let opts = SuiteOptions::from_caps(&Caps { max_perm_n: 8, max_word_n: 8 });
    let reports = run_suite("bijections", &opts);
    assert!(!reports.is_empty());
    for timed in &reports {
        println!("{} [{} ms]", timed.report, timed.millis);
        assert!(timed.report.pass, "{}", timed.report);
    }
}

#[test]
fn injected_failure_is_reported() {
    let mut opts = SuiteOptions::from_caps(&Caps { max_perm_n: 4, max_word_n: 4 });
    opts.inject_failure = true;
    let reports = run_suite("bijections", &opts);
    assert!(reports.iter().any(|t| !t.report.pass));
}

fn permutation_strategy(max_n: usize) -> impl Strategy<Value = Permutation> {
    prop::collection::vec(any::<u32>(), 0..=max_n).prop_map(|keys| {
        // rank the keys (ties broken by index) to get a permutation
        let mut order: Vec<usize> = (0..keys.len()).collect();
        order.sort_by_key(|&i| (keys[i], i));
        let mut values = vec![0usize; keys.len()];
        for (rank, &i) in order.iter().enumerate() {
            values[i] = rank + 1;
        }
        Permutation::new(values).unwrap()
    })
}

proptest! {
    #[test]
    fn permutation_serialization_round_trips(p in permutation_strategy(10)) {
        let parsed: Permutation = p.to_string().parse().unwrap();
        prop_assert_eq!(parsed, p);
    }

    #[test]
    fn inverse_is_an_involution_operation(p in permutation_strategy(9)) {
        prop_assert_eq!(p.inverse().inverse(), p.clone());
        let n = p.len();
        for i in 1..=n {
            prop_assert_eq!(p.inverse().at(p.at(i)), i);
        }
    }

    #[test]
    fn psi_round_trips_on_random_permutations(p in permutation_strategy(9)) {
        let path = permclass_core::biject::psi(&p);
        let parsed: ColoredMotzkinPath = path.to_string().parse().unwrap();
        prop_assert_eq!(&parsed, &path);
        prop_assert_eq!(permclass_core::biject::psi_inverse(&path), p);
    }

    #[test]
    fn word_maps_round_trip_on_random_words(letters in prop::collection::vec(0..4usize, 0..10)) {
        // build a valid word from arbitrary letters: drop any letter that
        // would create a forbidden factor, then force a legal terminator
        let alphabet = ['W', 'E', 'L', 'R'];
        let mut s = String::new();
        for &i in &letters {
            let c = alphabet[i];
            let prev = s.chars().last();
            if matches!((prev, c), (Some('L'), 'E') | (Some('R'), 'W')) {
                continue;
            }
            s.push(c);
        }
        match s.chars().last() {
            Some('L') => s.push('W'),
            Some('R') => s.push('E'),
            _ => {}
        }
        let w: XWord = s.parse().unwrap();
        let x = permclass_core::biject::word_to_xperm(&w);
        prop_assert_eq!(permclass_core::biject::xperm_to_word(&x).unwrap(), w.clone());
        let a = permclass_core::biject::word_to_aip(&w);
        prop_assert_eq!(permclass_core::biject::aip_to_word(&a).unwrap(), w.clone());
        let path = permclass_core::biject::word_to_path(&w);
        let reparsed: BoundedPath = path.to_string().parse().unwrap();
        prop_assert_eq!(&reparsed, &path);
        prop_assert_eq!(permclass_core::biject::path_to_word(&path).unwrap(), w);
    }
}
