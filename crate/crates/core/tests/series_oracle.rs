//! Runs the series verification suite and property-based checks on the
//! truncated power-series ring operations.

use proptest::prelude::*;

use permclass_core::series::{rational_series, Var};
use permclass_core::{run_suite, Caps, MultiPoly, SuiteOptions, TruncatedSeries};

#[test]
fn series_suite_is_clean() {
    let opts = SuiteOptions::from_caps(&Caps { max_perm_n: 8, max_word_n: 9 });
    let reports = run_suite("series", &opts);
    assert!(!reports.is_empty());
    for timed in &reports {
        println!("{} [{} ms]", timed.report, timed.millis);
        assert!(timed.report.pass, "{}", timed.report);
    }
}

fn poly_strategy() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((prop::array::uniform4(0u32..3), -5i64..=5), 0..4).prop_map(|terms| {
        let mut p = MultiPoly::zero();
        for (exps, coeff) in terms {
            let term = MultiPoly::monomial(Var::T, exps[0], coeff)
                .mul(&MultiPoly::monomial(Var::U, exps[1], 1))
                .mul(&MultiPoly::monomial(Var::V, exps[2], 1))
                .mul(&MultiPoly::monomial(Var::Q, exps[3], 1));
            p = p.add(&term);
        }
        p
    })
}

fn series_strategy(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(poly_strategy(), order + 1).prop_map(move |polys| {
        let terms: Vec<(usize, MultiPoly)> = polys.into_iter().enumerate().collect();
        TruncatedSeries::from_x_terms(order, &terms)
    })
}

proptest! {
    #[test]
    fn ring_axioms_hold(
        a in series_strategy(5),
        b in series_strategy(5),
        c in series_strategy(5),
    ) {
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(
            a.add(&b).unwrap().mul(&c).unwrap(),
            a.mul(&c).unwrap().add(&b.mul(&c).unwrap()).unwrap()
        );
        prop_assert_eq!(a.sub(&a).unwrap(), TruncatedSeries::zero(5));
    }

    #[test]
    fn reciprocal_inverts(tail in series_strategy(6)) {
        // shift the arbitrary series by x and add 1 to force a unit constant
        let x = TruncatedSeries::from_x_terms(6, &[(1, MultiPoly::one())]);
        let unit = TruncatedSeries::one(6).add(&tail.mul(&x).unwrap()).unwrap();
        let recip = unit.reciprocal().unwrap();
        prop_assert_eq!(unit.mul(&recip).unwrap(), TruncatedSeries::one(6));
    }

    #[test]
    fn rational_times_denominator_gives_numerator(
        numer in prop::collection::vec(-6i64..=6, 1..4),
        mut denom in prop::collection::vec(-6i64..=6, 1..4),
    ) {
        denom[0] = 1;
        let order = 8usize;
        let series = rational_series(&numer, &denom, order).unwrap();
        let to_series = |coeffs: &[i64]| {
            let terms: Vec<(usize, MultiPoly)> = coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| (i, MultiPoly::constant(c)))
                .collect();
            TruncatedSeries::from_x_terms(order, &terms)
        };
        prop_assert_eq!(series.mul(&to_series(&denom)).unwrap(), to_series(&numer));
    }
}
