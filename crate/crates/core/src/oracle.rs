//! Brute-force enumerators and equivalence checkers. Everything here works
//! from the direct definitions (height-profile scans, pattern lists, step
//! budgets), never from the bijections under test, so the checks stay
//! independent of the code they validate.
//!
//! Enumeration is data-parallel over first-element prefixes when the
//! `parallel` feature (default) is enabled; the `*_seq` variants always run
//! single-threaded and exist for comparison and benchmarking.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use serde::Serialize;
use thiserror::Error;

use crate::classes::{is_almost_increasing, is_x_class};
use crate::perm::{Permutation, StatVector};
use crate::series::{MultiPoly, Var};
use crate::words::{
    BoundedPath, ColoredMotzkinPath, ColoredStep, Letter, PathStep, StepKind, XWord,
};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("requested size {requested} exceeds the enumeration cap {cap}")]
    CapExceeded { requested: usize, cap: usize },
}

/// Enumeration caps. `PERMCLASS_MAX_N` lowers (or raises) both bounds.
#[derive(Clone, Copy, Debug)]
pub struct Caps {
    /// Largest n for exhaustive S_n domains (default 9).
    pub max_perm_n: usize,
    /// Largest n for word/path domains (default 12).
    pub max_word_n: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { max_perm_n: 9, max_word_n: 12 }
    }
}

impl Caps {
    pub fn from_env() -> Self {
        let mut caps = Caps::default();
        if let Ok(raw) = std::env::var("PERMCLASS_MAX_N") {
            if let Ok(n) = raw.trim().parse::<usize>() {
                caps.max_perm_n = n;
                caps.max_word_n = n.max(caps.max_word_n.min(n + 3));
            }
        }
        caps
    }

    fn check_perm(&self, n: usize) -> Result<(), OracleError> {
        if n > self.max_perm_n {
            return Err(OracleError::CapExceeded { requested: n, cap: self.max_perm_n });
        }
        Ok(())
    }

    fn check_word(&self, n: usize) -> Result<(), OracleError> {
        if n > self.max_word_n {
            return Err(OracleError::CapExceeded { requested: n, cap: self.max_word_n });
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Enumerators
// ---------------------------------------------------------------------------

/// All of S_n in lexicographic order of one-line notation.
pub fn enumerate_perms(
    n: usize,
    caps: &Caps,
) -> Result<Box<dyn Iterator<Item = Permutation>>, OracleError> {
    caps.check_perm(n)?;
    if n == 0 {
        return Ok(Box::new(std::iter::once(Permutation::identity(0))));
    }
    Ok(Box::new((1..=n).permutations(n).map(|v| {
        Permutation::new(v).expect("itertools yields bijections")
    })))
}

fn perms_with_first(n: usize, first: usize) -> impl Iterator<Item = Permutation> {
    let rest: Vec<usize> = (1..=n).filter(|&v| v != first).collect();
    rest.into_iter()
        .permutations(n - 1)
        .map(move |mut tail| {
            let mut values = Vec::with_capacity(tail.len() + 1);
            values.push(first);
            values.append(&mut tail);
            Permutation::new(values).expect("prefix enumeration yields bijections")
        })
}

/// W_n (words of length n-1), in ASCII-lexicographic order (E < L < R < W).
pub fn enumerate_words(n: usize, caps: &Caps) -> Result<Vec<XWord>, OracleError> {
    caps.check_word(n)?;
    assert!(n >= 1, "words encode permutations of size >= 1");
    let mut out = Vec::new();
    let mut current: Vec<Letter> = Vec::with_capacity(n - 1);
    gen_words(n - 1, &mut current, &mut out);
    Ok(out)
}

fn gen_words(len: usize, current: &mut Vec<Letter>, out: &mut Vec<XWord>) {
    if current.len() == len {
        out.push(XWord::new(current.clone()).expect("generator respects word invariants"));
        return;
    }
    let last_position = current.len() + 1 == len;
    // ASCII order E < L < R < W
    for letter in [Letter::E, Letter::L, Letter::R, Letter::W] {
        if last_position && matches!(letter, Letter::L | Letter::R) {
            continue;
        }
        match (current.last(), letter) {
            (Some(Letter::L), Letter::E) | (Some(Letter::R), Letter::W) => continue,
            _ => {}
        }
        current.push(letter);
        gen_words(len, current, out);
        current.pop();
    }
}

/// P_n (±1-step paths of length 2n-2 with |y| <= 3), in ASCII order (D < U).
pub fn enumerate_bounded_paths(n: usize, caps: &Caps) -> Result<Vec<BoundedPath>, OracleError> {
    caps.check_word(n)?;
    assert!(n >= 1);
    let len = 2 * n - 2;
    let mut out = Vec::new();
    let mut current: Vec<PathStep> = Vec::with_capacity(len);
    gen_paths(len, 0, &mut current, &mut out);
    Ok(out)
}

fn gen_paths(len: usize, y: i64, current: &mut Vec<PathStep>, out: &mut Vec<BoundedPath>) {
    let remaining = (len - current.len()) as i64;
    if y.abs() > remaining {
        return;
    }
    if current.len() == len {
        out.push(BoundedPath::new(current.clone()).expect("generator respects path invariants"));
        return;
    }
    for (step, dy) in [(PathStep::D, -1i64), (PathStep::U, 1)] {
        let ny = y + dy;
        if ny.abs() > BoundedPath::BOUND {
            continue;
        }
        current.push(step);
        gen_paths(len, ny, current, out);
        current.pop();
    }
}

/// Colored Motzkin paths of length n with height bound `k` (None = no bound),
/// ordered by step kind (D < L < U) then ascending color at each position.
pub fn enumerate_colored_paths(
    n: usize,
    k: Option<usize>,
    caps: &Caps,
) -> Result<Vec<ColoredMotzkinPath>, OracleError> {
    caps.check_perm(n)?;
    let mut out = Vec::new();
    let mut current: Vec<ColoredStep> = Vec::with_capacity(n);
    gen_colored(n, 0, k, &mut current, &mut out);
    Ok(out)
}

fn gen_colored(
    n: usize,
    h: usize,
    bound: Option<usize>,
    current: &mut Vec<ColoredStep>,
    out: &mut Vec<ColoredMotzkinPath>,
) {
    let remaining = n - current.len();
    if h > remaining {
        return;
    }
    if current.len() == n {
        out.push(
            ColoredMotzkinPath::new(current.clone()).expect("generator respects color budgets"),
        );
        return;
    }
    // D steps: colors 1..=h (h = height before the step)
    if h >= 1 {
        for color in 1..=h {
            current.push(ColoredStep { kind: StepKind::D, color });
            gen_colored(n, h - 1, bound, current, out);
            current.pop();
        }
    }
    // L steps: colors 0..=2h
    for color in 0..=(2 * h) {
        current.push(ColoredStep { kind: StepKind::L, color });
        gen_colored(n, h, bound, current, out);
        current.pop();
    }
    // U steps: colors 1..=(h+1), only if the bound allows the new height
    if bound.map_or(true, |k| h + 1 <= k) && h + 1 <= remaining - 1 {
        for color in 1..=(h + 1) {
            current.push(ColoredStep { kind: StepKind::U, color });
            gen_colored(n, h + 1, bound, current, out);
            current.pop();
        }
    }
}

// ---------------------------------------------------------------------------
// Class counting and stat tables
// ---------------------------------------------------------------------------

/// Counts permutations of S_n satisfying `pred`, fanning out over the first
/// entry when the `parallel` feature is on.
pub fn count_perms_where(
    n: usize,
    caps: &Caps,
    pred: impl Fn(&Permutation) -> bool + Sync,
) -> Result<u64, OracleError> {
    caps.check_perm(n)?;
    if n == 0 {
        return Ok(if pred(&Permutation::identity(0)) { 1 } else { 0 });
    }
    #[cfg(feature = "parallel")]
    let total = (1..=n)
        .into_par_iter()
        .map(|first| perms_with_first(n, first).filter(|p| pred(p)).count() as u64)
        .sum();
    #[cfg(not(feature = "parallel"))]
    let total = (1..=n)
        .map(|first| perms_with_first(n, first).filter(|p| pred(p)).count() as u64)
        .sum();
    Ok(total)
}

/// Single-threaded counterpart of [`count_perms_where`].
pub fn count_perms_where_seq(
    n: usize,
    caps: &Caps,
    pred: impl Fn(&Permutation) -> bool,
) -> Result<u64, OracleError> {
    caps.check_perm(n)?;
    if n == 0 {
        return Ok(if pred(&Permutation::identity(0)) { 1 } else { 0 });
    }
    Ok((1..=n)
        .map(|first| perms_with_first(n, first).filter(|p| pred(p)).count() as u64)
        .sum())
}

/// The permutation class a stat table aggregates over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ClassTag {
    /// A^(k)_n by the direct height-profile test.
    Aip,
    /// Involutions in A^(k)_n.
    AipInvolutions,
    /// X_n by the direct four-pattern test.
    XClass,
    /// All of S_n.
    All,
}

impl ClassTag {
    fn member(&self, p: &Permutation, k: usize) -> bool {
        match self {
            ClassTag::Aip => is_almost_increasing(p, k),
            ClassTag::AipInvolutions => p.is_involution() && is_almost_increasing(p, k),
            ClassTag::XClass => is_x_class(p),
            ClassTag::All => true,
        }
    }
}

/// Counts of (cyc, fp, exc, inv) vectors over one class at one size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StatTable {
    pub n: usize,
    pub k: usize,
    pub class: ClassTag,
    counts: BTreeMap<StatVector, u64>,
}

impl StatTable {
    pub fn counts(&self) -> &BTreeMap<StatVector, u64> {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Σ count · t^cyc u^fp v^exc — the oracle side of the F-series check.
    pub fn cyc_fp_exc_poly(&self) -> MultiPoly {
        self.weighted_poly(|s| [(Var::T, s.cyc), (Var::U, s.fp), (Var::V, s.exc)])
    }

    /// Σ count · q^inv u^fp v^exc — the oracle side of the G/H-series checks.
    pub fn inv_fp_exc_poly(&self) -> MultiPoly {
        self.weighted_poly(|s| [(Var::Q, s.inv), (Var::U, s.fp), (Var::V, s.exc)])
    }

    fn weighted_poly(&self, exponents: impl Fn(&StatVector) -> [(Var, usize); 3]) -> MultiPoly {
        let mut acc = MultiPoly::zero();
        for (stats, &count) in &self.counts {
            let mut term = MultiPoly::constant(count as i64);
            for (var, e) in exponents(stats) {
                term = term.mul(&MultiPoly::monomial(var, e as u32, 1));
            }
            acc = acc.add(&term);
        }
        acc
    }

    pub fn to_json_line(&self) -> String {
        let entries: Vec<serde_json::Value> = self
            .counts
            .iter()
            .map(|(s, c)| {
                serde_json::json!({
                    "cyc": s.cyc, "fp": s.fp, "exc": s.exc, "inv": s.inv, "count": c
                })
            })
            .collect();
        serde_json::json!({
            "n": self.n,
            "k": self.k,
            "class": format!("{:?}", self.class),
            "total": self.total(),
            "entries": entries,
        })
        .to_string()
    }

    fn merge(mut self, other: StatTable) -> StatTable {
        for (stats, count) in other.counts {
            *self.counts.entry(stats).or_insert(0) += count;
        }
        self
    }
}

/// Aggregates stats over the chosen class by exhaustive enumeration.
pub fn stat_table(
    n: usize,
    k: usize,
    class: ClassTag,
    caps: &Caps,
) -> Result<StatTable, OracleError> {
    caps.check_perm(n)?;
    let empty = StatTable { n, k, class, counts: BTreeMap::new() };
    if n == 0 {
        return Ok(empty.merge(table_of(n, k, class, std::iter::once(Permutation::identity(0)))));
    }
    #[cfg(feature = "parallel")]
    let table = (1..=n)
        .into_par_iter()
        .map(|first| table_of(n, k, class, perms_with_first(n, first)))
        .reduce(|| empty_table(n, k, class), StatTable::merge);
    #[cfg(not(feature = "parallel"))]
    let table = (1..=n)
        .map(|first| table_of(n, k, class, perms_with_first(n, first)))
        .fold(empty_table(n, k, class), StatTable::merge);
    Ok(empty.merge(table))
}

/// Single-threaded counterpart of [`stat_table`].
pub fn stat_table_seq(
    n: usize,
    k: usize,
    class: ClassTag,
    caps: &Caps,
) -> Result<StatTable, OracleError> {
    caps.check_perm(n)?;
    if n == 0 {
        return Ok(table_of(n, k, class, std::iter::once(Permutation::identity(0))));
    }
    Ok((1..=n)
        .map(|first| table_of(n, k, class, perms_with_first(n, first)))
        .fold(empty_table(n, k, class), StatTable::merge))
}

fn empty_table(n: usize, k: usize, class: ClassTag) -> StatTable {
    StatTable { n, k, class, counts: BTreeMap::new() }
}

fn table_of(
    n: usize,
    k: usize,
    class: ClassTag,
    perms: impl Iterator<Item = Permutation>,
) -> StatTable {
    let mut counts: BTreeMap<StatVector, u64> = BTreeMap::new();
    for p in perms {
        if class.member(&p, k) {
            *counts.entry(p.stats()).or_insert(0) += 1;
        }
    }
    StatTable { n, k, class, counts }
}

// ---------------------------------------------------------------------------
// Bijection checking
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

/// Outcome of one verification check. A failing report always carries the
/// lexicographically smallest counterexample, so runs are deterministic
/// regardless of thread schedule.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub domain_size: usize,
    pub pass: bool,
    pub counterexample: Option<Counterexample>,
}

impl CheckReport {
    pub fn passing(name: impl Into<String>, domain_size: usize) -> Self {
        CheckReport { name: name.into(), domain_size, pass: true, counterexample: None }
    }

    pub fn failing(name: impl Into<String>, domain_size: usize, ce: Counterexample) -> Self {
        CheckReport { name: name.into(), domain_size, pass: false, counterexample: Some(ce) }
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pass {
            write!(f, "PASS {} ({} cases)", self.name, self.domain_size)
        } else {
            let ce = self.counterexample.as_ref().expect("failing report has counterexample");
            write!(
                f,
                "FAIL {} ({} cases): input={} expected={} actual={}",
                self.name, self.domain_size, ce.input, ce.expected, ce.actual
            )
        }
    }
}

/// Verifies that `forward` maps every domain value into the codomain, that
/// `inverse` undoes it, and that `forward` is injective.
pub fn check_bijection<D, C>(
    name: &str,
    domain: &[D],
    forward: impl Fn(&D) -> Result<C, String> + Sync,
    inverse: impl Fn(&C) -> Result<D, String> + Sync,
    in_codomain: impl Fn(&C) -> bool + Sync,
) -> CheckReport
where
    D: fmt::Display + PartialEq + Sync,
    C: fmt::Display + Send,
{
    let per_item = |d: &D| -> Result<String, Counterexample> {
        let image = forward(d).map_err(|e| Counterexample {
            input: d.to_string(),
            expected: "a codomain value".into(),
            actual: format!("error: {e}"),
        })?;
        if !in_codomain(&image) {
            return Err(Counterexample {
                input: d.to_string(),
                expected: "image inside the codomain".into(),
                actual: image.to_string(),
            });
        }
        let back = inverse(&image).map_err(|e| Counterexample {
            input: d.to_string(),
            expected: d.to_string(),
            actual: format!("inverse error: {e}"),
        })?;
        if back != *d {
            return Err(Counterexample {
                input: d.to_string(),
                expected: d.to_string(),
                actual: back.to_string(),
            });
        }
        Ok(image.to_string())
    };

    #[cfg(feature = "parallel")]
    let results: Vec<Result<String, Counterexample>> = domain.par_iter().map(per_item).collect();
    #[cfg(not(feature = "parallel"))]
    let results: Vec<Result<String, Counterexample>> = domain.iter().map(per_item).collect();

    let mut failure: Option<Counterexample> = None;
    let mut images: Vec<(String, String)> = Vec::with_capacity(domain.len());
    for (d, r) in domain.iter().zip(results) {
        match r {
            Ok(image) => images.push((image, d.to_string())),
            Err(ce) => {
                if failure.as_ref().map_or(true, |old| ce.input < old.input) {
                    failure = Some(ce);
                }
            }
        }
    }
    if let Some(ce) = failure {
        return CheckReport::failing(name, domain.len(), ce);
    }
    images.sort();
    for pair in images.windows(2) {
        if pair[0].0 == pair[1].0 {
            return CheckReport::failing(
                name,
                domain.len(),
                Counterexample {
                    input: format!("{} and {}", pair[0].1, pair[1].1),
                    expected: "distinct images".into(),
                    actual: pair[0].0.clone(),
                },
            );
        }
    }
    CheckReport::passing(name, domain.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perm_counts() {
        let caps = Caps::default();
        assert_eq!(enumerate_perms(3, &caps).unwrap().count(), 6);
        assert_eq!(enumerate_perms(0, &caps).unwrap().count(), 1);
        assert!(matches!(
            enumerate_perms(10, &caps),
            Err(OracleError::CapExceeded { requested: 10, cap: 9 })
        ));
    }

    #[test]
    fn perms_are_lexicographic() {
        let caps = Caps::default();
        let all: Vec<String> = enumerate_perms(3, &caps)
            .unwrap()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(all, vec!["1,2,3", "1,3,2", "2,1,3", "2,3,1", "3,1,2", "3,2,1"]);
    }

    #[test]
    fn word_counts_follow_recurrence() {
        let caps = Caps::default();
        let counts: Vec<usize> = (1..=8)
            .map(|n| enumerate_words(n, &caps).unwrap().len())
            .collect();
        assert_eq!(&counts[..6], &[1, 2, 6, 20, 68, 232]);
        for n in 3..counts.len() {
            assert_eq!(counts[n] as i64, 4 * counts[n - 1] as i64 - 2 * counts[n - 2] as i64);
        }
    }

    #[test]
    fn words_and_paths_equinumerous() {
        let caps = Caps::default();
        for n in 1..=8 {
            assert_eq!(
                enumerate_words(n, &caps).unwrap().len(),
                enumerate_bounded_paths(n, &caps).unwrap().len(),
                "n={n}"
            );
        }
    }

    #[test]
    fn colored_path_count_small() {
        let caps = Caps::default();
        assert_eq!(enumerate_colored_paths(3, Some(1), &caps).unwrap().len(), 6);
        // unrestricted colored paths are equinumerous with S_n
        for n in 0..=5usize {
            let expected: usize = (1..=n).product();
            assert_eq!(
                enumerate_colored_paths(n, None, &caps).unwrap().len(),
                expected.max(1),
                "n={n}"
            );
        }
    }

    #[test]
    fn mahonian_distribution_n3() {
        let caps = Caps::default();
        let table = stat_table(3, 0, ClassTag::All, &caps).unwrap();
        assert_eq!(table.total(), 6);
        let mut by_inv = [0u64; 4];
        for (s, c) in table.counts() {
            by_inv[s.inv] += c;
        }
        assert_eq!(by_inv, [1, 2, 2, 1]);
    }

    #[test]
    fn empty_class_table() {
        let caps = Caps::default();
        let table = stat_table(0, 1, ClassTag::Aip, &caps).unwrap();
        assert_eq!(table.total(), 1);
    }

    #[test]
    fn aip_count_matches_series_value() {
        let caps = Caps::default();
        let table = stat_table(5, 1, ClassTag::Aip, &caps).unwrap();
        assert_eq!(table.total(), 68);
    }

    #[test]
    fn parallel_and_sequential_agree() {
        let caps = Caps::default();
        for n in 0..=6 {
            assert_eq!(
                stat_table(n, 1, ClassTag::Aip, &caps).unwrap(),
                stat_table_seq(n, 1, ClassTag::Aip, &caps).unwrap()
            );
            assert_eq!(
                count_perms_where(n, &caps, is_x_class).unwrap(),
                count_perms_where_seq(n, &caps, is_x_class).unwrap()
            );
        }
    }

    #[test]
    fn corrupted_inverse_is_caught() {
        let caps = Caps::default();
        let words = enumerate_words(4, &caps).unwrap();
        let report = check_bijection(
            "self-test",
            &words,
            |w: &XWord| Ok::<_, String>(crate::biject::word_to_xperm(w)),
            |_p| Ok::<_, String>("EEE".parse::<XWord>().unwrap()),
            |p| is_x_class(p),
        );
        assert!(!report.pass);
        assert!(report.counterexample.is_some());
    }
}
