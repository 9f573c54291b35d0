//! Exact combinatorics of bounded-height permutation classes.
//!
//! The crate ties together five isomorphic worlds and checks every claimed
//! correspondence by brute force at small sizes:
//!
//! - permutations with bounded height profile ([`classes::is_almost_increasing`]),
//! - the pattern class avoiding 2143, 2413, 3142, 3412 ([`classes::is_x_class`]),
//! - words over `{W, E, L, R}` without `LE`/`RW` factors ([`words::XWord`]),
//! - lattice paths confined to `|y| <= 3` ([`words::BoundedPath`]),
//! - colored Motzkin paths recording ray diagrams ([`words::ColoredMotzkinPath`]).
//!
//! [`biject`] holds the explicit maps between them, [`series`] the exact
//! truncated-power-series engine for the continued-fraction generating
//! functions, [`oracle`] the exhaustive enumerators, and [`verify`] the named
//! check suites run by the CLI and the acceptance tests.

pub mod biject;
pub mod classes;
pub mod oracle;
pub mod perm;
pub mod series;
pub mod verify;
pub mod words;

pub use biject::BijectError;
pub use oracle::{Caps, CheckReport, ClassTag, StatTable};
pub use perm::{Permutation, StatVector};
pub use series::{MultiPoly, TruncatedSeries, WeightProfile};
pub use verify::{run_suite, SuiteOptions};
pub use words::{BoundedPath, ColoredMotzkinPath, DiagonalSequence, MotzkinPath, XWord};
