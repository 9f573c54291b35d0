//! Exact truncated power series in x whose coefficients are integer
//! multivariate polynomials in the formal variables t, u, v, q, plus the
//! bounded-height continued fractions built from weighted Motzkin steps.
//!
//! All arithmetic is arbitrary-precision integer; there is no floating point
//! anywhere in this module.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("reciprocal requires a constant ±1 leading coefficient")]
    NonunitConstant,
    #[error("series orders do not match ({left} vs {right})")]
    OrderMismatch { left: usize, right: usize },
    #[error("denominator must have constant term 1")]
    BadDenominator,
}

/// The fixed formal-variable set. Unused variables simply never appear.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    T = 0,
    U = 1,
    V = 2,
    Q = 3,
}

pub const VAR_NAMES: [&str; 4] = ["t", "u", "v", "q"];

type Mono = [u32; 4];

/// A sparse multivariate polynomial over t, u, v, q with exact integer
/// coefficients. No zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Mono, BigInt>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::constant_big(BigInt::from(c))
    }

    pub fn constant_big(c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert([0; 4], c);
        }
        MultiPoly { terms }
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(v, 1, 1)
    }

    /// c * v^e
    pub fn monomial(v: Var, e: u32, c: i64) -> Self {
        let mut mono = [0u32; 4];
        mono[v as usize] = e;
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(mono, BigInt::from(c));
        }
        MultiPoly { terms }
    }

    /// The q-integer [k]_q = 1 + q + ... + q^(k-1).
    pub fn q_integer(k: usize) -> Self {
        let mut p = MultiPoly::zero();
        for e in 0..k {
            p = p.add(&MultiPoly::monomial(Var::Q, e as u32, 1));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        let mut terms = self.terms.clone();
        for (mono, c) in &other.terms {
            let entry = terms.entry(*mono).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(mono);
            }
        }
        MultiPoly { terms }
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        let mut terms: BTreeMap<Mono, BigInt> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let mono = [ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2], ma[3] + mb[3]];
                let entry = terms.entry(mono).or_insert_with(BigInt::zero);
                *entry += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        MultiPoly { terms }
    }

    pub fn scale(&self, c: i64) -> MultiPoly {
        self.mul(&MultiPoly::constant(c))
    }

    /// Substitutes integers for the given variables (None leaves a variable
    /// formal). A full assignment reduces to a constant polynomial.
    pub fn specialize(&self, assignment: &[Option<i64>; 4]) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (mono, c) in &self.terms {
            let mut coeff = c.clone();
            let mut reduced = *mono;
            for (i, slot) in assignment.iter().enumerate() {
                if let Some(value) = slot {
                    coeff *= BigInt::from(*value).pow(mono[i]);
                    reduced[i] = 0;
                }
            }
            let mut term = BTreeMap::new();
            if !coeff.is_zero() {
                term.insert(reduced, coeff);
            }
            out = out.add(&MultiPoly { terms: term });
        }
        out
    }

    /// The constant value, if this polynomial has no variables.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&[0; 4]).cloned(),
            _ => None,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &BigInt)> {
        self.terms.iter()
    }

    /// Terms in the frozen print order: ascending total degree, then
    /// lexicographic in (t, u, v, q) exponents.
    fn ordered_terms(&self) -> Vec<(&Mono, &BigInt)> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|(m, _)| (m.iter().sum::<u32>(), **m));
        terms
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.ordered_terms()
                .into_iter()
                .map(|(m, c)| {
                    serde_json::json!({
                        "exponents": { "t": m[0], "u": m[1], "v": m[2], "q": m[3] },
                        "coefficient": c.to_string(),
                    })
                })
                .collect(),
        )
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (mono, coeff)) in self.ordered_terms().into_iter().enumerate() {
            let negative = coeff.is_negative();
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = coeff.abs();
            let vars: Vec<String> = mono
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        VAR_NAMES[i].to_string()
                    } else {
                        format!("{}^{}", VAR_NAMES[i], e)
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{}*{}", abs, vars.join("*"))?;
            }
        }
        Ok(())
    }
}

/// A power series in x truncated at order N, with MultiPoly coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries {
    coeffs: Vec<MultiPoly>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![MultiPoly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = MultiPoly::one();
        s
    }

    /// A series from an explicit polynomial in x: terms (power, coefficient).
    /// Powers beyond the order are dropped.
    pub fn from_x_terms(order: usize, terms: &[(usize, MultiPoly)]) -> Self {
        let mut s = Self::zero(order);
        for (power, coeff) in terms {
            if *power <= order {
                s.coeffs[*power] = s.coeffs[*power].add(coeff);
            }
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficient(&self, n: usize) -> &MultiPoly {
        &self.coeffs[n]
    }

    pub fn coefficients(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    pub fn add(&self, other: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
        self.check_order(other)?;
        Ok(TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        })
    }

    pub fn sub(&self, other: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
        self.check_order(other)?;
        Ok(TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.sub(b))
                .collect(),
        })
    }

    pub fn mul(&self, other: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
        self.check_order(other)?;
        let order = self.order();
        let mut coeffs = vec![MultiPoly::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j > order {
                    break;
                }
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Ok(TruncatedSeries { coeffs })
    }

    /// Multiplicative inverse modulo x^(N+1). The constant coefficient must
    /// be the constant polynomial 1 or -1.
    pub fn reciprocal(&self) -> Result<TruncatedSeries, SeriesError> {
        let c0 = self.coeffs[0].as_constant().ok_or(SeriesError::NonunitConstant)?;
        if !c0.abs().is_one() {
            return Err(SeriesError::NonunitConstant);
        }
        let order = self.order();
        let mut inv = vec![MultiPoly::zero(); order + 1];
        let lead = MultiPoly::constant_big(c0); // self-inverse since ±1
        inv[0] = lead.clone();
        for n in 1..=order {
            let mut acc = MultiPoly::zero();
            for i in 1..=n {
                acc = acc.add(&self.coeffs[i].mul(&inv[n - i]));
            }
            inv[n] = lead.neg().mul(&acc);
        }
        Ok(TruncatedSeries { coeffs: inv })
    }

    pub fn specialize(&self, assignment: &[Option<i64>; 4]) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| c.specialize(assignment)).collect(),
        }
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| serde_json::json!({ "power": n, "terms": c.to_json_value() }))
                .collect(),
        )
    }

    fn check_order(&self, other: &TruncatedSeries) -> Result<(), SeriesError> {
        if self.order() != other.order() {
            return Err(SeriesError::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }
}

/// Expands numer(x) / denom(x) to the given order. Coefficient slices are in
/// ascending powers of x; the denominator must have constant term 1.
pub fn rational_series(
    numer: &[i64],
    denom: &[i64],
    order: usize,
) -> Result<TruncatedSeries, SeriesError> {
    if denom.first() != Some(&1) {
        return Err(SeriesError::BadDenominator);
    }
    let to_series = |coeffs: &[i64]| {
        let terms: Vec<(usize, MultiPoly)> = coeffs
            .iter()
            .enumerate()
            .map(|(p, &c)| (p, MultiPoly::constant(c)))
            .collect();
        TruncatedSeries::from_x_terms(order, &terms)
    };
    let n = to_series(numer);
    let d = to_series(denom);
    n.mul(&d.reciprocal()?)
}

/// Step weights of a colored-Motzkin continued fraction: `level(h)` weighs an
/// L step at height h, `rise_fall(h)` weighs a matched U into height h
/// together with its D back out.
pub struct WeightProfile {
    level: Box<dyn Fn(usize) -> MultiPoly + Send + Sync>,
    rise_fall: Box<dyn Fn(usize) -> MultiPoly + Send + Sync>,
}

impl WeightProfile {
    pub fn new(
        level: impl Fn(usize) -> MultiPoly + Send + Sync + 'static,
        rise_fall: impl Fn(usize) -> MultiPoly + Send + Sync + 'static,
    ) -> Self {
        WeightProfile {
            level: Box::new(level),
            rise_fall: Box::new(rise_fall),
        }
    }

    pub fn level_weight(&self, h: usize) -> MultiPoly {
        (self.level)(h)
    }

    pub fn rise_fall_weight(&self, h: usize) -> MultiPoly {
        (self.rise_fall)(h)
    }

    /// Plain counting: 2h+1 colors per L step, h per U and matching D.
    pub fn ak() -> Self {
        WeightProfile::new(
            |h| MultiPoly::constant(2 * h as i64 + 1),
            |h| MultiPoly::constant((h * h) as i64),
        )
    }

    /// Cycles, fixed points, excedances: level h(1+v) + tu, rise/fall h(h-1+t)v.
    pub fn cyc_fp_exc() -> Self {
        let t = || MultiPoly::var(Var::T);
        let u = || MultiPoly::var(Var::U);
        let v = || MultiPoly::var(Var::V);
        WeightProfile::new(
            move |h| {
                MultiPoly::one()
                    .add(&v())
                    .scale(h as i64)
                    .add(&t().mul(&u()))
            },
            move |h| {
                MultiPoly::constant(h as i64 - 1)
                    .add(&t())
                    .scale(h as i64)
                    .mul(&v())
            },
        )
    }

    /// Inversions, fixed points, excedances:
    /// level (1+v) q^h [h]_q + u q^(2h), rise/fall v q^(2h-1) [h]_q^2.
    pub fn inv_fp_exc() -> Self {
        let u = || MultiPoly::var(Var::U);
        let v = || MultiPoly::var(Var::V);
        let qpow = |e: usize| MultiPoly::monomial(Var::Q, e as u32, 1);
        WeightProfile::new(
            move |h| {
                MultiPoly::one()
                    .add(&v())
                    .mul(&qpow(h))
                    .mul(&MultiPoly::q_integer(h))
                    .add(&u().mul(&qpow(2 * h)))
            },
            move |h| {
                let qh = MultiPoly::q_integer(h);
                v().mul(&qpow(2 * h - 1)).mul(&qh).mul(&qh)
            },
        )
    }

    /// Involutions by inversions, fixed points, excedances:
    /// level u q^(2h), rise/fall v q^(2h-1) (1 + q^2 + ... + q^(2h-2)).
    pub fn involution() -> Self {
        let u = || MultiPoly::var(Var::U);
        let v = || MultiPoly::var(Var::V);
        let qpow = |e: usize| MultiPoly::monomial(Var::Q, e as u32, 1);
        WeightProfile::new(
            move |h| u().mul(&qpow(2 * h)),
            move |h| {
                let mut even_sum = MultiPoly::zero();
                for i in 0..h {
                    even_sum = even_sum.add(&qpow(2 * i));
                }
                v().mul(&qpow(2 * h - 1)).mul(&even_sum)
            },
        )
    }
}

/// Evaluates the depth-k continued fraction bottom-up:
/// C_k = 1/(1 - level(k) x), then
/// C_h = 1/(1 - level(h) x - rise_fall(h+1) x^2 C_(h+1)) down to h = 0.
///
/// The x^n coefficient of the result is the weighted count of colored Motzkin
/// paths of length n and height at most k.
pub fn cf_series(profile: &WeightProfile, k: usize, order: usize) -> TruncatedSeries {
    let level_term = |h: usize| {
        TruncatedSeries::from_x_terms(
            order,
            &[(0, MultiPoly::one()), (1, profile.level_weight(h).neg())],
        )
    };
    let mut current = level_term(k)
        .reciprocal()
        .expect("denominator has constant term 1");
    for h in (0..k).rev() {
        let x2_weight = TruncatedSeries::from_x_terms(
            order,
            &[(2, profile.rise_fall_weight(h + 1).neg())],
        );
        let denom = level_term(h)
            .add(&x2_weight.mul(&current).expect("orders match"))
            .expect("orders match");
        current = denom.reciprocal().expect("denominator has constant term 1");
    }
    current
}

/// A^(k)(x): counts k-almost-increasing permutations by length.
pub fn ak_series(k: usize, order: usize) -> TruncatedSeries {
    cf_series(&WeightProfile::ak(), k, order)
}

/// F^(k)(t,u,v,x): x^n coefficient is Σ t^cyc u^fp v^exc over A^(k)_n.
pub fn f_series(k: usize, order: usize) -> TruncatedSeries {
    cf_series(&WeightProfile::cyc_fp_exc(), k, order)
}

/// G^(k)(q,u,v,x): x^n coefficient is Σ q^inv u^fp v^exc over A^(k)_n.
pub fn g_series(k: usize, order: usize) -> TruncatedSeries {
    cf_series(&WeightProfile::inv_fp_exc(), k, order)
}

/// H^(k)(q,u,v,x): the same sum restricted to involutions in A^(k)_n.
pub fn h_series(k: usize, order: usize) -> TruncatedSeries {
    cf_series(&WeightProfile::involution(), k, order)
}

/// The k -> infinity limit. A Motzkin path of length n never exceeds height
/// floor(n/2), so truncating the fraction at that depth is exact up to x^N.
pub fn unbounded_series(profile: &WeightProfile, order: usize) -> TruncatedSeries {
    cf_series(profile, order / 2, order)
}
