//! Words over {W, E, L, R}, bounded ±1-step lattice paths, Motzkin paths, and
//! colored Motzkin paths, with their validation rules and string formats.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

// ---------------------------------------------------------------------------
// X-words
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Letter {
    W,
    E,
    L,
    R,
}

impl Letter {
    pub fn to_char(self) -> char {
        match self {
            Letter::W => 'W',
            Letter::E => 'E',
            Letter::L => 'L',
            Letter::R => 'R',
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'W' => Some(Letter::W),
            'E' => Some(Letter::E),
            'L' => Some(Letter::L),
            'R' => Some(Letter::R),
            _ => None,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordError {
    #[error("forbidden factor {factor} at position {position}")]
    ForbiddenFactor { factor: &'static str, position: usize },
    #[error("word must end with W or E")]
    BadTerminator,
    #[error("bad letter {letter:?} at position {position}")]
    BadLetter { letter: char, position: usize },
}

/// A word of W_n: letters over {W, E, L, R} with no factor LE or RW, ending
/// in W or E. Encodes a permutation of size n = len + 1; the empty word is
/// valid and corresponds to n = 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct XWord {
    letters: Vec<Letter>,
}

impl XWord {
    pub fn new(letters: Vec<Letter>) -> Result<Self, WordError> {
        for (idx, pair) in letters.windows(2).enumerate() {
            match (pair[0], pair[1]) {
                (Letter::L, Letter::E) => {
                    return Err(WordError::ForbiddenFactor { factor: "LE", position: idx + 1 })
                }
                (Letter::R, Letter::W) => {
                    return Err(WordError::ForbiddenFactor { factor: "RW", position: idx + 1 })
                }
                _ => {}
            }
        }
        if let Some(last) = letters.last() {
            if matches!(last, Letter::L | Letter::R) {
                return Err(WordError::BadTerminator);
            }
        }
        Ok(XWord { letters })
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The size of the permutations this word encodes.
    pub fn perm_size(&self) -> usize {
        self.letters.len() + 1
    }
}

impl fmt::Display for XWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{}", l.to_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for XWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "XWord({self})")
    }
}

impl FromStr for XWord {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut letters = Vec::with_capacity(s.len());
        for (idx, c) in s.trim().chars().enumerate() {
            letters.push(Letter::from_char(c).ok_or(WordError::BadLetter {
                letter: c,
                position: idx + 1,
            })?);
        }
        XWord::new(letters)
    }
}

// ---------------------------------------------------------------------------
// Bounded lattice paths (the P_n family)
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum PathStep {
    U,
    D,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PathError {
    #[error("height violation at step {position} (|y| exceeds {bound})")]
    HeightViolation { position: usize, bound: i64 },
    #[error("path does not end on the x-axis (final y = {y})")]
    BadEndpoint { y: i64 },
    #[error("bad step letter {letter:?} at position {position}")]
    BadLetter { letter: char, position: usize },
    #[error("bad color {color} on step {position} (height {height})")]
    BadColor { color: usize, position: usize, height: usize },
    #[error("odd number of steps")]
    OddLength,
}

/// A ±1-step path from (0,0) back to the x-axis with every prefix height in
/// [-3, 3]. May dip below the axis. A path of length 2n-2 belongs to P_n.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BoundedPath {
    steps: Vec<PathStep>,
}

impl BoundedPath {
    pub const BOUND: i64 = 3;

    pub fn new(steps: Vec<PathStep>) -> Result<Self, PathError> {
        if steps.len() % 2 != 0 {
            return Err(PathError::OddLength);
        }
        let mut y = 0i64;
        for (idx, s) in steps.iter().enumerate() {
            y += match s {
                PathStep::U => 1,
                PathStep::D => -1,
            };
            if y.abs() > Self::BOUND {
                return Err(PathError::HeightViolation {
                    position: idx + 1,
                    bound: Self::BOUND,
                });
            }
        }
        if y != 0 {
            return Err(PathError::BadEndpoint { y });
        }
        Ok(BoundedPath { steps })
    }

    pub fn steps(&self) -> &[PathStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// The size of the permutations this path encodes (length = 2n - 2).
    pub fn perm_size(&self) -> usize {
        self.steps.len() / 2 + 1
    }
}

impl fmt::Display for BoundedPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", match s {
                PathStep::U => 'U',
                PathStep::D => 'D',
            })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BoundedPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BoundedPath({self})")
    }
}

impl FromStr for BoundedPath {
    type Err = PathError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut steps = Vec::with_capacity(s.len());
        for (idx, c) in s.trim().chars().enumerate() {
            steps.push(match c {
                'U' => PathStep::U,
                'D' => PathStep::D,
                other => return Err(PathError::BadLetter { letter: other, position: idx + 1 }),
            });
        }
        BoundedPath::new(steps)
    }
}

/// Per-step classification of a bounded path's returns to the x-axis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ReturnKind {
    /// A D step whose right endpoint has y = 0.
    FromAbove,
    /// A U step whose right endpoint has y = 0.
    FromBelow,
    None,
}

pub fn returns_classification(path: &BoundedPath) -> Vec<ReturnKind> {
    let mut y = 0i64;
    path.steps()
        .iter()
        .map(|s| {
            y += match s {
                PathStep::U => 1,
                PathStep::D => -1,
            };
            if y != 0 {
                ReturnKind::None
            } else {
                match s {
                    PathStep::D => ReturnKind::FromAbove,
                    PathStep::U => ReturnKind::FromBelow,
                }
            }
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Motzkin paths, plain and colored
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum StepKind {
    U,
    D,
    L,
}

impl StepKind {
    pub fn to_char(self) -> char {
        match self {
            StepKind::U => 'U',
            StepKind::D => 'D',
            StepKind::L => 'L',
        }
    }
}

/// An uncolored Motzkin path: steps U, D, L, never below the axis, ending on it.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MotzkinPath {
    kinds: Vec<StepKind>,
}

impl MotzkinPath {
    pub fn new(kinds: Vec<StepKind>) -> Result<Self, PathError> {
        let mut h = 0i64;
        for (idx, k) in kinds.iter().enumerate() {
            h += match k {
                StepKind::U => 1,
                StepKind::D => -1,
                StepKind::L => 0,
            };
            if h < 0 {
                return Err(PathError::HeightViolation { position: idx + 1, bound: 0 });
            }
        }
        if h != 0 {
            return Err(PathError::BadEndpoint { y: h });
        }
        Ok(MotzkinPath { kinds })
    }

    pub fn kinds(&self) -> &[StepKind] {
        &self.kinds
    }

    pub fn len(&self) -> usize {
        self.kinds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.kinds.is_empty()
    }

    /// Maximum height reached by any step.
    pub fn height(&self) -> usize {
        let mut h = 0i64;
        let mut max = 0i64;
        for k in &self.kinds {
            h += match k {
                StepKind::U => 1,
                StepKind::D => -1,
                StepKind::L => 0,
            };
            max = max.max(h);
        }
        max as usize
    }
}

impl fmt::Display for MotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for k in &self.kinds {
            write!(f, "{}", k.to_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for MotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MotzkinPath({self})")
    }
}

impl FromStr for MotzkinPath {
    type Err = PathError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut kinds = Vec::with_capacity(s.len());
        for (idx, c) in s.trim().chars().enumerate() {
            kinds.push(match c {
                'U' => StepKind::U,
                'D' => StepKind::D,
                'L' => StepKind::L,
                other => return Err(PathError::BadLetter { letter: other, position: idx + 1 }),
            });
        }
        MotzkinPath::new(kinds)
    }
}

/// One colored step. Color conventions, with h the height of the step:
///
/// - L at height h: color 0 marks a fixed point; 1..=h marks an upper bounce
///   closing the color-th open vertical ray from the left; h+1..=2h marks a
///   lower bounce closing the (color-h)-th open horizontal ray from the bottom.
/// - U into height h: color 1..=h, read when the matching D arrives, selecting
///   the vertical ray that D closes.
/// - D out of height h (right endpoint h-1): color 1..=h, selecting the
///   horizontal ray to close.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ColoredStep {
    pub kind: StepKind,
    pub color: usize,
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ColoredMotzkinPath {
    steps: Vec<ColoredStep>,
}

impl ColoredMotzkinPath {
    pub fn new(steps: Vec<ColoredStep>) -> Result<Self, PathError> {
        let mut h = 0usize;
        for (idx, s) in steps.iter().enumerate() {
            match s.kind {
                StepKind::U => {
                    h += 1;
                    if s.color < 1 || s.color > h {
                        return Err(PathError::BadColor {
                            color: s.color,
                            position: idx + 1,
                            height: h,
                        });
                    }
                }
                StepKind::D => {
                    if h == 0 {
                        return Err(PathError::HeightViolation { position: idx + 1, bound: 0 });
                    }
                    // colors 1..=h where h is the height before the step
                    if s.color < 1 || s.color > h {
                        return Err(PathError::BadColor {
                            color: s.color,
                            position: idx + 1,
                            height: h - 1,
                        });
                    }
                    h -= 1;
                }
                StepKind::L => {
                    if s.color > 2 * h {
                        return Err(PathError::BadColor {
                            color: s.color,
                            position: idx + 1,
                            height: h,
                        });
                    }
                }
            }
        }
        if h != 0 {
            return Err(PathError::BadEndpoint { y: h as i64 });
        }
        Ok(ColoredMotzkinPath { steps })
    }

    pub fn steps(&self) -> &[ColoredStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn uncolored(&self) -> MotzkinPath {
        MotzkinPath::new(self.steps.iter().map(|s| s.kind).collect())
            .expect("colored path validation implies a valid Motzkin path")
    }

    pub fn height(&self) -> usize {
        self.uncolored().height()
    }
}

impl fmt::Display for ColoredMotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for s in &self.steps {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{}{}", s.kind.to_char(), s.color)?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for ColoredMotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ColoredMotzkinPath({self})")
    }
}

impl FromStr for ColoredMotzkinPath {
    type Err = PathError;

    /// Parses space-separated tokens like "U1 L0 D1".
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut steps = Vec::new();
        for (idx, token) in s.split_whitespace().enumerate() {
            let mut chars = token.chars();
            let kind = match chars.next() {
                Some('U') => StepKind::U,
                Some('D') => StepKind::D,
                Some('L') => StepKind::L,
                other => {
                    return Err(PathError::BadLetter {
                        letter: other.unwrap_or(' '),
                        position: idx + 1,
                    })
                }
            };
            let color: usize = chars.as_str().parse().map_err(|_| PathError::BadColor {
                color: usize::MAX,
                position: idx + 1,
                height: 0,
            })?;
            steps.push(ColoredStep { kind, color });
        }
        ColoredMotzkinPath::new(steps)
    }
}

// ---------------------------------------------------------------------------
// Diagonal sequences
// ---------------------------------------------------------------------------

/// The five diagonal square types of a cycle diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Symbol {
    Fix,
    Open,
    Close,
    UpperBounce,
    LowerBounce,
}

impl Symbol {
    pub fn step_kind(self) -> StepKind {
        match self {
            Symbol::Open => StepKind::U,
            Symbol::Close => StepKind::D,
            Symbol::Fix | Symbol::UpperBounce | Symbol::LowerBounce => StepKind::L,
        }
    }
}

/// The diagonal sequence D(π): per-position square types, bottom-left to
/// top-right. Bracket heights never go negative, end at 0, and bounces only
/// occur at positive pre-height.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagonalSequence {
    symbols: Vec<Symbol>,
}

impl DiagonalSequence {
    pub fn new(symbols: Vec<Symbol>) -> Result<Self, PathError> {
        let mut h = 0i64;
        for (idx, s) in symbols.iter().enumerate() {
            match s {
                Symbol::Open => h += 1,
                Symbol::Close => {
                    h -= 1;
                    if h < 0 {
                        return Err(PathError::HeightViolation { position: idx + 1, bound: 0 });
                    }
                }
                Symbol::UpperBounce | Symbol::LowerBounce => {
                    if h < 1 {
                        return Err(PathError::HeightViolation { position: idx + 1, bound: 0 });
                    }
                }
                Symbol::Fix => {}
            }
        }
        if h != 0 {
            return Err(PathError::BadEndpoint { y: h });
        }
        Ok(DiagonalSequence { symbols })
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_validation() {
        assert!("RLREWEWLWRLW".parse::<XWord>().is_ok());
        assert_eq!(
            "RW".parse::<XWord>(),
            Err(WordError::ForbiddenFactor { factor: "RW", position: 1 })
        );
        assert_eq!(
            "WLE".parse::<XWord>(),
            Err(WordError::ForbiddenFactor { factor: "LE", position: 2 })
        );
        assert_eq!("WL".parse::<XWord>(), Err(WordError::BadTerminator));
        assert!(matches!("WX".parse::<XWord>(), Err(WordError::BadLetter { .. })));
        let empty = "".parse::<XWord>().unwrap();
        assert_eq!(empty.perm_size(), 1);
    }

    #[test]
    fn bounded_path_validation() {
        let p: BoundedPath = "DUDDDUUUUDUUUDDUDD".parse().unwrap();
        assert_eq!(p.perm_size(), 10);
        assert!(matches!(
            "UUUUDDDD".parse::<BoundedPath>(),
            Err(PathError::HeightViolation { position: 4, .. })
        ));
        assert!(matches!(
            "UUDU".parse::<BoundedPath>(),
            Err(PathError::BadEndpoint { y: 2 })
        ));
    }

    #[test]
    fn returns_examples() {
        let ud: BoundedPath = "UD".parse().unwrap();
        assert_eq!(returns_classification(&ud), vec![ReturnKind::None, ReturnKind::FromAbove]);
        let du: BoundedPath = "DU".parse().unwrap();
        assert_eq!(returns_classification(&du), vec![ReturnKind::None, ReturnKind::FromBelow]);
        let fig: BoundedPath = "DUDDDUUUUDUUUDDUDD".parse().unwrap();
        let returns = returns_classification(&fig)
            .into_iter()
            .filter(|r| *r != ReturnKind::None)
            .count();
        assert_eq!(returns, 4);
    }

    #[test]
    fn motzkin_height() {
        assert_eq!("".parse::<MotzkinPath>().unwrap().height(), 0);
        assert_eq!("ULD".parse::<MotzkinPath>().unwrap().height(), 1);
        assert_eq!("UULLDUDDLULD".parse::<MotzkinPath>().unwrap().height(), 2);
    }

    #[test]
    fn colored_validation() {
        assert!("U1 L2 D1".parse::<ColoredMotzkinPath>().is_ok());
        // budget at h = 0 is {0} only
        assert!(matches!(
            "L1".parse::<ColoredMotzkinPath>(),
            Err(PathError::BadColor { color: 1, position: 1, .. })
        ));
        // U into height 1 only has color 1
        assert!(matches!(
            "U2 D1".parse::<ColoredMotzkinPath>(),
            Err(PathError::BadColor { color: 2, .. })
        ));
        // L at height 1 allows colors 0..=2 but not 3
        assert_eq!("U1 L2 D1".parse::<ColoredMotzkinPath>().unwrap().height(), 1);
        assert!(matches!(
            "U1 L3 D1".parse::<ColoredMotzkinPath>(),
            Err(PathError::BadColor { color: 3, position: 2, .. })
        ));
        let p: ColoredMotzkinPath = "U1 L0 D1".parse().unwrap();
        assert_eq!(p.to_string(), "U1 L0 D1");
        assert_eq!(p.uncolored().to_string(), "ULD");
    }

    #[test]
    fn diagonal_sequence_validation() {
        use Symbol::*;
        assert!(DiagonalSequence::new(vec![Fix, Fix]).is_ok());
        assert!(DiagonalSequence::new(vec![Open, UpperBounce, Close]).is_ok());
        assert!(DiagonalSequence::new(vec![UpperBounce]).is_err());
        assert!(DiagonalSequence::new(vec![Close, Open]).is_err());
        assert!(DiagonalSequence::new(vec![Open]).is_err());
    }
}
