//! The five maps between permutation classes, words, and paths, together with
//! their inverses:
//!
//! - `word_to_xperm` / `xperm_to_word`: W_n <-> X_n via corner shading.
//! - `aip_to_word` / `word_to_aip`: A^(1)_n <-> W_n via the m-count scan.
//! - `word_to_path` / `path_to_word`: W_n <-> P_n via block translation.
//! - `diagonal_sequence` / `theta`: cycle-diagram square types and their
//!   projection to an uncolored Motzkin path.
//! - `psi` / `psi_inverse`: S_n <-> colored Motzkin paths, recording in the
//!   colors which rays each bounce or closing bracket closes.

use crate::classes::{is_almost_increasing, Corner};
use crate::perm::Permutation;
use crate::words::{
    BoundedPath, ColoredMotzkinPath, ColoredStep, DiagonalSequence, Letter, MotzkinPath,
    PathStep, StepKind, Symbol, XWord,
};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BijectError {
    #[error("permutation is not in {class}")]
    NotInClass { class: &'static str },
    #[error("zero-return segment starting at step {position} matches no block shape")]
    MalformedSegment { position: usize },
}

// ---------------------------------------------------------------------------
// β_WX : W_n -> X_n and its inverse
// ---------------------------------------------------------------------------

/// Builds the X-class permutation of a word by the corner-shading procedure:
/// L places a dot in the lower-left corner of the unshaded region, R in the
/// lower-right, W in the upper-left, E in the upper-right; the final dot goes
/// in the last unshaded square.
pub fn word_to_xperm(w: &XWord) -> Permutation {
    let n = w.perm_size();
    let mut values = vec![0usize; n];
    // unshaded columns [lc, hc] and rows [lr, hr]
    let (mut lc, mut hc, mut lr, mut hr) = (1usize, n, 1usize, n);
    for letter in w.letters() {
        match letter {
            Letter::L => {
                values[lc - 1] = lr;
                lc += 1;
                lr += 1;
            }
            Letter::R => {
                values[hc - 1] = lr;
                hc -= 1;
                lr += 1;
            }
            Letter::W => {
                values[lc - 1] = hr;
                lc += 1;
                hr -= 1;
            }
            Letter::E => {
                values[hc - 1] = hr;
                hc -= 1;
                hr -= 1;
            }
        }
    }
    debug_assert!(lc == hc && lr == hr);
    values[lc - 1] = lr;
    Permutation::new(values).expect("corner shading fills each row and column once")
}

/// Inverse of the corner shading: peel corner dots, preferring the upper one
/// when two opposite corners are dotted. Fails with `NotInClass` when some
/// intermediate unshaded array has no corner dot, which happens exactly when
/// the input is outside the X-class.
pub fn xperm_to_word(p: &Permutation) -> Result<XWord, BijectError> {
    let n = p.len();
    if n == 0 {
        return Err(BijectError::NotInClass { class: "X (empty input)" });
    }
    let mut letters = Vec::with_capacity(n - 1);
    let (mut lc, mut hc, mut lr, mut hr) = (1usize, n, 1usize, n);
    while lc < hc {
        // corner preference mirrors `corner_dot`: upper corners first
        let corner = if p.at(hc) == hr {
            Corner::UpperRight
        } else if p.at(lc) == hr {
            Corner::UpperLeft
        } else if p.at(lc) == lr {
            Corner::LowerLeft
        } else if p.at(hc) == lr {
            Corner::LowerRight
        } else {
            return Err(BijectError::NotInClass { class: "X" });
        };
        match corner {
            Corner::UpperRight => {
                letters.push(Letter::E);
                hc -= 1;
                hr -= 1;
            }
            Corner::UpperLeft => {
                letters.push(Letter::W);
                lc += 1;
                hr -= 1;
            }
            Corner::LowerLeft => {
                letters.push(Letter::L);
                lc += 1;
                lr += 1;
            }
            Corner::LowerRight => {
                letters.push(Letter::R);
                hc -= 1;
                lr += 1;
            }
        }
    }
    XWord::new(letters).map_err(|_| BijectError::NotInClass { class: "X" })
}

// ---------------------------------------------------------------------------
// β_AW : A^(1)_n -> W_n and its inverse
// ---------------------------------------------------------------------------

/// Scans π(1), ..., π(n-1): with m = |{j > i : π(j) < π(i)}|, writes W for
/// m = 0, E for m = 1, and for m >= 2 one letter per entry π(i+1..i+m-1)
/// (R if π(j) = j, else L) followed by the forced terminator.
pub fn aip_to_word(p: &Permutation) -> Result<XWord, BijectError> {
    if !is_almost_increasing(p, 1) {
        return Err(BijectError::NotInClass { class: "A^(1)" });
    }
    let n = p.len();
    if n == 0 {
        return Err(BijectError::NotInClass { class: "A^(1) (empty input)" });
    }
    let mut letters = Vec::with_capacity(n - 1);
    let mut i = 1usize;
    while i <= n - 1 {
        let v = p.at(i);
        let m = ((i + 1)..=n).filter(|&j| p.at(j) < v).count();
        match m {
            0 => {
                letters.push(Letter::W);
                i += 1;
            }
            1 => {
                letters.push(Letter::E);
                i += 1;
            }
            _ => {
                let mut last_was_r = false;
                for j in (i + 1)..=(i + m - 1) {
                    last_was_r = p.at(j) == j;
                    letters.push(if last_was_r { Letter::R } else { Letter::L });
                }
                letters.push(if last_was_r { Letter::E } else { Letter::W });
                i += m;
            }
        }
    }
    XWord::new(letters).map_err(|_| BijectError::NotInClass { class: "A^(1)" })
}

/// Inverse of the scan: recursive block construction. A leading W prepends a
/// fixed point; a leading E sets π(1) = 2 and re-inserts value 1; a leading
/// run of m-1 letters in {R, L} plus the forced terminator sets π(1) = m + 1
/// and fills positions 2..m (R takes π(j) = j, L takes the unique unused
/// value below j), embedding the recursive tail order-isomorphically into the
/// leftover values.
pub fn word_to_aip(w: &XWord) -> Permutation {
    let values = build_aip(w.letters());
    Permutation::new(values).expect("block construction yields a bijection on valid words")
}

fn build_aip(letters: &[Letter]) -> Vec<usize> {
    let n = letters.len() + 1;
    match letters.first() {
        None => vec![1],
        Some(Letter::W) => {
            let tail = build_aip(&letters[1..]);
            let mut values = Vec::with_capacity(n);
            values.push(1);
            values.extend(tail.into_iter().map(|v| v + 1));
            values
        }
        Some(Letter::E) => {
            let tail = build_aip(&letters[1..]);
            let mut values = Vec::with_capacity(n);
            values.push(2);
            values.extend(tail.into_iter().map(|v| if v == 1 { 1 } else { v + 1 }));
            values
        }
        Some(Letter::R) | Some(Letter::L) => {
            let run = letters
                .iter()
                .take_while(|l| matches!(l, Letter::R | Letter::L))
                .count();
            // word validity forces a terminator after the run: E after R, W after L
            debug_assert!(run < letters.len(), "run cannot end the word");
            debug_assert!(match letters[run - 1] {
                Letter::R => letters[run] == Letter::E,
                Letter::L => letters[run] == Letter::W,
                _ => false,
            });
            let m = run + 1;
            let mut values = Vec::with_capacity(n);
            values.push(m + 1);
            // exactly one value in {1..j} stays unused after position j
            let mut leftover = 1usize;
            for (offset, letter) in letters[..run].iter().enumerate() {
                let j = offset + 2;
                match letter {
                    Letter::R => values.push(j),
                    Letter::L => {
                        values.push(leftover);
                        leftover = j;
                    }
                    _ => unreachable!(),
                }
            }
            let tail = build_aip(&letters[m..]);
            // leftover < m + 2, so this list is sorted
            let mut remaining: Vec<usize> = Vec::with_capacity(n - m);
            remaining.push(leftover);
            remaining.extend((m + 2)..=n);
            values.extend(tail.into_iter().map(|v| remaining[v - 1]));
            values
        }
    }
}

// ---------------------------------------------------------------------------
// ζ : W_n -> P_n and its inverse
// ---------------------------------------------------------------------------

/// Translates a word block by block (a block ends at each E or W) into a
/// bounded ±1-step path, one zero-return segment per block.
pub fn word_to_path(w: &XWord) -> BoundedPath {
    use PathStep::{D, U};
    let mut steps: Vec<PathStep> = Vec::with_capacity(2 * w.len());
    let letters = w.letters();
    let mut start = 0usize;
    for (idx, letter) in letters.iter().enumerate() {
        if !matches!(letter, Letter::E | Letter::W) {
            continue;
        }
        let block = &letters[start..=idx];
        start = idx + 1;
        if block.len() == 1 {
            match letter {
                Letter::E => steps.extend([U, D]),
                Letter::W => steps.extend([D, U]),
                _ => unreachable!(),
            }
            continue;
        }
        // multi-letter block: run of R/L, then RE or LW
        let run = &block[..block.len() - 2];
        match letter {
            Letter::E => {
                debug_assert_eq!(block[block.len() - 2], Letter::R);
                steps.extend([U, U]);
                for l in run {
                    match l {
                        Letter::R => steps.extend([U, D]),
                        Letter::L => steps.extend([D, U]),
                        _ => unreachable!(),
                    }
                }
                steps.extend([D, D]);
            }
            Letter::W => {
                debug_assert_eq!(block[block.len() - 2], Letter::L);
                steps.extend([D, D]);
                for l in run {
                    match l {
                        Letter::R => steps.extend([D, U]),
                        Letter::L => steps.extend([U, D]),
                        _ => unreachable!(),
                    }
                }
                steps.extend([U, U]);
            }
            _ => unreachable!(),
        }
    }
    BoundedPath::new(steps).expect("block translation stays within |y| <= 3 and returns to 0")
}

/// Inverse of the block translation: split the path at its returns and decode
/// each zero-return segment back into a block.
pub fn path_to_word(path: &BoundedPath) -> Result<XWord, BijectError> {
    use PathStep::{D, U};
    let steps = path.steps();
    let mut letters = Vec::with_capacity(steps.len() / 2);
    let mut y = 0i64;
    let mut seg_start = 0usize;
    for (idx, s) in steps.iter().enumerate() {
        y += match s {
            U => 1,
            D => -1,
        };
        if y != 0 {
            continue;
        }
        let seg = &steps[seg_start..=idx];
        let pos = seg_start + 1;
        seg_start = idx + 1;
        match seg {
            [U, D] => letters.push(Letter::E),
            [D, U] => letters.push(Letter::W),
            [U, U, mid @ .., D, D] => {
                for pair in mid.chunks(2) {
                    match pair {
                        [U, D] => letters.push(Letter::R),
                        [D, U] => letters.push(Letter::L),
                        _ => return Err(BijectError::MalformedSegment { position: pos }),
                    }
                }
                letters.push(Letter::R);
                letters.push(Letter::E);
            }
            [D, D, mid @ .., U, U] => {
                for pair in mid.chunks(2) {
                    match pair {
                        [D, U] => letters.push(Letter::R),
                        [U, D] => letters.push(Letter::L),
                        _ => return Err(BijectError::MalformedSegment { position: pos }),
                    }
                }
                letters.push(Letter::L);
                letters.push(Letter::W);
            }
            _ => return Err(BijectError::MalformedSegment { position: pos }),
        }
    }
    XWord::new(letters).map_err(|_| BijectError::MalformedSegment { position: 1 })
}

// ---------------------------------------------------------------------------
// Diagonal sequences, θ, and ψ
// ---------------------------------------------------------------------------

/// Classifies each diagonal square of the cycle diagram from the signs of
/// π(i) - i and π⁻¹(i) - i.
pub fn diagonal_sequence(p: &Permutation) -> DiagonalSequence {
    let inv = p.inverse();
    let symbols = (1..=p.len())
        .map(|i| {
            let up = p.at(i) > i;
            let down = p.at(i) < i;
            let from_below = inv.at(i) > i;
            let from_above = inv.at(i) < i;
            match (up, down, from_below, from_above) {
                (false, false, _, _) => Symbol::Fix,
                (true, _, true, _) => Symbol::Open,
                (_, true, _, true) => Symbol::Close,
                (true, _, _, true) => Symbol::UpperBounce,
                (_, true, true, _) => Symbol::LowerBounce,
                _ => unreachable!("signs of π(i)-i and π⁻¹(i)-i cover all cases"),
            }
        })
        .collect();
    DiagonalSequence::new(symbols).expect("diagonal sequences of permutations are balanced")
}

/// The uncolored Motzkin path of a permutation: U per opening bracket, D per
/// closing bracket, L otherwise. Step i sits at height h_i of the profile.
pub fn theta(p: &Permutation) -> MotzkinPath {
    let kinds = diagonal_sequence(p)
        .symbols()
        .iter()
        .map(|s| s.step_kind())
        .collect();
    MotzkinPath::new(kinds).expect("diagonal sequence projects to a Motzkin path")
}

/// The colored-path bijection on all of S_n (the unbounded extension of ψ_k):
/// the underlying path is θ(π) and the colors record which open rays each
/// bounce and closing bracket closes. π is in A^(k)_n iff the result has
/// height at most k.
pub fn psi(p: &Permutation) -> ColoredMotzkinPath {
    let inv = p.inverse();
    let n = p.len();
    let mut steps: Vec<ColoredStep> = Vec::with_capacity(n);
    // open rays in increasing column/row order; appended indices only grow
    let mut open_v: Vec<usize> = Vec::new();
    let mut open_h: Vec<usize> = Vec::new();
    let mut u_stack: Vec<usize> = Vec::new();
    for (i, symbol) in diagonal_sequence(p).symbols().iter().enumerate() {
        let i = i + 1;
        match symbol {
            Symbol::Fix => steps.push(ColoredStep { kind: StepKind::L, color: 0 }),
            Symbol::Open => {
                u_stack.push(steps.len());
                // color assigned when the matching Close picks a vertical ray
                steps.push(ColoredStep { kind: StepKind::U, color: 0 });
                open_v.push(i);
                open_h.push(i);
            }
            Symbol::UpperBounce => {
                let col = inv.at(i);
                let rank = ray_rank(&open_v, col);
                steps.push(ColoredStep { kind: StepKind::L, color: rank });
                remove_ray(&mut open_v, col);
                open_v.push(i);
            }
            Symbol::LowerBounce => {
                let row = p.at(i);
                let rank = ray_rank(&open_h, row);
                steps.push(ColoredStep { kind: StepKind::L, color: open_h.len() + rank });
                remove_ray(&mut open_h, row);
                open_h.push(i);
            }
            Symbol::Close => {
                let col = inv.at(i);
                let row = p.at(i);
                let u_idx = u_stack.pop().expect("Close always has a matching Open");
                steps[u_idx].color = ray_rank(&open_v, col);
                steps.push(ColoredStep { kind: StepKind::D, color: ray_rank(&open_h, row) });
                remove_ray(&mut open_v, col);
                remove_ray(&mut open_h, row);
            }
        }
    }
    ColoredMotzkinPath::new(steps).expect("psi respects the color budgets")
}

fn ray_rank(rays: &[usize], index: usize) -> usize {
    rays.iter().position(|&r| r == index).expect("ray must be open") + 1
}

fn remove_ray(rays: &mut Vec<usize>, index: usize) {
    let pos = rays.iter().position(|&r| r == index).expect("ray must be open");
    rays.remove(pos);
}

/// Rebuilds the permutation from a colored Motzkin path by replaying the
/// cycle-diagram construction: L0 places a fixed point; L with color c <= h
/// closes the c-th open vertical ray (upper bounce); L with color c > h
/// closes the (c-h)-th open horizontal ray (lower bounce); U opens one ray of
/// each kind; D closes the vertical ray named by its matching U's color and
/// the horizontal ray named by its own color.
pub fn psi_inverse(m: &ColoredMotzkinPath) -> Permutation {
    let n = m.len();
    let mut values = vec![0usize; n];
    let mut open_v: Vec<usize> = Vec::new();
    let mut open_h: Vec<usize> = Vec::new();
    let mut u_colors: Vec<usize> = Vec::new();
    for (idx, step) in m.steps().iter().enumerate() {
        let i = idx + 1;
        match step.kind {
            StepKind::L => {
                let h = open_v.len();
                if step.color == 0 {
                    values[i - 1] = i;
                } else if step.color <= h {
                    let col = open_v.remove(step.color - 1);
                    values[col - 1] = i;
                    open_v.push(i);
                } else {
                    let row = open_h.remove(step.color - h - 1);
                    values[i - 1] = row;
                    open_h.push(i);
                }
            }
            StepKind::U => {
                u_colors.push(step.color);
                open_v.push(i);
                open_h.push(i);
            }
            StepKind::D => {
                let cu = u_colors.pop().expect("validated path has matched steps");
                let col = open_v.remove(cu - 1);
                let row = open_h.remove(step.color - 1);
                values[col - 1] = i;
                values[i - 1] = row;
            }
        }
    }
    Permutation::new(values).expect("every valid colored path reconstructs a permutation")
}
