//! Efficient geodesics in ladders and the translation length of a hyperbolic
//! element.
//!
//! Pivots of a ladder alternate sides. From a pivot there are two moves: `t`
//! to the next pivot (the other side) and `p` to the one after (same side),
//! skipping a block. A `p` move runs along as many side edges as the skipped
//! block has triangles, so the efficient rule passes exactly when the skipped
//! block is a single triangle.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::farey::ExtRational;
use crate::ladder::{invariant_ladder_window, Ladder};
use crate::matrix::MatrixPSL2Z;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Move {
    /// To the adjacent pivot on the other side.
    Transverse,
    /// To the adjacent pivot on the same side.
    Pass,
}

impl Move {
    pub fn advance(self) -> usize {
        match self {
            Move::Transverse => 1,
            Move::Pass => 2,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Move::Transverse => 't',
            Move::Pass => 'p',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoveSequence {
    pub start_pivot_index: usize,
    pub moves: Vec<Move>,
}

impl MoveSequence {
    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// Pivot indices visited, starting point included.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![self.start_pivot_index];
        for m in &self.moves {
            pos.push(pos.last().unwrap() + m.advance());
        }
        pos
    }
}

impl fmt::Display for MoveSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.moves.iter().try_for_each(|m| write!(f, "{}", m.letter()))
    }
}

impl Serialize for MoveSequence {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Efficient geodesic across a finite ladder.
///
/// Pivot `j` of the ladder lies on side `j mod 2`. The path starts at the start
/// rung vertex on `start_side` (pivot 0 or 1) and ends at the end rung vertex
/// on `end_side` (pivot `n` or `n + 1` for a ladder of length `n`). It moves
/// `t` when the final point is one step away or the skipped block has two or
/// more triangles, and `p` otherwise.
pub fn efficient_geodesic_finite(ladder: &Ladder, start_side: usize, end_side: usize) -> MoveSequence {
    let n = ladder.types.len();
    let start = start_side % 2;
    let finish = if n % 2 == end_side % 2 { n } else { n + 1 };
    let mut pos = start;
    let mut moves = Vec::new();
    while pos < finish {
        let mv = if pos + 1 == finish || ladder.types[pos] >= 2 { Move::Transverse } else { Move::Pass };
        pos += mv.advance();
        moves.push(mv);
    }
    MoveSequence { start_pivot_index: start, moves }
}

/// The cycle of the greedy residue map on a cyclic type of even length.
///
/// Position `r` stands for the pivot of block `r`; the next move skips block
/// `r + 1`. Returns the first position on the cycle reached from 0 and the moves
/// of one full turn.
pub fn efficient_cycle(types: &[u64]) -> Result<MoveSequence> {
    let n = check_cyclic(types)?;
    let cycle_from = |start: usize| {
        let mut first_seen = vec![usize::MAX; n];
        let mut order = Vec::new();
        let mut r = start;
        while first_seen[r] == usize::MAX {
            first_seen[r] = order.len();
            order.push(r);
            r = (r + step(types, r).advance()) % n;
        }
        let cycle = &order[first_seen[r]..];
        let moves: Vec<Move> = cycle.iter().map(|&r| step(types, r)).collect();
        MoveSequence { start_pivot_index: cycle[0], moves }
    };

    let main = cycle_from(0);
    let advance: usize = main.moves.iter().map(|m| m.advance()).sum();
    if advance != n {
        return Err(Error::Internal(format!("cycle advances {advance} positions, expected {n}")));
    }
    // every other cycle is another invariant efficient geodesic
    for start in 1..n {
        let other = cycle_from(start);
        if other.len() != main.len() {
            return Err(Error::Internal(format!(
                "efficient cycles of different lengths {} and {} for {types:?}",
                main.len(),
                other.len()
            )));
        }
    }
    Ok(main)
}

fn step(types: &[u64], r: usize) -> Move {
    if types[(r + 1) % types.len()] == 1 {
        Move::Pass
    } else {
        Move::Transverse
    }
}

fn check_cyclic(types: &[u64]) -> Result<usize> {
    if types.is_empty() || types.len() % 2 == 1 {
        return Err(Error::OddLength);
    }
    if types.contains(&0) {
        return Err(Error::NonpositiveEntry);
    }
    Ok(types.len())
}

/// Translation length of any hyperbolic element whose invariant ladder has
/// this even cyclic type.
pub fn cyclic_translation_length(types: &[u64]) -> Result<u64> {
    Ok(efficient_cycle(types)?.len() as u64)
}

/// The translation length of a hyperbolic element together with one period of
/// its geodesic axis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxisResult {
    pub length: u64,
    pub window: Ladder,
    /// One period of axis vertices; the next one is `f(axis[0])`.
    pub axis: Vec<ExtRational>,
    pub moves: MoveSequence,
}

impl Serialize for AxisResult {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("AxisResult", 4)?;
        s.serialize_field("length", &self.length)?;
        s.serialize_field("types", &self.window.types)?;
        s.serialize_field("axis", &self.axis)?;
        s.serialize_field("moves", &self.moves)?;
        s.end()
    }
}

/// Pivot of block `index` (0-based) on the bi-infinite ladder covered by the
/// translates of `window`, for any `index >= 0`.
pub fn window_pivot(m: &MatrixPSL2Z, window: &Ladder, index: usize) -> ExtRational {
    let n = window.types.len();
    let (turns, r) = (index / n, index % n);
    let mut v = window.pivots[r + 1].clone();
    for _ in 0..turns {
        v = m.apply(&v);
    }
    v
}

pub fn translation_length(m: &MatrixPSL2Z) -> Result<AxisResult> {
    m.ensure_hyperbolic()?;
    let window = invariant_ladder_window(m)?;
    let moves = efficient_cycle(&window.types)?;
    let axis = moves.positions().iter().take(moves.len()).map(|&pos| window_pivot(m, &window, pos)).collect();
    Ok(AxisResult { length: moves.len() as u64, window, axis, moves })
}
