//! Isotopy-preserving local moves on Morse words.

use crate::morse::{validate, MorseEvent, MorsePresentation};
use std::fmt;
use thiserror::Error;

/// Where the upper event of a commuted pair acts relative to the lower one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Placement {
    /// The upper event's strands lie left of the lower event's strands.
    Left,
    Right,
}

impl Placement {
    pub fn mirror(self) -> Self {
        match self {
            Placement::Left => Placement::Right,
            Placement::Right => Placement::Left,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Move {
    /// Swaps events `index` and `index + 1`, both critical or both crossings.
    FarCommute { index: usize, placement: Placement },
    /// Swaps a crossing with an adjacent cup or cap.
    SlideCrossing { index: usize, placement: Placement },
    /// Removes the zigzag `cup p; cap p±1` at `index`, `index + 1`.
    CancelPair { index: usize },
    /// Inserts a zigzag on strand `strand` before event `index`. With
    /// `Placement::Right` the new cup opens right of the strand
    /// (`cup s; cap s+1`), otherwise left (`cup s+1; cap s`).
    CreatePair { index: usize, strand: usize, side: Placement },
}

impl Move {
    pub fn kind(&self) -> &'static str {
        match self {
            Move::FarCommute { .. } => "far-commute",
            Move::SlideCrossing { .. } => "slide-crossing",
            Move::CancelPair { .. } => "cancel-pair",
            Move::CreatePair { .. } => "create-pair",
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.kind())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("move {0:?} does not apply to this word")]
    IllegalMove(Move),
    #[error("invalid search configuration: {0}")]
    InvalidConfig(&'static str),
    #[error(transparent)]
    BoundViolation(#[from] crate::bounds::BoundViolation),
}

/// The commuted pair, if `placement` describes the supports of `lower` and
/// `upper` (upper acting on the row between them).
fn commuted(lower: MorseEvent, upper: MorseEvent, placement: Placement) -> Option<(MorseEvent, MorseEvent)> {
    let (p1, b1, t1) = (lower.position(), lower.strands_below(), lower.strands_above());
    let (p2, b2, t2) = (upper.position(), upper.strands_below(), upper.strands_above());
    match placement {
        Placement::Left if p2 + b2 <= p1 => Some((upper, lower.at(p1 + t2 - b2))),
        Placement::Right if p2 >= p1 + t1 => Some((upper.at(p2 + b1 - t1), lower)),
        _ => None,
    }
}

fn is_zigzag(lower: MorseEvent, upper: MorseEvent) -> bool {
    match (lower, upper) {
        (MorseEvent::Cup(p), MorseEvent::Cap(q)) => q == p + 1 || q + 1 == p,
        _ => false,
    }
}

/// Moves acting on events `i` and `i + 1`, in a fixed order.
pub fn moves_at(p: &MorsePresentation, i: usize) -> Vec<Move> {
    let events = p.events();
    let mut out = Vec::new();
    if i + 1 >= events.len() {
        return out;
    }
    let (lower, upper) = (events[i], events[i + 1]);
    for placement in [Placement::Left, Placement::Right] {
        if commuted(lower, upper, placement).is_some() {
            out.push(if lower.is_critical() == upper.is_critical() {
                Move::FarCommute { index: i, placement }
            } else {
                Move::SlideCrossing { index: i, placement }
            });
        }
    }
    if is_zigzag(lower, upper) {
        out.push(Move::CancelPair { index: i });
    }
    out
}

fn create_is_legal(p: &MorsePresentation, index: usize, strand: usize) -> bool {
    index <= p.len() && strand < p.profile()[index]
}

/// Every applicable move: commutes and cancellations by position, then all
/// zigzag insertions.
pub fn legal_moves(p: &MorsePresentation) -> Vec<Move> {
    let mut out: Vec<Move> = (0..p.len()).flat_map(|i| moves_at(p, i)).collect();
    for (index, &k) in p.profile().iter().enumerate() {
        for strand in 0..k {
            for side in [Placement::Left, Placement::Right] {
                out.push(Move::CreatePair { index, strand, side });
            }
        }
    }
    out
}

/// Width change caused by `m`, from the strand-count profile alone.
pub fn predicted_delta(p: &MorsePresentation, m: Move) -> isize {
    let events = p.events();
    let profile = p.profile();
    match m {
        Move::FarCommute { index, .. } | Move::SlideCrossing { index, .. } => {
            let (lower, upper) = (events[index], events[index + 1]);
            if !(lower.is_critical() && upper.is_critical()) {
                return 0;
            }
            let k = profile[index] as isize;
            let old_middle = k - lower.strands_below() as isize + lower.strands_above() as isize;
            let new_middle = k - upper.strands_below() as isize + upper.strands_above() as isize;
            new_middle - old_middle
        }
        Move::CancelPair { index } => -(2 * profile[index] as isize + 2),
        Move::CreatePair { index, .. } => 2 * profile[index] as isize + 2,
    }
}

pub fn apply_move(p: &MorsePresentation, m: Move) -> Result<MorsePresentation, SearchError> {
    let illegal = SearchError::IllegalMove(m);
    let mut events = p.events().to_vec();
    match m {
        Move::FarCommute { index, .. } | Move::SlideCrossing { index, .. } | Move::CancelPair { index } => {
            if !moves_at(p, index).contains(&m) {
                return Err(illegal);
            }
            match m {
                Move::FarCommute { placement, .. } | Move::SlideCrossing { placement, .. } => {
                    let (a, b) = commuted(events[index], events[index + 1], placement).ok_or(illegal.clone())?;
                    events[index] = a;
                    events[index + 1] = b;
                }
                _ => {
                    events.drain(index..index + 2);
                }
            }
        }
        Move::CreatePair { index, strand, side } => {
            if !create_is_legal(p, index, strand) {
                return Err(illegal);
            }
            let pair = match side {
                Placement::Right => [MorseEvent::Cup(strand), MorseEvent::Cap(strand + 1)],
                Placement::Left => [MorseEvent::Cup(strand + 1), MorseEvent::Cap(strand)],
            };
            events.splice(index..index, pair);
        }
    }
    validate(events).map_err(|_| illegal)
}
