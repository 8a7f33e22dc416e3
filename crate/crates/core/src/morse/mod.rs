//! Morse presentations of knots.
//!
//! A presentation is a bottom-to-top word of events acting on a row of
//! vertical strands. Cups and caps are the minima and maxima of the height
//! function restricted to the knot; crossings transpose two adjacent strands
//! and are regular for the height function.

mod format;

pub use format::{parse_morse, serialize_morse};

use serde::Serialize;
use std::fmt;
use thiserror::Error;

/// One event of a Morse word. The payload is the 0-based strand position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum MorseEvent {
    /// Inserts two new adjacent strands at `p`, `p + 1`.
    Cup(usize),
    /// Joins and removes strands `p`, `p + 1`.
    Cap(usize),
    /// Positive crossing of strands `p`, `p + 1`.
    CrossPos(usize),
    /// Negative crossing of strands `p`, `p + 1`.
    CrossNeg(usize),
}

impl MorseEvent {
    pub fn position(self) -> usize {
        match self {
            MorseEvent::Cup(p) | MorseEvent::Cap(p) | MorseEvent::CrossPos(p) | MorseEvent::CrossNeg(p) => p,
        }
    }

    /// Same kind, different position.
    pub fn at(self, p: usize) -> Self {
        match self {
            MorseEvent::Cup(_) => MorseEvent::Cup(p),
            MorseEvent::Cap(_) => MorseEvent::Cap(p),
            MorseEvent::CrossPos(_) => MorseEvent::CrossPos(p),
            MorseEvent::CrossNeg(_) => MorseEvent::CrossNeg(p),
        }
    }

    /// Cups and caps are critical for the height function; crossings are not.
    pub fn is_critical(self) -> bool {
        matches!(self, MorseEvent::Cup(_) | MorseEvent::Cap(_))
    }

    pub fn is_crossing(self) -> bool {
        !self.is_critical()
    }

    /// Number of strands consumed from the level below.
    pub fn strands_below(self) -> usize {
        match self {
            MorseEvent::Cup(_) => 0,
            _ => 2,
        }
    }

    /// Number of strands produced on the level above.
    pub fn strands_above(self) -> usize {
        match self {
            MorseEvent::Cap(_) => 0,
            _ => 2,
        }
    }
}

impl fmt::Display for MorseEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MorseEvent::Cup(p) => write!(f, "cup {p}"),
            MorseEvent::Cap(p) => write!(f, "cap {p}"),
            MorseEvent::CrossPos(p) => write!(f, "x+ {p}"),
            MorseEvent::CrossNeg(p) => write!(f, "x- {p}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorseError {
    #[error("empty event word")]
    Empty,
    #[error("event {index}: cap needs two strands but only {strands} present")]
    NegativeStrands { index: usize, strands: usize },
    #[error("event {index} ({event}): position out of range for {strands} strands")]
    InvalidPosition { index: usize, event: MorseEvent, strands: usize },
    #[error("word ends with {strands} open strands")]
    NonZeroEnd { strands: usize },
    #[error("word traces {components} components, not a knot")]
    MultiComponent { components: usize },
}

fn check_event(index: usize, event: MorseEvent, strands: usize) -> Result<usize, MorseError> {
    let p = event.position();
    match event {
        MorseEvent::Cup(_) => {
            if p > strands {
                return Err(MorseError::InvalidPosition { index, event, strands });
            }
            Ok(strands + 2)
        }
        MorseEvent::Cap(_) => {
            if strands < 2 {
                return Err(MorseError::NegativeStrands { index, strands });
            }
            if p + 2 > strands {
                return Err(MorseError::InvalidPosition { index, event, strands });
            }
            Ok(strands - 2)
        }
        MorseEvent::CrossPos(_) | MorseEvent::CrossNeg(_) => {
            if p + 2 > strands {
                return Err(MorseError::InvalidPosition { index, event, strands });
            }
            Ok(strands)
        }
    }
}

/// Strand-count profile k_0 = 0, k_1, ..., k_m of a structurally valid word.
fn strand_profile(events: &[MorseEvent]) -> Result<Vec<usize>, MorseError> {
    if events.is_empty() {
        return Err(MorseError::Empty);
    }
    let mut profile = Vec::with_capacity(events.len() + 1);
    let mut k = 0;
    profile.push(0);
    for (i, &e) in events.iter().enumerate() {
        k = check_event(i, e, k)?;
        profile.push(k);
    }
    if k != 0 {
        return Err(MorseError::NonZeroEnd { strands: k });
    }
    Ok(profile)
}

struct DisjointSet {
    parent: Vec<usize>,
}

impl DisjointSet {
    fn new() -> Self {
        Self { parent: Vec::new() }
    }

    fn make(&mut self) -> usize {
        self.parent.push(self.parent.len());
        self.parent.len() - 1
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// Number of closed components traced by a balanced word.
///
/// Each cup opens a fresh arc; caps glue arcs; crossings only permute
/// positions. Works for links as well as knots.
pub fn count_components(events: &[MorseEvent]) -> Result<usize, MorseError> {
    strand_profile(events)?;
    let mut sets = DisjointSet::new();
    let mut row: Vec<usize> = Vec::new();
    for &e in events {
        let p = e.position();
        match e {
            MorseEvent::Cup(_) => {
                let arc = sets.make();
                row.splice(p..p, [arc, arc]);
            }
            MorseEvent::Cap(_) => {
                sets.union(row[p], row[p + 1]);
                row.drain(p..p + 2);
            }
            MorseEvent::CrossPos(_) | MorseEvent::CrossNeg(_) => row.swap(p, p + 1),
        }
    }
    let n = sets.parent.len();
    let mut roots: Vec<usize> = (0..n).map(|x| sets.find(x)).collect();
    roots.sort_unstable();
    roots.dedup();
    Ok(roots.len())
}

/// A validated Morse word describing a single knot.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MorsePresentation {
    events: Vec<MorseEvent>,
    profile: Vec<usize>,
}

/// Validates a raw event word.
pub fn validate(events: Vec<MorseEvent>) -> Result<MorsePresentation, MorseError> {
    let profile = strand_profile(&events)?;
    let components = count_components(&events)?;
    if components != 1 {
        return Err(MorseError::MultiComponent { components });
    }
    Ok(MorsePresentation { events, profile })
}

/// Alternating thick and thin level counts of a presentation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThickThinDecomposition {
    pub thick: Vec<usize>,
    pub thin: Vec<usize>,
}

impl ThickThinDecomposition {
    /// Extracts local maxima and minima from a level-count sequence. The
    /// sequence is padded with a virtual empty level at both ends.
    pub fn from_counts(counts: &[usize]) -> Self {
        let mut thick = Vec::new();
        let mut thin = Vec::new();
        for i in 0..counts.len() {
            let below = if i == 0 { 0 } else { counts[i - 1] };
            let above = counts.get(i + 1).copied().unwrap_or(0);
            let c = counts[i];
            if c > below && c > above {
                thick.push(c);
            } else if c < below && c < above {
                thin.push(c);
            }
        }
        Self { thick, thin }
    }

    /// ½(Σ a_i² − Σ b_j²).
    pub fn width(&self) -> usize {
        let a: usize = self.thick.iter().map(|a| a * a).sum();
        let b: usize = self.thin.iter().map(|b| b * b).sum();
        (a - b) / 2
    }
}

impl MorsePresentation {
    pub fn events(&self) -> &[MorseEvent] {
        &self.events
    }

    pub fn into_events(self) -> Vec<MorseEvent> {
        self.events
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    /// Strand counts k_0, ..., k_m; `profile()[i]` is the count below event `i`.
    pub fn profile(&self) -> &[usize] {
        &self.profile
    }

    /// |K ∩ h⁻¹(r_i)| for one regular level between each pair of
    /// consecutive critical events.
    pub fn level_counts(&self) -> Vec<usize> {
        let critical: Vec<usize> = self
            .events
            .iter()
            .enumerate()
            .filter(|(_, e)| e.is_critical())
            .map(|(i, _)| i)
            .collect();
        critical[..critical.len() - 1]
            .iter()
            .map(|&i| self.profile[i + 1])
            .collect()
    }

    pub fn width(&self) -> usize {
        self.level_counts().iter().sum()
    }

    /// Number of maxima, equal to the number of minima.
    pub fn bridge_count(&self) -> usize {
        self.events.iter().filter(|e| matches!(e, MorseEvent::Cup(_))).count()
    }

    pub fn trunk(&self) -> usize {
        self.level_counts().into_iter().max().unwrap_or(0)
    }

    pub fn thick_thin(&self) -> ThickThinDecomposition {
        ThickThinDecomposition::from_counts(&self.level_counts())
    }

    /// True iff every cap lies above every cup.
    pub fn is_bridge_position(&self) -> bool {
        let last_cup = self.events.iter().rposition(|e| matches!(e, MorseEvent::Cup(_)));
        let first_cap = self.events.iter().position(|e| matches!(e, MorseEvent::Cap(_)));
        match (last_cup, first_cap) {
            (Some(cup), Some(cap)) => cup < cap,
            _ => true,
        }
    }

    /// Direction of every strand on every level, following one traversal of
    /// the knot: `+1` for upward, `-1` for downward. Entry `e` describes the
    /// strands just above event `e`.
    pub fn orientations(&self) -> Vec<Vec<i8>> {
        let m = self.events.len();
        let mut dirs: Vec<Vec<i8>> = (0..m).map(|e| vec![0; self.profile[e + 1]]).collect();
        // (level, position, going up)
        let (mut level, mut pos, mut up) = (0usize, 0usize, true);
        loop {
            if dirs[level][pos] != 0 {
                break;
            }
            dirs[level][pos] = if up { 1 } else { -1 };
            if up {
                let ev = self.events[level + 1];
                let p = ev.position();
                match ev {
                    MorseEvent::CrossPos(_) | MorseEvent::CrossNeg(_) => {
                        pos = swap_index(pos, p);
                        level += 1;
                    }
                    MorseEvent::Cup(_) => {
                        pos = if pos < p { pos } else { pos + 2 };
                        level += 1;
                    }
                    MorseEvent::Cap(_) => {
                        if pos < p {
                            level += 1;
                        } else if pos > p + 1 {
                            pos -= 2;
                            level += 1;
                        } else {
                            pos = if pos == p { p + 1 } else { p };
                            up = false;
                        }
                    }
                }
            } else {
                let ev = self.events[level];
                let p = ev.position();
                match ev {
                    MorseEvent::CrossPos(_) | MorseEvent::CrossNeg(_) => {
                        pos = swap_index(pos, p);
                        level -= 1;
                    }
                    MorseEvent::Cap(_) => {
                        pos = if pos < p { pos } else { pos + 2 };
                        level -= 1;
                    }
                    MorseEvent::Cup(_) => {
                        if pos < p {
                            level -= 1;
                        } else if pos > p + 1 {
                            pos -= 2;
                            level -= 1;
                        } else {
                            pos = if pos == p { p + 1 } else { p };
                            up = true;
                        }
                    }
                }
            }
        }
        dirs
    }
}

fn swap_index(pos: usize, p: usize) -> usize {
    if pos == p {
        p + 1
    } else if pos == p + 1 {
        p
    } else {
        pos
    }
}

impl fmt::Display for MorsePresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serialize_morse(self.events()))
    }
}
