//! Singular foliation of the companion torus.
//!
//! A [`FoliationWord`] lists, bottom to top, the critical events of the
//! height function on the torus T = ∂V (minima, maxima and saddles) together
//! with the knot's own minima and maxima, each located in the region of the
//! level sphere where it happens. Replaying the word yields, for every regular
//! level, the set of level curves T ∩ h⁻¹(r) with their nesting, their
//! essentiality in T, and the knot points they enclose.

mod disk;
mod eliminate;
pub mod fixtures;
mod format;

pub use disk::{disk_extrema, disk_extremum_audit, DiskExtremum};
pub use eliminate::eliminate_inessential_saddles;
pub use format::{parse_foliation, serialize_foliation};

use crate::satellite::{SatelliteError, SatelliteSpec};
use serde::Serialize;
use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::ops::{Add, Sub};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CurveId(pub u32);

impl fmt::Display for CurveId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A region of the level sphere: the outermost one, or the one directly
/// inside a curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Location {
    Root,
    Inside(CurveId),
}

/// Which side of T a region of the level sphere lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Side {
    InV,
    OutV,
}

impl Side {
    pub fn flip(self) -> Self {
        match self {
            Side::InV => Side::OutV,
            Side::OutV => Side::InV,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum KCritical {
    Cup,
    Cap,
}

/// Knot points in a region: how many, and their algebraic count.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize)]
pub struct Content {
    pub points: u32,
    pub signed: i32,
}

impl Content {
    pub fn new(points: u32, signed: i32) -> Self {
        Self { points, signed }
    }

    pub fn is_empty(self) -> bool {
        self.points == 0 && self.signed == 0
    }

    fn is_consistent(self) -> bool {
        self.signed.unsigned_abs() <= self.points && (self.points - self.signed.unsigned_abs()).is_multiple_of(2)
    }
}

impl Add for Content {
    type Output = Content;
    fn add(self, o: Content) -> Content {
        Content { points: self.points + o.points, signed: self.signed + o.signed }
    }
}

impl Sub for Content {
    type Output = Content;
    fn sub(self, o: Content) -> Content {
        Content { points: self.points - o.points, signed: self.signed - o.signed }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SaddleKind {
    /// Two curves band together into one.
    Merge { inputs: [CurveId; 2], output: CurveId },
    /// One curve pinches into two siblings; the knot points of the input are
    /// handed to the outputs as annotated. When an essential curve splits
    /// along an inessential saddle, the first output is the essential one.
    Split { input: CurveId, outputs: [(CurveId, Content); 2] },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TorusEvent {
    Min { curve: CurveId, at: Location },
    Max { curve: CurveId },
    Saddle { essential: bool, kind: SaddleKind },
    /// A minimum or maximum of the knot inside the region directly inside `at`.
    K { kind: KCritical, at: CurveId },
}

impl TorusEvent {
    pub fn is_inessential_saddle(&self) -> bool {
        matches!(self, TorusEvent::Saddle { essential: false, .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FoliationError {
    #[error("event {index}: unknown or dead curve {curve}")]
    UnknownCurve { index: usize, curve: CurveId },
    #[error("event {index}: curve id {curve} already used")]
    ReusedCurve { index: usize, curve: CurveId },
    #[error("event {index}: maximum on essential curve {curve}")]
    EssentialExtremum { index: usize, curve: CurveId },
    #[error("event {index}: curve {curve} still encloses knot points or curves at its maximum")]
    NonEmptyMax { index: usize, curve: CurveId },
    #[error("event {index}: knot event in region of curve {curve}, which lies outside V")]
    KOutsideV { index: usize, curve: CurveId },
    #[error("event {index}: knot points inside curve {curve} would become inconsistent")]
    ContentUnderflow { index: usize, curve: CurveId },
    #[error("event {index}: knot points are not conserved by the saddle")]
    ContentMismatch { index: usize },
    #[error("event {index}: split of curve {curve}, which still encloses other curves")]
    NestedSplit { index: usize, curve: CurveId },
    #[error("event {index}: merged curves do not bound a common region")]
    NotAdjacent { index: usize },
    #[error("event {index}: saddle essentiality flag contradicts its curves")]
    EssentialityMismatch { index: usize },
    #[error("{count} curves remain after the last event")]
    OpenCurves { count: usize },
    #[error("#min + #max = {} but #saddle = {saddles}", minima + maxima)]
    EulerCharacteristic { minima: usize, maxima: usize, saddles: usize },
    #[error("inessential saddles present")]
    InessentialSaddlesPresent,
    #[error("no inessential saddle can be canceled (first at event {index})")]
    NonCancelable { index: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveState {
    pub essential: bool,
    pub parent: Location,
    /// Side of T just inside the curve.
    pub inside: Side,
    /// Knot points directly inside the curve, outside its children.
    pub content: Content,
}

/// The level curves on one regular level.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LevelState {
    pub curves: BTreeMap<CurveId, CurveState>,
}

impl LevelState {
    pub fn side_of(&self, at: Location) -> Option<Side> {
        match at {
            Location::Root => Some(Side::OutV),
            Location::Inside(c) => self.curves.get(&c).map(|s| s.inside),
        }
    }

    pub fn children(&self, at: Location) -> Vec<CurveId> {
        self.curves.iter().filter(|(_, s)| s.parent == at).map(|(&c, _)| c).collect()
    }

    fn live(&self, index: usize, c: CurveId) -> Result<&CurveState, FoliationError> {
        self.curves.get(&c).ok_or(FoliationError::UnknownCurve { index, curve: c })
    }

    fn reparent(&mut self, from: Location, to: Location) {
        for s in self.curves.values_mut() {
            if s.parent == from {
                s.parent = to;
            }
        }
    }

    fn apply(&mut self, index: usize, event: &TorusEvent, used: &mut HashSet<CurveId>) -> Result<(), FoliationError> {
        let mut fresh = |c: CurveId| {
            if used.insert(c) {
                Ok(())
            } else {
                Err(FoliationError::ReusedCurve { index, curve: c })
            }
        };
        match *event {
            TorusEvent::Min { curve, at } => {
                let side = match at {
                    Location::Root => Side::OutV,
                    Location::Inside(p) => self.live(index, p)?.inside,
                };
                fresh(curve)?;
                self.curves.insert(
                    curve,
                    CurveState { essential: false, parent: at, inside: side.flip(), content: Content::default() },
                );
            }
            TorusEvent::Max { curve } => {
                let s = self.live(index, curve)?;
                if s.essential {
                    return Err(FoliationError::EssentialExtremum { index, curve });
                }
                if !s.content.is_empty() || !self.children(Location::Inside(curve)).is_empty() {
                    return Err(FoliationError::NonEmptyMax { index, curve });
                }
                self.curves.remove(&curve);
            }
            TorusEvent::K { kind, at } => {
                let s = self.live(index, at)?;
                if s.inside != Side::InV {
                    return Err(FoliationError::KOutsideV { index, curve: at });
                }
                let s = self.curves.get_mut(&at).expect("checked live");
                match kind {
                    KCritical::Cup => s.content.points += 2,
                    KCritical::Cap => {
                        if s.content.points < 2 {
                            return Err(FoliationError::ContentUnderflow { index, curve: at });
                        }
                        s.content.points -= 2;
                        if !s.content.is_consistent() {
                            return Err(FoliationError::ContentUnderflow { index, curve: at });
                        }
                    }
                }
            }
            TorusEvent::Saddle { essential, kind: SaddleKind::Merge { inputs: [a, b], output } } => {
                if a == b {
                    return Err(FoliationError::NotAdjacent { index });
                }
                let sa = self.live(index, a)?.clone();
                let sb = self.live(index, b)?.clone();
                if essential != (sa.essential && sb.essential) {
                    return Err(FoliationError::EssentialityMismatch { index });
                }
                fresh(output)?;
                let merged_essential = sa.essential != sb.essential;
                if sa.parent == sb.parent {
                    self.curves.remove(&a);
                    self.curves.remove(&b);
                    self.reparent(Location::Inside(a), Location::Inside(output));
                    self.reparent(Location::Inside(b), Location::Inside(output));
                    self.curves.insert(
                        output,
                        CurveState {
                            essential: merged_essential,
                            parent: sa.parent,
                            inside: sa.inside,
                            content: sa.content + sb.content,
                        },
                    );
                } else {
                    let (outer, so, inner, si) = if sb.parent == Location::Inside(a) {
                        (a, sa, b, sb)
                    } else if sa.parent == Location::Inside(b) {
                        (b, sb, a, sa)
                    } else {
                        return Err(FoliationError::NotAdjacent { index });
                    };
                    self.curves.remove(&outer);
                    self.curves.remove(&inner);
                    // the inner disk opens into the region around the outer curve
                    self.reparent(Location::Inside(inner), so.parent);
                    self.reparent(Location::Inside(outer), Location::Inside(output));
                    match so.parent {
                        Location::Root if !si.content.is_empty() => {
                            return Err(FoliationError::ContentMismatch { index });
                        }
                        Location::Root => {}
                        Location::Inside(p) => {
                            let ps = self.curves.get_mut(&p).expect("parent of a live curve is live");
                            ps.content = ps.content + si.content;
                        }
                    }
                    self.curves.insert(
                        output,
                        CurveState {
                            essential: merged_essential,
                            parent: so.parent,
                            inside: so.inside,
                            content: so.content,
                        },
                    );
                }
            }
            TorusEvent::Saddle { essential, kind: SaddleKind::Split { input, outputs: [(a, ca), (b, cb)] } } => {
                let s = self.live(index, input)?.clone();
                if !self.children(Location::Inside(input)).is_empty() {
                    return Err(FoliationError::NestedSplit { index, curve: input });
                }
                if a == b {
                    return Err(FoliationError::ReusedCurve { index, curve: a });
                }
                if ca + cb != s.content || !ca.is_consistent() || !cb.is_consistent() {
                    return Err(FoliationError::ContentMismatch { index });
                }
                if s.inside == Side::OutV && !(ca.is_empty() && cb.is_empty()) {
                    return Err(FoliationError::ContentMismatch { index });
                }
                let (ea, eb) = match (essential, s.essential) {
                    (true, true) => return Err(FoliationError::EssentialityMismatch { index }),
                    (true, false) => (true, true),
                    (false, true) => (true, false),
                    (false, false) => (false, false),
                };
                fresh(a)?;
                fresh(b)?;
                self.curves.remove(&input);
                for (c, e, content) in [(a, ea, ca), (b, eb, cb)] {
                    self.curves.insert(c, CurveState { essential: e, parent: s.parent, inside: s.inside, content });
                }
            }
        }
        Ok(())
    }
}

/// A validated foliation word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FoliationWord {
    events: Vec<TorusEvent>,
}

impl FoliationWord {
    pub fn new(events: Vec<TorusEvent>) -> Result<Self, FoliationError> {
        replay(&events)?;
        Ok(Self { events })
    }

    pub fn events(&self) -> &[TorusEvent] {
        &self.events
    }

    /// Level states; entry `i` is the level just below event `i`, and the
    /// final entry is the (empty) level above every event.
    pub fn levels(&self) -> Vec<LevelState> {
        replay(&self.events).expect("validated on construction")
    }

    /// The knot's critical events in order.
    pub fn k_sequence(&self) -> Vec<KCritical> {
        self.events
            .iter()
            .filter_map(|e| match e {
                TorusEvent::K { kind, .. } => Some(*kind),
                _ => None,
            })
            .collect()
    }

    /// Indices of inessential saddles, bottom-up.
    pub fn detect_inessential(&self) -> Vec<usize> {
        self.events
            .iter()
            .enumerate()
            .filter(|(_, e)| e.is_inessential_saddle())
            .map(|(i, _)| i)
            .collect()
    }

    /// (#min, #max, #saddle).
    pub fn critical_counts(&self) -> (usize, usize, usize) {
        critical_counts(&self.events)
    }

    pub(crate) fn max_curve_id(&self) -> u32 {
        self.events.iter().flat_map(event_curves).map(|c| c.0).max().unwrap_or(0)
    }
}

/// Every curve id an event mentions, including its location.
pub(crate) fn event_curves(e: &TorusEvent) -> Vec<CurveId> {
    match e {
        TorusEvent::Min { curve, at: Location::Inside(p) } => vec![*curve, *p],
        TorusEvent::Min { curve, at: Location::Root } => vec![*curve],
        TorusEvent::Max { curve } => vec![*curve],
        TorusEvent::K { at, .. } => vec![*at],
        TorusEvent::Saddle { kind: SaddleKind::Merge { inputs, output }, .. } => vec![inputs[0], inputs[1], *output],
        TorusEvent::Saddle { kind: SaddleKind::Split { input, outputs }, .. } => {
            vec![*input, outputs[0].0, outputs[1].0]
        }
    }
}

fn critical_counts(events: &[TorusEvent]) -> (usize, usize, usize) {
    let mut counts = (0, 0, 0);
    for e in events {
        match e {
            TorusEvent::Min { .. } => counts.0 += 1,
            TorusEvent::Max { .. } => counts.1 += 1,
            TorusEvent::Saddle { .. } => counts.2 += 1,
            TorusEvent::K { .. } => {}
        }
    }
    counts
}

fn replay(events: &[TorusEvent]) -> Result<Vec<LevelState>, FoliationError> {
    let mut state = LevelState::default();
    let mut used = HashSet::new();
    let mut levels = Vec::with_capacity(events.len() + 1);
    levels.push(state.clone());
    for (i, e) in events.iter().enumerate() {
        state.apply(i, e, &mut used)?;
        levels.push(state.clone());
    }
    if !state.curves.is_empty() {
        return Err(FoliationError::OpenCurves { count: state.curves.len() });
    }
    let (minima, maxima, saddles) = critical_counts(events);
    if minima + maxima != saddles {
        return Err(FoliationError::EulerCharacteristic { minima, maxima, saddles });
    }
    Ok(levels)
}

/// Canonical foliation of the tube around the companion.
///
/// Each companion minimum opens a bowl (torus minimum), receives the n knot
/// minima of its cable block, and splits along an essential saddle into the
/// two meridian curves of its legs; each maximum mirrors this. Crossings and
/// pattern letters leave the torus foliation untouched.
pub fn induced_foliation(spec: &SatelliteSpec) -> Result<FoliationWord, SatelliteError> {
    spec.check()?;
    let n = spec.winding() as u32;
    let companion = &spec.companion;
    let dirs = companion.orientations();
    let mut tubes: Vec<CurveId> = Vec::new();
    let mut next = 0u32;
    let mut fresh = || {
        next += 1;
        CurveId(next - 1)
    };
    let mut events = Vec::new();
    for (e, &ev) in companion.events().iter().enumerate() {
        let p = ev.position();
        match ev {
            crate::MorseEvent::Cup(_) => {
                let bowl = fresh();
                events.push(TorusEvent::Min { curve: bowl, at: Location::Root });
                events.extend((0..n).map(|_| TorusEvent::K { kind: KCritical::Cup, at: bowl }));
                let (left, right) = (fresh(), fresh());
                let signed = n as i32 * dirs[e][p] as i32;
                events.push(TorusEvent::Saddle {
                    essential: true,
                    kind: SaddleKind::Split {
                        input: bowl,
                        outputs: [(left, Content::new(n, signed)), (right, Content::new(n, -signed))],
                    },
                });
                tubes.splice(p..p, [left, right]);
            }
            crate::MorseEvent::Cap(_) => {
                let lid = fresh();
                events.push(TorusEvent::Saddle {
                    essential: true,
                    kind: SaddleKind::Merge { inputs: [tubes[p], tubes[p + 1]], output: lid },
                });
                events.extend((0..n).map(|_| TorusEvent::K { kind: KCritical::Cap, at: lid }));
                events.push(TorusEvent::Max { curve: lid });
                tubes.drain(p..p + 2);
            }
            _ => tubes.swap(p, p + 1),
        }
    }
    Ok(FoliationWord::new(events).expect("canonical tube foliation is well formed"))
}
