//! Braid-pattern satellites.
//!
//! A satellite is built by cabling a companion presentation: every strand of
//! the companion becomes a block of n parallel strands (the tube), and the
//! pattern braid is inserted into one tube right after its minimum.

mod braid;

pub use braid::{full_twists, parse_braid, serialize_braid, BraidLetter, BraidWord};

use crate::morse::{validate, MorseError, MorseEvent, MorsePresentation};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SatelliteError {
    #[error("braid index must be at least 1")]
    ZeroIndex,
    #[error("generator {generator} out of range for braid index {index}")]
    InvalidGenerator { generator: usize, index: usize },
    #[error("pattern permutation has {cycles} cycles; the satellite would be a link")]
    NotAKnot { cycles: usize },
    #[error("insertion site {site} out of range: companion has {cups} cups")]
    InvalidSite { site: usize, cups: usize },
    #[error("cabled word failed validation: {0}")]
    Morse(#[from] MorseError),
    #[error("canonical invariants disagree with the cabled word: {0}")]
    InvariantMismatch(String),
}

/// Companion, pattern, framing and the cup whose tube receives the pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SatelliteSpec {
    pub companion: MorsePresentation,
    pub pattern: BraidWord,
    pub framing_twists: i32,
    pub insertion_site: usize,
}

impl SatelliteSpec {
    pub fn new(companion: MorsePresentation, pattern: BraidWord) -> Self {
        Self { companion, pattern, framing_twists: 0, insertion_site: 0 }
    }

    pub fn with_framing(mut self, f: i32) -> Self {
        self.framing_twists = f;
        self
    }

    pub fn with_site(mut self, site: usize) -> Self {
        self.insertion_site = site;
        self
    }

    pub fn winding(&self) -> usize {
        self.pattern.winding_number()
    }

    /// Full twists are pure braids, so only the letters decide whether the
    /// cable closes up into a single component.
    pub fn check(&self) -> Result<(), SatelliteError> {
        let cycles = self.pattern.cycle_count();
        if cycles != 1 {
            return Err(SatelliteError::NotAKnot { cycles });
        }
        let cups = self.companion.bridge_count();
        if self.insertion_site >= cups {
            return Err(SatelliteError::InvalidSite { site: self.insertion_site, cups });
        }
        Ok(())
    }

    /// Crossings inserted into the tube at strand `offset`.
    fn pattern_crossings(&self, offset: usize) -> impl Iterator<Item = MorseEvent> + '_ {
        let twists = full_twists(self.winding(), self.framing_twists);
        self.pattern
            .letters()
            .iter()
            .copied()
            .chain(twists)
            .map(move |l| l.crossing(offset))
    }
}

/// Crossing word that swaps the blocks `[offset, offset + n)` and
/// `[offset + n, offset + 2n)`, keeping the order inside each block. The
/// right-most strand of the left block travels across first.
pub fn block_transposition(offset: usize, n: usize, positive: bool) -> Vec<MorseEvent> {
    let mut out = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let p = offset + (n - 1 - i) + j;
            out.push(if positive { MorseEvent::CrossPos(p) } else { MorseEvent::CrossNeg(p) });
        }
    }
    out
}

/// Canonical satellite presentation obtained by cabling the companion.
pub fn cable(spec: &SatelliteSpec) -> Result<MorsePresentation, SatelliteError> {
    spec.check()?;
    let n = spec.winding();
    let mut events = Vec::new();
    let mut cups_seen = 0;
    for &ev in spec.companion.events() {
        let base = n * ev.position();
        match ev {
            MorseEvent::Cup(_) => {
                events.extend((0..n).map(|i| MorseEvent::Cup(base + i)));
                if cups_seen == spec.insertion_site {
                    events.extend(spec.pattern_crossings(base));
                }
                cups_seen += 1;
            }
            MorseEvent::Cap(_) => events.extend((0..n).rev().map(|i| MorseEvent::Cap(base + i))),
            MorseEvent::CrossPos(_) => events.extend(block_transposition(base, n, true)),
            MorseEvent::CrossNeg(_) => events.extend(block_transposition(base, n, false)),
        }
    }
    Ok(validate(events)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CanonicalInvariants {
    pub width: usize,
    pub bridge: usize,
    pub trunk: usize,
}

/// Width, bridge and trunk of the canonical cable, predicted by scaling the
/// companion's presentation invariants by n², n and n, and cross-checked
/// against the cabled word.
pub fn canonical_invariants(spec: &SatelliteSpec) -> Result<CanonicalInvariants, SatelliteError> {
    let n = spec.winding();
    let j = &spec.companion;
    let predicted = CanonicalInvariants {
        width: n * n * j.width(),
        bridge: n * j.bridge_count(),
        trunk: n * j.trunk(),
    };
    let k = cable(spec)?;
    let measured = CanonicalInvariants { width: k.width(), bridge: k.bridge_count(), trunk: k.trunk() };
    if predicted != measured {
        return Err(SatelliteError::InvariantMismatch(format!("predicted {predicted:?}, measured {measured:?}")));
    }
    Ok(measured)
}
