//! Bundled knot words.
//!
//! The words are fixtures with declared presentation invariants; nothing
//! here certifies a knot type.

use crate::morse::{validate, MorseEvent, MorsePresentation};
use thiserror::Error;
use MorseEvent::*;

#[derive(Debug, Clone, Copy)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub events: &'static [MorseEvent],
    pub bridge: usize,
    pub width: usize,
    /// Two-bridge knots, usable as companions with width 8.
    pub two_bridge: bool,
}

impl CatalogEntry {
    pub fn presentation(&self) -> MorsePresentation {
        validate(self.events.to_vec()).expect("catalog words are valid")
    }
}

pub const ENTRIES: &[CatalogEntry] = &[
    CatalogEntry {
        name: "unknot",
        events: &[Cup(0), Cap(0)],
        bridge: 1,
        width: 2,
        two_bridge: false,
    },
    CatalogEntry {
        name: "trefoil",
        events: &[Cup(0), Cup(2), CrossPos(1), CrossPos(1), CrossPos(1), Cap(2), Cap(0)],
        bridge: 2,
        width: 8,
        two_bridge: true,
    },
    CatalogEntry {
        name: "figure-eight",
        events: &[Cup(0), Cup(2), CrossPos(1), CrossPos(1), CrossNeg(0), CrossPos(1), Cap(2), Cap(0)],
        bridge: 2,
        width: 8,
        two_bridge: true,
    },
];

pub fn get(name: &str) -> Option<&'static CatalogEntry> {
    ENTRIES.iter().find(|e| e.name == name)
}

/// Catalog entries usable as nontrivial companions.
pub fn companions() -> impl Iterator<Item = &'static CatalogEntry> {
    ENTRIES.iter().filter(|e| e.two_bridge)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("catalog entry `{name}`: {message}")]
pub struct CatalogError {
    pub name: &'static str,
    pub message: String,
}

/// Declared against computed invariants for every entry.
pub fn self_check() -> Result<(), CatalogError> {
    for e in ENTRIES {
        let p = validate(e.events.to_vec()).map_err(|err| CatalogError { name: e.name, message: err.to_string() })?;
        let mismatch = |what: &str, declared: usize, computed: usize| CatalogError {
            name: e.name,
            message: format!("declared {what} {declared}, computed {computed}"),
        };
        if p.bridge_count() != e.bridge {
            return Err(mismatch("bridge", e.bridge, p.bridge_count()));
        }
        if p.width() != e.width {
            return Err(mismatch("width", e.width, p.width()));
        }
        if e.two_bridge && (e.width != 8 || e.bridge != 2) {
            return Err(CatalogError { name: e.name, message: "two-bridge entries must have width 8 and bridge 2".into() });
        }
    }
    Ok(())
}
