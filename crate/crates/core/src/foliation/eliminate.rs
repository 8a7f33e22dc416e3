//! Cancellation of inessential saddles.
//!
//! An inessential saddle is canceled against the extremum bounding its
//! trivial disk: a merge against the minimum that created one of its inputs,
//! a split against the maximum that ends one of its outputs. Events that took
//! place inside the canceled disk keep their heights and are moved into the
//! region they would occupy once the disk is gone, so the knot's critical
//! sequence is untouched and no critical point is created.

use super::{CurveId, FoliationError, FoliationWord, LevelState, Location, SaddleKind, TorusEvent};

/// Removes all inessential saddles, one cancellation at a time.
pub fn eliminate_inessential_saddles(fw: &FoliationWord) -> Result<FoliationWord, FoliationError> {
    let mut word = fw.clone();
    while !word.detect_inessential().is_empty() {
        word = cancel_one(&word)?;
    }
    Ok(word)
}

fn cancel_one(word: &FoliationWord) -> Result<FoliationWord, FoliationError> {
    let levels = word.levels();
    let saddles = word.detect_inessential();
    for &s in &saddles {
        for candidate in candidates(word.events(), &levels, s) {
            let Ok(next) = FoliationWord::new(candidate) else { continue };
            if next.k_sequence() == word.k_sequence() {
                return Ok(next);
            }
        }
    }
    Err(FoliationError::NonCancelable { index: saddles[0] })
}

fn candidates(events: &[TorusEvent], levels: &[LevelState], s: usize) -> Vec<Vec<TorusEvent>> {
    let mut out = Vec::new();
    let TorusEvent::Saddle { kind, .. } = &events[s] else { return out };
    match kind {
        SaddleKind::Merge { inputs: [a, b], output } => {
            let before = &levels[s];
            for (disk, other) in [(*a, *b), (*b, *a)] {
                if before.curves[&disk].essential {
                    continue;
                }
                let Some(birth) = events.iter().position(|e| matches!(e, TorusEvent::Min { curve, .. } if *curve == disk))
                else {
                    continue;
                };
                let nested = match (before.curves[&disk].parent, before.curves[&other].parent) {
                    (p, q) if p == q => false,
                    (Location::Inside(p), _) if p == other => true,
                    _ => continue,
                };
                let target = |i: usize| -> Option<Location> {
                    let st = levels[i].curves.get(&other)?;
                    Some(if nested { st.parent } else { Location::Inside(other) })
                };
                if let Some(word) = rebuild(events, (birth, s), disk, target, (s, *output, other)) {
                    out.push(word);
                }
            }
        }
        SaddleKind::Split { input, outputs: [(a, _), (b, _)] } => {
            let after = &levels[s + 1];
            for (disk, other) in [(*b, *a), (*a, *b)] {
                if after.curves[&disk].essential {
                    continue;
                }
                let Some(death) = events.iter().position(|e| matches!(e, TorusEvent::Max { curve } if *curve == disk))
                else {
                    continue;
                };
                let target = |i: usize| -> Option<Location> {
                    levels[i].curves.contains_key(&other).then_some(Location::Inside(other))
                };
                if let Some(word) = rebuild(events, (s, death), disk, target, (s, other, *input)) {
                    out.push(word);
                }
            }
        }
    }
    out
}

/// Drops the two events in `removed`, moves every event strictly between
/// them that happens directly inside `disk` to `target(i)`, and renames
/// `rename.1` to `rename.2` in every event after `rename.0`.
fn rebuild(
    events: &[TorusEvent],
    removed: (usize, usize),
    disk: CurveId,
    target: impl Fn(usize) -> Option<Location>,
    rename: (usize, CurveId, CurveId),
) -> Option<Vec<TorusEvent>> {
    let (lo, hi) = removed;
    let mut out = Vec::with_capacity(events.len() - 2);
    for (i, e) in events.iter().enumerate() {
        if i == lo || i == hi {
            continue;
        }
        let mut e = e.clone();
        if lo < i && i < hi {
            e = relocate(e, disk, || target(i))?;
        }
        if i > rename.0 {
            e = rename_curve(e, rename.1, rename.2);
        }
        out.push(e);
    }
    Some(out)
}

fn relocate(e: TorusEvent, disk: CurveId, target: impl FnOnce() -> Option<Location>) -> Option<TorusEvent> {
    Some(match e {
        TorusEvent::Min { curve, at: Location::Inside(p) } if p == disk => TorusEvent::Min { curve, at: target()? },
        TorusEvent::K { kind, at } if at == disk => match target()? {
            Location::Inside(c) => TorusEvent::K { kind, at: c },
            Location::Root => return None,
        },
        other => other,
    })
}

pub(super) fn rename_curve(e: TorusEvent, from: CurveId, to: CurveId) -> TorusEvent {
    let r = |c: CurveId| if c == from { to } else { c };
    let rl = |l: Location| match l {
        Location::Inside(c) => Location::Inside(r(c)),
        Location::Root => Location::Root,
    };
    match e {
        TorusEvent::Min { curve, at } => TorusEvent::Min { curve: r(curve), at: rl(at) },
        TorusEvent::Max { curve } => TorusEvent::Max { curve: r(curve) },
        TorusEvent::K { kind, at } => TorusEvent::K { kind, at: r(at) },
        TorusEvent::Saddle { essential, kind: SaddleKind::Merge { inputs: [a, b], output } } => TorusEvent::Saddle {
            essential,
            kind: SaddleKind::Merge { inputs: [r(a), r(b)], output: r(output) },
        },
        TorusEvent::Saddle { essential, kind: SaddleKind::Split { input, outputs: [(a, ca), (b, cb)] } } => {
            TorusEvent::Saddle {
                essential,
                kind: SaddleKind::Split { input: r(input), outputs: [(r(a), ca), (r(b), cb)] },
            }
        }
    }
}
