//! Synthetic inessential saddles spliced into clean foliation words.
//!
//! Three shapes are supported, each adding one extremum and one inessential
//! saddle:
//!
//! * finger below: a bowl `tmin d` rises beside curve `c` and is banded onto
//!   it (`sad i c d -> z`);
//! * finger above: `c` pinches off an empty cap (`sad i c -> z d`) that later
//!   closes with `tmax d`;
//! * pocket: a dent `tmin d in c` appears inside `c` and is banded onto it.
//!
//! After the splice `c` continues under the new name `z`.

use super::{Content, CurveId, FoliationError, FoliationWord, Location, SaddleKind, TorusEvent};
use rand::Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FingerShape {
    Below,
    Above,
    Pocket,
}

fn renamed_after(events: &[TorusEvent], from: usize, old: CurveId, new: CurveId) -> Vec<TorusEvent> {
    events[from..]
        .iter()
        .map(|e| super::eliminate::rename_curve(e.clone(), old, new))
        .collect()
}

/// Splices one finger on curve `curve`. The extremum goes before event
/// `first`, the saddle before event `second` (indices into the input word,
/// `first <= second`). For [`FingerShape::Above`] the saddle comes first and
/// the maximum second.
pub fn splice(
    fw: &FoliationWord,
    shape: FingerShape,
    curve: CurveId,
    first: usize,
    second: usize,
) -> Result<FoliationWord, FoliationError> {
    assert!(first <= second && second <= fw.events().len(), "splice positions out of order");
    let levels = fw.levels();
    let events = fw.events();
    let base = fw.max_curve_id() + 1;
    let (d, z) = (CurveId(base), CurveId(base + 1));
    let at_second = levels[second]
        .curves
        .get(&curve)
        .ok_or(FoliationError::UnknownCurve { index: second, curve })?;

    let mut out: Vec<TorusEvent> = Vec::with_capacity(events.len() + 2);
    match shape {
        FingerShape::Below | FingerShape::Pocket => {
            let at = match shape {
                FingerShape::Below => at_second.parent,
                _ => Location::Inside(curve),
            };
            out.extend_from_slice(&events[..first]);
            out.push(TorusEvent::Min { curve: d, at });
            out.extend_from_slice(&events[first..second]);
            out.push(TorusEvent::Saddle { essential: false, kind: SaddleKind::Merge { inputs: [curve, d], output: z } });
            out.extend(renamed_after(events, second, curve, z));
        }
        FingerShape::Above => {
            let content = levels[first]
                .curves
                .get(&curve)
                .ok_or(FoliationError::UnknownCurve { index: first, curve })?
                .content;
            out.extend_from_slice(&events[..first]);
            out.push(TorusEvent::Saddle {
                essential: false,
                kind: SaddleKind::Split { input: curve, outputs: [(z, content), (d, Content::default())] },
            });
            let middle = renamed_after(&events[..second], first, curve, z);
            out.extend(middle);
            out.push(TorusEvent::Max { curve: d });
            out.extend(renamed_after(events, second, curve, z));
        }
    }
    FoliationWord::new(out)
}

/// Splices `count` random fingers into `fw`, retrying positions until each
/// splice yields a valid word.
pub fn random_fingers<R: Rng>(rng: &mut R, fw: &FoliationWord, count: usize) -> FoliationWord {
    let mut word = fw.clone();
    let mut placed = 0;
    while placed < count {
        let levels = word.levels();
        let len = word.events().len();
        let shape = match rng.gen_range(0..3) {
            0 => FingerShape::Below,
            1 => FingerShape::Above,
            _ => FingerShape::Pocket,
        };
        let a = rng.gen_range(0..=len);
        let b = rng.gen_range(0..=len);
        let (first, second) = (a.min(b), a.max(b));
        let anchor = if shape == FingerShape::Above { first } else { second };
        let live: Vec<CurveId> = levels[anchor].curves.keys().copied().collect();
        if live.is_empty() {
            continue;
        }
        let curve = live[rng.gen_range(0..live.len())];
        if let Ok(next) = splice(&word, shape, curve, first, second) {
            word = next;
            placed += 1;
        }
    }
    word
}

#[cfg(test)]
mod tests {
    use super::super::{eliminate_inessential_saddles, parse_foliation, serialize_foliation};
    use super::*;

    const TUBE: &str = "tmin 0\nkcup 0\nsad e 0 -> 1:1:1 2:1:-1\nsad e 1 2 -> 3\nkcap 3\ntmax 3\n";

    #[test]
    fn below_finger_layout() {
        let fw = parse_foliation(TUBE).unwrap();
        let fingered = splice(&fw, FingerShape::Below, CurveId(1), 0, 3).unwrap();
        assert_eq!(
            serialize_foliation(&fingered),
            "tmin 4\ntmin 0\nkcup 0\nsad e 0 -> 1:1:1 2:1:-1\nsad i 1 4 -> 5\nsad e 5 2 -> 3\nkcap 3\ntmax 3\n"
        );
        assert_eq!(fingered.detect_inessential(), vec![4]);
        assert_eq!(eliminate_inessential_saddles(&fingered).unwrap(), fw);
    }

    #[test]
    fn above_finger_layout() {
        let fw = parse_foliation(TUBE).unwrap();
        let fingered = splice(&fw, FingerShape::Above, CurveId(2), 3, 3).unwrap();
        assert_eq!(
            serialize_foliation(&fingered),
            "tmin 0\nkcup 0\nsad e 0 -> 1:1:1 2:1:-1\nsad i 2 -> 5:1:-1 4:0:0\ntmax 4\nsad e 1 5 -> 3\nkcap 3\ntmax 3\n"
        );
        assert_eq!(eliminate_inessential_saddles(&fingered).unwrap(), fw);
    }

    #[test]
    fn pocket_needs_a_live_host() {
        let fw = parse_foliation(TUBE).unwrap();
        assert!(splice(&fw, FingerShape::Pocket, CurveId(1), 0, 3).is_err());
        let ok = splice(&fw, FingerShape::Pocket, CurveId(1), 3, 3).unwrap();
        assert_eq!(eliminate_inessential_saddles(&ok).unwrap(), fw);
    }
}
