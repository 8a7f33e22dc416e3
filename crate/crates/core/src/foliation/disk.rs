//! Which inessential level curves bound a disk of T holding a single extremum.
//!
//! Sweeping upward, the sublevel surface T ∩ h⁻¹(−∞, r] is tracked as a set
//! of components with their Euler characteristic, number of critical points
//! and number of boundary curves. A level curve bounds a disk below it exactly
//! when its component has one boundary curve and χ = 1. The sweep is then
//! repeated downward for disks above.

use super::{CurveId, FoliationError, FoliationWord, SaddleKind, TorusEvent};
use std::collections::{BTreeMap, HashMap};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub enum DiskExtremum {
    /// The curve bounds a disk below it containing only a minimum.
    Min,
    /// The curve bounds a disk above it containing only a maximum.
    Max,
    /// No single-extremum disk on either side.
    Unresolved,
}

#[derive(Clone, Copy, Default)]
struct Piece {
    chi: i32,
    critical: u32,
    boundary: u32,
}

enum Op {
    Birth(CurveId),
    Death(CurveId),
    Join([CurveId; 2], CurveId),
    Fork(CurveId, [CurveId; 2]),
    Nothing,
}

/// For each level (as in [`FoliationWord::levels`]), the curves that bound a
/// disk on the swept-from side holding exactly one critical point.
fn single_extremum_disks(ops: &[Op]) -> Vec<Vec<CurveId>> {
    let mut pieces: Vec<Piece> = Vec::new();
    let mut parent: Vec<usize> = Vec::new();
    let mut owner: HashMap<CurveId, usize> = HashMap::new();

    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }

    let snapshot = |owner: &HashMap<CurveId, usize>, parent: &mut Vec<usize>, pieces: &Vec<Piece>| {
        let mut out: Vec<CurveId> = owner
            .iter()
            .filter(|(_, &p)| {
                let r = find(parent, p);
                let pc = pieces[r];
                pc.boundary == 1 && pc.chi == 1 && pc.critical == 1
            })
            .map(|(&c, _)| c)
            .collect();
        out.sort();
        out
    };

    let mut levels = vec![snapshot(&owner, &mut parent, &pieces)];
    for op in ops {
        match *op {
            Op::Birth(c) => {
                pieces.push(Piece { chi: 1, critical: 1, boundary: 1 });
                parent.push(pieces.len() - 1);
                owner.insert(c, pieces.len() - 1);
            }
            Op::Death(c) => {
                let r = find(&mut parent, owner.remove(&c).expect("validated word"));
                pieces[r].chi += 1;
                pieces[r].critical += 1;
                pieces[r].boundary -= 1;
            }
            Op::Join([a, b], out) => {
                let ra = find(&mut parent, owner.remove(&a).expect("validated word"));
                let rb = find(&mut parent, owner.remove(&b).expect("validated word"));
                if ra != rb {
                    let (pa, pb) = (pieces[ra], pieces[rb]);
                    pieces[rb] = Piece {
                        chi: pa.chi + pb.chi,
                        critical: pa.critical + pb.critical,
                        boundary: pa.boundary + pb.boundary,
                    };
                    parent[ra] = rb;
                }
                pieces[rb].chi -= 1;
                pieces[rb].critical += 1;
                pieces[rb].boundary -= 1;
                owner.insert(out, rb);
            }
            Op::Fork(c, [a, b]) => {
                let r = find(&mut parent, owner.remove(&c).expect("validated word"));
                pieces[r].chi -= 1;
                pieces[r].critical += 1;
                pieces[r].boundary += 1;
                owner.insert(a, r);
                owner.insert(b, r);
            }
            Op::Nothing => {}
        }
        levels.push(snapshot(&owner, &mut parent, &pieces));
    }
    levels
}

/// Disk type of every inessential curve on every level.
pub fn disk_extrema(fw: &FoliationWord) -> Vec<BTreeMap<CurveId, DiskExtremum>> {
    let upward: Vec<Op> = fw
        .events()
        .iter()
        .map(|e| match e {
            TorusEvent::Min { curve, .. } => Op::Birth(*curve),
            TorusEvent::Max { curve } => Op::Death(*curve),
            TorusEvent::Saddle { kind: SaddleKind::Merge { inputs, output }, .. } => Op::Join(*inputs, *output),
            TorusEvent::Saddle { kind: SaddleKind::Split { input, outputs }, .. } => {
                Op::Fork(*input, [outputs[0].0, outputs[1].0])
            }
            TorusEvent::K { .. } => Op::Nothing,
        })
        .collect();
    let downward: Vec<Op> = fw
        .events()
        .iter()
        .rev()
        .map(|e| match e {
            TorusEvent::Max { curve } => Op::Birth(*curve),
            TorusEvent::Min { curve, .. } => Op::Death(*curve),
            TorusEvent::Saddle { kind: SaddleKind::Merge { inputs, output }, .. } => Op::Fork(*output, *inputs),
            TorusEvent::Saddle { kind: SaddleKind::Split { input, outputs }, .. } => {
                Op::Join([outputs[0].0, outputs[1].0], *input)
            }
            TorusEvent::K { .. } => Op::Nothing,
        })
        .collect();
    let below = single_extremum_disks(&upward);
    let mut above = single_extremum_disks(&downward);
    above.reverse();

    fw.levels()
        .iter()
        .zip(below.iter().zip(&above))
        .map(|(state, (below, above))| {
            state
                .curves
                .iter()
                .filter(|(_, s)| !s.essential)
                .map(|(&c, _)| {
                    let kind = if below.binary_search(&c).is_ok() {
                        DiskExtremum::Min
                    } else if above.binary_search(&c).is_ok() {
                        DiskExtremum::Max
                    } else {
                        DiskExtremum::Unresolved
                    };
                    (c, kind)
                })
                .collect()
        })
        .collect()
}

/// True iff on every level each inessential curve bounds a disk of T with a
/// single critical point, which is then a minimum or a maximum. Only defined
/// for words without inessential saddles.
pub fn disk_extremum_audit(fw: &FoliationWord) -> Result<bool, FoliationError> {
    if !fw.detect_inessential().is_empty() {
        return Err(FoliationError::InessentialSaddlesPresent);
    }
    Ok(disk_extrema(fw)
        .iter()
        .all(|level| level.values().all(|&k| k != DiskExtremum::Unresolved)))
}

#[cfg(test)]
mod tests {
    use super::super::parse_foliation;
    use super::*;

    #[test]
    fn tube_curves_resolve() {
        let fw = parse_foliation("tmin 0\nkcup 0\nsad e 0 -> 1:1:1 2:1:-1\nsad e 1 2 -> 3\nkcap 3\ntmax 3\n").unwrap();
        let ex = disk_extrema(&fw);
        assert_eq!(ex[1][&CurveId(0)], DiskExtremum::Min);
        assert_eq!(ex[2][&CurveId(0)], DiskExtremum::Min);
        assert!(ex[3].is_empty());
        assert_eq!(ex[5][&CurveId(3)], DiskExtremum::Max);
        assert_eq!(disk_extremum_audit(&fw), Ok(true));
    }

    #[test]
    fn bubble_of_two_minima_is_unresolved() {
        // two minima merged along an inessential saddle before the torus splits
        let text = "tmin 0\ntmin 1\nsad i 0 1 -> 2\nsad e 2 -> 3:0:0 4:0:0\nsad e 3 4 -> 5\ntmax 5\n";
        let fw = parse_foliation(text).unwrap();
        let ex = disk_extrema(&fw);
        assert_eq!(ex[3][&CurveId(2)], DiskExtremum::Unresolved);
        assert_eq!(disk_extremum_audit(&fw), Err(FoliationError::InessentialSaddlesPresent));
    }
}
