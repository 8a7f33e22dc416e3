//! Level spheres of a foliation sweep and their essential connectivity graphs.
//!
//! A level sphere is cut along the level curves that are essential in the
//! torus. Each resulting region lies on one side of the torus and carries the
//! knot points inside it, including those enclosed by inessential curves.

mod format;
mod graph;

pub use format::{parse_level_sphere, serialize_level_sphere};
pub use graph::{build_graph, trunk_r, ConnectivityGraph};

use crate::foliation::{disk_extrema, CurveId, DiskExtremum, FoliationWord, LevelState, Location, Side};
use serde::Serialize;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Region {
    pub side: Side,
    pub k_points: u32,
    /// Algebraic count of the knot points, from strand orientations.
    pub signed: i32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EssentialCurve {
    pub curve: CurveId,
    /// The region outside the curve, then the region inside it.
    pub regions: [usize; 2],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InessentialCurve {
    pub curve: CurveId,
    pub region: usize,
    pub extremum: DiskExtremum,
}

/// One regular level of the sweep. Region 0 is the outermost region.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelSphere {
    pub regions: Vec<Region>,
    pub essential: Vec<EssentialCurve>,
    pub inessential: Vec<InessentialCurve>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LevelGraphError {
    #[error("regions and essential curves do not form a tree")]
    NotATree,
    #[error("essential curve {0} has the same side of the torus on both sides")]
    NotBipartite(CurveId),
    #[error("no level has three or more endpoints")]
    NoWitness,
}

impl LevelSphere {
    /// The empty sphere: one outside region, no curves.
    pub fn empty() -> Self {
        Self {
            regions: vec![Region { side: Side::OutV, k_points: 0, signed: 0 }],
            essential: Vec::new(),
            inessential: Vec::new(),
        }
    }

    fn from_state(state: &LevelState, extrema: &BTreeMap<CurveId, DiskExtremum>) -> Self {
        let mut sphere = Self::empty();
        let mut region_of: BTreeMap<CurveId, usize> = BTreeMap::new();
        for (&c, s) in &state.curves {
            if s.essential {
                region_of.insert(c, sphere.regions.len());
                sphere.regions.push(Region { side: s.inside, k_points: 0, signed: 0 });
            }
        }
        let enclosing = |mut at: Location| -> usize {
            while let Location::Inside(p) = at {
                if let Some(&r) = region_of.get(&p) {
                    return r;
                }
                at = state.curves[&p].parent;
            }
            0
        };
        for (&c, s) in &state.curves {
            let here = region_of.get(&c).copied().unwrap_or_else(|| enclosing(s.parent));
            let region = &mut sphere.regions[here];
            region.k_points += s.content.points;
            region.signed += s.content.signed;
            if s.essential {
                sphere.essential.push(EssentialCurve { curve: c, regions: [enclosing(s.parent), here] });
            } else {
                let extremum = extrema.get(&c).copied().unwrap_or(DiskExtremum::Unresolved);
                sphere.inessential.push(InessentialCurve { curve: c, region: here, extremum });
            }
        }
        sphere
    }

    /// |K ∩ S|.
    pub fn total_points(&self) -> u32 {
        self.regions.iter().map(|r| r.k_points).sum()
    }

    /// Signed intersection of the knot with the whole sphere.
    pub fn algebraic_intersection(&self) -> i32 {
        self.regions.iter().map(|r| r.signed).sum()
    }
}

/// One level sphere below each event of the word plus the one above the
/// last event.
pub fn sweep_levels(fw: &FoliationWord) -> Vec<LevelSphere> {
    let extrema = disk_extrema(fw);
    fw.levels()
        .iter()
        .zip(&extrema)
        .map(|(state, ex)| LevelSphere::from_state(state, ex))
        .collect()
}

/// Lower bound on |K ∩ S| from the number of endpoints `m` of the level's
/// graph and the winding number `n`.
pub fn endpoint_point_bound(m: usize, n: usize) -> usize {
    if m.is_multiple_of(2) {
        n * m
    } else {
        n * (m + 1)
    }
}

/// Every endpoint region holds at least `n` knot points, and the level holds
/// at least [`endpoint_point_bound`] of them.
pub fn audit_level(s: &LevelSphere, n: usize) -> Result<bool, LevelGraphError> {
    let g = build_graph(s)?;
    let endpoints_ok = g.endpoints().iter().all(|&v| s.regions[v].k_points as usize >= n);
    Ok(endpoints_ok && s.total_points() as usize >= endpoint_point_bound(g.trunk(), n))
}

/// First level attaining the largest endpoint count, if that count is at
/// least three.
pub fn many_endpoint_witness(levels: &[LevelSphere]) -> Result<usize, LevelGraphError> {
    let mut best: Option<(usize, usize)> = None;
    for (i, s) in levels.iter().enumerate() {
        let t = build_graph(s)?.trunk();
        if best.is_none_or(|(_, bt)| t > bt) {
            best = Some((i, t));
        }
    }
    match best {
        Some((i, t)) if t >= 3 => Ok(i),
        _ => Err(LevelGraphError::NoWitness),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::foliation::induced_foliation;
    use crate::satellite::{cable, BraidLetter, BraidWord, SatelliteSpec};

    fn spec(name: &str, n: usize) -> SatelliteSpec {
        let letters = (1..n).map(BraidLetter::pos).collect();
        SatelliteSpec::new(catalog::get(name).unwrap().presentation(), BraidWord::new(n, letters).unwrap())
    }

    fn sweep(name: &str, n: usize) -> Vec<LevelSphere> {
        sweep_levels(&induced_foliation(&spec(name, n)).unwrap())
    }

    #[test]
    fn endpoint_bound_values() {
        assert_eq!(endpoint_point_bound(4, 3), 12);
        assert_eq!(endpoint_point_bound(3, 2), 8);
        assert_eq!(endpoint_point_bound(0, 5), 0);
    }

    #[test]
    fn bottom_level_is_empty() {
        let levels = sweep("trefoil", 2);
        assert_eq!(levels[0], LevelSphere::empty());
        assert_eq!(levels.last(), Some(&LevelSphere::empty()));
        assert_eq!(trunk_r(&build_graph(&levels[0]).unwrap()), 0);
        assert_eq!(audit_level(&levels[0], 2), Ok(true));
    }

    #[test]
    fn trefoil_levels() {
        let levels = sweep("trefoil", 2);
        // first bowl, two knot minima, split: level 4 has the two meridians
        let s = &levels[4];
        assert_eq!(s.essential.len(), 2);
        assert_eq!(s.regions.iter().map(|r| r.k_points).collect::<Vec<_>>(), [0, 2, 2]);
        let g = build_graph(s).unwrap();
        assert_eq!(g.degrees(), [2, 1, 1]);

        // the second bowl already holds four knot points beside two meridians
        let widest = levels.iter().position(|s| s.total_points() == 8).unwrap();
        assert_eq!(build_graph(&levels[widest]).unwrap().trunk(), 2);

        let w = many_endpoint_witness(&levels).unwrap();
        assert_eq!(levels[w].total_points(), 8);
        let g = build_graph(&levels[w]).unwrap();
        assert_eq!(g.degrees(), [4, 1, 1, 1, 1]);
        assert_eq!(g.sides()[0], Side::OutV);
        assert_eq!(trunk_r(&g), 4);
    }

    #[test]
    fn sweep_agrees_with_cable_trunk() {
        for (name, n) in [("trefoil", 3), ("figure-eight", 2), ("figure-eight", 1)] {
            let levels = sweep(name, n);
            let max = levels.iter().map(LevelSphere::total_points).max().unwrap();
            assert_eq!(max as usize, cable(&spec(name, n)).unwrap().trunk());
            for s in &levels {
                assert_eq!(audit_level(s, n), Ok(true));
                assert_eq!(s.algebraic_intersection(), 0);
            }
        }
    }

    #[test]
    fn unknot_companion_has_no_witness() {
        assert_eq!(many_endpoint_witness(&sweep("unknot", 2)), Err(LevelGraphError::NoWitness));
    }
}
