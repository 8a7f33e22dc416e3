//! Line format for level-sphere dumps.
//!
//! ```text
//! region <index> <A|B> <k_points> <signed>
//! essential <curve> <outer region> <inner region>
//! inessential <curve> <region> <min|max|?>
//! ```
//!
//! Regions are listed in index order starting at 0. `A` marks regions inside
//! the solid torus, `B` regions outside it.

use super::{EssentialCurve, InessentialCurve, LevelSphere, Region};
use crate::foliation::{CurveId, DiskExtremum, Side};
use crate::{parse_number, ParseError};
use std::fmt::Write;

pub fn parse_level_sphere(text: &str) -> Result<LevelSphere, ParseError> {
    let mut s = LevelSphere { regions: Vec::new(), essential: Vec::new(), inessential: Vec::new() };
    for (line, tokens) in crate::content_lines(text) {
        match tokens.as_slice() {
            ["region", idx, side, k, signed] => {
                if parse_number::<usize>(line, idx)? != s.regions.len() {
                    return Err(ParseError::new(line, "regions must be listed in index order"));
                }
                let side = match *side {
                    "A" => Side::InV,
                    "B" => Side::OutV,
                    _ => return Err(ParseError::new(line, "side must be `A` or `B`")),
                };
                s.regions.push(Region { side, k_points: parse_number(line, k)?, signed: parse_number(line, signed)? });
            }
            ["essential", c, a, b] => s.essential.push(EssentialCurve {
                curve: CurveId(parse_number(line, c)?),
                regions: [parse_number(line, a)?, parse_number(line, b)?],
            }),
            ["inessential", c, r, kind] => {
                let extremum = match *kind {
                    "min" => DiskExtremum::Min,
                    "max" => DiskExtremum::Max,
                    "?" => DiskExtremum::Unresolved,
                    _ => return Err(ParseError::new(line, "extremum must be `min`, `max` or `?`")),
                };
                s.inessential.push(InessentialCurve {
                    curve: CurveId(parse_number(line, c)?),
                    region: parse_number(line, r)?,
                    extremum,
                });
            }
            _ => return Err(ParseError::new(line, format!("unrecognized line `{}`", tokens.join(" ")))),
        }
    }
    let n = s.regions.len();
    if s.essential.iter().any(|e| e.regions.iter().any(|&r| r >= n)) || s.inessential.iter().any(|c| c.region >= n) {
        return Err(ParseError::new(0, "curve refers to a missing region"));
    }
    Ok(s)
}

pub fn serialize_level_sphere(s: &LevelSphere) -> String {
    let mut out = String::new();
    for (i, r) in s.regions.iter().enumerate() {
        let side = if r.side == Side::InV { 'A' } else { 'B' };
        writeln!(out, "region {i} {side} {} {}", r.k_points, r.signed).expect("String write");
    }
    for e in &s.essential {
        writeln!(out, "essential {} {} {}", e.curve, e.regions[0], e.regions[1]).expect("String write");
    }
    for c in &s.inessential {
        let kind = match c.extremum {
            DiskExtremum::Min => "min",
            DiskExtremum::Max => "max",
            DiskExtremum::Unresolved => "?",
        };
        writeln!(out, "inessential {} {} {kind}", c.curve, c.region).expect("String write");
    }
    out
}
