//! Lower bounds on width and bridge number, and an audit of presentations
//! against them.

use crate::{MorsePresentation, SatelliteSpec};
use serde::Serialize;
use std::fmt;
use thiserror::Error;

/// w ≥ t²/2 for trunk t.
pub fn trunk_width_bound(t: usize) -> usize {
    t * t / 2
}

/// w ≥ 8n² for a satellite of winding number n over a nontrivial companion.
pub fn satellite_width_bound(n: usize) -> usize {
    8 * n * n
}

/// b ≥ n·b(J).
pub fn schubert_bridge_bound(n: usize, companion_bridge: usize) -> usize {
    n * companion_bridge
}

/// Conjectured w ≥ n²·w(J); reported, never enforced.
pub fn conjectured_width_bound(n: usize, companion_width: usize) -> usize {
    n * n * companion_width
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub bound: usize,
    pub value: usize,
    pub satisfied: bool,
    pub conjectural: bool,
}

impl Check {
    fn new(name: &'static str, bound: usize, value: usize, conjectural: bool) -> Self {
        Self { name, bound, value, satisfied: value >= bound, conjectural }
    }

    /// Satisfied with equality.
    pub fn is_tight(&self) -> bool {
        self.value == self.bound
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub width: usize,
    pub bridge: usize,
    pub trunk: usize,
    pub winding: Option<usize>,
    /// Width and bridge count of the companion presentation; these bound the
    /// companion's true invariants from above.
    pub companion_width: Option<usize>,
    pub companion_bridge: Option<usize>,
    pub checks: Vec<Check>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("bound violated: {name} requires {bound}, got {value}")]
pub struct BoundViolation {
    pub name: &'static str,
    pub bound: usize,
    pub value: usize,
}

impl BoundReport {
    fn enforce(self) -> Result<Self, BoundViolation> {
        match self.checks.iter().find(|c| !c.conjectural && !c.satisfied) {
            Some(c) => Err(BoundViolation { name: c.name, bound: c.bound, value: c.value }),
            None => Ok(self),
        }
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn base_report(p: &MorsePresentation) -> BoundReport {
    BoundReport {
        width: p.width(),
        bridge: p.bridge_count(),
        trunk: p.trunk(),
        winding: None,
        companion_width: None,
        companion_bridge: None,
        checks: vec![Check::new("trunk width", trunk_width_bound(p.trunk()), p.width(), false)],
    }
}

/// Audits `p`, and if it is the presentation of a satellite, also against the
/// satellite bounds computed from `spec`. Satellite checks are skipped when
/// the companion presentation has a single maximum, since it is then an
/// unknot.
pub fn audit(p: &MorsePresentation, spec: Option<&SatelliteSpec>) -> Result<BoundReport, BoundViolation> {
    let mut report = base_report(p);
    if let Some(spec) = spec {
        let n = spec.winding();
        let (wj, bj) = (spec.companion.width(), spec.companion.bridge_count());
        report.winding = Some(n);
        report.companion_width = Some(wj);
        report.companion_bridge = Some(bj);
        if bj >= 2 {
            report.checks.push(Check::new("satellite width", satellite_width_bound(n), report.width, false));
            report.checks.push(Check::new("satellite bridge", schubert_bridge_bound(n, bj), report.bridge, false));
            report.checks.push(Check::new("conjectured width", conjectured_width_bound(n, wj), report.width, true));
        }
    }
    report.enforce()
}

/// Audits a presentation known to be a satellite of winding number `n` over
/// a nontrivial companion, without the companion at hand.
pub fn audit_winding(p: &MorsePresentation, n: usize) -> Result<BoundReport, BoundViolation> {
    let mut report = base_report(p);
    report.winding = Some(n);
    report.checks.push(Check::new("satellite width", satellite_width_bound(n), report.width, false));
    report.enforce()
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "width   {}", self.width)?;
        writeln!(f, "bridge  {}", self.bridge)?;
        writeln!(f, "trunk   {}", self.trunk)?;
        if let Some(n) = self.winding {
            writeln!(f, "winding {n}")?;
        }
        if let (Some(w), Some(b)) = (self.companion_width, self.companion_bridge) {
            writeln!(f, "companion width {w}, bridge {b} (presentation invariants)")?;
        }
        writeln!(f, "{:<18} {:>7} {:>7}  status", "check", "bound", "value")?;
        for c in &self.checks {
            let status = match (c.satisfied, c.is_tight()) {
                (true, true) => "tight",
                (true, false) => "ok",
                (false, _) => "FAIL",
            };
            let note = if c.conjectural { " (conjectural)" } else { "" };
            writeln!(f, "{:<18} {:>7} {:>7}  {status}{note}", c.name, c.bound, c.value)?;
        }
        Ok(())
    }
}
