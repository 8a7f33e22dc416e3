use crate::input;
use crate::SatelliteArgs;
use serde_json::{json, Value};
use std::fmt::Write as _;
use std::path::Path;
use thinwidth::bounds::{audit, audit_winding, BoundReport, BoundViolation};
use thinwidth::foliation::{induced_foliation, serialize_foliation};
use thinwidth::levelgraph::{audit_level, build_graph, many_endpoint_witness, endpoint_point_bound, sweep_levels, LevelGraphError};
use thinwidth::morse::serialize_morse;
use thinwidth::search::{minimize_width, SearchConfig, SearchError};
use thinwidth::{catalog, MorsePresentation, SatelliteError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Domain(String),
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(_) | CliError::Parse(_) => 2,
            CliError::Domain(_) => 3,
            CliError::Internal(_) => 4,
        }
    }
}

impl From<SatelliteError> for CliError {
    fn from(e: SatelliteError) -> Self {
        match e {
            SatelliteError::Morse(_) | SatelliteError::ZeroIndex | SatelliteError::InvalidGenerator { .. } => {
                CliError::Parse(e.to_string())
            }
            SatelliteError::NotAKnot { .. } | SatelliteError::InvalidSite { .. } => CliError::Domain(e.to_string()),
            SatelliteError::InvariantMismatch(_) => CliError::Internal(e.to_string()),
        }
    }
}

impl From<BoundViolation> for CliError {
    fn from(e: BoundViolation) -> Self {
        CliError::Internal(e.to_string())
    }
}

impl From<LevelGraphError> for CliError {
    fn from(e: LevelGraphError) -> Self {
        match e {
            LevelGraphError::NoWitness => CliError::Domain(e.to_string()),
            _ => CliError::Internal(e.to_string()),
        }
    }
}

impl From<SearchError> for CliError {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::InvalidConfig(_) => CliError::Parse(e.to_string()),
            _ => CliError::Internal(e.to_string()),
        }
    }
}

fn to_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn report_json(r: &BoundReport) -> Value {
    serde_json::to_value(r).expect("reports serialize")
}

fn levels_line(p: &MorsePresentation) -> String {
    let counts: Vec<String> = p.level_counts().iter().map(usize::to_string).collect();
    counts.join(" ")
}

pub fn validate(path: &Path, json: bool) -> Result<String, CliError> {
    let p = input::morse_file(path)?;
    if json {
        return Ok(to_json(&json!({ "valid": true, "events": p.len(), "components": 1 })));
    }
    Ok(format!("ok: {} events, one component\n", p.len()))
}

pub fn invariants(spec: &str, json: bool) -> Result<String, CliError> {
    let p = input::knot(spec)?;
    let report = audit(&p, None)?;
    let tt = p.thick_thin();
    if json {
        let mut v = report_json(&report);
        v["levels"] = json!(p.level_counts());
        v["thick"] = json!(tt.thick);
        v["thin"] = json!(tt.thin);
        v["bridge_position"] = json!(p.is_bridge_position());
        return Ok(to_json(&v));
    }
    let mut out = String::new();
    writeln!(out, "levels  {}", levels_line(&p)).unwrap();
    writeln!(out, "thick   {:?}", tt.thick).unwrap();
    writeln!(out, "thin    {:?}", tt.thin).unwrap();
    write!(out, "{report}").unwrap();
    Ok(out)
}

pub fn satellite(args: &SatelliteArgs, out: Option<&Path>, fol: Option<&Path>, json: bool) -> Result<String, CliError> {
    let spec = input::satellite_spec(args)?;
    let predicted = thinwidth::satellite::canonical_invariants(&spec)?;
    let k = thinwidth::satellite::cable(&spec)?;
    let report = audit(&k, Some(&spec))?;
    let word = serialize_morse(k.events());
    if let Some(path) = fol {
        input::write(path, &serialize_foliation(&induced_foliation(&spec)?))?;
    }
    if let Some(path) = out {
        input::write(path, &word)?;
    }
    if json {
        let mut v = report_json(&report);
        v["canonical"] = serde_json::to_value(predicted).expect("invariants serialize");
        v["levels"] = json!(k.level_counts());
        if out.is_none() {
            v["word"] = json!(word);
        }
        return Ok(to_json(&v));
    }
    let mut text = String::new();
    writeln!(text, "levels  {}", levels_line(&k)).unwrap();
    write!(text, "{report}").unwrap();
    if out.is_none() {
        writeln!(text).unwrap();
        text.push_str(&word);
    }
    Ok(text)
}

pub fn sweep(args: &SatelliteArgs, dot_dir: Option<&Path>, json: bool) -> Result<String, CliError> {
    let spec = input::satellite_spec(args)?;
    let n = spec.winding();
    let levels = sweep_levels(&induced_foliation(&spec)?);
    if let Some(dir) = dot_dir {
        std::fs::create_dir_all(dir).map_err(|e| CliError::Io(format!("{}: {e}", dir.display())))?;
    }
    let mut rows = Vec::with_capacity(levels.len());
    let mut text = String::from("level  points  endpoints  bound  check\n");
    for (i, s) in levels.iter().enumerate() {
        let g = build_graph(s)?;
        let m = g.trunk();
        let bound = endpoint_point_bound(m, n);
        let pass = audit_level(s, n)?;
        if let Some(dir) = dot_dir {
            input::write(&dir.join(format!("level_{i:03}.dot")), &g.to_dot(&format!("level_{i:03}")))?;
        }
        writeln!(
            text,
            "{i:>5}  {:>6}  {m:>9}  {bound:>5}  {}",
            s.total_points(),
            if pass { "pass" } else { "FAIL" }
        )
        .unwrap();
        rows.push(json!({
            "level": i,
            "points": s.total_points(),
            "endpoints": m,
            "bound": bound,
            "pass": pass,
        }));
        if !pass {
            return Err(CliError::Internal(format!("level {i} holds fewer knot points than its graph requires")));
        }
    }
    let witness = many_endpoint_witness(&levels);
    if json {
        let out = to_json(&json!({ "winding": n, "levels": rows, "witness": witness.as_ref().ok() }));
        // the table is still useful when no level qualifies
        return witness.map(|_| out.clone()).inspect_err(|_| print!("{out}")).map_err(CliError::from);
    }
    let i = witness.inspect_err(|_| print!("{text}"))?;
    let g = build_graph(&levels[i])?;
    writeln!(
        text,
        "witness level {i}: {} endpoints, {} points >= {}",
        g.trunk(),
        levels[i].total_points(),
        endpoint_point_bound(g.trunk(), n)
    )
    .unwrap();
    Ok(text)
}

pub struct SearchOptions {
    pub seed: u64,
    pub iters: u64,
    pub chains: usize,
    pub winding: Option<usize>,
}

pub fn search(
    spec: &str,
    opts: &SearchOptions,
    out: Option<&Path>,
    trace: Option<&Path>,
    json: bool,
) -> Result<String, CliError> {
    let p = input::knot(spec)?;
    let cfg = SearchConfig {
        seed: opts.seed,
        max_iterations: opts.iters,
        chains: opts.chains,
        winding: opts.winding,
        record_trace: trace.is_some(),
        ..SearchConfig::default()
    };
    let outcome = minimize_width(&p, &cfg)?;
    let report = match opts.winding {
        Some(n) => audit_winding(&outcome.best, n)?,
        None => audit(&outcome.best, None)?,
    };
    if let Some(path) = trace {
        let mut log = String::new();
        for (c, chain) in outcome.chains.iter().enumerate() {
            if outcome.chains.len() > 1 {
                writeln!(log, "# chain {c}").unwrap();
            }
            for line in &chain.trace {
                writeln!(log, "{line}").unwrap();
            }
        }
        input::write(path, &log)?;
    }
    let word = serialize_morse(outcome.best.events());
    if let Some(path) = out {
        input::write(path, &word)?;
    }
    if json {
        let mut v = report_json(&report);
        v["initial_width"] = json!(p.width());
        v["improvements"] = json!(outcome.chains.iter().map(|c| &c.improvements).collect::<Vec<_>>());
        if out.is_none() {
            v["word"] = json!(word);
        }
        return Ok(to_json(&v));
    }
    let mut text = String::new();
    writeln!(text, "initial width {}", p.width()).unwrap();
    write!(text, "{report}").unwrap();
    if out.is_none() {
        writeln!(text).unwrap();
        text.push_str(&word);
    }
    Ok(text)
}

pub fn catalog_list(json: bool) -> Result<String, CliError> {
    if json {
        let entries: Vec<Value> = catalog::ENTRIES
            .iter()
            .map(|e| json!({ "name": e.name, "width": e.width, "bridge": e.bridge, "two_bridge": e.two_bridge }))
            .collect();
        return Ok(to_json(&Value::Array(entries)));
    }
    let mut text = String::new();
    for e in catalog::ENTRIES {
        writeln!(text, "{:<14} width {:>2}  bridge {}", e.name, e.width, e.bridge).unwrap();
    }
    Ok(text)
}
