//! Width reduction by simulated annealing over local moves.
//!
//! The moves are isotopies, so every word reached presents the same knot.
//! The move set is not known to connect all presentations of a knot, so the
//! result is an upper bound on the width, never a certificate of thinness.

mod moves;

pub use moves::{apply_move, legal_moves, moves_at, predicted_delta, Move, Placement, SearchError};

use crate::bounds::{satellite_width_bound, BoundViolation};
use crate::morse::{MorseEvent, MorsePresentation};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, PartialEq)]
pub struct SearchConfig {
    pub seed: u64,
    /// Proposals per chain. Zero returns the input unchanged.
    pub max_iterations: u64,
    pub initial_temperature: f64,
    /// Geometric cooling factor per iteration, in (0, 1).
    pub decay: f64,
    pub chains: usize,
    /// Winding number of a satellite over a nontrivial companion; enables the
    /// width floor check on every proposed state.
    pub winding: Option<usize>,
    /// Probability of proposing a zigzag insertion.
    pub create_probability: f64,
    /// Longest word a chain may grow to, in events beyond the input length.
    pub max_extra_len: usize,
    pub record_trace: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            seed: 1,
            max_iterations: 10_000,
            initial_temperature: 4.0,
            decay: 0.9999,
            chains: 1,
            winding: None,
            create_probability: 0.1,
            max_extra_len: 12,
            record_trace: false,
        }
    }
}

impl SearchConfig {
    fn check(&self) -> Result<(), SearchError> {
        if self.decay.is_nan() || self.decay <= 0.0 || self.decay >= 1.0 {
            return Err(SearchError::InvalidConfig("decay must lie in (0, 1)"));
        }
        if self.initial_temperature.is_nan() || self.initial_temperature <= 0.0 {
            return Err(SearchError::InvalidConfig("initial temperature must be positive"));
        }
        if self.chains == 0 {
            return Err(SearchError::InvalidConfig("at least one chain is required"));
        }
        if !(0.0..=1.0).contains(&self.create_probability) {
            return Err(SearchError::InvalidConfig("create probability must lie in [0, 1]"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TraceLine {
    pub iteration: u64,
    pub width: usize,
    pub kind: &'static str,
}

impl std::fmt::Display for TraceLine {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "iter {} width {} move {}", self.iteration, self.width, self.kind)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainResult {
    pub best: MorsePresentation,
    /// (iteration, width) each time the chain's best improved, starting with
    /// the input at iteration 0.
    pub improvements: Vec<(u64, usize)>,
    pub accepted: u64,
    /// Accepted moves, when tracing.
    pub trace: Vec<TraceLine>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub best: MorsePresentation,
    pub width: usize,
    pub chains: Vec<ChainResult>,
}

/// Orders candidates: smaller width, then shorter word, then event order.
fn rank(p: &MorsePresentation) -> (usize, usize, &[MorseEvent]) {
    (p.width(), p.len(), p.events())
}

fn floor_check(p: &MorsePresentation, winding: Option<usize>) -> Result<(), BoundViolation> {
    match winding {
        Some(n) if p.width() < satellite_width_bound(n) => Err(BoundViolation {
            name: "satellite width",
            bound: satellite_width_bound(n),
            value: p.width(),
        }),
        _ => Ok(()),
    }
}

/// One proposal: a random zigzag insertion with the configured probability,
/// otherwise a uniformly chosen commute or cancellation (rejection sampled,
/// so `None` means the draw hit no move).
fn propose<R: Rng>(rng: &mut R, p: &MorsePresentation, cfg: &SearchConfig, max_len: usize) -> Option<Move> {
    if rng.gen_bool(cfg.create_probability) {
        if p.len() + 2 > max_len {
            return None;
        }
        let index = rng.gen_range(1..p.len());
        let strand = rng.gen_range(0..p.profile()[index]);
        let side = if rng.gen_bool(0.5) { Placement::Left } else { Placement::Right };
        return Some(Move::CreatePair { index, strand, side });
    }
    // at most three moves act on one adjacent pair
    let i = rng.gen_range(0..p.len() - 1);
    let slot = rng.gen_range(0..3);
    moves_at(p, i).get(slot).copied()
}

fn run_chain(start: &MorsePresentation, cfg: &SearchConfig, stream: u64) -> Result<ChainResult, SearchError> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(stream);
    let max_len = start.len() + cfg.max_extra_len;
    let mut current = start.clone();
    let mut width = current.width();
    let mut result = ChainResult { best: start.clone(), improvements: vec![(0, width)], accepted: 0, trace: Vec::new() };
    let mut temperature = cfg.initial_temperature;
    for iteration in 1..=cfg.max_iterations {
        temperature *= cfg.decay;
        let Some(m) = propose(&mut rng, &current, cfg, max_len) else { continue };
        let next = apply_move(&current, m)?;
        floor_check(&next, cfg.winding)?;
        let next_width = next.width();
        let delta = next_width as f64 - width as f64;
        if delta > 0.0 && rng.gen::<f64>() >= (-delta / temperature).exp() {
            continue;
        }
        current = next;
        width = next_width;
        result.accepted += 1;
        if cfg.record_trace {
            result.trace.push(TraceLine { iteration, width, kind: m.kind() });
        }
        if rank(&current) < rank(&result.best) {
            if width < result.best.width() {
                result.improvements.push((iteration, width));
            }
            result.best = current.clone();
        }
    }
    Ok(result)
}

/// Anneals `cfg.chains` independent chains from `p` and returns the best word
/// found. Chain `c` draws from stream `c` of the seeded generator, so the
/// outcome does not depend on thread scheduling.
pub fn minimize_width(p: &MorsePresentation, cfg: &SearchConfig) -> Result<SearchOutcome, SearchError> {
    cfg.check()?;
    floor_check(p, cfg.winding)?;
    let chains: Vec<Result<ChainResult, SearchError>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..cfg.chains as u64)
            .map(|c| scope.spawn(move || run_chain(p, cfg, c)))
            .collect();
        handles.into_iter().map(|h| h.join().expect("search chain panicked")).collect()
    });
    let chains = chains.into_iter().collect::<Result<Vec<_>, _>>()?;
    let best = chains
        .iter()
        .map(|c| &c.best)
        .min_by(|a, b| rank(a).cmp(&rank(b)))
        .cloned()
        .unwrap_or_else(|| p.clone());
    Ok(SearchOutcome { width: best.width(), best, chains })
}
