//! Thin position and width of satellite knots.
//!
//! Knots are handled as Morse presentations: words of cups, caps and
//! crossings read bottom to top. On top of that the crate builds braid-pattern
//! satellites, the singular foliation of the companion torus, the essential
//! connectivity graphs of level spheres, and an audit of every presentation
//! against the known width, bridge and trunk lower bounds.

pub mod bounds;
pub mod catalog;
pub mod foliation;
pub mod levelgraph;
pub mod morse;
pub mod random;
pub mod satellite;
pub mod search;

use thiserror::Error;

pub use morse::{validate, MorseError, MorseEvent, MorsePresentation, ThickThinDecomposition};
pub use satellite::{BraidLetter, BraidWord, SatelliteError, SatelliteSpec};

/// Syntax error in one of the line-oriented text formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, message: impl Into<String>) -> Self {
        Self { line, message: message.into() }
    }
}

/// Non-empty lines with comments stripped, as (1-based line number, tokens).
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = body.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

pub(crate) fn parse_number<T: std::str::FromStr>(line: usize, token: &str) -> Result<T, ParseError> {
    token
        .parse()
        .map_err(|_| ParseError::new(line, format!("invalid number `{token}`")))
}
