//! Line format for foliation words (`.fol`).
//!
//! ```text
//! tmin <c>              minimum in the outermost region
//! tmin <c> in <p>       minimum in the region directly inside curve p
//! tmax <c>
//! sad <e|i> <a> <b> -> <c>                    merge
//! sad <e|i> <c> -> <a>:<k>:<s> <b>:<k>:<s>    split, with knot points handed to each output
//! kcup <c>              knot minimum inside curve c
//! kcap <c>
//! ```

use super::{Content, CurveId, FoliationError, FoliationWord, KCritical, Location, SaddleKind, TorusEvent};
use crate::{parse_number, ParseError};
use std::fmt::Write;

fn curve(line: usize, token: &str) -> Result<CurveId, ParseError> {
    parse_number(line, token).map(CurveId)
}

fn split_output(line: usize, token: &str) -> Result<(CurveId, Content), ParseError> {
    let mut parts = token.split(':');
    let id = curve(line, parts.next().unwrap_or(""))?;
    let content = match (parts.next(), parts.next(), parts.next()) {
        (None, None, None) => Content::default(),
        (Some(k), Some(s), None) => Content::new(parse_number(line, k)?, parse_number(line, s.trim_start_matches('+'))?),
        _ => return Err(ParseError::new(line, format!("malformed split output `{token}`"))),
    };
    Ok((id, content))
}

fn parse_event(line: usize, tokens: &[&str]) -> Result<TorusEvent, ParseError> {
    let event = match tokens {
        ["tmin", c] => TorusEvent::Min { curve: curve(line, c)?, at: Location::Root },
        ["tmin", c, "in", p] => TorusEvent::Min { curve: curve(line, c)?, at: Location::Inside(curve(line, p)?) },
        ["tmax", c] => TorusEvent::Max { curve: curve(line, c)? },
        ["kcup", c] => TorusEvent::K { kind: KCritical::Cup, at: curve(line, c)? },
        ["kcap", c] => TorusEvent::K { kind: KCritical::Cap, at: curve(line, c)? },
        ["sad", flag, rest @ ..] => {
            let essential = match *flag {
                "e" => true,
                "i" => false,
                _ => return Err(ParseError::new(line, "saddle flag must be `e` or `i`")),
            };
            let kind = match rest {
                [a, b, "->", c] => SaddleKind::Merge { inputs: [curve(line, a)?, curve(line, b)?], output: curve(line, c)? },
                [c, "->", a, b] => SaddleKind::Split {
                    input: curve(line, c)?,
                    outputs: [split_output(line, a)?, split_output(line, b)?],
                },
                _ => return Err(ParseError::new(line, "saddle must be `a b -> c` or `c -> a b`")),
            };
            TorusEvent::Saddle { essential, kind }
        }
        _ => return Err(ParseError::new(line, format!("unrecognized event `{}`", tokens.join(" ")))),
    };
    Ok(event)
}

/// Parses event lines; the result is not yet validated.
pub fn parse_events(text: &str) -> Result<Vec<TorusEvent>, ParseError> {
    crate::content_lines(text).map(|(line, tokens)| parse_event(line, &tokens)).collect()
}

#[derive(Debug, thiserror::Error)]
pub enum FolReadError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Invalid(#[from] FoliationError),
}

pub fn parse_foliation(text: &str) -> Result<FoliationWord, FolReadError> {
    Ok(FoliationWord::new(parse_events(text)?)?)
}

pub fn serialize_foliation(word: &FoliationWord) -> String {
    let mut out = String::new();
    for e in word.events() {
        match e {
            TorusEvent::Min { curve, at: Location::Root } => writeln!(out, "tmin {curve}"),
            TorusEvent::Min { curve, at: Location::Inside(p) } => writeln!(out, "tmin {curve} in {p}"),
            TorusEvent::Max { curve } => writeln!(out, "tmax {curve}"),
            TorusEvent::K { kind: KCritical::Cup, at } => writeln!(out, "kcup {at}"),
            TorusEvent::K { kind: KCritical::Cap, at } => writeln!(out, "kcap {at}"),
            TorusEvent::Saddle { essential, kind } => {
                let flag = if *essential { 'e' } else { 'i' };
                match kind {
                    SaddleKind::Merge { inputs: [a, b], output } => writeln!(out, "sad {flag} {a} {b} -> {output}"),
                    SaddleKind::Split { input, outputs: [(a, ca), (b, cb)] } => writeln!(
                        out,
                        "sad {flag} {input} -> {a}:{}:{} {b}:{}:{}",
                        ca.points, ca.signed, cb.points, cb.signed
                    ),
                }
            }
        }
        .expect("writing to a String cannot fail");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const UNKNOT_TUBE: &str = "tmin 0\nkcup 0\nsad e 0 -> 1:1:1 2:1:-1\nsad e 1 2 -> 3\nkcap 3\ntmax 3\n";

    #[test]
    fn round_trip_is_byte_exact() {
        let fw = parse_foliation(UNKNOT_TUBE).unwrap();
        assert_eq!(serialize_foliation(&fw), UNKNOT_TUBE);
    }

    #[test]
    fn unannotated_split_outputs_are_empty() {
        let text = "tmin 0\nsad e 0 -> 1 2\nsad e 1 2 -> 3\ntmax 3\n";
        let fw = parse_foliation(text).unwrap();
        assert_eq!(serialize_foliation(&fw), "tmin 0\nsad e 0 -> 1:0:0 2:0:0\nsad e 1 2 -> 3\ntmax 3\n");
    }

    #[test]
    fn syntax_errors_carry_line_numbers() {
        let err = parse_events("tmin 0\nsad x 0 -> 1 2\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(parse_events("tmin a\n").is_err());
        assert!(parse_events("sad e 0 1 2\n").is_err());
        assert!(parse_events("sad e 0 -> 1:2 2\n").is_err());
        assert!(matches!(parse_foliation("tmin 0\n"), Err(FolReadError::Invalid(_))));
    }
}
