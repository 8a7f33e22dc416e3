use super::MorseEvent;
use crate::ParseError;

/// Parses the line-oriented `.morse` format into a raw event word.
///
/// One event per line: `cup <p>`, `cap <p>`, `x+ <p>`, `x- <p>`. `#` starts
/// a comment and blank lines are ignored. The word is not validated.
pub fn parse_morse(text: &str) -> Result<Vec<MorseEvent>, ParseError> {
    let mut events = Vec::new();
    for (line, tokens) in crate::content_lines(text) {
        let [kind, pos] = tokens[..] else {
            return Err(ParseError::new(line, "expected `<kind> <position>`"));
        };
        let p = crate::parse_number(line, pos)?;
        let event = match kind {
            "cup" => MorseEvent::Cup(p),
            "cap" => MorseEvent::Cap(p),
            "x+" => MorseEvent::CrossPos(p),
            "x-" => MorseEvent::CrossNeg(p),
            other => return Err(ParseError::new(line, format!("unknown event `{other}`"))),
        };
        events.push(event);
    }
    Ok(events)
}

pub fn serialize_morse(events: &[MorseEvent]) -> String {
    events.iter().map(|e| format!("{e}\n")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use MorseEvent::*;

    #[test]
    fn comments_and_blank_lines() {
        let text = "# trefoil\ncup 0\n\ncup 2   # second\nx+ 1\nx- 1\ncap 2\ncap 0\n";
        let events = parse_morse(text).unwrap();
        assert_eq!(events, vec![Cup(0), Cup(2), CrossPos(1), CrossNeg(1), Cap(2), Cap(0)]);
        assert_eq!(serialize_morse(&events), "cup 0\ncup 2\nx+ 1\nx- 1\ncap 2\ncap 0\n");
    }

    #[test]
    fn malformed_lines_report_line_numbers() {
        let err = parse_morse("cup 0\ncup x\n").unwrap_err();
        assert_eq!(err.line, 2);
        let err = parse_morse("\n\nswirl 3\n").unwrap_err();
        assert_eq!(err.line, 3);
        assert!(parse_morse("cup\n").is_err());
        assert!(parse_morse("cup 1 2\n").is_err());
        assert!(parse_morse("cap -1\n").is_err());
    }
}
