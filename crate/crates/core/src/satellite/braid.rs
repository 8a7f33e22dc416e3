use super::SatelliteError;
use crate::morse::{validate, MorseError, MorseEvent, MorsePresentation};
use crate::ParseError;
use std::fmt;

/// A braid generator σ_j (1-based) with its sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BraidLetter {
    pub generator: usize,
    pub positive: bool,
}

impl BraidLetter {
    pub fn pos(generator: usize) -> Self {
        Self { generator, positive: true }
    }

    pub fn neg(generator: usize) -> Self {
        Self { generator, positive: false }
    }

    /// The crossing this letter becomes when the braid strands start at `offset`.
    pub fn crossing(self, offset: usize) -> MorseEvent {
        let p = offset + self.generator - 1;
        if self.positive {
            MorseEvent::CrossPos(p)
        } else {
            MorseEvent::CrossNeg(p)
        }
    }
}

impl fmt::Display for BraidLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.positive { '+' } else { '-' };
        write!(f, "s{sign} {}", self.generator)
    }
}

/// A braid pattern of index n in the solid torus.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    index: usize,
    letters: Vec<BraidLetter>,
}

impl BraidWord {
    pub fn new(index: usize, letters: Vec<BraidLetter>) -> Result<Self, SatelliteError> {
        if index == 0 {
            return Err(SatelliteError::ZeroIndex);
        }
        if let Some(bad) = letters.iter().find(|l| l.generator == 0 || l.generator >= index) {
            return Err(SatelliteError::InvalidGenerator { generator: bad.generator, index });
        }
        Ok(Self { index, letters })
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    /// Winding number of the pattern: every meridian disk meets a braid of
    /// index n in n coherently oriented points.
    pub fn winding_number(&self) -> usize {
        self.index
    }

    /// `perm[i]` is the final position of the strand that starts at `i`.
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.index).collect();
        for l in &self.letters {
            at.swap(l.generator - 1, l.generator);
        }
        let mut perm = vec![0; self.index];
        for (pos, &strand) in at.iter().enumerate() {
            perm[strand] = pos;
        }
        perm
    }

    pub fn cycle_count(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; self.index];
        let mut cycles = 0;
        for start in 0..self.index {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = perm[i];
            }
        }
        cycles
    }

    /// Closure of the braid as a Morse word: n nested cups, the letters as
    /// crossings on the left block, n nested caps.
    pub fn closure(&self) -> Result<MorsePresentation, MorseError> {
        let n = self.index;
        let mut events: Vec<MorseEvent> = (0..n).map(MorseEvent::Cup).collect();
        events.extend(self.letters.iter().map(|l| l.crossing(0)));
        events.extend((0..n).rev().map(MorseEvent::Cap));
        validate(events)
    }
}

/// `f` full twists on n strands: (σ_1 ⋯ σ_{n−1})^n per twist, inverted for f < 0.
pub fn full_twists(n: usize, f: i32) -> Vec<BraidLetter> {
    let one: Vec<BraidLetter> = if f >= 0 {
        (1..n).map(BraidLetter::pos).collect()
    } else {
        (1..n).rev().map(BraidLetter::neg).collect()
    };
    let reps = n * f.unsigned_abs() as usize;
    one.iter().copied().cycle().take(one.len() * reps).collect()
}

/// Parses the `.braid` format: `index <n>` followed by `s+ <j>` / `s- <j>`
/// lines. A `;` also separates lines, so `index 2; s+ 1` is accepted.
pub fn parse_braid(text: &str) -> Result<BraidWord, ParseError> {
    let text = text.replace(';', "\n");
    let mut lines = crate::content_lines(&text);
    let Some((line, header)) = lines.next() else {
        return Err(ParseError::new(1, "missing `index <n>` header"));
    };
    let index = match header[..] {
        ["index", n] => crate::parse_number::<usize>(line, n)?,
        _ => return Err(ParseError::new(line, "expected `index <n>`")),
    };
    let mut letters = Vec::new();
    for (line, tokens) in lines {
        let letter = match tokens[..] {
            ["s+", j] => BraidLetter::pos(crate::parse_number(line, j)?),
            ["s-", j] => BraidLetter::neg(crate::parse_number(line, j)?),
            _ => return Err(ParseError::new(line, "expected `s+ <j>` or `s- <j>`")),
        };
        if letter.generator == 0 || letter.generator >= index {
            return Err(ParseError::new(line, format!("generator {} out of range for index {index}", letter.generator)));
        }
        letters.push(letter);
    }
    BraidWord::new(index, letters).map_err(|e| ParseError::new(1, e.to_string()))
}

pub fn serialize_braid(braid: &BraidWord) -> String {
    let mut out = format!("index {}\n", braid.index);
    for l in &braid.letters {
        out.push_str(&format!("{l}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use MorseEvent::*;

    #[test]
    fn index_one_closure_is_unknot() {
        let b = BraidWord::new(1, vec![]).unwrap();
        assert_eq!(b.closure().unwrap().events(), &[Cup(0), Cap(0)]);
        assert_eq!(b.winding_number(), 1);
    }

    #[test]
    fn trefoil_closure_and_trivial_link() {
        let b = BraidWord::new(2, vec![BraidLetter::pos(1); 3]).unwrap();
        let k = b.closure().unwrap();
        assert_eq!(k.events(), &[Cup(0), Cup(1), CrossPos(0), CrossPos(0), CrossPos(0), Cap(1), Cap(0)]);
        assert_eq!(b.winding_number(), 2);

        let empty = BraidWord::new(2, vec![]).unwrap();
        assert_eq!(empty.closure(), Err(MorseError::MultiComponent { components: 2 }));
        assert_eq!(empty.cycle_count(), 2);
    }

    #[test]
    fn figure_one_pattern_has_winding_three() {
        let b = BraidWord::new(3, vec![BraidLetter::pos(1), BraidLetter::neg(2)]).unwrap();
        assert_eq!(b.winding_number(), 3);
        assert_eq!(b.cycle_count(), 1);
    }

    #[test]
    fn generator_range() {
        assert_eq!(
            BraidWord::new(2, vec![BraidLetter::pos(2)]),
            Err(SatelliteError::InvalidGenerator { generator: 2, index: 2 })
        );
        assert_eq!(BraidWord::new(0, vec![]), Err(SatelliteError::ZeroIndex));
    }

    #[test]
    fn full_twist_is_pure() {
        for n in 1..=5 {
            for f in -2..=2 {
                let b = BraidWord::new(n, full_twists(n, f)).unwrap();
                assert_eq!(b.permutation(), (0..n).collect::<Vec<_>>());
                assert_eq!(b.letters().len(), n * (n - 1) * f.unsigned_abs() as usize);
            }
        }
    }

    #[test]
    fn braid_text_format() {
        let b = parse_braid("index 3\n# pattern\ns+ 1\ns- 2\n").unwrap();
        assert_eq!(b.letters(), &[BraidLetter::pos(1), BraidLetter::neg(2)]);
        assert_eq!(serialize_braid(&b), "index 3\ns+ 1\ns- 2\n");
        assert_eq!(parse_braid("index 2; s+ 1").unwrap().letters(), &[BraidLetter::pos(1)]);
        assert_eq!(parse_braid("index 2\ns+ 2\n").unwrap_err().line, 2);
        assert!(parse_braid("s+ 1\n").is_err());
        assert!(parse_braid("").is_err());
    }
}
