//! Seeded random Morse words and braids for property tests and fixtures.

use crate::morse::{validate, MorseEvent, MorsePresentation};
use crate::satellite::{BraidLetter, BraidWord};
use rand::Rng;

/// Random valid knot word with at most `max_len` events.
///
/// Candidate words are drawn with positions clamped into range and the
/// closing caps forced near the end; candidates that trace a link are
/// rejected and redrawn.
pub fn knot_word<R: Rng>(rng: &mut R, max_len: usize) -> MorsePresentation {
    assert!(max_len >= 2, "a knot word needs at least two events");
    loop {
        if let Ok(p) = validate(candidate(rng, max_len)) {
            return p;
        }
    }
}

fn candidate<R: Rng>(rng: &mut R, max_len: usize) -> Vec<MorseEvent> {
    let len = rng.gen_range(2..=max_len);
    let mut events = Vec::with_capacity(len);
    let mut k = 0usize;
    while events.len() < len {
        let remaining = len - events.len();
        if k == 0 && !events.is_empty() {
            break;
        }
        // caps still owed must fit in what remains
        let must_close = remaining <= k / 2;
        let can_open = remaining >= k / 2 + 2;
        let roll = rng.gen_range(0..10);
        let event = if k == 0 || (can_open && !must_close && roll < 3) {
            MorseEvent::Cup(rng.gen_range(0..=k))
        } else if must_close || roll < 6 {
            MorseEvent::Cap(rng.gen_range(0..k - 1))
        } else if remaining > k / 2 {
            let p = rng.gen_range(0..k - 1);
            if rng.gen_bool(0.5) {
                MorseEvent::CrossPos(p)
            } else {
                MorseEvent::CrossNeg(p)
            }
        } else {
            MorseEvent::Cap(rng.gen_range(0..k - 1))
        };
        k = match event {
            MorseEvent::Cup(_) => k + 2,
            MorseEvent::Cap(_) => k - 2,
            _ => k,
        };
        events.push(event);
    }
    events
}

/// Random braid of the given index whose permutation is an n-cycle.
pub fn cyclic_braid<R: Rng>(rng: &mut R, index: usize, max_letters: usize) -> BraidWord {
    loop {
        let len = rng.gen_range(0..=max_letters);
        let letters = (0..len)
            .filter(|_| index > 1)
            .map(|_| {
                let g = rng.gen_range(1..index);
                if rng.gen_bool(0.5) {
                    BraidLetter::pos(g)
                } else {
                    BraidLetter::neg(g)
                }
            })
            .collect();
        let b = BraidWord::new(index, letters).expect("generators in range");
        if b.cycle_count() == 1 {
            return b;
        }
    }
}
