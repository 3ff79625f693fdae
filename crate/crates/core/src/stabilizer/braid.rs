//! Deterministic rewriting of positive `ζ` words by H1/H2 moves.
//!
//! The generators satisfy the Artin relations of type A, whose positive monoid
//! has least common multiples: if both `x` and `y` left-divide `w` then so
//! does `xy` (distant) or `xyx` (adjacent). `bring_front` uses exactly that,
//! so it succeeds whenever `x` left-divides the suffix.

use crate::hurwitz::MoveKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum EngineFailure {
    /// The requested letter is not a left divisor of the suffix.
    NotDivisor,
    Budget,
}

pub(crate) struct Engine<'a> {
    buf: &'a mut [u32],
    offset: usize,
    pub(crate) moves: Vec<MoveKind>,
    budget: u64,
}

impl<'a> Engine<'a> {
    pub(crate) fn new(buf: &'a mut [u32], offset: usize, budget: u64) -> Self {
        Engine { buf, offset, moves: Vec::new(), budget }
    }

    /// Moves a copy of `x` to position `start` using moves inside `start..`.
    pub(crate) fn bring_front(&mut self, start: usize, x: u32) -> Result<(), EngineFailure> {
        let Some(&y) = self.buf.get(start) else {
            return Err(EngineFailure::NotDivisor);
        };
        if y == x {
            return Ok(());
        }
        if self.budget == 0 {
            return Err(EngineFailure::Budget);
        }
        self.budget -= 1;
        let pos = self.offset + start;
        if x.abs_diff(y) >= 2 {
            self.bring_front(start + 1, x)?;
            self.buf.swap(start, start + 1);
            self.moves.push(MoveKind::H1 { pos, i: y, j: x });
        } else {
            self.bring_front(start + 1, x)?;
            self.bring_front(start + 2, y)?;
            self.buf[start] = x;
            self.buf[start + 1] = y;
            self.buf[start + 2] = x;
            self.moves.push(MoveKind::H2 { pos, i: y, j: x });
        }
        Ok(())
    }

    /// Rewrites the buffer into `target`, letter by letter from the left.
    pub(crate) fn transform(&mut self, target: &[u32]) -> Result<(), EngineFailure> {
        if target.len() != self.buf.len() {
            return Err(EngineFailure::NotDivisor);
        }
        for (k, &x) in target.iter().enumerate() {
            self.bring_front(k, x)?;
        }
        Ok(())
    }
}

/// H1/H2 moves (anchored at `offset`) rewriting `from` into `to`, if the
/// engine finds them within `budget` elementary steps.
pub(crate) fn rewrite(from: &[u32], to: &[u32], offset: usize, budget: u64) -> Result<Vec<MoveKind>, EngineFailure> {
    let mut buf = from.to_vec();
    let mut e = Engine::new(&mut buf, offset, budget);
    e.transform(to)?;
    Ok(e.moves)
}
