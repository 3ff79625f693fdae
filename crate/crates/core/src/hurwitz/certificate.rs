use serde::Serialize;

use super::moves::apply_in_place;
use super::{HurwitzError, HurwitzSystem, MoveKind};

/// A replayable move sequence between two systems.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoveCertificate {
    pub start: HurwitzSystem,
    pub moves: Vec<MoveKind>,
    pub end: HurwitzSystem,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReplayFailure {
    /// Index of the first move that did not apply.
    pub step: usize,
    pub error: HurwitzError,
}

/// Outcome of checking a certificate. `failed_step == Some(moves.len())` means
/// every move applied but the result differs from the claimed end.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verification {
    pub ok: bool,
    pub failed_step: Option<usize>,
    pub reason: Option<String>,
    pub steps: usize,
}

pub fn replay(start: &HurwitzSystem, moves: &[MoveKind]) -> Result<HurwitzSystem, ReplayFailure> {
    let mut s = start.clone();
    for (step, m) in moves.iter().enumerate() {
        apply_in_place(&mut s, m).map_err(|error| ReplayFailure { step, error })?;
    }
    Ok(s)
}

impl MoveCertificate {
    /// Builds a certificate by replaying `moves`.
    pub fn from_moves(start: HurwitzSystem, moves: Vec<MoveKind>) -> Result<Self, ReplayFailure> {
        let end = replay(&start, &moves)?;
        Ok(MoveCertificate { start, moves, end })
    }

    pub fn identity(start: HurwitzSystem) -> Self {
        MoveCertificate { end: start.clone(), start, moves: Vec::new() }
    }

    pub fn verify(&self) -> Verification {
        let steps = self.moves.len();
        match replay(&self.start, &self.moves) {
            Err(f) => Verification { ok: false, failed_step: Some(f.step), reason: Some(f.error.to_string()), steps },
            Ok(end) if end != self.end => Verification {
                ok: false,
                failed_step: Some(steps),
                reason: Some("replayed end differs from the claimed end".into()),
                steps,
            },
            Ok(_) => Verification { ok: true, failed_step: None, reason: None, steps },
        }
    }

    /// `self` followed by `next`; the endpoints must agree.
    pub fn then(&self, next: &MoveCertificate) -> Result<MoveCertificate, HurwitzError> {
        if self.end != next.start {
            return Err(HurwitzError::CompositionMismatch);
        }
        let mut moves = self.moves.clone();
        moves.extend_from_slice(&next.moves);
        Ok(MoveCertificate { start: self.start.clone(), moves, end: next.end.clone() })
    }

    /// Reverse certificate: inverse moves in reverse order.
    pub fn inverse(&self) -> MoveCertificate {
        MoveCertificate {
            start: self.end.clone(),
            moves: self.moves.iter().rev().map(MoveKind::inverse).collect(),
            end: self.start.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mcg::Genus;

    fn sys(idx: &[u32]) -> HurwitzSystem {
        HurwitzSystem::from_zetas(Genus::new(1).unwrap(), idx).unwrap()
    }

    #[test]
    fn verify_reports_failing_step() {
        let moves = vec![MoveKind::H1 { pos: 0, i: 1, j: 3 }, MoveKind::H1 { pos: 0, i: 1, j: 3 }];
        let c = MoveCertificate { start: sys(&[1, 3]), moves, end: sys(&[3, 1]) };
        let v = c.verify();
        assert!(!v.ok);
        assert_eq!(v.failed_step, Some(1));
    }

    #[test]
    fn wrong_end_is_rejected() {
        let c = MoveCertificate { start: sys(&[1, 3]), moves: vec![], end: sys(&[3, 1]) };
        assert_eq!(c.verify().failed_step, Some(0));
    }

    #[test]
    fn inverse_and_compose() {
        let c = MoveCertificate::from_moves(
            sys(&[1, 2, 1, 3]),
            vec![MoveKind::H2 { pos: 0, i: 1, j: 2 }, MoveKind::CyclicLeft { pos: 1 }],
        )
        .unwrap();
        assert!(c.verify().ok);
        assert!(c.inverse().verify().ok);
        let round = c.then(&c.inverse()).unwrap();
        assert_eq!(round.end, round.start);
        assert!(c.then(&c).is_err());
    }
}
