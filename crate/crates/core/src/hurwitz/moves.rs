use serde::{Deserialize, Serialize};

use super::{FactorEntry, HurwitzError, HurwitzSystem};
use crate::mcg::{chain_word_unchecked, Genus, Letter, Sign};

/// A rewriting move anchored at `pos`. For cyclic moves `pos` is the shift.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum MoveKind {
    /// `(ζ_i, ζ_j) → (ζ_j, ζ_i)`, `|i−j| > 1`.
    H1 { pos: usize, i: u32, j: u32 },
    /// `(ζ_j, ζ_i) → (ζ_i, ζ_j)`.
    H1inv { pos: usize, i: u32, j: u32 },
    /// `(ζ_i, ζ_j, ζ_i) → (ζ_j, ζ_i, ζ_j)`, `|i−j| = 1`.
    H2 { pos: usize, i: u32, j: u32 },
    /// `(ζ_j, ζ_i, ζ_j) → (ζ_i, ζ_j, ζ_i)`.
    H2inv { pos: usize, i: u32, j: u32 },
    /// `(T, ζ_i) → (ζ_i, T)` with `T = (ζ_1..ζ_{2g+1}, ζ_{2g+1}..ζ_1)`.
    H3 { pos: usize },
    /// `(ζ_i, T) → (T, ζ_i)`.
    H3inv { pos: usize },
    /// `(a, b) → (a·b·a⁻¹, a)`.
    SlideRight { pos: usize },
    /// `(a, b) → (b, b⁻¹·a·b)`.
    SlideLeft { pos: usize },
    /// Moves the first `pos` entries to the back.
    CyclicLeft { pos: usize },
    /// Moves the last `pos` entries to the front.
    CyclicRight { pos: usize },
    /// Replaces a `σ_h^{±1}` entry by its chain spelling, same conjugator.
    ExpandSigma { pos: usize, h: u32 },
    /// Exact inverse of `ExpandSigma`.
    ContractSigma { pos: usize, h: u32 },
}

impl MoveKind {
    pub fn name(&self) -> &'static str {
        match self {
            MoveKind::H1 { .. } => "H1",
            MoveKind::H1inv { .. } => "H1inv",
            MoveKind::H2 { .. } => "H2",
            MoveKind::H2inv { .. } => "H2inv",
            MoveKind::H3 { .. } => "H3",
            MoveKind::H3inv { .. } => "H3inv",
            MoveKind::SlideRight { .. } => "SlideRight",
            MoveKind::SlideLeft { .. } => "SlideLeft",
            MoveKind::CyclicLeft { .. } => "CyclicLeft",
            MoveKind::CyclicRight { .. } => "CyclicRight",
            MoveKind::ExpandSigma { .. } => "ExpandSigma",
            MoveKind::ContractSigma { .. } => "ContractSigma",
        }
    }

    pub fn pos(&self) -> usize {
        match *self {
            MoveKind::H1 { pos, .. }
            | MoveKind::H1inv { pos, .. }
            | MoveKind::H2 { pos, .. }
            | MoveKind::H2inv { pos, .. }
            | MoveKind::H3 { pos }
            | MoveKind::H3inv { pos }
            | MoveKind::SlideRight { pos }
            | MoveKind::SlideLeft { pos }
            | MoveKind::CyclicLeft { pos }
            | MoveKind::CyclicRight { pos }
            | MoveKind::ExpandSigma { pos, .. }
            | MoveKind::ContractSigma { pos, .. } => pos,
        }
    }

    /// Undoes `self`: `apply(apply(s, m), m.inverse()) == s`.
    pub fn inverse(&self) -> MoveKind {
        match *self {
            MoveKind::H1 { pos, i, j } => MoveKind::H1inv { pos, i, j },
            MoveKind::H1inv { pos, i, j } => MoveKind::H1 { pos, i, j },
            MoveKind::H2 { pos, i, j } => MoveKind::H2inv { pos, i, j },
            MoveKind::H2inv { pos, i, j } => MoveKind::H2 { pos, i, j },
            MoveKind::H3 { pos } => MoveKind::H3inv { pos },
            MoveKind::H3inv { pos } => MoveKind::H3 { pos },
            MoveKind::SlideRight { pos } => MoveKind::SlideLeft { pos },
            MoveKind::SlideLeft { pos } => MoveKind::SlideRight { pos },
            MoveKind::CyclicLeft { pos } => MoveKind::CyclicRight { pos },
            MoveKind::CyclicRight { pos } => MoveKind::CyclicLeft { pos },
            MoveKind::ExpandSigma { pos, h } => MoveKind::ContractSigma { pos, h },
            MoveKind::ContractSigma { pos, h } => MoveKind::ExpandSigma { pos, h },
        }
    }

    /// Same move with its anchor moved by `offset`; cyclic shifts are unchanged.
    pub fn shifted(&self, offset: usize) -> MoveKind {
        let mut m = *self;
        match &mut m {
            MoveKind::CyclicLeft { .. } | MoveKind::CyclicRight { .. } => {}
            MoveKind::H1 { pos, .. }
            | MoveKind::H1inv { pos, .. }
            | MoveKind::H2 { pos, .. }
            | MoveKind::H2inv { pos, .. }
            | MoveKind::H3 { pos }
            | MoveKind::H3inv { pos }
            | MoveKind::SlideRight { pos }
            | MoveKind::SlideLeft { pos }
            | MoveKind::ExpandSigma { pos, .. }
            | MoveKind::ContractSigma { pos, .. } => *pos += offset,
        }
        m
    }

    /// Length of the window the move reads, given the system length `n`.
    pub fn window(&self, genus: Genus, n: usize) -> usize {
        match *self {
            MoveKind::H1 { .. } | MoveKind::H1inv { .. } => 2,
            MoveKind::H2 { .. } | MoveKind::H2inv { .. } => 3,
            MoveKind::H3 { .. } | MoveKind::H3inv { .. } => t_len(genus) + 1,
            MoveKind::SlideRight { .. } | MoveKind::SlideLeft { .. } => 2,
            MoveKind::CyclicLeft { .. } | MoveKind::CyclicRight { .. } => n,
            MoveKind::ExpandSigma { .. } => 1,
            MoveKind::ContractSigma { h, .. } => chain_len(h),
        }
    }
}

pub(crate) fn t_len(genus: Genus) -> usize {
    2 * genus.zeta_count() as usize
}

pub(crate) fn chain_len(h: u32) -> usize {
    (4 * h * (2 * h + 1)) as usize
}

/// `T = (1, …, 2g+1, 2g+1, …, 1)` as indices.
pub(crate) fn t_indices(genus: Genus) -> Vec<u32> {
    let n = genus.zeta_count();
    (1..=n).chain((1..=n).rev()).collect()
}

fn mismatch(kind: &'static str, pos: usize, detail: impl Into<String>) -> HurwitzError {
    HurwitzError::PatternMismatch { kind, pos, detail: detail.into() }
}

fn plain_window(
    s: &HurwitzSystem,
    kind: &'static str,
    pos: usize,
    len: usize,
) -> Result<Vec<u32>, HurwitzError> {
    let n = s.len();
    if pos + len > n {
        return Err(HurwitzError::OutOfRange { pos, len: n });
    }
    s.entries()[pos..pos + len]
        .iter()
        .map(|e| e.as_plain_zeta())
        .collect::<Option<Vec<u32>>>()
        .ok_or_else(|| mismatch(kind, pos, "entries must be plain positive zeta twists"))
}

fn check_indices(genus: Genus, i: u32, j: u32) -> Result<(), HurwitzError> {
    genus.check(Letter::Zeta(i))?;
    genus.check(Letter::Zeta(j))?;
    Ok(())
}

pub(crate) fn apply_in_place(s: &mut HurwitzSystem, m: &MoveKind) -> Result<(), HurwitzError> {
    let genus = s.genus();
    let name = m.name();
    match *m {
        MoveKind::H1 { pos, i, j } | MoveKind::H1inv { pos, i, j } => {
            check_indices(genus, i, j)?;
            if i.abs_diff(j) <= 1 {
                return Err(mismatch(name, pos, format!("|{i}-{j}| must exceed 1")));
            }
            let (from, to) = if matches!(m, MoveKind::H1 { .. }) { ([i, j], [j, i]) } else { ([j, i], [i, j]) };
            let w = plain_window(s, name, pos, 2)?;
            if w != from {
                return Err(mismatch(name, pos, format!("expected z{} z{}", from[0], from[1])));
            }
            write_plain(s, pos, &to);
        }
        MoveKind::H2 { pos, i, j } | MoveKind::H2inv { pos, i, j } => {
            check_indices(genus, i, j)?;
            if i.abs_diff(j) != 1 {
                return Err(mismatch(name, pos, format!("|{i}-{j}| must equal 1")));
            }
            let (from, to) =
                if matches!(m, MoveKind::H2 { .. }) { ([i, j, i], [j, i, j]) } else { ([j, i, j], [i, j, i]) };
            let w = plain_window(s, name, pos, 3)?;
            if w != from {
                return Err(mismatch(name, pos, format!("expected z{} z{} z{}", from[0], from[1], from[2])));
            }
            write_plain(s, pos, &to);
        }
        MoveKind::H3 { pos } => {
            let t = t_indices(genus);
            let w = plain_window(s, name, pos, t.len() + 1)?;
            if w[..t.len()] != t[..] {
                return Err(mismatch(name, pos, "window does not start with T"));
            }
            s.entries_mut()[pos..pos + t.len() + 1].rotate_right(1);
        }
        MoveKind::H3inv { pos } => {
            let t = t_indices(genus);
            let w = plain_window(s, name, pos, t.len() + 1)?;
            if w[1..] != t[..] {
                return Err(mismatch(name, pos, "window does not end with T"));
            }
            s.entries_mut()[pos..pos + t.len() + 1].rotate_left(1);
        }
        MoveKind::SlideRight { pos } | MoveKind::SlideLeft { pos } => {
            let n = s.len();
            if pos + 2 > n {
                return Err(HurwitzError::OutOfRange { pos, len: n });
            }
            let a = s.entries()[pos].clone();
            let b = s.entries()[pos + 1].clone();
            let (x, y) = if matches!(m, MoveKind::SlideRight { .. }) {
                (b.conjugated_by(&a.word()), a)
            } else {
                let a2 = a.conjugated_by(&b.word().inverse());
                (b, a2)
            };
            s.entries_mut()[pos] = x;
            s.entries_mut()[pos + 1] = y;
        }
        MoveKind::CyclicLeft { pos: k } | MoveKind::CyclicRight { pos: k } => {
            let n = s.len();
            if k == 0 || k >= n {
                return Err(HurwitzError::OutOfRange { pos: k, len: n });
            }
            if matches!(m, MoveKind::CyclicLeft { .. }) {
                s.entries_mut().rotate_left(k);
            } else {
                s.entries_mut().rotate_right(k);
            }
        }
        MoveKind::ExpandSigma { pos, h } => {
            genus.check_sigma(h)?;
            let n = s.len();
            if pos >= n {
                return Err(HurwitzError::OutOfRange { pos, len: n });
            }
            let e = s.entries()[pos].clone();
            if e.base() != Letter::Sigma(h) {
                return Err(mismatch(name, pos, format!("entry is not a conjugate of s{h}")));
            }
            let spelled = chain_spelling(genus, h, e.sign());
            let new: Vec<FactorEntry> = spelled
                .into_iter()
                .map(|i| FactorEntry { conjugator: e.conjugator().clone(), base: Letter::Zeta(i), sign: e.sign() })
                .collect();
            s.entries_mut().splice(pos..pos + 1, new);
        }
        MoveKind::ContractSigma { pos, h } => {
            genus.check_sigma(h)?;
            let n = s.len();
            let len = chain_len(h);
            if pos + len > n {
                return Err(HurwitzError::OutOfRange { pos, len: n });
            }
            let window = &s.entries()[pos..pos + len];
            let first = &window[0];
            let sign = first.sign();
            let spelled = chain_spelling(genus, h, sign);
            let ok = window.iter().zip(&spelled).all(|(e, &i)| {
                e.conjugator() == first.conjugator() && e.sign() == sign && e.base() == Letter::Zeta(i)
            });
            if !ok {
                return Err(mismatch(name, pos, format!("window does not spell the chain for s{h}")));
            }
            let entry = FactorEntry { conjugator: first.conjugator().clone(), base: Letter::Sigma(h), sign };
            s.entries_mut().splice(pos..pos + len, [entry]);
        }
    }
    Ok(())
}

/// Base indices of the chain word for `σ_h^{±1}`; reversed for the negative sign.
fn chain_spelling(genus: Genus, h: u32, sign: Sign) -> Vec<u32> {
    let mut idx: Vec<u32> = chain_word_unchecked(h, genus).letters().iter().map(|l| l.letter.index()).collect();
    if sign == Sign::Neg {
        idx.reverse();
    }
    idx
}

fn write_plain(s: &mut HurwitzSystem, pos: usize, idx: &[u32]) {
    let genus = s.genus();
    for (k, &i) in idx.iter().enumerate() {
        s.entries_mut()[pos + k] = FactorEntry::plain_zeta(genus, i);
    }
}
