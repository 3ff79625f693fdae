//! Words in the hyperelliptic mapping class group.
//!
//! The group is presented on the chain twists `ζ_1, …, ζ_{2g+1}` together with
//! the separating twists `σ_1, …, σ_{⌊g/2⌋}`. Equality of mapping classes is not
//! decided here; [`perm_image`] and [`symp_image`] are two exact homomorphic
//! images that give sound but incomplete equality tests.

mod perm;
mod relations;
mod symp;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use perm::{perm_image, Permutation};
pub use relations::{relation_check, RelationInstance, RelationReport};
pub use symp::{chain_class, intersection, symp_image, SympMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum McgError {
    #[error("genus must be at least 1")]
    ZeroGenus,
    #[error("letter {letter} is not a generator in genus {genus}")]
    LetterOutOfRange { letter: Letter, genus: u32 },
    #[error("genus mismatch: {left} vs {right}")]
    GenusMismatch { left: u32, right: u32 },
    #[error("separating twist index {h} out of range for genus {genus}")]
    SigmaIndex { h: u32, genus: u32 },
    #[error("integer overflow while multiplying symplectic matrices")]
    Overflow,
}

/// Genus of the general fiber.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct Genus(u32);

impl Genus {
    pub fn new(g: u32) -> Result<Self, McgError> {
        if g == 0 {
            return Err(McgError::ZeroGenus);
        }
        Ok(Genus(g))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// Number of chain generators, `2g+1`.
    pub fn zeta_count(self) -> u32 {
        2 * self.0 + 1
    }

    /// Number of separating generators, `⌊g/2⌋`.
    pub fn sigma_count(self) -> u32 {
        self.0 / 2
    }

    /// Number of branch points, `2g+2`.
    pub fn branch_points(self) -> usize {
        2 * self.0 as usize + 2
    }

    pub fn check_sigma(self, h: u32) -> Result<(), McgError> {
        if h == 0 || h > self.sigma_count() {
            return Err(McgError::SigmaIndex { h, genus: self.0 });
        }
        Ok(())
    }

    pub fn check(self, letter: Letter) -> Result<(), McgError> {
        let ok = match letter {
            Letter::Zeta(i) => (1..=self.zeta_count()).contains(&i),
            Letter::Sigma(h) => (1..=self.sigma_count()).contains(&h),
        };
        if ok {
            Ok(())
        } else {
            Err(McgError::LetterOutOfRange { letter, genus: self.0 })
        }
    }

    pub fn same_as(self, other: Genus) -> Result<(), McgError> {
        if self == other {
            Ok(())
        } else {
            Err(McgError::GenusMismatch { left: self.0, right: other.0 })
        }
    }
}

impl TryFrom<u32> for Genus {
    type Error = McgError;
    fn try_from(g: u32) -> Result<Self, McgError> {
        Genus::new(g)
    }
}

impl From<Genus> for u32 {
    fn from(g: Genus) -> u32 {
        g.0
    }
}

impl fmt::Display for Genus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// An unsigned generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    Zeta(u32),
    Sigma(u32),
}

impl Letter {
    pub fn index(self) -> u32 {
        match self {
            Letter::Zeta(i) | Letter::Sigma(i) => i,
        }
    }

    pub fn is_zeta(self) -> bool {
        matches!(self, Letter::Zeta(_))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Zeta(i) => write!(f, "z{i}"),
            Letter::Sigma(h) => write!(f, "s{h}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn from_i64(s: i64) -> Option<Sign> {
        match s {
            1 => Some(Sign::Pos),
            -1 => Some(Sign::Neg),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedLetter {
    pub letter: Letter,
    pub sign: Sign,
}

impl SignedLetter {
    pub fn pos(letter: Letter) -> Self {
        SignedLetter { letter, sign: Sign::Pos }
    }

    pub fn neg(letter: Letter) -> Self {
        SignedLetter { letter, sign: Sign::Neg }
    }

    pub fn inverse(self) -> Self {
        SignedLetter { letter: self.letter, sign: self.sign.flip() }
    }
}

impl fmt::Display for SignedLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Pos => write!(f, "{}", self.letter),
            Sign::Neg => write!(f, "{}^-1", self.letter),
        }
    }
}

/// A word in the generators, kept exactly as written (no implicit reduction).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    genus: Genus,
    letters: Vec<SignedLetter>,
}

impl Word {
    pub fn new(genus: Genus, letters: Vec<SignedLetter>) -> Result<Self, McgError> {
        for l in &letters {
            genus.check(l.letter)?;
        }
        Ok(Word { genus, letters })
    }

    pub fn empty(genus: Genus) -> Self {
        Word { genus, letters: Vec::new() }
    }

    /// Positive word in the chain generators `ζ_i`.
    pub fn zetas(genus: Genus, indices: &[u32]) -> Result<Self, McgError> {
        Word::new(
            genus,
            indices.iter().map(|&i| SignedLetter::pos(Letter::Zeta(i))).collect(),
        )
    }

    pub(crate) fn from_trusted(genus: Genus, letters: Vec<SignedLetter>) -> Self {
        Word { genus, letters }
    }

    pub fn genus(&self) -> Genus {
        self.genus
    }

    pub fn letters(&self) -> &[SignedLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Result<Word, McgError> {
        self.genus.same_as(other.genus)?;
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(Word { genus: self.genus, letters })
    }

    pub fn inverse(&self) -> Word {
        Word {
            genus: self.genus,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Cancels adjacent `x·x⁻¹` pairs until none remain.
    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<SignedLetter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word { genus: self.genus, letters: out }
    }

    pub fn pow(&self, n: usize) -> Word {
        let mut letters = Vec::with_capacity(self.len() * n);
        for _ in 0..n {
            letters.extend_from_slice(&self.letters);
        }
        Word { genus: self.genus, letters }
    }

    /// Conjugate `self · w · self⁻¹`.
    pub fn conjugate(&self, w: &Word) -> Result<Word, McgError> {
        self.concat(w)?.concat(&self.inverse())
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|l| l.sign == Sign::Pos)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// `ι = ζ_1 ⋯ ζ_{2g} ζ_{2g+1}² ζ_{2g} ⋯ ζ_1`, a positive word of length `4g+2`.
pub fn iota_word(genus: Genus) -> Word {
    let n = genus.zeta_count();
    let idx: Vec<u32> = (1..=n).chain((1..=n).rev()).collect();
    Word::zetas(genus, &idx).expect("indices in range")
}

/// `(ζ_1 ⋯ ζ_{2h})^{4h+2}`, the chain expression for `σ_h`.
pub fn chain_word(h: u32, genus: Genus) -> Result<Word, McgError> {
    genus.check_sigma(h)?;
    Ok(chain_word_unchecked(h, genus))
}

pub(crate) fn chain_word_unchecked(h: u32, genus: Genus) -> Word {
    let block: Vec<u32> = (1..=2 * h).collect();
    Word::zetas(genus, &block).expect("indices in range").pow(4 * h as usize + 2)
}

/// `(ζ_1 ⋯ ζ_{2g+1})^{2g+2}`.
pub fn full_chain_power(genus: Genus) -> Word {
    let block: Vec<u32> = (1..=genus.zeta_count()).collect();
    Word::zetas(genus, &block)
        .expect("indices in range")
        .pow(genus.branch_points())
}
