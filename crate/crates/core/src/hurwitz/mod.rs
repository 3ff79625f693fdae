//! Hurwitz systems (monodromy factorizations), fiber-type censuses, rewriting
//! moves and the invariant `E(f)`.

mod basic;
mod certificate;
mod moves;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::mcg::{perm_image, symp_image, Genus, Letter, McgError, Permutation, Sign, SignedLetter, Word};

pub use basic::{w0, w1, w1p, w2h, w2h_sigma_offset, w2hp, wprime2h, BasicName};
pub use certificate::{replay, MoveCertificate, ReplayFailure, Verification};
pub use moves::MoveKind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HurwitzError {
    #[error(transparent)]
    Mcg(#[from] McgError),
    #[error("move position {pos} out of range for a system of {len} entries")]
    OutOfRange { pos: usize, len: usize },
    #[error("{kind} does not apply at position {pos}: {detail}")]
    PatternMismatch { kind: &'static str, pos: usize, detail: String },
    #[error("certificate composition: end of the first does not match start of the second")]
    CompositionMismatch,
}

/// One factor `c · x^ε · c⁻¹` of a Hurwitz system, kept in conjugate form so
/// that its fiber type can be read off the base letter.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FactorEntry {
    conjugator: Word,
    base: Letter,
    sign: Sign,
}

impl FactorEntry {
    /// The conjugator is stored freely reduced.
    pub fn new(conjugator: Word, base: Letter, sign: Sign) -> Result<Self, HurwitzError> {
        conjugator.genus().check(base)?;
        Ok(FactorEntry { conjugator: conjugator.free_reduce(), base, sign })
    }

    /// Entry with trivial conjugator.
    pub fn plain(genus: Genus, base: Letter, sign: Sign) -> Result<Self, HurwitzError> {
        FactorEntry::new(Word::empty(genus), base, sign)
    }

    pub(crate) fn plain_zeta(genus: Genus, i: u32) -> Self {
        FactorEntry { conjugator: Word::empty(genus), base: Letter::Zeta(i), sign: Sign::Pos }
    }

    pub fn conjugator(&self) -> &Word {
        &self.conjugator
    }

    pub fn base(&self) -> Letter {
        self.base
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn genus(&self) -> Genus {
        self.conjugator.genus()
    }

    /// `Some(i)` when the entry is exactly `ζ_i` (trivial conjugator, positive).
    pub fn as_plain_zeta(&self) -> Option<u32> {
        match (self.base, self.sign) {
            (Letter::Zeta(i), Sign::Pos) if self.conjugator.is_empty() => Some(i),
            _ => None,
        }
    }

    /// The mapping class as a word: `c · x^ε · c⁻¹`.
    pub fn word(&self) -> Word {
        let mid = Word::from_trusted(self.genus(), vec![SignedLetter { letter: self.base, sign: self.sign }]);
        self.conjugator.conjugate(&mid).expect("same genus")
    }

    /// `conj_w(c, x, ε) = (w·c, x, ε)`, reduced.
    pub(crate) fn conjugated_by(&self, w: &Word) -> FactorEntry {
        let c = w.concat(&self.conjugator).expect("same genus").free_reduce();
        FactorEntry { conjugator: c, base: self.base, sign: self.sign }
    }
}

impl fmt::Display for FactorEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let x = SignedLetter { letter: self.base, sign: self.sign };
        if self.conjugator.is_empty() {
            write!(f, "{x}")
        } else {
            write!(f, "[{}]{x}", self.conjugator)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HurwitzSystem {
    genus: Genus,
    entries: Vec<FactorEntry>,
}

impl HurwitzSystem {
    pub fn new(genus: Genus, entries: Vec<FactorEntry>) -> Result<Self, HurwitzError> {
        for e in &entries {
            genus.same_as(e.genus())?;
        }
        Ok(HurwitzSystem { genus, entries })
    }

    pub fn empty(genus: Genus) -> Self {
        HurwitzSystem { genus, entries: Vec::new() }
    }

    /// System of plain positive `ζ` entries.
    pub fn from_zetas(genus: Genus, indices: &[u32]) -> Result<Self, HurwitzError> {
        let entries = indices
            .iter()
            .map(|&i| FactorEntry::plain(genus, Letter::Zeta(i), Sign::Pos))
            .collect::<Result<_, _>>()?;
        Ok(HurwitzSystem { genus, entries })
    }

    pub(crate) fn from_trusted(genus: Genus, entries: Vec<FactorEntry>) -> Self {
        HurwitzSystem { genus, entries }
    }

    pub fn genus(&self) -> Genus {
        self.genus
    }

    pub fn entries(&self) -> &[FactorEntry] {
        &self.entries
    }

    pub(crate) fn entries_mut(&mut self) -> &mut Vec<FactorEntry> {
        &mut self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Indices when every entry is a plain positive `ζ`.
    pub fn plain_zetas(&self) -> Option<Vec<u32>> {
        self.entries.iter().map(FactorEntry::as_plain_zeta).collect()
    }

    pub fn counts(&self) -> FiberCounts {
        counts(self)
    }

    /// Fiber sum: concatenation of the factorizations.
    pub fn fiber_sum(&self, other: &HurwitzSystem) -> Result<HurwitzSystem, HurwitzError> {
        self.genus.same_as(other.genus)?;
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Ok(HurwitzSystem { genus: self.genus, entries })
    }

    /// Fiber sum of `n` copies.
    pub fn repeat(&self, n: usize) -> HurwitzSystem {
        HurwitzSystem { genus: self.genus, entries: std::iter::repeat_n(self.entries.iter().cloned(), n).flatten().collect() }
    }

    pub fn apply(&self, m: &MoveKind) -> Result<HurwitzSystem, HurwitzError> {
        apply_move(self, m)
    }

    /// Every singular fiber of positive type.
    pub fn is_chiral(&self) -> bool {
        self.entries.iter().all(|e| e.sign == Sign::Pos)
    }

    /// No separating vanishing cycles.
    pub fn is_irreducible(&self) -> bool {
        self.entries.iter().all(|e| e.base.is_zeta())
    }
}

impl fmt::Display for HurwitzSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, e) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Numbers of singular fibers of types `I^±` and `II_h^±`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FiberCounts {
    pub n0_plus: u64,
    pub n0_minus: u64,
    /// Index `h-1` holds `n_h^+`.
    pub nh_plus: Vec<u64>,
    pub nh_minus: Vec<u64>,
}

impl FiberCounts {
    pub fn zero(genus: Genus) -> Self {
        let k = genus.sigma_count() as usize;
        FiberCounts { n0_plus: 0, n0_minus: 0, nh_plus: vec![0; k], nh_minus: vec![0; k] }
    }

    pub fn total(&self) -> u64 {
        self.n0_plus + self.n0_minus + self.nh_plus.iter().sum::<u64>() + self.nh_minus.iter().sum::<u64>()
    }

    pub fn add(&self, other: &FiberCounts) -> FiberCounts {
        let zip = |a: &[u64], b: &[u64]| a.iter().zip(b).map(|(x, y)| x + y).collect();
        FiberCounts {
            n0_plus: self.n0_plus + other.n0_plus,
            n0_minus: self.n0_minus + other.n0_minus,
            nh_plus: zip(&self.nh_plus, &other.nh_plus),
            nh_minus: zip(&self.nh_minus, &other.nh_minus),
        }
    }

    /// Genus implied by the array length is ambiguous; callers pass it.
    pub fn matches_genus(&self, genus: Genus) -> bool {
        let k = genus.sigma_count() as usize;
        self.nh_plus.len() == k && self.nh_minus.len() == k
    }

    pub fn is_chiral(&self) -> bool {
        self.n0_minus == 0 && self.nh_minus.iter().all(|&x| x == 0)
    }

    pub fn is_irreducible(&self) -> bool {
        self.nh_plus.iter().chain(&self.nh_minus).all(|&x| x == 0)
    }
}

/// Syntactic fiber-type census: `ζ` bases are type I, `σ_h` bases type `II_h`.
pub fn counts(s: &HurwitzSystem) -> FiberCounts {
    let mut c = FiberCounts::zero(s.genus);
    for e in &s.entries {
        match (e.base, e.sign) {
            (Letter::Zeta(_), Sign::Pos) => c.n0_plus += 1,
            (Letter::Zeta(_), Sign::Neg) => c.n0_minus += 1,
            (Letter::Sigma(h), Sign::Pos) => c.nh_plus[h as usize - 1] += 1,
            (Letter::Sigma(h), Sign::Neg) => c.nh_minus[h as usize - 1] += 1,
        }
    }
    c
}

/// `E = n₀⁺ − n₀⁻ − 4 Σ_h (n_h⁺ − n_h⁻)(2h(g−h) + 2g + 1)`.
pub fn euler_invariant(c: &FiberCounts, genus: Genus) -> i64 {
    let g = genus.get() as i64;
    let mut e = c.n0_plus as i64 - c.n0_minus as i64;
    for (k, (&p, &m)) in c.nh_plus.iter().zip(&c.nh_minus).enumerate() {
        let h = k as i64 + 1;
        e -= 4 * (p as i64 - m as i64) * (2 * h * (g - h) + 2 * g + 1);
    }
    e
}

/// The modulus `E` must be a multiple of: `2(2g+1)` for even `g`, `4(2g+1)` for odd.
pub fn divisibility_modulus(genus: Genus) -> i64 {
    let g = genus.get() as i64;
    if g % 2 == 0 {
        2 * (2 * g + 1)
    } else {
        4 * (2 * g + 1)
    }
}

pub fn divisibility_check(e: i64, genus: Genus) -> bool {
    e % divisibility_modulus(genus) == 0
}

/// Product of the entries, each expanded as `c · x^ε · c⁻¹`.
pub fn total_monodromy(s: &HurwitzSystem) -> Word {
    let mut letters = Vec::new();
    for e in &s.entries {
        letters.extend_from_slice(e.word().letters());
    }
    Word::from_trusted(s.genus, letters)
}

/// Both representation images of the total monodromy are the identity.
pub fn is_closed(s: &HurwitzSystem) -> Result<bool, McgError> {
    let w = total_monodromy(s);
    if !perm_image(&w).is_identity() {
        return Ok(false);
    }
    Ok(symp_image(&w)?.is_identity())
}

/// Whether the branch-point images of the entries generate a transitive group.
pub fn monodromy_transitive(s: &HurwitzSystem) -> bool {
    let perms: Vec<Permutation> = s.entries.iter().map(|e| perm_image(&e.word())).collect();
    Permutation::generate_transitive(s.genus.branch_points(), &perms)
}

pub fn apply_move(s: &HurwitzSystem, m: &MoveKind) -> Result<HurwitzSystem, HurwitzError> {
    let mut out = s.clone();
    moves::apply_in_place(&mut out, m)?;
    Ok(out)
}
