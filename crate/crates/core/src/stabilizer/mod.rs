//! Stabilization arithmetic and the derivation engine for move certificates.

mod braid;
mod derive;
mod search;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hurwitz::{divisibility_check, divisibility_modulus, euler_invariant, FiberCounts, HurwitzError, MoveCertificate, Verification};
use crate::mcg::{Genus, McgError};

pub use derive::{block_pass_target, derive_w2h, derive_w2h_stages, macro_block_pass, macro_reverse_chain};
pub use search::{search_equivalence, SearchOptions, SearchOutcome, SearchSummary, DEFAULT_BUDGET};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StabError {
    #[error(transparent)]
    Mcg(#[from] McgError),
    #[error(transparent)]
    Hurwitz(#[from] HurwitzError),
    #[error("counts do not match genus {genus}")]
    CountsShape { genus: u32 },
    #[error("hypothesis violated: n_{h}^+ = {plus} < n_{h}^- = {minus}")]
    Hypothesis { h: u32, plus: u64, minus: u64 },
    #[error("E = {e} is not a multiple of {modulus}")]
    Divisibility { e: i64, modulus: i64 },
    #[error("m0 bound not asserted when some n_h^- is nonzero")]
    BoundNotAsserted,
    #[error("search budget exhausted after {expanded} expanded states")]
    BudgetExhausted { expanded: usize },
    #[error("generated certificate failed at step {step}: {reason}")]
    InvalidCertificate { step: usize, reason: String },
    #[error("stage {stage} does not connect to the previous stage")]
    StageMismatch { stage: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coefficients {
    pub a: i64,
    pub b: u8,
}

/// Stabilization normal form coefficients of a fiber census.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalForm {
    #[serde(rename = "E")]
    pub e: i64,
    /// One entry when `g` is even; both parities when `g` is odd.
    pub b_options: Vec<Coefficients>,
    #[serde(rename = "c")]
    pub c: Vec<u64>,
    pub d: u64,
    #[serde(rename = "e")]
    pub e_h: Vec<u64>,
    pub m0: Option<u64>,
}

impl NormalForm {
    pub fn b_underdetermined(&self) -> bool {
        self.b_options.len() > 1
    }
}

pub fn normal_form(c: &FiberCounts, genus: Genus) -> Result<NormalForm, StabError> {
    if !c.matches_genus(genus) {
        return Err(StabError::CountsShape { genus: genus.get() });
    }
    for (k, (&plus, &minus)) in c.nh_plus.iter().zip(&c.nh_minus).enumerate() {
        if plus < minus {
            return Err(StabError::Hypothesis { h: k as u32 + 1, plus, minus });
        }
    }
    let e = euler_invariant(c, genus);
    if !divisibility_check(e, genus) {
        return Err(StabError::Divisibility { e, modulus: divisibility_modulus(genus) });
    }
    let g = genus.get() as i64;
    let unit_a = 4 * (2 * g + 1);
    let unit_b = 2 * (g + 1) * (2 * g + 1);
    let b_options = [0u8, 1]
        .into_iter()
        .filter_map(|b| {
            let rest = e - unit_b * b as i64;
            (rest % unit_a == 0).then(|| Coefficients { a: rest / unit_a, b })
        })
        .collect();
    Ok(NormalForm {
        e,
        b_options,
        c: c.nh_plus.iter().zip(&c.nh_minus).map(|(p, m)| p - m).collect(),
        d: c.n0_minus,
        e_h: c.nh_minus.clone(),
        m0: m0_bound(c).ok(),
    })
}

/// `n₀⁻ + Σ_h (h+1)·n_h⁺ + 1`, asserted only when every `n_h⁻` vanishes.
pub fn m0_bound(c: &FiberCounts) -> Result<u64, StabError> {
    if c.nh_minus.iter().any(|&x| x != 0) {
        return Err(StabError::BoundNotAsserted);
    }
    let weighted: u64 = c.nh_plus.iter().enumerate().map(|(k, &n)| (k as u64 + 2) * n).sum();
    Ok(c.n0_minus + weighted + 1)
}

pub fn verify_certificate(cert: &MoveCertificate) -> Verification {
    cert.verify()
}
