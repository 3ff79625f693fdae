//! Constructive derivation of `W'_{2,h}` from `h+1` copies of `W_0`.

use super::braid::{rewrite, EngineFailure};
use super::search::{search_equivalence, SearchOptions};
use super::StabError;
use crate::hurwitz::{w0, w2h_sigma_offset, wprime2h, HurwitzSystem, MoveCertificate, MoveKind};
use crate::mcg::Genus;

/// Elementary engine steps allowed per rewrite before falling back to search.
const ENGINE_BUDGET: u64 = 200_000_000;

fn asc(lo: u32, hi: u32) -> impl Iterator<Item = u32> {
    lo..=hi
}

fn desc(hi: u32, lo: u32) -> impl Iterator<Item = u32> {
    (lo..=hi).rev()
}

fn system(genus: Genus, idx: &[u32]) -> HurwitzSystem {
    HurwitzSystem::from_zetas(genus, idx).expect("indices in range")
}

/// H1/H2 certificate between two positive words, by the deterministic engine
/// with a bounded search fallback.
fn positive_certificate(genus: Genus, from: &[u32], to: &[u32], budget: usize) -> Result<MoveCertificate, StabError> {
    let start = system(genus, from);
    let end = system(genus, to);
    let moves = match rewrite(from, to, 0, ENGINE_BUDGET) {
        Ok(moves) => moves,
        Err(EngineFailure::NotDivisor) | Err(EngineFailure::Budget) => {
            let out = search_equivalence(&start, &end, SearchOptions { budget, cyclic: false });
            match out.certificate {
                Some(c) => c.moves,
                None => return Err(StabError::BudgetExhausted { expanded: out.expanded }),
            }
        }
    };
    let cert = MoveCertificate { start, moves, end };
    check(cert)
}

fn check(cert: MoveCertificate) -> Result<MoveCertificate, StabError> {
    let v = cert.verify();
    if v.ok {
        Ok(cert)
    } else {
        Err(StabError::InvalidCertificate { step: v.failed_step.unwrap_or(0), reason: v.reason.unwrap_or_default() })
    }
}

/// `(ζ_{2h}, …, ζ_1)^{2h+1} → (ζ_1, …, ζ_{2h})^{2h+1}` by H1/H2 moves.
pub fn macro_reverse_chain(genus: Genus, h: u32, budget: usize) -> Result<MoveCertificate, StabError> {
    genus.check_sigma(h)?;
    let from: Vec<u32> = desc(2 * h, 1).collect::<Vec<_>>().repeat(2 * h as usize + 1);
    let to: Vec<u32> = asc(1, 2 * h).collect::<Vec<_>>().repeat(2 * h as usize + 1);
    positive_certificate(genus, &from, &to, budget)
}

/// The intermediate system reached by the block pass: `W'_{2,h}` with the
/// chain written as `(ζ_{2h}..ζ_1)^{2h+1} (ζ_1..ζ_{2h})^{2h+1}`.
pub fn block_pass_target(genus: Genus, h: u32) -> Vec<u32> {
    let n = genus.zeta_count();
    let top = 2 * genus.get() - 2 * h + 1;
    let reps = 2 * h as usize + 1;
    let mut idx: Vec<u32> = desc(n, 1).collect();
    for k in (1..=top).rev() {
        idx.extend(asc(k, k + 2 * h));
    }
    idx.extend(desc(2 * h, 1).collect::<Vec<_>>().repeat(reps));
    idx.extend(asc(1, 2 * h).collect::<Vec<_>>().repeat(reps));
    for k in 1..=top {
        idx.extend(desc(k + 2 * h, k));
    }
    idx.extend(asc(1, n));
    idx
}

/// `((ζ_{2g+1}..ζ_1)^{2(h+1)}, (ζ_1..ζ_{2g+1})^{2(h+1)})` → the block-pass target.
pub fn macro_block_pass(genus: Genus, h: u32, budget: usize) -> Result<MoveCertificate, StabError> {
    genus.check_sigma(h)?;
    let n = genus.zeta_count();
    let k = 2 * (h as usize + 1);
    let mut from: Vec<u32> = desc(n, 1).collect::<Vec<_>>().repeat(k);
    from.extend(asc(1, n).collect::<Vec<_>>().repeat(k));
    positive_certificate(genus, &from, &block_pass_target(genus, h), budget)
}

/// `T^k → A^k R^k` with `A = (ζ_1..ζ_{2g+1})`, `R` its reverse, by H3 moves only.
fn collect_by_h3(genus: Genus, k: usize) -> Vec<MoveKind> {
    let a = genus.zeta_count() as usize;
    let l = 2 * a;
    let mut moves = Vec::new();
    // after handling copy c the suffix from c·l reads A^{m+1} R^{m+1}
    for c in (0..k.saturating_sub(1)).rev() {
        let m = k - 1 - c;
        for r in 0..m * a {
            moves.push(MoveKind::H3 { pos: c * l + r });
        }
    }
    moves
}

/// The four stages of the derivation, each a verified certificate.
pub fn derive_w2h_stages(genus: Genus, h: u32, budget: usize) -> Result<Vec<(&'static str, MoveCertificate)>, StabError> {
    genus.check_sigma(h)?;
    let k = 2 * (h as usize + 1);
    let a = genus.zeta_count() as usize;
    let start = w0(genus).repeat(h as usize + 1);

    let stage1 = check(MoveCertificate::from_moves(start, collect_by_h3(genus, k)).map_err(|f| {
        StabError::InvalidCertificate { step: f.step, reason: f.error.to_string() }
    })?)?;
    let stage2 = check(
        MoveCertificate::from_moves(stage1.end.clone(), vec![MoveKind::CyclicLeft { pos: k * a }])
            .map_err(|f| StabError::InvalidCertificate { step: f.step, reason: f.error.to_string() })?,
    )?;
    let stage3 = macro_block_pass(genus, h, budget)?;
    if stage3.start != stage2.end {
        return Err(StabError::StageMismatch { stage: 3 });
    }

    let chain = macro_reverse_chain(genus, h, budget)?;
    let offset = w2h_sigma_offset(genus, h);
    let moves: Vec<MoveKind> = chain.moves.iter().map(|m| m.shifted(offset)).collect();
    let stage4 = MoveCertificate::from_moves(stage3.end.clone(), moves)
        .map_err(|f| StabError::InvalidCertificate { step: f.step, reason: f.error.to_string() })?;
    if stage4.end != wprime2h(genus, h).expect("h checked") {
        return Err(StabError::StageMismatch { stage: 4 });
    }
    Ok(vec![("h3-collect", stage1), ("cyclic", stage2), ("block-pass", stage3), ("reverse-chain", stage4)])
}

/// Certificate from `(h+1)·W_0` to `W'_{2,h}`.
pub fn derive_w2h(genus: Genus, h: u32, budget: usize) -> Result<MoveCertificate, StabError> {
    let stages = derive_w2h_stages(genus, h, budget)?;
    let mut iter = stages.into_iter().map(|(_, c)| c);
    let first = iter.next().expect("four stages");
    let cert = iter.try_fold(first, |acc, c| acc.then(&c))?;
    check(cert)
}
