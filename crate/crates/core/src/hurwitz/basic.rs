use serde::{Deserialize, Serialize};

use super::moves::t_indices;
use super::{FactorEntry, HurwitzError, HurwitzSystem};
use crate::mcg::{Genus, Letter, Sign};

/// Names of the basic systems, as used on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BasicName {
    W0,
    W1,
    W2h,
    W1p,
    W2hp,
    Wprime2h,
}

impl BasicName {
    pub fn build(self, genus: Genus, h: Option<u32>) -> Result<HurwitzSystem, HurwitzError> {
        let need_h = || h.ok_or(HurwitzError::Mcg(crate::mcg::McgError::SigmaIndex { h: 0, genus: genus.get() }));
        match self {
            BasicName::W0 => Ok(w0(genus)),
            BasicName::W1 => Ok(w1(genus)),
            BasicName::W1p => Ok(w1p(genus)),
            BasicName::W2h => w2h(genus, need_h()?),
            BasicName::W2hp => w2hp(genus, need_h()?),
            BasicName::Wprime2h => wprime2h(genus, need_h()?),
        }
    }
}

fn plain(genus: Genus, idx: &[u32]) -> Vec<FactorEntry> {
    idx.iter().map(|&i| FactorEntry::plain_zeta(genus, i)).collect()
}

/// `W_0 = T²`.
pub fn w0(genus: Genus) -> HurwitzSystem {
    HurwitzSystem::from_trusted(genus, plain(genus, &t_indices(genus).repeat(2)))
}

/// `W_1 = (ζ_1, …, ζ_{2g+1})^{2g+2}`.
pub fn w1(genus: Genus) -> HurwitzSystem {
    let block: Vec<u32> = (1..=genus.zeta_count()).collect();
    HurwitzSystem::from_trusted(genus, plain(genus, &block.repeat(genus.branch_points())))
}

/// `W'_1 = (ζ_1, ζ_1⁻¹)`.
pub fn w1p(genus: Genus) -> HurwitzSystem {
    let z = |sign| FactorEntry::plain(genus, Letter::Zeta(1), sign).expect("ζ_1 exists");
    HurwitzSystem::from_trusted(genus, vec![z(Sign::Pos), z(Sign::Neg)])
}

/// `W'_{2,h} = (σ_h, σ_h⁻¹)`.
pub fn w2hp(genus: Genus, h: u32) -> Result<HurwitzSystem, HurwitzError> {
    genus.check_sigma(h)?;
    let s = |sign| FactorEntry::plain(genus, Letter::Sigma(h), sign).expect("checked");
    Ok(HurwitzSystem::from_trusted(genus, vec![s(Sign::Pos), s(Sign::Neg)]))
}

/// Indices before and after the middle entry of `W_{2,h}`.
fn w2h_parts(genus: Genus, h: u32) -> (Vec<u32>, Vec<u32>) {
    let n = genus.zeta_count();
    let g = genus.get();
    let top = 2 * g - 2 * h + 1;
    let mut left: Vec<u32> = (1..=n).rev().collect();
    for k in (1..=top).rev() {
        left.extend(k..=k + 2 * h);
    }
    let mut right = Vec::new();
    for k in 1..=top {
        right.extend((k..=k + 2 * h).rev());
    }
    right.extend(1..=n);
    (left, right)
}

/// `W_{2,h}`: the blocks of the basic fibration with the single `σ_h` in the middle.
pub fn w2h(genus: Genus, h: u32) -> Result<HurwitzSystem, HurwitzError> {
    genus.check_sigma(h)?;
    let (left, right) = w2h_parts(genus, h);
    let mut entries = plain(genus, &left);
    entries.push(FactorEntry::plain(genus, Letter::Sigma(h), Sign::Pos)?);
    entries.extend(plain(genus, &right));
    Ok(HurwitzSystem::from_trusted(genus, entries))
}

/// `W_{2,h}` with `σ_h` spelled out as `(ζ_1 ⋯ ζ_{2h})^{4h+2}`.
pub fn wprime2h(genus: Genus, h: u32) -> Result<HurwitzSystem, HurwitzError> {
    genus.check_sigma(h)?;
    let (mut idx, right) = w2h_parts(genus, h);
    let block: Vec<u32> = (1..=2 * h).collect();
    idx.extend(block.repeat(4 * h as usize + 2));
    idx.extend(right);
    Ok(HurwitzSystem::from_trusted(genus, plain(genus, &idx)))
}

/// Offset of the middle entry of `W_{2,h}` (equivalently of the chain in `W'_{2,h}`).
pub fn w2h_sigma_offset(genus: Genus, h: u32) -> usize {
    let g = genus.get() as usize;
    let h = h as usize;
    (2 * g + 1) + (2 * g - 2 * h + 1) * (2 * h + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: u32) -> Genus {
        Genus::new(n).unwrap()
    }

    #[test]
    fn lengths() {
        for n in 1..=5 {
            assert_eq!(w0(g(n)).len(), 4 * (2 * n as usize + 1));
            assert_eq!(w1(g(n)).len(), (2 * n as usize + 1) * (2 * n as usize + 2));
            for h in 1..=n / 2 {
                let (gg, hh) = (n as usize, h as usize);
                assert_eq!(w2h(g(n), h).unwrap().len(), 2 * (2 * gg + 1) + 2 * (2 * gg - 2 * hh + 1) * (2 * hh + 1) + 1);
                assert_eq!(wprime2h(g(n), h).unwrap().len(), 4 * (2 * gg + 1) * (hh + 1));
            }
        }
        assert_eq!(w2h(g(2), 1).unwrap().len(), 29);
    }

    #[test]
    fn w2h_genus_two_literal() {
        let s = w2h(g(2), 1).unwrap();
        let shown: Vec<String> = s.entries().iter().map(|e| e.to_string()).collect();
        let expect = "z5 z4 z3 z2 z1 z3 z4 z5 z2 z3 z4 z1 z2 z3 s1 z3 z2 z1 z4 z3 z2 z5 z4 z3 z1 z2 z3 z4 z5";
        assert_eq!(shown.join(" "), expect);
        assert_eq!(s.entries()[w2h_sigma_offset(g(2), 1)].base(), Letter::Sigma(1));
    }

    #[test]
    fn h_out_of_range() {
        assert!(w2h(g(1), 1).is_err());
        assert!(w2hp(g(3), 2).is_err());
        assert!(wprime2h(g(4), 0).is_err());
    }

    #[test]
    fn basic_systems_are_closed() {
        use crate::hurwitz::is_closed;
        for n in 1..=4 {
            assert!(is_closed(&w1(g(n))).unwrap());
            for h in 1..=n / 2 {
                assert!(is_closed(&w2h(g(n), h).unwrap()).unwrap());
                assert!(is_closed(&w2hp(g(n), h).unwrap()).unwrap());
            }
        }
    }
}
