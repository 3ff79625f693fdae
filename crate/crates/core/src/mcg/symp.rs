use std::fmt;

use super::{chain_word_unchecked, Genus, Letter, McgError, Sign, Word};

/// Integer `2g × 2g` matrix acting on column vectors of `H_1` in the basis
/// `a_1, b_1, …, a_g, b_g`.
///
/// As with [`super::Permutation`], the image of `u·v` applies `u` first, so as
/// matrices `symp(u·v) = symp(v) · symp(u)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SympMatrix {
    dim: usize,
    entries: Vec<i128>,
}

/// Homology class of the chain curve `C_i` (1-based).
///
/// `x_{2k-1} = b_k`, `x_{2k} = a_k - a_{k+1}` for `k < g`, `x_{2g} = a_g`,
/// `x_{2g+1} = b_1 + ⋯ + b_g`.
pub fn chain_class(i: u32, genus: Genus) -> Vec<i64> {
    let g = genus.get() as usize;
    let i = i as usize;
    let mut v = vec![0i64; 2 * g];
    let a = |k: usize| 2 * (k - 1);
    let b = |k: usize| 2 * (k - 1) + 1;
    if i == 2 * g + 1 {
        for k in 1..=g {
            v[b(k)] = 1;
        }
    } else if i % 2 == 1 {
        v[b(i.div_ceil(2))] = 1;
    } else {
        let k = i / 2;
        v[a(k)] = 1;
        if k < g {
            v[a(k + 1)] = -1;
        }
    }
    v
}

/// Algebraic intersection with `⟨a_k, b_k⟩ = 1`.
pub fn intersection(u: &[i64], v: &[i64]) -> i64 {
    u.chunks(2)
        .zip(v.chunks(2))
        .map(|(p, q)| p[0] * q[1] - p[1] * q[0])
        .sum()
}

fn add(a: i128, b: i128) -> Result<i128, McgError> {
    a.checked_add(b).ok_or(McgError::Overflow)
}

fn mul(a: i128, b: i128) -> Result<i128, McgError> {
    a.checked_mul(b).ok_or(McgError::Overflow)
}

impl SympMatrix {
    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![0; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = 1;
        }
        SympMatrix { dim, entries }
    }

    pub fn from_rows(rows: &[Vec<i128>]) -> Self {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for r in rows {
            assert_eq!(r.len(), dim, "square matrix expected");
            entries.extend_from_slice(r);
        }
        SympMatrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> i128 {
        self.entries[row * self.dim + col]
    }

    pub fn rows(&self) -> Vec<Vec<i128>> {
        self.entries.chunks(self.dim).map(|r| r.to_vec()).collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == SympMatrix::identity(self.dim)
    }

    pub fn is_minus_identity(&self) -> bool {
        let mut m = SympMatrix::identity(self.dim);
        m.entries.iter_mut().for_each(|x| *x = -*x);
        *self == m
    }

    /// The standard form `J` with `J[a_k][b_k] = 1`, `J[b_k][a_k] = -1`.
    pub fn standard_form(dim: usize) -> Self {
        let mut m = SympMatrix { dim, entries: vec![0; dim * dim] };
        for k in (0..dim).step_by(2) {
            m.entries[k * dim + k + 1] = 1;
            m.entries[(k + 1) * dim + k] = -1;
        }
        m
    }

    pub fn transpose(&self) -> Self {
        let n = self.dim;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[j * n + i] = self.entries[i * n + j];
            }
        }
        SympMatrix { dim: n, entries }
    }

    /// Plain matrix product `self · rhs`.
    pub fn mul(&self, rhs: &SympMatrix) -> Result<SympMatrix, McgError> {
        assert_eq!(self.dim, rhs.dim);
        let n = self.dim;
        let mut entries = vec![0i128; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let t = mul(a, rhs.entries[k * n + j])?;
                    entries[i * n + j] = add(entries[i * n + j], t)?;
                }
            }
        }
        Ok(SympMatrix { dim: n, entries })
    }

    /// Action of `self` first, then `other`.
    pub fn then(&self, other: &SympMatrix) -> Result<SympMatrix, McgError> {
        other.mul(self)
    }

    /// `MᵀJM = J`.
    pub fn is_symplectic(&self) -> bool {
        let j = SympMatrix::standard_form(self.dim);
        match self.transpose().mul(&j).and_then(|m| m.mul(self)) {
            Ok(m) => m == j,
            Err(_) => false,
        }
    }

    /// Exact inverse of a symplectic matrix, `-J Mᵀ J`.
    pub fn symplectic_inverse(&self) -> Result<SympMatrix, McgError> {
        let j = SympMatrix::standard_form(self.dim);
        let mut m = j.mul(&self.transpose())?.mul(&j)?;
        m.entries.iter_mut().for_each(|x| *x = -*x);
        Ok(m)
    }

    /// Transvection `v ↦ v + s·⟨v, x⟩ x`.
    pub fn transvection(x: &[i64], s: i64) -> SympMatrix {
        let mut m = SympMatrix::identity(x.len());
        m.left_transvect(x, s).expect("unit transvection fits");
        m
    }

    /// In place `self ← T · self` where `T` is the transvection along `x`
    /// with multiplicity `s`.
    fn left_transvect(&mut self, x: &[i64], s: i64) -> Result<(), McgError> {
        let n = self.dim;
        for col in 0..n {
            // ⟨m, x⟩ for the column m
            let mut pairing: i128 = 0;
            for k in (0..n).step_by(2) {
                let t1 = mul(self.entries[k * n + col], x[k + 1] as i128)?;
                let t2 = mul(self.entries[(k + 1) * n + col], x[k] as i128)?;
                pairing = add(pairing, t1.checked_sub(t2).ok_or(McgError::Overflow)?)?;
            }
            if pairing == 0 {
                continue;
            }
            let coef = mul(pairing, s as i128)?;
            for (row, &xr) in x.iter().enumerate() {
                if xr != 0 {
                    let t = mul(coef, xr as i128)?;
                    self.entries[row * n + col] = add(self.entries[row * n + col], t)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for SympMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.entries.chunks(self.dim) {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Homology action of a word: `ζ_i` acts by the transvection along its chain
/// class, `σ_h` by the image of its chain expression.
pub fn symp_image(w: &Word) -> Result<SympMatrix, McgError> {
    let genus = w.genus();
    let dim = 2 * genus.get() as usize;
    let classes: Vec<Vec<i64>> = (1..=genus.zeta_count()).map(|i| chain_class(i, genus)).collect();
    let mut sigma_cache: Vec<Option<(SympMatrix, SympMatrix)>> = vec![None; genus.sigma_count() as usize + 1];
    let mut m = SympMatrix::identity(dim);
    for l in w.letters() {
        match l.letter {
            Letter::Zeta(i) => {
                let s = if l.sign == Sign::Pos { 1 } else { -1 };
                m.left_transvect(&classes[i as usize - 1], s)?;
            }
            Letter::Sigma(h) => {
                let slot = &mut sigma_cache[h as usize];
                if slot.is_none() {
                    let fwd = symp_image(&chain_word_unchecked(h, genus))?;
                    let inv = fwd.symplectic_inverse()?;
                    *slot = Some((fwd, inv));
                }
                let (fwd, inv) = slot.as_ref().expect("filled above");
                m = match l.sign {
                    Sign::Pos => fwd.mul(&m)?,
                    Sign::Neg => inv.mul(&m)?,
                };
            }
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mcg::{chain_word, full_chain_power, iota_word, SignedLetter};

    /// Direct product of explicit transvection matrices, independent of the
    /// in-place column update used by `symp_image`.
    fn oracle(w: &Word) -> SympMatrix {
        let genus = w.genus();
        let dim = 2 * genus.get() as usize;
        let mut m = SympMatrix::identity(dim);
        for l in w.letters() {
            let Letter::Zeta(i) = l.letter else { panic!("zeta only") };
            let x = chain_class(i, genus);
            let mut t = SympMatrix::identity(dim);
            let s: i128 = if l.sign == Sign::Pos { 1 } else { -1 };
            // T[r][c] = δ + s · x_r · ⟨e_c, x⟩
            for r in 0..dim {
                for c in 0..dim {
                    let mut e = vec![0i64; dim];
                    e[c] = 1;
                    t.entries[r * dim + c] += s * x[r] as i128 * intersection(&e, &x) as i128;
                }
            }
            m = t.mul(&m).unwrap();
        }
        m
    }

    #[test]
    fn chain_intersection_pattern() {
        for g in 1..=6 {
            let genus = Genus::new(g).unwrap();
            let n = genus.zeta_count();
            for i in 1..=n {
                for j in 1..=n {
                    let p = intersection(&chain_class(i, genus), &chain_class(j, genus));
                    if i.abs_diff(j) == 1 {
                        assert_eq!(p.abs(), 1, "g={g} i={i} j={j}");
                    } else {
                        assert_eq!(p, 0, "g={g} i={i} j={j}");
                    }
                }
            }
        }
    }

    #[test]
    fn empty_is_identity() {
        let genus = Genus::new(3).unwrap();
        assert!(symp_image(&Word::empty(genus)).unwrap().is_identity());
    }

    #[test]
    fn iota_negates_homology() {
        for g in 1..=3 {
            let genus = Genus::new(g).unwrap();
            let o = oracle(&iota_word(genus));
            assert!(o.is_minus_identity(), "oracle g={g}");
            assert_eq!(symp_image(&iota_word(genus)).unwrap(), o);
        }
    }

    #[test]
    fn full_chain_relator() {
        for g in 1..=2 {
            let genus = Genus::new(g).unwrap();
            let w = full_chain_power(genus);
            assert!(oracle(&w).is_identity());
            assert!(symp_image(&w).unwrap().is_identity());
        }
    }

    #[test]
    fn separating_twist_acts_trivially() {
        let genus = Genus::new(2).unwrap();
        let w = chain_word(1, genus).unwrap();
        assert!(oracle(&w).is_identity());
        let s = Word::new(genus, vec![SignedLetter::pos(Letter::Sigma(1))]).unwrap();
        assert!(symp_image(&s).unwrap().is_identity());
    }

    #[test]
    fn transvection_sign_insensitive() {
        let genus = Genus::new(3).unwrap();
        for i in 1..=7 {
            let x = chain_class(i, genus);
            let neg: Vec<i64> = x.iter().map(|v| -v).collect();
            assert_eq!(SympMatrix::transvection(&x, 1), SympMatrix::transvection(&neg, 1));
            assert!(SympMatrix::transvection(&x, 1).is_symplectic());
        }
    }

    #[test]
    fn matches_oracle_with_inverses() {
        let genus = Genus::new(2).unwrap();
        let w = Word::new(
            genus,
            vec![
                SignedLetter::pos(Letter::Zeta(1)),
                SignedLetter::neg(Letter::Zeta(2)),
                SignedLetter::pos(Letter::Zeta(5)),
                SignedLetter::neg(Letter::Zeta(3)),
                SignedLetter::pos(Letter::Zeta(4)),
            ],
        )
        .unwrap();
        let m = symp_image(&w).unwrap();
        assert_eq!(m, oracle(&w));
        assert!(m.is_symplectic());
        assert!(m.then(&symp_image(&w.inverse()).unwrap()).unwrap().is_identity());
        assert_eq!(m.symplectic_inverse().unwrap(), symp_image(&w.inverse()).unwrap());
    }
}
