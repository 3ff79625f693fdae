use std::fmt;

use super::{Letter, Word};

/// A permutation of the `2g+2` branch points, stored 0-based.
///
/// Composition follows the word order: the image of `u·v` applies the image of
/// `u` first, then the image of `v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n as u32).collect() }
    }

    /// Builds a permutation from 1-based images; `None` unless a bijection.
    pub fn from_images(one_based: &[u32]) -> Option<Self> {
        let n = one_based.len();
        let mut seen = vec![false; n];
        let mut images = Vec::with_capacity(n);
        for &x in one_based {
            if x == 0 || x as usize > n || seen[x as usize - 1] {
                return None;
            }
            seen[x as usize - 1] = true;
            images.push(x - 1);
        }
        Some(Permutation { images })
    }

    /// Transposition of the 1-based points `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Permutation::identity(n);
        p.images.swap(a - 1, b - 1);
        p
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] as usize + 1
    }

    /// 1-based image list.
    pub fn images(&self) -> Vec<u32> {
        self.images.iter().map(|&x| x + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u32;
        }
        Permutation { images }
    }

    fn swap_after(&mut self, a: usize, b: usize) {
        for x in self.images.iter_mut() {
            if *x as usize == a {
                *x = b as u32;
            } else if *x as usize == b {
                *x = a as u32;
            }
        }
    }

    /// Whether the group generated by `perms` acts transitively on `n` points.
    pub fn generate_transitive(n: usize, perms: &[Permutation]) -> bool {
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for p in perms {
                let y = p.images[x] as usize;
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.images.len()];
        let mut wrote = false;
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            write!(f, "(")?;
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", x + 1)?;
                first = false;
                x = self.images[x] as usize;
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// Branch-point action: `ζ_i ↦ (i i+1)`, `σ_h ↦ id`.
pub fn perm_image(w: &Word) -> Permutation {
    let mut p = Permutation::identity(w.genus().branch_points());
    for l in w.letters() {
        // transpositions are involutions; the sign does not matter
        if let Letter::Zeta(i) = l.letter {
            let i = i as usize;
            p.swap_after(i - 1, i);
        }
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mcg::{chain_word, iota_word, Genus, SignedLetter};

    #[test]
    fn generator_image() {
        let g1 = Genus::new(1).unwrap();
        let w = Word::new(g1, vec![SignedLetter::pos(Letter::Zeta(1))]).unwrap();
        assert_eq!(perm_image(&w), Permutation::transposition(4, 1, 2));
        assert_eq!(perm_image(&w).to_string(), "(1 2)");
    }

    #[test]
    fn iota_and_chain_are_trivial() {
        for g in 1..=4 {
            let genus = Genus::new(g).unwrap();
            assert!(perm_image(&iota_word(genus)).is_identity());
        }
        let g2 = Genus::new(2).unwrap();
        assert!(perm_image(&chain_word(1, g2).unwrap()).is_identity());
    }

    #[test]
    fn composition_order() {
        // (1 2) then (2 3): 1 -> 2 -> 3
        let a = Permutation::transposition(4, 1, 2);
        let b = Permutation::transposition(4, 2, 3);
        assert_eq!(a.then(&b).apply(1), 3);
        let g1 = Genus::new(1).unwrap();
        let w = Word::zetas(g1, &[1, 2]).unwrap();
        assert_eq!(perm_image(&w), a.then(&b));
    }

    #[test]
    fn from_images_rejects_non_bijection() {
        assert!(Permutation::from_images(&[1, 1, 3]).is_none());
        assert!(Permutation::from_images(&[2, 3, 1]).is_some());
        let p = Permutation::from_images(&[2, 3, 1]).unwrap();
        assert!(p.then(&p.inverse()).is_identity());
    }
}
