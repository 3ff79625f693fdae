use serde::Serialize;

use super::{
    chain_word_unchecked, full_chain_power, iota_word, perm_image, symp_image, Genus, Letter,
    SignedLetter, Word,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationInstance {
    /// Which defining relation family the relator belongs to.
    pub family: String,
    pub relator: String,
    pub perm_identity: bool,
    pub symp_identity: bool,
}

impl RelationInstance {
    pub fn passed(&self) -> bool {
        self.perm_identity && self.symp_identity
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub genus: u32,
    pub instances: Vec<RelationInstance>,
}

impl RelationReport {
    pub fn all_passed(&self) -> bool {
        self.instances.iter().all(RelationInstance::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationInstance> {
        self.instances.iter().filter(|r| !r.passed())
    }
}

fn z(i: u32) -> SignedLetter {
    SignedLetter::pos(Letter::Zeta(i))
}

fn word(genus: Genus, letters: Vec<SignedLetter>) -> Word {
    Word::from_trusted(genus, letters)
}

/// Relators of the hyperelliptic presentation, each paired with its family tag.
pub fn relators(genus: Genus) -> Vec<(String, Word)> {
    let n = genus.zeta_count();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in (i + 2)..=n {
            let u = word(genus, vec![z(i), z(j)]);
            let v = word(genus, vec![z(j), z(i)]);
            out.push(("commute".to_string(), u.concat(&v.inverse()).unwrap()));
        }
    }
    for i in 1..n {
        let u = word(genus, vec![z(i), z(i + 1), z(i)]);
        let v = word(genus, vec![z(i + 1), z(i), z(i + 1)]);
        out.push(("braid".to_string(), u.concat(&v.inverse()).unwrap()));
    }
    let iota = iota_word(genus);
    out.push(("iota-squared".to_string(), iota.pow(2)));
    out.push(("full-chain".to_string(), full_chain_power(genus)));
    for i in 1..=n {
        let zi = word(genus, vec![z(i)]);
        let r = iota
            .concat(&zi)
            .and_then(|w| w.concat(&iota.inverse()))
            .and_then(|w| w.concat(&zi.inverse()))
            .unwrap();
        out.push(("iota-central".to_string(), r));
    }
    for h in 1..=genus.sigma_count() {
        let s = word(genus, vec![SignedLetter::pos(Letter::Sigma(h))]);
        let r = s.concat(&chain_word_unchecked(h, genus).inverse()).unwrap();
        out.push(("sigma-chain".to_string(), r));
    }
    out
}

/// Evaluates every relator in both representations.
pub fn relation_check(genus: Genus) -> RelationReport {
    let instances = relators(genus)
        .into_iter()
        .map(|(family, w)| RelationInstance {
            family,
            relator: w.to_string(),
            perm_identity: perm_image(&w).is_identity(),
            symp_identity: symp_image(&w).map(|m| m.is_identity()).unwrap_or(false),
        })
        .collect();
    RelationReport { genus: genus.get(), instances }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_one_all_pass() {
        let r = relation_check(Genus::new(1).unwrap());
        assert!(r.all_passed(), "{:?}", r.failures().collect::<Vec<_>>());
        // commute (1,3), braid x2, iota^2, full chain, iota central x3
        assert_eq!(r.instances.len(), 1 + 2 + 1 + 1 + 3);
    }

    #[test]
    fn genus_two_named_instances() {
        let genus = Genus::new(2).unwrap();
        let r = relation_check(genus);
        assert!(r.all_passed());
        assert!(r.instances.iter().any(|i| i.family == "commute" && i.relator == "z1 z3 z1^-1 z3^-1"));
        assert!(r
            .instances
            .iter()
            .any(|i| i.family == "iota-central" && i.relator.ends_with("z5^-1")));
    }

    #[test]
    fn a_false_relator_is_detected() {
        let genus = Genus::new(2).unwrap();
        let w = word(genus, vec![z(1), z(2), z(1).inverse(), z(2).inverse()]);
        assert!(!perm_image(&w).is_identity());
        assert!(!symp_image(&w).unwrap().is_identity());
    }
}
