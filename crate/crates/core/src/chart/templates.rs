//! Local vertex conditions, matched up to cyclic rotation.

use super::{Direction, VertexKind};
use crate::mcg::{Genus, Letter};

type Slot = (Letter, Direction);

fn rotations(n: usize) -> impl Iterator<Item = usize> {
    0..n
}

fn at(seq: &[Slot], r: usize, k: usize) -> Slot {
    seq[(r + k) % seq.len()]
}

fn zeta(l: Letter) -> Option<u32> {
    match l {
        Letter::Zeta(i) => Some(i),
        Letter::Sigma(_) => None,
    }
}

/// Matches `seq` against `pattern` at some rotation.
fn matches_some_rotation(seq: &[Slot], pattern: &[Slot]) -> bool {
    seq.len() == pattern.len() && rotations(seq.len()).any(|r| (0..seq.len()).all(|k| at(seq, r, k) == pattern[k]))
}

fn t_labels(genus: Genus) -> Vec<u32> {
    let n = genus.zeta_count();
    (1..=n).chain((1..=n).rev()).collect()
}

fn uniform(labels: &[u32], dir: Direction) -> Vec<Slot> {
    labels.iter().map(|&i| (Letter::Zeta(i), dir)).collect()
}

pub(super) fn check(genus: Genus, kind: VertexKind, seq: &[Slot]) -> Result<(), String> {
    match kind {
        VertexKind::Black => Ok(()),
        VertexKind::Crossing => {
            let ok = rotations(4).any(|r| {
                let s: Vec<Slot> = (0..4).map(|k| at(seq, r, k)).collect();
                match (zeta(s[0].0), zeta(s[1].0)) {
                    (Some(a), Some(b)) => {
                        s[2].0 == s[0].0
                            && s[3].0 == s[1].0
                            && a.abs_diff(b) > 1
                            && s[0].1 != s[2].1
                            && s[1].1 != s[3].1
                    }
                    _ => false,
                }
            });
            ok.then_some(()).ok_or_else(|| "crossing needs diagonals i,j with |i-j|>1 passing straight through".into())
        }
        VertexKind::Braiding => {
            let ok = rotations(6).any(|r| {
                let s: Vec<Slot> = (0..6).map(|k| at(seq, r, k)).collect();
                match (zeta(s[0].0), zeta(s[1].0)) {
                    (Some(a), Some(b)) => {
                        a.abs_diff(b) == 1
                            && (0..6).all(|k| s[k].0 == s[k % 2].0)
                            && (0..6).all(|k| s[k].1 == if k < 3 { Direction::Out } else { Direction::In })
                    }
                    _ => false,
                }
            });
            ok.then_some(()).ok_or_else(|| "braiding needs alternating i,j with |i-j|=1, three out then three in".into())
        }
        VertexKind::NucleonOut | VertexKind::NucleonIn => {
            let dir = if kind == VertexKind::NucleonOut { Direction::Out } else { Direction::In };
            let pattern = uniform(&t_labels(genus).repeat(2), dir);
            matches_some_rotation(seq, &pattern).then_some(()).ok_or_else(|| "nucleon labels must read (T,T) with uniform orientation".into())
        }
        VertexKind::BigNucleonOut | VertexKind::BigNucleonIn => {
            let n = genus.zeta_count();
            let block: Vec<u32> = if kind == VertexKind::BigNucleonOut { (1..=n).collect() } else { (1..=n).rev().collect() };
            let dir = if kind == VertexKind::BigNucleonOut { Direction::Out } else { Direction::In };
            let pattern = uniform(&block.repeat(genus.branch_points()), dir);
            matches_some_rotation(seq, &pattern)
                .then_some(())
                .ok_or_else(|| "big nucleon must read (1..2g+1)^(2g+2) counterclockwise out, or clockwise in".into())
        }
        VertexKind::Transition(i) => {
            let mut half = t_labels(genus);
            half.push(i);
            let mut pattern = uniform(&half, Direction::Out);
            pattern.extend(uniform(&half, Direction::In));
            matches_some_rotation(seq, &pattern)
                .then_some(())
                .ok_or_else(|| format!("transition must read (T,{i},T,{i}) counterclockwise, first half out"))
        }
        VertexKind::SigmaBurstOut(h) | VertexKind::SigmaBurstIn(h) => {
            let out = kind == VertexKind::SigmaBurstOut(h);
            let block: Vec<u32> = (1..=2 * h).collect();
            let chain = block.repeat(4 * h as usize + 2);
            let pattern: Vec<Slot> = if out {
                let mut p = uniform(&chain, Direction::Out);
                p.push((Letter::Sigma(h), Direction::In));
                p
            } else {
                let rev: Vec<u32> = chain.into_iter().rev().collect();
                let mut p = uniform(&rev, Direction::In);
                p.push((Letter::Sigma(h), Direction::Out));
                p
            };
            matches_some_rotation(seq, &pattern)
                .then_some(())
                .ok_or_else(|| format!("separating burst must read ((1..{})^{},s{h}) with the stated orientations", 2 * h, 4 * h + 2))
        }
    }
}
