//! Isomorphism of charts as oriented, labelled rotation systems.

use std::collections::VecDeque;

use super::{twin, Chart, Dart, Direction, VertexKind};
use crate::mcg::Letter;

/// A complete invariant: two charts of the same genus are isomorphic iff
/// their canonical forms are equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    genus: u32,
    components: Vec<Vec<u64>>,
    hoops: Vec<u64>,
}

fn kind_code(k: VertexKind) -> u64 {
    let tag = match k {
        VertexKind::Black => 0,
        VertexKind::Crossing => 1,
        VertexKind::Braiding => 2,
        VertexKind::NucleonOut => 3,
        VertexKind::NucleonIn => 4,
        VertexKind::BigNucleonOut => 5,
        VertexKind::BigNucleonIn => 6,
        VertexKind::Transition(_) => 7,
        VertexKind::SigmaBurstOut(_) => 8,
        VertexKind::SigmaBurstIn(_) => 9,
    };
    tag << 32 | k.index().unwrap_or(0) as u64
}

fn label_code(l: Letter) -> u64 {
    match l {
        Letter::Zeta(i) => 2 * i as u64,
        Letter::Sigma(h) => 2 * h as u64 + 1,
    }
}

/// Traversal code of the component containing `start`, entered through `start`.
fn code_from(c: &Chart, pos: &[Option<(usize, usize)>], start: Dart, out: &mut Vec<u64>) {
    let n = c.vertices().len();
    let mut number = vec![usize::MAX; n];
    let mut entry = vec![0usize; n];
    let mut queue = VecDeque::new();
    let (v0, k0) = pos[start].expect("attached");
    number[v0] = 0;
    entry[v0] = k0;
    queue.push_back(v0);
    let mut next = 1;
    while let Some(v) = queue.pop_front() {
        let rot = &c.vertices()[v].rotation;
        out.push(kind_code(c.vertices()[v].kind));
        out.push(rot.len() as u64);
        for s in 0..rot.len() {
            let d = rot[(entry[v] + s) % rot.len()];
            let (w, kw) = pos[twin(d)].expect("attached");
            if number[w] == usize::MAX {
                number[w] = next;
                entry[w] = kw;
                next += 1;
                queue.push_back(w);
            }
            let deg = c.vertices()[w].rotation.len();
            out.push(label_code(c.dart_label(d)));
            out.push((Direction::of(d) == Direction::In) as u64);
            out.push(number[w] as u64);
            out.push(((kw + deg - entry[w]) % deg) as u64);
        }
    }
}

pub fn canonical_form(c: &Chart) -> CanonicalForm {
    let mut pos = vec![None; 2 * c.edges().len()];
    for (v, vert) in c.vertices().iter().enumerate() {
        for (k, &d) in vert.rotation.iter().enumerate() {
            pos[d] = Some((v, k));
        }
    }
    let (comp, count) = c.components();
    let mut components = Vec::with_capacity(count);
    for ci in 0..count {
        let members: Vec<usize> = (0..c.vertices().len()).filter(|&v| comp[v] == ci).collect();
        let Some(min_kind) = members.iter().map(|&v| c.vertices()[v].kind).min() else {
            continue;
        };
        let mut best: Option<Vec<u64>> = None;
        let mut buf = Vec::new();
        for &v in members.iter().filter(|&&v| c.vertices()[v].kind == min_kind) {
            for &d in &c.vertices()[v].rotation {
                buf.clear();
                code_from(c, &pos, d, &mut buf);
                if best.as_ref().is_none_or(|b| buf < *b) {
                    best = Some(buf.clone());
                }
            }
        }
        components.extend(best);
    }
    components.sort();
    let mut hoops: Vec<u64> = c.edges().iter().filter(|e| e.is_hoop()).map(|e| label_code(e.label)).collect();
    hoops.sort();
    CanonicalForm { genus: c.genus().get(), components, hoops }
}

pub fn isomorphic(a: &Chart, b: &Chart) -> bool {
    canonical_form(a) == canonical_form(b)
}
