use std::collections::HashMap;

use serde::Serialize;

use crate::hurwitz::{FactorEntry, HurwitzSystem, MoveCertificate, MoveKind};

pub const DEFAULT_BUDGET: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Maximum number of expanded states over both directions.
    pub budget: usize,
    /// Allow cyclic shifts by one entry.
    pub cyclic: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { budget: DEFAULT_BUDGET, cyclic: false }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub certificate: Option<MoveCertificate>,
    pub expanded: usize,
    /// The budget ran out before the frontiers met or emptied.
    pub exhausted: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchSummary {
    pub found: bool,
    pub expanded: usize,
    pub exhausted: bool,
    pub moves: Option<usize>,
}

impl SearchOutcome {
    pub fn summary(&self) -> SearchSummary {
        SearchSummary {
            found: self.certificate.is_some(),
            expanded: self.expanded,
            exhausted: self.exhausted,
            moves: self.certificate.as_ref().map(|c| c.moves.len()),
        }
    }
}

type State = Box<[u16]>;

struct Interner {
    ids: HashMap<FactorEntry, u16>,
    entries: Vec<FactorEntry>,
    /// `ζ` index for plain positive entries, else 0.
    zeta: Vec<u32>,
}

impl Interner {
    fn new() -> Self {
        Interner { ids: HashMap::new(), entries: Vec::new(), zeta: Vec::new() }
    }

    fn intern(&mut self, e: &FactorEntry) -> Option<u16> {
        if let Some(&id) = self.ids.get(e) {
            return Some(id);
        }
        let id = u16::try_from(self.entries.len()).ok()?;
        self.ids.insert(e.clone(), id);
        self.entries.push(e.clone());
        self.zeta.push(e.as_plain_zeta().unwrap_or(0));
        Some(id)
    }

    fn plain_id(&self, i: u32) -> Option<u16> {
        self.zeta.iter().position(|&z| z == i).map(|p| p as u16)
    }
}

/// Neighbours in deterministic (kind, position) order. H1/H2 are emitted in
/// their forward form only; the relation is symmetric for those.
fn neighbours(s: &[u16], it: &Interner, t_ids: Option<&[u16]>, cyclic: bool, out: &mut Vec<(State, MoveKind)>) {
    out.clear();
    let n = s.len();
    let z = |k: usize| it.zeta[s[k] as usize];
    for pos in 0..n.saturating_sub(1) {
        let (a, b) = (z(pos), z(pos + 1));
        if a != 0 && b != 0 && a.abs_diff(b) > 1 {
            let mut t: State = s.into();
            t.swap(pos, pos + 1);
            out.push((t, MoveKind::H1 { pos, i: a, j: b }));
        }
    }
    for pos in 0..n.saturating_sub(2) {
        let (a, b, c) = (z(pos), z(pos + 1), z(pos + 2));
        if a != 0 && b != 0 && a == c && a.abs_diff(b) == 1 {
            let mut t: State = s.into();
            t[pos] = s[pos + 1];
            t[pos + 1] = s[pos];
            t[pos + 2] = s[pos + 1];
            out.push((t, MoveKind::H2 { pos, i: a, j: b }));
        }
    }
    if let Some(tb) = t_ids {
        let l = tb.len();
        if n > l {
            for pos in 0..n - l {
                if s[pos..pos + l] == *tb && z(pos + l) != 0 {
                    let mut t: State = s.into();
                    t[pos..=pos + l].rotate_right(1);
                    out.push((t, MoveKind::H3 { pos }));
                }
            }
            for pos in 0..n - l {
                if s[pos + 1..=pos + l] == *tb && z(pos) != 0 {
                    let mut t: State = s.into();
                    t[pos..=pos + l].rotate_left(1);
                    out.push((t, MoveKind::H3inv { pos }));
                }
            }
        }
    }
    if cyclic && n >= 2 {
        let mut t: State = s.into();
        t.rotate_left(1);
        out.push((t, MoveKind::CyclicLeft { pos: 1 }));
        let mut t: State = s.into();
        t.rotate_right(1);
        out.push((t, MoveKind::CyclicRight { pos: 1 }));
    }
}

struct Side {
    parent: HashMap<State, Option<(State, MoveKind)>>,
    frontier: Vec<State>,
}

impl Side {
    fn new(root: State) -> Self {
        let mut parent = HashMap::new();
        parent.insert(root.clone(), None);
        Side { parent, frontier: vec![root] }
    }

    /// Moves from the root to `s`.
    fn path_to(&self, s: &State) -> Vec<MoveKind> {
        let mut moves = Vec::new();
        let mut cur = s.clone();
        while let Some(Some((p, m))) = self.parent.get(&cur) {
            moves.push(*m);
            cur = p.clone();
        }
        moves.reverse();
        moves
    }
}

/// Bidirectional breadth-first search for a certificate from `s1` to `s2`
/// over H1±, H2±, H3± (and unit cyclic shifts when enabled).
pub fn search_equivalence(s1: &HurwitzSystem, s2: &HurwitzSystem, opts: SearchOptions) -> SearchOutcome {
    let none = |expanded, exhausted| SearchOutcome { certificate: None, expanded, exhausted };
    if s1.genus() != s2.genus() || s1.len() != s2.len() {
        return none(0, false);
    }
    if s1 == s2 {
        return SearchOutcome { certificate: Some(MoveCertificate::identity(s1.clone())), expanded: 0, exhausted: false };
    }
    let mut it = Interner::new();
    let mut encode = |s: &HurwitzSystem| -> Option<State> { s.entries().iter().map(|e| it.intern(e)).collect() };
    let (Some(a), Some(b)) = (encode(s1), encode(s2)) else {
        return none(0, false);
    };
    let t_ids: Option<Vec<u16>> = {
        let n = s1.genus().zeta_count();
        (1..=n).chain((1..=n).rev()).map(|i| it.plain_id(i)).collect()
    };

    let mut sides = [Side::new(a), Side::new(b)];
    let mut expanded = 0usize;
    let mut buf = Vec::new();
    loop {
        if sides[0].frontier.is_empty() || sides[1].frontier.is_empty() {
            return none(expanded, false);
        }
        let d = usize::from(sides[1].frontier.len() < sides[0].frontier.len());
        let frontier = std::mem::take(&mut sides[d].frontier);
        let mut next = Vec::new();
        for s in &frontier {
            if expanded >= opts.budget {
                return none(expanded, true);
            }
            expanded += 1;
            neighbours(s, &it, t_ids.as_deref(), opts.cyclic, &mut buf);
            for (t, m) in buf.drain(..) {
                if sides[d].parent.contains_key(&t) {
                    continue;
                }
                sides[d].parent.insert(t.clone(), Some((s.clone(), m)));
                if sides[1 - d].parent.contains_key(&t) {
                    let mut moves = sides[0].path_to(&t);
                    moves.extend(sides[1].path_to(&t).iter().rev().map(MoveKind::inverse));
                    let cert = MoveCertificate { start: s1.clone(), moves, end: s2.clone() };
                    debug_assert!(cert.verify().ok);
                    return SearchOutcome { certificate: Some(cert), expanded, exhausted: false };
                }
                next.push(t);
            }
        }
        sides[d].frontier = next;
    }
}
