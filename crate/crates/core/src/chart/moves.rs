//! Moves that slide a black vertex through a degree-4, degree-6 or transition
//! vertex, and their inverses.
//!
//! Forward: the edge `e` from a black vertex meets `v` at rotation position
//! `k`. Removing `v` joins the edge-ends at `k+t` and `k-t` for
//! `t = 1..d/2-1`, and the opposite edge-end `k+d/2` ends at a new black
//! vertex.

use std::collections::HashMap;

use super::{dart_edge, templates, twin, Chart, ChartError, Dart, Direction, Edge, EdgeId, Vertex, VertexId, VertexKind};
use crate::mcg::Letter;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LocalMove {
    C2,
    C3,
    C4,
    C2inv,
    C3inv,
    C4inv,
}

impl LocalMove {
    pub fn name(self) -> &'static str {
        match self {
            LocalMove::C2 => "C2",
            LocalMove::C3 => "C3",
            LocalMove::C4 => "C4",
            LocalMove::C2inv => "C2inv",
            LocalMove::C3inv => "C3inv",
            LocalMove::C4inv => "C4inv",
        }
    }

    pub fn inverse(self) -> LocalMove {
        match self {
            LocalMove::C2 => LocalMove::C2inv,
            LocalMove::C3 => LocalMove::C3inv,
            LocalMove::C4 => LocalMove::C4inv,
            LocalMove::C2inv => LocalMove::C2,
            LocalMove::C3inv => LocalMove::C3,
            LocalMove::C4inv => LocalMove::C4,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MoveSite {
    /// An edge joining a black vertex to the vertex being removed.
    Edge(EdgeId),
    /// A black vertex and the edge-ends it is pushed across, in order. Each
    /// edge-end names the side of its edge that stays on the near vertex.
    Black { black: VertexId, across: Vec<Dart> },
}

fn pattern(kind: LocalMove, detail: impl Into<String>) -> ChartError {
    ChartError::Pattern { kind: kind.name(), detail: detail.into() }
}

pub fn local_move(c: &Chart, kind: LocalMove, site: &MoveSite) -> Result<Chart, ChartError> {
    local_move_traced(c, kind, site).map(|(chart, _)| chart)
}

/// Applies the move and returns the site at which its inverse applies
/// (`None` when the forward move closed an edge into a hoop).
pub fn local_move_traced(c: &Chart, kind: LocalMove, site: &MoveSite) -> Result<(Chart, Option<MoveSite>), ChartError> {
    match (kind, site) {
        (LocalMove::C2 | LocalMove::C3 | LocalMove::C4, MoveSite::Edge(e)) => forward(c, kind, *e),
        (LocalMove::C2inv | LocalMove::C3inv | LocalMove::C4inv, MoveSite::Black { black, across }) => {
            inverse(c, kind, *black, across).map(|(chart, e)| (chart, Some(MoveSite::Edge(e))))
        }
        _ => Err(pattern(kind, "site type does not fit the move")),
    }
}

/// Accumulates a new chart from surviving pieces of an old one.
struct Rebuild {
    vertex_map: Vec<Option<VertexId>>,
    kinds: Vec<VertexKind>,
    edges: Vec<Edge>,
    dart_map: HashMap<Dart, Dart>,
    extra_rotation: HashMap<VertexId, Vec<Dart>>,
}

impl Rebuild {
    fn new(c: &Chart, drop: &[VertexId]) -> Self {
        let mut vertex_map = vec![None; c.vertices().len()];
        let mut kinds = Vec::new();
        for (v, vert) in c.vertices().iter().enumerate() {
            if !drop.contains(&v) {
                vertex_map[v] = Some(kinds.len());
                kinds.push(vert.kind);
            }
        }
        Rebuild { vertex_map, kinds, edges: Vec::new(), dart_map: HashMap::new(), extra_rotation: HashMap::new() }
    }

    fn new_vertex(&mut self, kind: VertexKind) -> VertexId {
        self.kinds.push(kind);
        self.kinds.len() - 1
    }

    fn push_edge(&mut self, label: Letter, from: Option<VertexId>, to: Option<VertexId>) -> EdgeId {
        self.edges.push(Edge { label, from, to });
        self.edges.len() - 1
    }

    /// New edge between the old edge-ends `a` (from side) and `b` (to side).
    fn join(&mut self, c: &Chart, label: Letter, a: Dart, b: Dart) {
        let from = self.vertex_map[c.dart_vertex(a).expect("attached")];
        let to = self.vertex_map[c.dart_vertex(b).expect("attached")];
        let e = self.push_edge(label, from, to);
        self.dart_map.insert(a, 2 * e);
        self.dart_map.insert(b, 2 * e + 1);
    }

    fn keep_edge(&mut self, c: &Chart, old: EdgeId) {
        let edge = c.edges()[old];
        let map = |v: Option<VertexId>| v.and_then(|v| self.vertex_map[v]);
        let e = self.push_edge(edge.label, map(edge.from), map(edge.to));
        self.dart_map.insert(2 * old, 2 * e);
        self.dart_map.insert(2 * old + 1, 2 * e + 1);
    }

    fn finish(self, c: &Chart) -> Result<Chart, ChartError> {
        let mut vertices: Vec<Vertex> =
            self.kinds.iter().map(|&kind| Vertex { kind, rotation: Vec::new() }).collect();
        for (old, vert) in c.vertices().iter().enumerate() {
            if let Some(v) = self.vertex_map[old] {
                vertices[v].rotation = vert
                    .rotation
                    .iter()
                    .map(|d| self.dart_map.get(d).copied())
                    .collect::<Option<Vec<_>>>()
                    .ok_or_else(|| ChartError::Structure("edge-end lost while rebuilding".into()))?;
            }
        }
        for (v, rot) in self.extra_rotation {
            vertices[v].rotation = rot;
        }
        Chart::new(c.genus(), vertices, self.edges)
    }
}

fn expected_kind(kind: LocalMove, v: VertexKind) -> bool {
    matches!(
        (kind, v),
        (LocalMove::C2, VertexKind::Crossing) | (LocalMove::C3, VertexKind::Braiding) | (LocalMove::C4, VertexKind::Transition(_))
    )
}

fn forward(c: &Chart, kind: LocalMove, e: EdgeId) -> Result<(Chart, Option<MoveSite>), ChartError> {
    let edge = *c.edges().get(e).ok_or_else(|| pattern(kind, format!("no edge {e}")))?;
    let (Some(a), Some(b)) = (edge.from, edge.to) else {
        return Err(pattern(kind, "the edge is a hoop"));
    };
    let black_deg1 = |x: VertexId| c.vertices()[x].kind == VertexKind::Black && c.vertices()[x].rotation.len() == 1;
    let (black, v, ve) = if black_deg1(a) && expected_kind(kind, c.vertices()[b].kind) {
        (a, b, 2 * e + 1)
    } else if black_deg1(b) && expected_kind(kind, c.vertices()[a].kind) {
        (b, a, 2 * e)
    } else {
        return Err(pattern(kind, format!("edge {e} does not join a black vertex to the right vertex type")));
    };
    let rot = &c.vertices()[v].rotation;
    let d = rot.len();
    let k = rot.iter().position(|&x| x == ve).expect("consistent rotation");
    let at = |s: isize| rot[(k as isize + s).rem_euclid(d as isize) as usize];
    let m = d / 2 - 1;
    let opp = at((m + 1) as isize);

    if let VertexKind::Transition(i) = c.vertices()[v].kind {
        if !transition_i_slot(c, v, k, i) {
            return Err(pattern(kind, "the edge must be one of the two edges carrying the extra label"));
        }
    }
    let mut partner: HashMap<Dart, Dart> = HashMap::new();
    for t in 1..=m as isize {
        let (x, y) = (at(t), at(-t));
        if c.dart_label(x) != c.dart_label(y) || Direction::of(x) == Direction::of(y) {
            let why = if kind == LocalMove::C3 {
                "the edge is the middle of three equally oriented edges"
            } else {
                "paired edges are not coherent"
            };
            return Err(pattern(kind, why));
        }
        partner.insert(x, y);
        partner.insert(y, x);
    }
    if c.dart_vertex(twin(opp)) == Some(v) {
        return Err(pattern(kind, "the opposite edge returns to the same vertex"));
    }

    let mut rb = Rebuild::new(c, &[v, black]);
    for (old, ed) in c.edges().iter().enumerate() {
        if old != e && ed.from != Some(v) && ed.to != Some(v) {
            rb.keep_edge(c, old);
        }
    }
    // the opposite edge now ends at a fresh black vertex
    let nb = rb.new_vertex(VertexKind::Black);
    let far = rb.vertex_map[c.dart_vertex(twin(opp)).expect("attached")];
    let ne = if opp % 2 == 0 {
        rb.push_edge(c.dart_label(opp), Some(nb), far)
    } else {
        rb.push_edge(c.dart_label(opp), far, Some(nb))
    };
    let (nb_dart, far_dart) = if opp % 2 == 0 { (2 * ne, 2 * ne + 1) } else { (2 * ne + 1, 2 * ne) };
    rb.dart_map.insert(twin(opp), far_dart);
    rb.extra_rotation.insert(nb, vec![nb_dart]);

    // join the paired edge-ends; chains that never leave v close into hoops
    let mut done: HashMap<Dart, ()> = HashMap::new();
    let mut ends_of = HashMap::new();
    let order: Vec<Dart> = (1..=m as isize).map(at).collect();
    let all_paired: Vec<Dart> = order.iter().copied().chain((1..=m as isize).map(|t| at(-t))).collect();
    for &p in &all_paired {
        if done.contains_key(&p) {
            continue;
        }
        let walk = |start: Dart, done: &mut HashMap<Dart, ()>| -> Option<Dart> {
            let mut x = twin(start);
            loop {
                if c.dart_vertex(x) != Some(v) {
                    return Some(x);
                }
                if done.insert(x, ()).is_some() {
                    return None;
                }
                let y = partner[&x];
                done.insert(y, ());
                x = twin(y);
            }
        };
        done.insert(p, ());
        let q = partner[&p];
        done.insert(q, ());
        let end_p = walk(p, &mut done);
        let end_q = walk(q, &mut done);
        let label = c.dart_label(p);
        match (end_p, end_q) {
            (Some(x), Some(y)) => {
                let (from, to) = if x % 2 == 0 { (x, y) } else { (y, x) };
                if from % 2 != 0 || to % 2 != 1 {
                    return Err(pattern(kind, "merged edge would have inconsistent orientation"));
                }
                rb.join(c, label, from, to);
                ends_of.insert(p, x);
                ends_of.insert(q, y);
            }
            _ => {
                rb.push_edge(label, None, None);
            }
        }
    }
    // inverse site: the near side of each merged edge is its x-side end,
    // taken from the pair nearest the opposite edge first
    let across: Option<Vec<Dart>> =
        (1..=m as isize).rev().map(|t| ends_of.get(&at(t)).and_then(|x| rb.dart_map.get(x)).copied()).collect();
    let chart = rb.finish(c)?;
    Ok((chart, across.map(|across| MoveSite::Black { black: nb, across })))
}

/// Whether position `k` of transition vertex `v` is one of the two slots
/// carrying the extra label.
fn transition_i_slot(c: &Chart, v: VertexId, k: usize, i: u32) -> bool {
    let rot = &c.vertices()[v].rotation;
    let d = rot.len();
    let half = d / 2;
    // the extra slots sit at the end of each half; the first half is outward
    let out_run_end = (0..d).find(|&r| {
        Direction::of(rot[r]) == Direction::Out && Direction::of(rot[(r + 1) % d]) == Direction::In
    });
    match out_run_end {
        Some(r) => (k == r || k == (r + half) % d) && c.dart_label(rot[k]) == Letter::Zeta(i),
        None => false,
    }
}

fn inverse(c: &Chart, kind: LocalMove, black: VertexId, across: &[Dart]) -> Result<(Chart, EdgeId), ChartError> {
    let genus = c.genus();
    let bv = c.vertices().get(black).ok_or_else(|| pattern(kind, format!("no vertex {black}")))?;
    if bv.kind != VertexKind::Black || bv.rotation.len() != 1 {
        return Err(pattern(kind, "site must be a black vertex of degree one"));
    }
    let m = across.len();
    let want = match kind {
        LocalMove::C2inv => 1,
        LocalMove::C3inv => 2,
        _ => 4 * genus.get() as usize + 2,
    };
    if m != want {
        return Err(pattern(kind, format!("expected {want} crossed edges, got {m}")));
    }
    let bd = bv.rotation[0];
    let ep = dart_edge(bd);
    let x = c.dart_vertex(twin(bd)).expect("attached");
    let mut used = vec![ep];
    for &dlt in across {
        let ed = dart_edge(dlt);
        if ed >= c.edges().len() || c.edges()[ed].is_hoop() || used.contains(&ed) {
            return Err(pattern(kind, format!("edge-end {dlt} is not a distinct attached edge")));
        }
        used.push(ed);
    }
    let (face, _) = c.faces();
    let (comp, _) = c.components();
    // separate components share no traced face; their placement is free
    let apart = |a: Dart, b: Dart| {
        face[a] != face[b] && comp[c.dart_vertex(a).expect("attached")] == comp[c.dart_vertex(b).expect("attached")]
    };
    if apart(across[0], bd) || (1..m).any(|t| apart(across[t], twin(across[t - 1]))) {
        return Err(pattern(kind, "the crossed edges do not bound a common path of faces"));
    }

    let mut rb = Rebuild::new(c, &[black]);
    for old in 0..c.edges().len() {
        if !used.contains(&old) {
            rb.keep_edge(c, old);
        }
    }
    let v = rb.new_vertex(VertexKind::Black);
    let xn = rb.vertex_map[x];
    let label = c.dart_label(bd);
    // e' keeps its orientation; x keeps its slot
    let (_, ep_v, ep_x) = if bd % 2 == 1 {
        let e = rb.push_edge(label, xn, Some(v));
        (e, 2 * e + 1, 2 * e)
    } else {
        let e = rb.push_edge(label, Some(v), xn);
        (e, 2 * e, 2 * e + 1)
    };
    rb.dart_map.insert(twin(bd), ep_x);
    let mut east = Vec::with_capacity(m);
    let mut west = Vec::with_capacity(m);
    for &dlt in across {
        let lab = c.dart_label(dlt);
        let u = rb.vertex_map[c.dart_vertex(dlt).expect("attached")];
        let w = rb.vertex_map[c.dart_vertex(twin(dlt)).expect("attached")];
        if dlt % 2 == 0 {
            let wt = rb.push_edge(lab, u, Some(v));
            let et = rb.push_edge(lab, Some(v), w);
            rb.dart_map.insert(dlt, 2 * wt);
            rb.dart_map.insert(twin(dlt), 2 * et + 1);
            west.push(2 * wt + 1);
            east.push(2 * et);
        } else {
            let wt = rb.push_edge(lab, Some(v), u);
            let et = rb.push_edge(lab, w, Some(v));
            rb.dart_map.insert(dlt, 2 * wt + 1);
            rb.dart_map.insert(twin(dlt), 2 * et);
            west.push(2 * wt);
            east.push(2 * et + 1);
        }
    }
    let nb = rb.new_vertex(VertexKind::Black);
    // opposite edges of a braiding vertex carry different labels
    let e_label = if kind == LocalMove::C3inv { c.dart_label(across[0]) } else { label };
    let (e_new, e_v, e_b) = if ep_v % 2 == 1 {
        let e = rb.push_edge(e_label, Some(v), Some(nb));
        (e, 2 * e, 2 * e + 1)
    } else {
        let e = rb.push_edge(e_label, Some(nb), Some(v));
        (e, 2 * e + 1, 2 * e)
    };
    let mut rot = vec![ep_v];
    rot.extend(&east);
    rot.push(e_v);
    rot.extend(west.iter().rev());
    let vkind = match kind {
        LocalMove::C2inv => VertexKind::Crossing,
        LocalMove::C3inv => VertexKind::Braiding,
        _ => match label {
            Letter::Zeta(i) => VertexKind::Transition(i),
            Letter::Sigma(_) => return Err(pattern(kind, "transition needs a chain label")),
        },
    };
    rb.kinds[v] = vkind;
    rb.extra_rotation.insert(v, rot);
    rb.extra_rotation.insert(nb, vec![e_b]);
    let chart = rb.finish(c)?;
    let vert = &chart.vertices()[v];
    let seq: Vec<_> = vert.rotation.iter().map(|&d| (chart.dart_label(d), Direction::of(d))).collect();
    templates::check(genus, vkind, &seq).map_err(|msg| pattern(kind, msg))?;
    if !chart.is_planar() {
        return Err(pattern(kind, "result is not planar"));
    }
    Ok((chart, e_new))
}
