//! Charts as abstract planar maps: labelled oriented edges, typed vertices and
//! a rotation system listing each vertex's edge-ends counterclockwise.
//!
//! Edge `e` has two ends: dart `2e` at its `from` vertex and dart `2e+1` at its
//! `to` vertex. A hoop has neither endpoint and contributes no darts.

mod build;
mod dot;
mod iso;
mod moves;
mod templates;

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::hurwitz::{FiberCounts, HurwitzError};
use crate::mcg::{Genus, Letter, McgError};
use crate::stabilizer::StabError;

pub use build::{
    build_f1, build_f2h, build_n0, build_n1, build_n2h, build_p2h, compile_certificate, Capping,
};
pub use dot::to_dot;
pub use iso::{canonical_form, isomorphic, CanonicalForm};
pub use moves::{local_move, local_move_traced, LocalMove, MoveSite};

pub type VertexId = usize;
pub type EdgeId = usize;
pub type Dart = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChartError {
    #[error(transparent)]
    Mcg(#[from] McgError),
    #[error(transparent)]
    Hurwitz(#[from] HurwitzError),
    #[error(transparent)]
    Stabilizer(#[from] StabError),
    #[error("malformed chart: {0}")]
    Structure(String),
    #[error("cannot compile certificate: {0}")]
    Compile(String),
    #[error("{kind} does not apply: {detail}")]
    Pattern { kind: &'static str, detail: String },
}

fn structure(msg: impl Into<String>) -> ChartError {
    ChartError::Structure(msg.into())
}

/// Vertex types. `Out`/`In` refer to the orientation of the `ζ` edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexKind {
    Black,
    Crossing,
    Braiding,
    NucleonOut,
    NucleonIn,
    BigNucleonOut,
    BigNucleonIn,
    /// Carries the extra label `i` of the `(T, i)²` pattern.
    Transition(u32),
    SigmaBurstOut(u32),
    SigmaBurstIn(u32),
}

impl VertexKind {
    pub fn name(self) -> &'static str {
        match self {
            VertexKind::Black => "black",
            VertexKind::Crossing => "crossing",
            VertexKind::Braiding => "braiding",
            VertexKind::NucleonOut => "nucleon_out",
            VertexKind::NucleonIn => "nucleon_in",
            VertexKind::BigNucleonOut => "big_nucleon_out",
            VertexKind::BigNucleonIn => "big_nucleon_in",
            VertexKind::Transition(_) => "transition",
            VertexKind::SigmaBurstOut(_) => "sigma_burst_out",
            VertexKind::SigmaBurstIn(_) => "sigma_burst_in",
        }
    }

    pub fn index(self) -> Option<u32> {
        match self {
            VertexKind::Transition(i) | VertexKind::SigmaBurstOut(i) | VertexKind::SigmaBurstIn(i) => Some(i),
            _ => None,
        }
    }

    pub fn from_name(name: &str, index: Option<u32>) -> Option<VertexKind> {
        let plain = |k| index.is_none().then_some(k);
        match name {
            "black" => plain(VertexKind::Black),
            "crossing" => plain(VertexKind::Crossing),
            "braiding" => plain(VertexKind::Braiding),
            "nucleon_out" => plain(VertexKind::NucleonOut),
            "nucleon_in" => plain(VertexKind::NucleonIn),
            "big_nucleon_out" => plain(VertexKind::BigNucleonOut),
            "big_nucleon_in" => plain(VertexKind::BigNucleonIn),
            "transition" => index.map(VertexKind::Transition),
            "sigma_burst_out" => index.map(VertexKind::SigmaBurstOut),
            "sigma_burst_in" => index.map(VertexKind::SigmaBurstIn),
            _ => None,
        }
    }

    pub fn degree(self, genus: Genus) -> usize {
        let g = genus.get() as usize;
        match self {
            VertexKind::Black => 1,
            VertexKind::Crossing => 4,
            VertexKind::Braiding => 6,
            VertexKind::NucleonOut | VertexKind::NucleonIn => 4 * (2 * g + 1),
            VertexKind::BigNucleonOut | VertexKind::BigNucleonIn => 2 * (g + 1) * (2 * g + 1),
            VertexKind::Transition(_) => 2 * (4 * g + 3),
            VertexKind::SigmaBurstOut(h) | VertexKind::SigmaBurstIn(h) => {
                let h = h as usize;
                4 * h * (2 * h + 1) + 1
            }
        }
    }
}

impl fmt::Display for VertexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.index() {
            Some(i) => write!(f, "{}({i})", self.name()),
            None => write!(f, "{}", self.name()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Out,
    In,
}

impl Direction {
    pub fn of(d: Dart) -> Direction {
        if d % 2 == 0 {
            Direction::Out
        } else {
            Direction::In
        }
    }
}

#[inline]
pub fn twin(d: Dart) -> Dart {
    d ^ 1
}

#[inline]
pub fn dart_edge(d: Dart) -> EdgeId {
    d / 2
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vertex {
    pub kind: VertexKind,
    /// Counterclockwise.
    pub rotation: Vec<Dart>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub label: Letter,
    pub from: Option<VertexId>,
    pub to: Option<VertexId>,
}

impl Edge {
    pub fn is_hoop(&self) -> bool {
        self.from.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chart {
    genus: Genus,
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
}

impl Chart {
    /// Checks that the rotation system is consistent with the edge endpoints.
    pub fn new(genus: Genus, vertices: Vec<Vertex>, edges: Vec<Edge>) -> Result<Chart, ChartError> {
        let mut seen = vec![false; 2 * edges.len()];
        for (e, edge) in edges.iter().enumerate() {
            genus.check(edge.label)?;
            if edge.from.is_some() != edge.to.is_some() {
                return Err(structure(format!("edge {e} has exactly one endpoint")));
            }
            for v in [edge.from, edge.to].into_iter().flatten() {
                if v >= vertices.len() {
                    return Err(structure(format!("edge {e} refers to missing vertex {v}")));
                }
            }
        }
        for (v, vert) in vertices.iter().enumerate() {
            if vert.rotation.is_empty() {
                return Err(structure(format!("vertex {v} has no incident edges")));
            }
            if let VertexKind::SigmaBurstOut(h) | VertexKind::SigmaBurstIn(h) = vert.kind {
                genus.check_sigma(h)?;
            }
            if let VertexKind::Transition(i) = vert.kind {
                genus.check(Letter::Zeta(i))?;
            }
            for &d in &vert.rotation {
                let e = dart_edge(d);
                let edge = edges.get(e).ok_or_else(|| structure(format!("vertex {v} lists missing edge-end {d}")))?;
                let end = if d % 2 == 0 { edge.from } else { edge.to };
                if end != Some(v) {
                    return Err(structure(format!("edge-end {d} listed at vertex {v} belongs elsewhere")));
                }
                if std::mem::replace(&mut seen[d], true) {
                    return Err(structure(format!("edge-end {d} listed twice")));
                }
            }
        }
        for (e, edge) in edges.iter().enumerate() {
            if !edge.is_hoop() && !(seen[2 * e] && seen[2 * e + 1]) {
                return Err(structure(format!("edge {e} is missing from a rotation")));
            }
        }
        Ok(Chart { genus, vertices, edges })
    }

    pub fn empty(genus: Genus) -> Chart {
        Chart { genus, vertices: Vec::new(), edges: Vec::new() }
    }

    pub fn genus(&self) -> Genus {
        self.genus
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn dart_vertex(&self, d: Dart) -> Option<VertexId> {
        let e = &self.edges[dart_edge(d)];
        if d % 2 == 0 {
            e.from
        } else {
            e.to
        }
    }

    pub fn dart_label(&self, d: Dart) -> Letter {
        self.edges[dart_edge(d)].label
    }

    /// `(vertex, index in rotation)` for every dart at a vertex.
    fn dart_positions(&self) -> Vec<Option<(VertexId, usize)>> {
        let mut pos = vec![None; 2 * self.edges.len()];
        for (v, vert) in self.vertices.iter().enumerate() {
            for (k, &d) in vert.rotation.iter().enumerate() {
                pos[d] = Some((v, k));
            }
        }
        pos
    }

    /// Face index of every dart (`None` for hoops) and the number of faces.
    /// The face of `d` is the orbit of `d ↦ next_ccw(twin(d))`.
    pub fn faces(&self) -> (Vec<Option<usize>>, usize) {
        let pos = self.dart_positions();
        let mut face = vec![None; pos.len()];
        let mut count = 0;
        for start in 0..pos.len() {
            if pos[start].is_none() || face[start].is_some() {
                continue;
            }
            let mut d = start;
            while face[d].is_none() {
                face[d] = Some(count);
                let (v, k) = pos[twin(d)].expect("non-hoop edges have both ends");
                let rot = &self.vertices[v].rotation;
                d = rot[(k + 1) % rot.len()];
            }
            count += 1;
        }
        (face, count)
    }

    /// Connected component of every vertex, and the component count.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let n = self.vertices.len();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let mut stack = vec![s];
            comp[s] = count;
            while let Some(v) = stack.pop() {
                for &d in &self.vertices[v].rotation {
                    let w = self.dart_vertex(twin(d)).expect("attached");
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    /// `V − E + F` for every connected component (hoops excluded).
    pub fn euler_characteristics(&self) -> Vec<i64> {
        let (comp, nc) = self.components();
        let (face, _) = self.faces();
        let mut chi = vec![0i64; nc];
        for c in &comp {
            chi[*c] += 1;
        }
        let mut faces_seen: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); nc];
        for (e, edge) in self.edges.iter().enumerate() {
            if let Some(v) = edge.from {
                chi[comp[v]] -= 1;
                for d in [2 * e, 2 * e + 1] {
                    faces_seen[comp[v]].insert(face[d].expect("attached"));
                }
            }
        }
        for (c, f) in faces_seen.iter().enumerate() {
            chi[c] += f.len() as i64;
        }
        chi
    }

    pub fn is_planar(&self) -> bool {
        self.euler_characteristics().iter().all(|&x| x == 2)
    }

    /// Black-vertex census: an outward edge gives the positive type.
    pub fn census(&self) -> FiberCounts {
        let mut c = FiberCounts::zero(self.genus);
        for v in &self.vertices {
            if v.kind != VertexKind::Black || v.rotation.len() != 1 {
                continue;
            }
            let d = v.rotation[0];
            match (self.dart_label(d), Direction::of(d)) {
                (Letter::Zeta(_), Direction::Out) => c.n0_plus += 1,
                (Letter::Zeta(_), Direction::In) => c.n0_minus += 1,
                (Letter::Sigma(h), Direction::Out) => c.nh_plus[h as usize - 1] += 1,
                (Letter::Sigma(h), Direction::In) => c.nh_minus[h as usize - 1] += 1,
            }
        }
        c
    }

    /// Degrees of the non-black vertices.
    pub fn interior_degrees(&self) -> BTreeSet<usize> {
        self.vertices.iter().filter(|v| v.kind != VertexKind::Black).map(|v| v.rotation.len()).collect()
    }

    /// Disjoint union; the outer faces are merged.
    pub fn product(&self, other: &Chart) -> Result<Chart, ChartError> {
        self.genus.same_as(other.genus)?;
        let (nv, ne) = (self.vertices.len(), self.edges.len());
        let mut vertices = self.vertices.clone();
        vertices.extend(other.vertices.iter().map(|v| Vertex {
            kind: v.kind,
            rotation: v.rotation.iter().map(|d| d + 2 * ne).collect(),
        }));
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|e| Edge {
            label: e.label,
            from: e.from.map(|v| v + nv),
            to: e.to.map(|v| v + nv),
        }));
        Ok(Chart { genus: self.genus, vertices, edges })
    }

    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        for (v, vert) in self.vertices.iter().enumerate() {
            let want = vert.kind.degree(self.genus);
            if vert.rotation.len() != want {
                violations.push(Violation {
                    vertex: Some(v),
                    condition: "degree".into(),
                    message: format!("{} has degree {}, expected {want}", vert.kind, vert.rotation.len()),
                });
                continue;
            }
            let seq: Vec<(Letter, Direction)> =
                vert.rotation.iter().map(|&d| (self.dart_label(d), Direction::of(d))).collect();
            if let Err(msg) = templates::check(self.genus, vert.kind, &seq) {
                violations.push(Violation { vertex: Some(v), condition: "template".into(), message: msg });
            }
        }
        let euler = self.euler_characteristics();
        for (c, &x) in euler.iter().enumerate() {
            if x != 2 {
                violations.push(Violation {
                    vertex: None,
                    condition: "planarity".into(),
                    message: format!("component {c} has V-E+F = {x}"),
                });
            }
        }
        ValidationReport {
            valid: violations.is_empty(),
            violations,
            euler,
            hoops: self.edges.iter().filter(|e| e.is_hoop()).count(),
            vacuous: vec![
                "boundary condition: the abstract chart has no boundary contact".into(),
                "base point condition: no base point is represented".into(),
            ],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub vertex: Option<VertexId>,
    pub condition: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
    /// `V − E + F` per connected component.
    pub euler: Vec<i64>,
    pub hoops: usize,
    /// Conditions that hold trivially in the abstract model.
    pub vacuous: Vec<String>,
}
