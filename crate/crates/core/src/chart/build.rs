use super::{Chart, ChartError, Edge, EdgeId, Vertex, VertexId, VertexKind};
use crate::hurwitz::{w0, w2h_sigma_offset, HurwitzSystem, MoveCertificate, MoveKind};
use crate::mcg::{Genus, Letter, Sign};
use crate::stabilizer::{derive_w2h, DEFAULT_BUDGET};

/// How the strands of the start system are closed off.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Capping {
    /// A black vertex under every start strand.
    BlackBoth,
    /// One nucleon under every `W_0` block of the start system.
    NucleonsAtStart,
}

#[derive(Default)]
struct Builder {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
}

impl Builder {
    fn edge(&mut self, label: Letter) -> EdgeId {
        self.edges.push(Edge { label, from: None, to: None });
        self.edges.len() - 1
    }

    fn vertex(&mut self, kind: VertexKind) -> VertexId {
        self.vertices.push(Vertex { kind, rotation: Vec::new() });
        self.vertices.len() - 1
    }

    /// Appends the `from` end of `e` to `v`'s rotation.
    fn attach_from(&mut self, v: VertexId, e: EdgeId) {
        self.edges[e].from = Some(v);
        self.vertices[v].rotation.push(2 * e);
    }

    fn attach_to(&mut self, v: VertexId, e: EdgeId) {
        self.edges[e].to = Some(v);
        self.vertices[v].rotation.push(2 * e + 1);
    }

    fn black_from(&mut self, e: EdgeId) {
        let b = self.vertex(VertexKind::Black);
        self.attach_from(b, e);
    }

    fn black_to(&mut self, e: EdgeId) {
        let b = self.vertex(VertexKind::Black);
        self.attach_to(b, e);
    }

    fn finish(self, genus: Genus) -> Result<Chart, ChartError> {
        Chart::new(genus, self.vertices, self.edges)
    }
}

fn zeta_labels(idx: &[u32]) -> Vec<Letter> {
    idx.iter().map(|&i| Letter::Zeta(i)).collect()
}

/// A single center vertex with every edge running from a black vertex into it,
/// counterclockwise in the given label order.
fn star_in(genus: Genus, kind: VertexKind, labels: &[Letter]) -> Chart {
    let mut b = Builder::default();
    let center = b.vertex(kind);
    for &l in labels {
        let e = b.edge(l);
        b.black_from(e);
        b.attach_to(center, e);
    }
    b.finish(genus).expect("well formed")
}

/// `N_0`: a nucleon with `4(2g+1)` type-I⁺ black vertices.
pub fn build_n0(genus: Genus) -> Chart {
    let idx: Vec<u32> = w0(genus).plain_zetas().expect("plain");
    star_in(genus, VertexKind::NucleonIn, &zeta_labels(&idx))
}

/// `N_1`: a big nucleon with `2(g+1)(2g+1)` type-I⁺ black vertices.
pub fn build_n1(genus: Genus) -> Chart {
    let n = genus.zeta_count();
    let block: Vec<u32> = (1..=n).rev().collect();
    star_in(genus, VertexKind::BigNucleonIn, &zeta_labels(&block.repeat(genus.branch_points())))
}

fn free_edge(genus: Genus, label: Letter) -> Chart {
    let mut b = Builder::default();
    let e = b.edge(label);
    b.black_from(e);
    b.black_to(e);
    b.finish(genus).expect("well formed")
}

/// `F_1`: a free edge labelled `ζ_1`.
pub fn build_f1(genus: Genus) -> Chart {
    free_edge(genus, Letter::Zeta(1))
}

/// `F_{2,h}`: a free edge labelled `σ_h`.
pub fn build_f2h(genus: Genus, h: u32) -> Result<Chart, ChartError> {
    genus.check_sigma(h)?;
    Ok(free_edge(genus, Letter::Sigma(h)))
}

/// `P_{2,h}`: the compiled derivation from `(h+1)·N_0`.
pub fn build_p2h(genus: Genus, h: u32) -> Result<Chart, ChartError> {
    let cert = derive_w2h(genus, h, DEFAULT_BUDGET)?;
    compile_certificate(&cert, Capping::NucleonsAtStart)
}

/// `N_{2,h}`: `P_{2,h}` with the chain block contracted to a single `σ_h` edge.
pub fn build_n2h(genus: Genus, h: u32) -> Result<Chart, ChartError> {
    let mut cert = derive_w2h(genus, h, DEFAULT_BUDGET)?;
    let m = MoveKind::ContractSigma { pos: w2h_sigma_offset(genus, h), h };
    cert.end = cert.end.apply(&m)?;
    cert.moves.push(m);
    compile_certificate(&cert, Capping::NucleonsAtStart)
}

fn plain_letters(s: &HurwitzSystem) -> Result<Vec<Letter>, ChartError> {
    s.entries()
        .iter()
        .map(|e| {
            if e.conjugator().is_empty() && e.sign() == Sign::Pos {
                Ok(e.base())
            } else {
                Err(ChartError::Compile(format!("entry {e} is not a plain positive twist")))
            }
        })
        .collect()
}

/// Compiles a certificate into a chart drawn as a movie: the start system at
/// the bottom, one vertex per move, the end system capped by black vertices.
///
/// Strands run downward, so every edge points from its upper vertex to its
/// lower one. A move vertex lists the strands below it left to right, then the
/// strands above it right to left.
pub fn compile_certificate(cert: &MoveCertificate, capping: Capping) -> Result<Chart, ChartError> {
    let v = cert.verify();
    if !v.ok {
        return Err(ChartError::Compile(format!(
            "certificate does not verify (step {:?}: {})",
            v.failed_step,
            v.reason.unwrap_or_default()
        )));
    }
    let genus = cert.start.genus();
    let mut b = Builder::default();
    let start = plain_letters(&cert.start)?;
    let mut level: Vec<EdgeId> = start.iter().map(|&l| b.edge(l)).collect();

    match capping {
        Capping::BlackBoth => {
            for &e in &level {
                b.black_to(e);
            }
        }
        Capping::NucleonsAtStart => {
            let block = w0(genus).plain_zetas().expect("plain");
            let block: Vec<Letter> = zeta_labels(&block);
            if start.is_empty() || start.len() % block.len() != 0 || start.chunks(block.len()).any(|c| c != block) {
                return Err(ChartError::Compile("start system is not a power of W0".into()));
            }
            for chunk in level.chunks(block.len()) {
                let nv = b.vertex(VertexKind::NucleonIn);
                for &e in chunk.iter().rev() {
                    b.attach_to(nv, e);
                }
            }
        }
    }

    let mut sys = cert.start.clone();
    for m in &cert.moves {
        let before = sys.len();
        let next = sys.apply(m)?;
        let (pos, old_len, kind) = match *m {
            MoveKind::H1 { pos, .. } | MoveKind::H1inv { pos, .. } => (pos, 2, VertexKind::Crossing),
            MoveKind::H2 { pos, .. } | MoveKind::H2inv { pos, .. } => (pos, 3, VertexKind::Braiding),
            MoveKind::H3 { pos } => {
                let w = m.window(genus, before);
                let i = sys.entries()[pos + w - 1].as_plain_zeta().expect("checked by replay");
                (pos, w, VertexKind::Transition(i))
            }
            MoveKind::ExpandSigma { pos, h } => (pos, 1, VertexKind::SigmaBurstIn(h)),
            MoveKind::ContractSigma { pos, h } => (pos, m.window(genus, before), VertexKind::SigmaBurstOut(h)),
            MoveKind::CyclicLeft { pos: k } => {
                level.rotate_left(k);
                sys = next;
                continue;
            }
            MoveKind::CyclicRight { pos: k } => {
                level.rotate_right(k);
                sys = next;
                continue;
            }
            MoveKind::H3inv { .. } => {
                return Err(ChartError::Compile(
                    "H3inv has no transition vertex in the counterclockwise orientation".into(),
                ))
            }
            MoveKind::SlideRight { .. } | MoveKind::SlideLeft { .. } => {
                return Err(ChartError::Compile("slides have no local chart vertex".into()))
            }
        };
        let new_len = next.len() + old_len - before;
        let labels = plain_letters(&HurwitzSystem::new(genus, next.entries()[pos..pos + new_len].to_vec())?)?;
        let vx = b.vertex(kind);
        for &e in &level[pos..pos + old_len] {
            b.attach_from(vx, e);
        }
        let fresh: Vec<EdgeId> = labels.iter().map(|&l| b.edge(l)).collect();
        for &e in fresh.iter().rev() {
            b.attach_to(vx, e);
        }
        level.splice(pos..pos + old_len, fresh);
        sys = next;
    }
    plain_letters(&sys)?;
    for &e in &level {
        b.black_from(e);
    }
    b.finish(genus)
}
