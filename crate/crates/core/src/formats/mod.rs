//! JSON interchange documents.
//!
//! Every document is an object with `"schema_version": "1"` and a `"kind"`
//! tag; the payload fields sit beside them at the top level.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chart::{Chart, ChartError, Edge, Vertex, VertexKind};
use crate::hurwitz::{FactorEntry, HurwitzError, HurwitzSystem, MoveCertificate, MoveKind};
use crate::mcg::{Genus, Letter, McgError, Sign, SignedLetter, Word};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported schema_version {0:?}")]
    Version(String),
    #[error("schema violation: {0}")]
    Schema(String),
    #[error(transparent)]
    Mcg(#[from] McgError),
    #[error(transparent)]
    Hurwitz(#[from] HurwitzError),
    #[error(transparent)]
    Chart(#[from] ChartError),
}

fn schema(msg: impl Into<String>) -> FormatError {
    FormatError::Schema(msg.into())
}

/// Output-only summary; the body is free-form JSON with sorted keys.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub report: String,
    pub body: serde_json::Value,
}

impl Report {
    pub fn new<T: Serialize>(name: &str, body: &T) -> Result<Report, FormatError> {
        Ok(Report { report: name.to_string(), body: serde_json::to_value(body)? })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Payload {
    Word(Word),
    System(HurwitzSystem),
    Certificate(MoveCertificate),
    Chart(Chart),
    Report(Report),
}

impl Payload {
    pub fn kind(&self) -> &'static str {
        match self {
            Payload::Word(_) => "word",
            Payload::System(_) => "system",
            Payload::Certificate(_) => "certificate",
            Payload::Chart(_) => "chart",
            Payload::Report(_) => "report",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub schema_version: String,
    pub payload: Payload,
}

impl Document {
    pub fn new(payload: Payload) -> Document {
        Document { schema_version: SCHEMA_VERSION.to_string(), payload }
    }

    pub fn parse(text: &str) -> Result<Document, FormatError> {
        let dto: DocumentDto = serde_json::from_str(text)?;
        if dto.schema_version != SCHEMA_VERSION {
            return Err(FormatError::Version(dto.schema_version));
        }
        let payload = match dto.body {
            BodyDto::Word(w) => Payload::Word(w.try_into()?),
            BodyDto::System(s) => Payload::System(s.try_into()?),
            BodyDto::Certificate(c) => Payload::Certificate(c.try_into()?),
            BodyDto::Chart(c) => Payload::Chart(c.try_into()?),
            BodyDto::Report(r) => Payload::Report(r),
        };
        Ok(Document { schema_version: dto.schema_version, payload })
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let body = match &self.payload {
            Payload::Word(w) => BodyDto::Word(w.into()),
            Payload::System(s) => BodyDto::System(s.into()),
            Payload::Certificate(c) => BodyDto::Certificate(c.into()),
            Payload::Chart(c) => BodyDto::Chart(c.into()),
            Payload::Report(r) => BodyDto::Report(r.clone()),
        };
        let dto = DocumentDto { schema_version: self.schema_version.clone(), body };
        let mut s = serde_json::to_string_pretty(&dto).expect("documents always serialize");
        s.push('\n');
        s
    }

    pub fn into_word(self) -> Result<Word, FormatError> {
        match self.payload {
            Payload::Word(w) => Ok(w),
            p => Err(schema(format!("expected a word document, found {}", p.kind()))),
        }
    }

    pub fn into_system(self) -> Result<HurwitzSystem, FormatError> {
        match self.payload {
            Payload::System(s) => Ok(s),
            p => Err(schema(format!("expected a system document, found {}", p.kind()))),
        }
    }

    pub fn into_certificate(self) -> Result<MoveCertificate, FormatError> {
        match self.payload {
            Payload::Certificate(c) => Ok(c),
            p => Err(schema(format!("expected a certificate document, found {}", p.kind()))),
        }
    }

    pub fn into_chart(self) -> Result<Chart, FormatError> {
        match self.payload {
            Payload::Chart(c) => Ok(c),
            p => Err(schema(format!("expected a chart document, found {}", p.kind()))),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct DocumentDto {
    schema_version: String,
    #[serde(flatten)]
    body: BodyDto,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum BodyDto {
    Word(WordDto),
    System(SystemDto),
    Certificate(CertificateDto),
    Chart(ChartDto),
    Report(Report),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
enum LetterKind {
    Zeta,
    Sigma,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
struct BaseDto {
    kind: LetterKind,
    index: u32,
}

impl From<Letter> for BaseDto {
    fn from(l: Letter) -> Self {
        match l {
            Letter::Zeta(i) => BaseDto { kind: LetterKind::Zeta, index: i },
            Letter::Sigma(h) => BaseDto { kind: LetterKind::Sigma, index: h },
        }
    }
}

impl From<BaseDto> for Letter {
    fn from(b: BaseDto) -> Self {
        match b.kind {
            LetterKind::Zeta => Letter::Zeta(b.index),
            LetterKind::Sigma => Letter::Sigma(b.index),
        }
    }
}

fn sign_from(s: i8) -> Result<Sign, FormatError> {
    Sign::from_i64(s as i64).ok_or_else(|| schema(format!("sign must be 1 or -1, got {s}")))
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
struct LetterDto {
    kind: LetterKind,
    index: u32,
    sign: i8,
}

impl From<SignedLetter> for LetterDto {
    fn from(l: SignedLetter) -> Self {
        let b = BaseDto::from(l.letter);
        LetterDto { kind: b.kind, index: b.index, sign: l.sign.as_i8() }
    }
}

impl TryFrom<LetterDto> for SignedLetter {
    type Error = FormatError;
    fn try_from(d: LetterDto) -> Result<Self, FormatError> {
        let letter = Letter::from(BaseDto { kind: d.kind, index: d.index });
        Ok(SignedLetter { letter, sign: sign_from(d.sign)? })
    }
}

fn letters_of(genus: Genus, dtos: Vec<LetterDto>) -> Result<Word, FormatError> {
    let letters = dtos.into_iter().map(SignedLetter::try_from).collect::<Result<Vec<_>, _>>()?;
    Ok(Word::new(genus, letters)?)
}

fn genus_of(g: u32) -> Result<Genus, FormatError> {
    Ok(Genus::new(g)?)
}

#[derive(Serialize, Deserialize)]
struct WordDto {
    genus: u32,
    letters: Vec<LetterDto>,
}

impl From<&Word> for WordDto {
    fn from(w: &Word) -> Self {
        WordDto { genus: w.genus().get(), letters: w.letters().iter().map(|&l| l.into()).collect() }
    }
}

impl TryFrom<WordDto> for Word {
    type Error = FormatError;
    fn try_from(d: WordDto) -> Result<Self, FormatError> {
        letters_of(genus_of(d.genus)?, d.letters)
    }
}

#[derive(Serialize, Deserialize)]
struct EntryDto {
    #[serde(default)]
    conjugator: Vec<LetterDto>,
    base: BaseDto,
    sign: i8,
}

#[derive(Serialize, Deserialize)]
struct SystemDto {
    genus: u32,
    entries: Vec<EntryDto>,
}

impl From<&HurwitzSystem> for SystemDto {
    fn from(s: &HurwitzSystem) -> Self {
        let entries = s
            .entries()
            .iter()
            .map(|e| EntryDto {
                conjugator: e.conjugator().letters().iter().map(|&l| l.into()).collect(),
                base: e.base().into(),
                sign: e.sign().as_i8(),
            })
            .collect();
        SystemDto { genus: s.genus().get(), entries }
    }
}

impl TryFrom<SystemDto> for HurwitzSystem {
    type Error = FormatError;
    fn try_from(d: SystemDto) -> Result<Self, FormatError> {
        let genus = genus_of(d.genus)?;
        let entries = d
            .entries
            .into_iter()
            .map(|e| Ok(FactorEntry::new(letters_of(genus, e.conjugator)?, e.base.into(), sign_from(e.sign)?)?))
            .collect::<Result<Vec<_>, FormatError>>()?;
        Ok(HurwitzSystem::new(genus, entries)?)
    }
}

#[derive(Serialize, Deserialize)]
struct CertificateDto {
    start: SystemDto,
    moves: Vec<MoveKind>,
    end: SystemDto,
}

impl From<&MoveCertificate> for CertificateDto {
    fn from(c: &MoveCertificate) -> Self {
        CertificateDto { start: (&c.start).into(), moves: c.moves.clone(), end: (&c.end).into() }
    }
}

/// Not replayed here; `verify` decides whether the moves connect the ends.
impl TryFrom<CertificateDto> for MoveCertificate {
    type Error = FormatError;
    fn try_from(d: CertificateDto) -> Result<Self, FormatError> {
        Ok(MoveCertificate { start: d.start.try_into()?, moves: d.moves, end: d.end.try_into()? })
    }
}

#[derive(Serialize, Deserialize)]
struct VertexDto {
    id: usize,
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    index: Option<u32>,
    rotation: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct EdgeDto {
    id: usize,
    label: BaseDto,
    from: Option<usize>,
    to: Option<usize>,
}

/// Edge-end `2e` is the tail of edge `e`, `2e+1` its head.
#[derive(Serialize, Deserialize)]
struct ChartDto {
    genus: u32,
    vertices: Vec<VertexDto>,
    edges: Vec<EdgeDto>,
}

impl From<&Chart> for ChartDto {
    fn from(c: &Chart) -> Self {
        let vertices = c
            .vertices()
            .iter()
            .enumerate()
            .map(|(id, v)| VertexDto { id, kind: v.kind.name().into(), index: v.kind.index(), rotation: v.rotation.clone() })
            .collect();
        let edges = c
            .edges()
            .iter()
            .enumerate()
            .map(|(id, e)| EdgeDto { id, label: e.label.into(), from: e.from, to: e.to })
            .collect();
        ChartDto { genus: c.genus().get(), vertices, edges }
    }
}

impl TryFrom<ChartDto> for Chart {
    type Error = FormatError;
    fn try_from(d: ChartDto) -> Result<Self, FormatError> {
        let genus = genus_of(d.genus)?;
        let mut vertices = Vec::with_capacity(d.vertices.len());
        for (pos, v) in d.vertices.into_iter().enumerate() {
            if v.id != pos {
                return Err(schema(format!("vertex ids must be 0,1,2,…; found {} at position {pos}", v.id)));
            }
            let kind = VertexKind::from_name(&v.kind, v.index)
                .ok_or_else(|| schema(format!("unknown vertex kind {:?} with index {:?}", v.kind, v.index)))?;
            vertices.push(Vertex { kind, rotation: v.rotation });
        }
        let mut edges = Vec::with_capacity(d.edges.len());
        for (pos, e) in d.edges.into_iter().enumerate() {
            if e.id != pos {
                return Err(schema(format!("edge ids must be 0,1,2,…; found {} at position {pos}", e.id)));
            }
            edges.push(Edge { label: e.label.into(), from: e.from, to: e.to });
        }
        Ok(Chart::new(genus, vertices, edges)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chart::build_f1;
    use crate::hurwitz::w1;
    use serde_json::json;

    fn g(n: u32) -> Genus {
        Genus::new(n).unwrap()
    }

    #[test]
    fn word_shape() {
        let w = Word::zetas(g(1), &[1, 3]).unwrap().inverse();
        let doc = Document::new(Payload::Word(w.clone()));
        let v: serde_json::Value = serde_json::from_str(&doc.to_json()).unwrap();
        assert_eq!(
            v,
            json!({"schema_version": "1", "kind": "word", "genus": 1, "letters": [
                {"kind": "zeta", "index": 3, "sign": -1},
                {"kind": "zeta", "index": 1, "sign": -1},
            ]})
        );
        assert_eq!(Document::parse(&doc.to_json()).unwrap().into_word().unwrap(), w);
    }

    #[test]
    fn system_and_chart_round_trip() {
        for p in [Payload::System(w1(g(2))), Payload::Chart(build_f1(g(2)))] {
            let doc = Document::new(p);
            assert_eq!(Document::parse(&doc.to_json()).unwrap(), doc);
        }
    }

    #[test]
    fn rejects_bad_documents() {
        let cases = [
            r#"{"schema_version": "2", "kind": "word", "genus": 1, "letters": []}"#,
            r#"{"kind": "word", "genus": 1, "letters": []}"#,
            r#"{"schema_version": "1", "kind": "poem", "genus": 1}"#,
            r#"{"schema_version": "1", "kind": "word", "genus": 1, "letters": [{"kind": "zeta", "index": 9, "sign": 1}]}"#,
            r#"{"schema_version": "1", "kind": "word", "genus": 1, "letters": [{"kind": "zeta", "index": 1, "sign": 0}]}"#,
            r#"{"schema_version": "1", "kind": "word", "genus": 0, "letters": []}"#,
            "not json",
        ];
        for c in cases {
            assert!(Document::parse(c).is_err(), "{c}");
        }
    }
}
