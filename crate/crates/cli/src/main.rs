//! `lefschetz`: command-line front end.
//!
//! Exit codes: 0 success, 1 semantic failure, 2 parse or schema error.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lefschetz_core::chart::{
    build_f1, build_f2h, build_n0, build_n1, build_n2h, build_p2h, compile_certificate, local_move, to_dot, Capping,
    LocalMove, MoveSite,
};
use lefschetz_core::formats::{Document, FormatError, Payload, Report};
use lefschetz_core::hurwitz::{
    apply_move, counts, divisibility_check, divisibility_modulus, euler_invariant, total_monodromy, BasicName,
    HurwitzSystem, MoveKind,
};
use lefschetz_core::mcg::{perm_image, relation_check, symp_image, Genus, Word};
use lefschetz_core::stabilizer::{derive_w2h, normal_form, search_equivalence, verify_certificate, SearchOptions, DEFAULT_BUDGET};
use serde_json::json;

#[derive(Parser)]
#[command(name = "lefschetz", version, about = "Hurwitz systems, move certificates and charts for hyperelliptic Lefschetz fibrations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Singular fiber census of a system, with chiral and irreducible flags.
    Counts { file: PathBuf },
    /// The invariant E and its divisibility verdict.
    Invariant { file: PathBuf },
    /// Stabilization normal form of a system's census.
    Normalize { file: PathBuf },
    /// Emit a basic system.
    Basic {
        name: Basic,
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        h: Option<u32>,
    },
    /// Fiber sum of systems, in order.
    Sum {
        #[arg(required = true, num_args = 2..)]
        files: Vec<PathBuf>,
    },
    /// Apply one move. Letter indices are read off the system unless given.
    Move {
        file: PathBuf,
        #[arg(long)]
        kind: String,
        #[arg(long)]
        pos: usize,
        #[arg(long)]
        h: Option<u32>,
    },
    /// Certificate taking (h+1)·W0 to the expanded W2h system.
    DeriveW2h {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        h: u32,
        #[arg(long, default_value_t = 200_000_000)]
        budget: usize,
    },
    /// Replay a certificate.
    Verify { cert: PathBuf },
    /// Search for a move sequence between two systems.
    Search {
        file1: PathBuf,
        file2: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        #[arg(long)]
        cyclic: bool,
        /// Write the certificate here when one is found.
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// Image of the total monodromy (or of a word) in a representation.
    Rep {
        file: PathBuf,
        #[arg(long)]
        kind: RepKind,
    },
    /// Check the defining relations in both representations.
    Relations {
        #[arg(long)]
        genus: u32,
    },
    #[command(subcommand)]
    Chart(ChartCommand),
}

#[derive(Subcommand)]
enum ChartCommand {
    Validate { file: PathBuf },
    Census { file: PathBuf },
    /// Compile a certificate into a chart.
    Compile {
        cert: PathBuf,
        #[arg(long, value_enum, default_value_t = CappingArg::BlackBoth)]
        capping: CappingArg,
    },
    Dot { file: PathBuf },
    Build {
        name: ChartName,
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        h: Option<u32>,
    },
    /// Apply a local move at an edge (forward) or at a black vertex (inverse).
    Move {
        file: PathBuf,
        #[arg(long)]
        kind: MoveArg,
        #[arg(long, conflicts_with_all = ["black", "across"])]
        edge: Option<usize>,
        #[arg(long, requires = "across")]
        black: Option<usize>,
        #[arg(long, value_delimiter = ',')]
        across: Vec<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Basic {
    W0,
    W1,
    W2h,
    W1p,
    W2hp,
    Wprime2h,
}

#[derive(Clone, Copy, ValueEnum)]
enum RepKind {
    Perm,
    Symp,
}

#[derive(Clone, Copy, ValueEnum)]
enum CappingArg {
    BlackBoth,
    NucleonsAtStart,
}

#[derive(Clone, Copy, ValueEnum)]
enum ChartName {
    N0,
    N1,
    F1,
    F2h,
    P2h,
    N2h,
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "verbatim")]
enum MoveArg {
    C2,
    C3,
    C4,
    C2inv,
    C3inv,
    C4inv,
}

enum Failure {
    /// Exit 1.
    Semantic(String),
    /// Exit 2.
    Parse(String),
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        Failure::Parse(e.to_string())
    }
}

fn semantic(e: impl std::fmt::Display) -> Failure {
    Failure::Semantic(e.to_string())
}

fn parse_err(e: impl std::fmt::Display) -> Failure {
    Failure::Parse(e.to_string())
}

/// Standard output plus whether the result counts as a failure.
struct Output {
    text: String,
    failed: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, failed: false }
    }
}

fn read_doc(path: &Path) -> Result<Document, Failure> {
    let text = fs::read_to_string(path).map_err(|e| parse_err(format!("{}: {e}", path.display())))?;
    Document::parse(&text).map_err(|e| parse_err(format!("{}: {e}", path.display())))
}

fn read_system(path: &Path) -> Result<HurwitzSystem, Failure> {
    read_doc(path)?.into_system().map_err(|e| parse_err(format!("{}: {e}", path.display())))
}

fn genus(g: u32) -> Result<Genus, Failure> {
    Genus::new(g).map_err(parse_err)
}

fn doc(payload: Payload) -> String {
    Document::new(payload).to_json()
}

fn report<T: serde::Serialize>(name: &str, body: &T) -> Result<String, Failure> {
    Ok(doc(Payload::Report(Report::new(name, body)?)))
}

/// Fills in the letter indices of H1/H2 moves and the σ index of expansions
/// from the entries at `pos`.
fn move_from_args(s: &HurwitzSystem, kind: &str, pos: usize, h: Option<u32>) -> Result<MoveKind, Failure> {
    let z = |k: usize| s.entries().get(pos + k).and_then(|e| e.as_plain_zeta()).unwrap_or(0);
    let m = match kind {
        "H1" => MoveKind::H1 { pos, i: z(0), j: z(1) },
        "H1inv" => MoveKind::H1inv { pos, i: z(1), j: z(0) },
        "H2" => MoveKind::H2 { pos, i: z(0), j: z(1) },
        "H2inv" => MoveKind::H2inv { pos, i: z(1), j: z(0) },
        "H3" => MoveKind::H3 { pos },
        "H3inv" => MoveKind::H3inv { pos },
        "SlideRight" => MoveKind::SlideRight { pos },
        "SlideLeft" => MoveKind::SlideLeft { pos },
        "CyclicLeft" => MoveKind::CyclicLeft { pos },
        "CyclicRight" => MoveKind::CyclicRight { pos },
        "ExpandSigma" => {
            let from_entry = s.entries().get(pos).map(|e| e.base()).and_then(|b| (!b.is_zeta()).then(|| b.index()));
            let h = h.or(from_entry).ok_or_else(|| semantic("ExpandSigma needs a σ entry at the position or --h"))?;
            MoveKind::ExpandSigma { pos, h }
        }
        "ContractSigma" => MoveKind::ContractSigma { pos, h: h.ok_or_else(|| parse_err("ContractSigma needs --h"))? },
        other => return Err(parse_err(format!("unknown move kind {other:?}"))),
    };
    Ok(m)
}

fn run(cli: Cli) -> Result<Output, Failure> {
    match cli.command {
        Command::Counts { file } => {
            let s = read_system(&file)?;
            let c = counts(&s);
            let body = json!({"counts": c, "chiral": c.is_chiral(), "irreducible": c.is_irreducible()});
            report("counts", &body).map(Output::ok)
        }
        Command::Invariant { file } => {
            let s = read_system(&file)?;
            let e = euler_invariant(&counts(&s), s.genus());
            let body = json!({"E": e, "modulus": divisibility_modulus(s.genus()), "divisible": divisibility_check(e, s.genus())});
            report("invariant", &body).map(Output::ok)
        }
        Command::Normalize { file } => {
            let s = read_system(&file)?;
            let nf = normal_form(&counts(&s), s.genus()).map_err(semantic)?;
            report("normal_form", &nf).map(Output::ok)
        }
        Command::Basic { name, genus: g, h } => {
            let name = match name {
                Basic::W0 => BasicName::W0,
                Basic::W1 => BasicName::W1,
                Basic::W2h => BasicName::W2h,
                Basic::W1p => BasicName::W1p,
                Basic::W2hp => BasicName::W2hp,
                Basic::Wprime2h => BasicName::Wprime2h,
            };
            let s = name.build(genus(g)?, h).map_err(parse_err)?;
            Ok(Output::ok(doc(Payload::System(s))))
        }
        Command::Sum { files } => {
            let mut acc = read_system(&files[0])?;
            for f in &files[1..] {
                acc = acc.fiber_sum(&read_system(f)?).map_err(semantic)?;
            }
            Ok(Output::ok(doc(Payload::System(acc))))
        }
        Command::Move { file, kind, pos, h } => {
            let s = read_system(&file)?;
            let m = move_from_args(&s, &kind, pos, h)?;
            let t = apply_move(&s, &m).map_err(semantic)?;
            Ok(Output::ok(doc(Payload::System(t))))
        }
        Command::DeriveW2h { genus: g, h, budget } => {
            let cert = derive_w2h(genus(g)?, h, budget).map_err(semantic)?;
            Ok(Output::ok(doc(Payload::Certificate(cert))))
        }
        Command::Verify { cert } => {
            let c = read_doc(&cert)?.into_certificate()?;
            let v = verify_certificate(&c);
            Ok(Output { failed: !v.ok, text: report("verification", &v)? })
        }
        Command::Search { file1, file2, budget, cyclic, certificate } => {
            let (a, b) = (read_system(&file1)?, read_system(&file2)?);
            let out = search_equivalence(&a, &b, SearchOptions { budget, cyclic });
            if let (Some(path), Some(c)) = (&certificate, &out.certificate) {
                fs::write(path, doc(Payload::Certificate(c.clone()))).map_err(semantic)?;
            }
            Ok(Output { failed: out.certificate.is_none(), text: report("search", &out.summary())? })
        }
        Command::Rep { file, kind } => {
            let w = match read_doc(&file)?.payload {
                Payload::System(s) => total_monodromy(&s),
                Payload::Word(w) => w,
                p => return Err(parse_err(format!("expected a system or word document, found {}", p.kind()))),
            };
            rep(&w, kind).map(Output::ok)
        }
        Command::Relations { genus: g } => {
            let r = relation_check(genus(g)?);
            Ok(Output { failed: !r.all_passed(), text: report("relations", &r)? })
        }
        Command::Chart(c) => run_chart(c),
    }
}

fn rep(w: &Word, kind: RepKind) -> Result<String, Failure> {
    match kind {
        RepKind::Perm => {
            let p = perm_image(w);
            report("perm", &json!({"images": p.images(), "identity": p.is_identity()}))
        }
        RepKind::Symp => {
            let m = symp_image(w).map_err(semantic)?;
            let rows: Vec<Vec<i64>> = m
                .rows()
                .into_iter()
                .map(|r| r.into_iter().map(i64::try_from).collect::<Result<_, _>>())
                .collect::<Result<_, _>>()
                .map_err(|_| semantic("matrix entry exceeds 64 bits"))?;
            let body = json!({"rows": rows, "identity": m.is_identity(), "minus_identity": m.is_minus_identity()});
            report("symp", &body)
        }
    }
}

fn run_chart(c: ChartCommand) -> Result<Output, Failure> {
    let read_chart = |p: &Path| -> Result<_, Failure> { Ok(read_doc(p)?.into_chart()?) };
    match c {
        ChartCommand::Validate { file } => {
            let r = read_chart(&file)?.validate();
            Ok(Output { failed: !r.valid, text: report("validation", &r)? })
        }
        ChartCommand::Census { file } => report("census", &read_chart(&file)?.census()).map(Output::ok),
        ChartCommand::Compile { cert, capping } => {
            let c = read_doc(&cert)?.into_certificate()?;
            let capping = match capping {
                CappingArg::BlackBoth => Capping::BlackBoth,
                CappingArg::NucleonsAtStart => Capping::NucleonsAtStart,
            };
            let chart = compile_certificate(&c, capping).map_err(semantic)?;
            Ok(Output::ok(doc(Payload::Chart(chart))))
        }
        ChartCommand::Dot { file } => Ok(Output::ok(to_dot(&read_chart(&file)?))),
        ChartCommand::Build { name, genus: g, h } => {
            let g = genus(g)?;
            let need_h = || h.ok_or_else(|| parse_err("this chart needs --h"));
            let chart = match name {
                ChartName::N0 => build_n0(g),
                ChartName::N1 => build_n1(g),
                ChartName::F1 => build_f1(g),
                ChartName::F2h => build_f2h(g, need_h()?).map_err(semantic)?,
                ChartName::P2h => build_p2h(g, need_h()?).map_err(semantic)?,
                ChartName::N2h => build_n2h(g, need_h()?).map_err(semantic)?,
            };
            Ok(Output::ok(doc(Payload::Chart(chart))))
        }
        ChartCommand::Move { file, kind, edge, black, across } => {
            let chart = read_chart(&file)?;
            let kind = match kind {
                MoveArg::C2 => LocalMove::C2,
                MoveArg::C3 => LocalMove::C3,
                MoveArg::C4 => LocalMove::C4,
                MoveArg::C2inv => LocalMove::C2inv,
                MoveArg::C3inv => LocalMove::C3inv,
                MoveArg::C4inv => LocalMove::C4inv,
            };
            let site = match (edge, black) {
                (Some(e), None) => MoveSite::Edge(e),
                (None, Some(b)) => MoveSite::Black { black: b, across },
                _ => return Err(parse_err("give either --edge or --black with --across")),
            };
            let out = local_move(&chart, kind, &site).map_err(semantic)?;
            Ok(Output::ok(doc(Payload::Chart(out))))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.text.as_bytes());
            let _ = stdout.flush();
            ExitCode::from(out.failed as u8)
        }
        Err(Failure::Semantic(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Parse(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
