//! Command-line front end: classify spaces, run the theorem harness, draw
//! class posets and enumerate small spaces.

pub mod doc;
pub mod report;

use std::ffi::OsString;
use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fintop::enumerate::{self, Finding, Kind};
use fintop::{AxiomId, Error, Mode};
use serde::Serialize;
use serde_json::{json, Value};

use doc::SpaceDoc;

pub const EXIT_OK: i32 = 0;
pub const EXIT_REFUTED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INVALID: i32 = 3;

/// A failed command: exit code plus an error document.
#[derive(Clone, Debug)]
pub struct Failure {
    pub code: i32,
    pub document: Value,
}

impl Failure {
    pub fn usage(message: String) -> Self {
        Failure { code: EXIT_USAGE, document: json!({ "error": "usage", "message": message }) }
    }

    pub fn invalid(e: Error) -> Self {
        let mut document = json!({ "error": doc::error_code(&e), "message": e.to_string() });
        if let Some(w) = doc::error_witness(&e) {
            document["witness"] = w;
        }
        Failure { code: EXIT_INVALID, document }
    }
}

#[derive(Parser, Debug)]
#[command(name = "fintop", version, about = "Separation axioms and dynamics on finite topological spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify a space given as a JSON document.
    Classify(ClassifyArgs),
    /// Verify theorems over every space up to a size.
    Verify(VerifyArgs),
    /// Implication matrix between axioms.
    Implications(ImplicationArgs),
    /// DOT diagram of the class poset.
    Hasse(InputArgs),
    /// Count or list all labeled topologies on n points.
    Enumerate(EnumerateArgs),
    /// List the theorem catalog.
    Theorems,
}

#[derive(Args, Debug)]
struct InputArgs {
    /// Input file; standard input when absent or "-".
    input: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Def,
    Char,
    Both,
}

impl ModeArg {
    fn modes(self) -> Vec<Mode> {
        match self {
            ModeArg::Def => vec![Mode::Definitional],
            ModeArg::Char => vec![Mode::Characterized],
            ModeArg::Both => vec![Mode::Definitional, Mode::Characterized],
        }
    }
}

#[derive(Args, Debug)]
struct ClassifyArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value = "both")]
    mode: ModeArg,
    /// Comma-separated axiom names; all when absent.
    #[arg(long, value_delimiter = ',')]
    axioms: Option<Vec<String>>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// A theorem id, "all" for every claim, or "probes" for every probe.
    theorem: String,
    #[arg(long, default_value_t = 5)]
    n_max: usize,
    /// Worker threads; defaults to the number of cores.
    #[arg(long)]
    jobs: Option<usize>,
    /// Include elapsed time per finding.
    #[arg(long)]
    timings: bool,
}

#[derive(Args, Debug)]
struct ImplicationArgs {
    #[arg(long, default_value_t = 5)]
    n_max: usize,
    #[arg(long, value_delimiter = ',')]
    axioms: Option<Vec<String>>,
    #[arg(long, value_enum, default_value = "def")]
    mode: ModeArg,
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    n: usize,
    /// Print only the count (default).
    #[arg(long, conflicts_with = "emit")]
    count_only: bool,
    /// Stream every space as one JSON document per line.
    #[arg(long)]
    emit: bool,
    #[arg(long)]
    jobs: Option<usize>,
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// JSON with sorted keys, two-space indentation and a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    // serde_json maps are ordered by key
    let v = serde_json::to_value(value).expect("serializable");
    let mut s = serde_json::to_string_pretty(&v).expect("serializable");
    s.push('\n');
    s
}

fn read_input(input: &InputArgs) -> Result<String, Failure> {
    let mut text = String::new();
    match &input.input {
        Some(p) if p.as_os_str() != "-" => {
            text = std::fs::read_to_string(p).map_err(|e| Failure::usage(format!("{}: {e}", p.display())))?;
        }
        _ => {
            std::io::stdin().read_to_string(&mut text).map_err(|e| Failure::usage(format!("stdin: {e}")))?;
        }
    }
    Ok(text)
}

fn parse_axioms(names: &Option<Vec<String>>) -> Result<Vec<AxiomId>, Failure> {
    match names {
        None => Ok(AxiomId::ALL.to_vec()),
        Some(list) => list.iter().map(|s| s.trim().parse::<AxiomId>().map_err(Failure::usage)).collect(),
    }
}

fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, Failure> {
    match jobs {
        None => Ok(f()),
        Some(0) => Err(Failure::usage("--jobs must be positive".into())),
        Some(j) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(j)
                .build()
                .map_err(|e| Failure::usage(format!("thread pool: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

fn size_error(e: Error) -> Failure {
    Failure { code: EXIT_USAGE, document: json!({ "error": doc::error_code(&e), "message": e.to_string() }) }
}

#[derive(Serialize)]
struct VerifyReport {
    n_max: usize,
    findings: Vec<Finding>,
    verified: usize,
    refuted: usize,
}

fn cmd_verify(args: &VerifyArgs) -> Result<Outcome, Failure> {
    let selected: Vec<_> = match args.theorem.as_str() {
        "all" => enumerate::theorems().iter().filter(|t| t.kind == Kind::Claim).collect(),
        "probes" => enumerate::theorems().iter().filter(|t| t.kind == Kind::Probe).collect(),
        id => match enumerate::theorem(id) {
            Some(t) => vec![t],
            None => return Err(Failure::usage(format!("unknown theorem {id:?}"))),
        },
    };
    let findings = with_jobs(args.jobs, || {
        selected.iter().map(|t| enumerate::verify(t, args.n_max)).collect::<Result<Vec<_>, _>>()
    })?
    .map_err(size_error)?;
    let findings: Vec<Finding> = findings
        .into_iter()
        .map(|mut f| {
            if !args.timings {
                f.elapsed_ms = None;
            }
            f
        })
        .collect();
    let refuted = findings.iter().filter(|f| !f.is_verified()).count();
    let report = VerifyReport { n_max: args.n_max, verified: findings.len() - refuted, refuted, findings };
    Ok(Outcome {
        code: if refuted > 0 { EXIT_REFUTED } else { EXIT_OK },
        stdout: to_json(&report),
        stderr: String::new(),
    })
}

fn cmd_enumerate(args: &EnumerateArgs) -> Result<Outcome, Failure> {
    if args.n > enumerate::MAX_ENUM_POINTS {
        return Err(size_error(Error::SizeTooLarge(args.n)));
    }
    let stdout = if args.emit {
        let lines = with_jobs(args.jobs, || {
            enumerate::par_map_preorders(args.n, |p| {
                let doc = SpaceDoc::from_topology(&fintop::alexandrov(&p));
                serde_json::to_string(&doc).expect("serializable")
            })
        })?
        .map_err(size_error)?;
        let mut s = lines.join("\n");
        s.push('\n');
        s
    } else {
        let count = with_jobs(args.jobs, || enumerate::count_topologies(args.n))?.map_err(size_error)?;
        to_json(&json!({ "points": args.n, "count": count }))
    };
    Ok(Outcome { code: EXIT_OK, stdout, stderr: String::new() })
}

fn dispatch(cli: Cli) -> Result<Outcome, Failure> {
    let ok = |stdout| Ok(Outcome { code: EXIT_OK, stdout, stderr: String::new() });
    match cli.command {
        Command::Classify(a) => {
            let axioms = parse_axioms(&a.axioms)?;
            let space = SpaceDoc::parse(&read_input(&a.input)?)?;
            ok(to_json(&report::classify(&space, &a.mode.modes(), &axioms)))
        }
        Command::Hasse(a) => {
            let space = SpaceDoc::parse(&read_input(&a)?)?;
            ok(report::hasse_dot(&space))
        }
        Command::Verify(a) => cmd_verify(&a),
        Command::Implications(a) => {
            let axioms = parse_axioms(&a.axioms)?;
            let modes = a.mode.modes();
            if modes.len() != 1 {
                return Err(Failure::usage("implications take a single mode".into()));
            }
            let m =
                with_jobs(a.jobs, || enumerate::implication_matrix(a.n_max, &axioms, modes[0]))?.map_err(size_error)?;
            ok(to_json(&json!({ "n_max": a.n_max, "mode": modes[0], "entries": m })))
        }
        Command::Enumerate(a) => cmd_enumerate(&a),
        Command::Theorems => {
            let list: Vec<Value> = enumerate::theorems()
                .iter()
                .map(|t| json!({ "id": t.id, "description": t.description, "arity": t.arity, "kind": t.kind }))
                .collect();
            ok(to_json(&list))
        }
    }
}

/// Runs one invocation without touching the process streams.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match dispatch(cli) {
        Ok(o) => o,
        Err(f) => {
            let message = f.document["message"].as_str().unwrap_or_default().to_string();
            Outcome { code: f.code, stdout: to_json(&f.document), stderr: format!("fintop: {message}\n") }
        }
    }
}
