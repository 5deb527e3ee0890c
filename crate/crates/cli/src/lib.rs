//! Command-line front end: `orient`, `verify`, `gen`, `oracle` and `selftest`.
//!
//! Exit codes: 0 success, 1 rejected certificate or counterexample,
//! 2 input outside a pipeline's preconditions, 3 malformed input or usage,
//! 4 internal error.

pub mod acceptance;
pub mod small_graphs;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use antimagic::generate::{generate, Family};
use antimagic::io::{parse_edge_list, write_edge_list, CertificateDocument, Meta};
use antimagic::oracle::brute_force_antimagic;
use antimagic::theorem1::{label, plan_theorem1};
use antimagic::theorem2::{antimagic_orientation_mindegree_with, MinDegreeOptions, Outcome};
use antimagic::{verify_antimagic, Error, Verdict};
use clap::{Args, Parser, Subcommand, ValueEnum};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REJECT: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_MALFORMED: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

/// Environment variable consulted when `--seed` is absent.
pub const SEED_ENV: &str = "ANTIMAGIC_SEED";

const DEFAULT_ORACLE_BUDGET: u64 = 50_000_000;

#[derive(Parser, Debug)]
#[command(
    name = "antimagic",
    version,
    about = "Antimagic orientations with machine-checked certificates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Orient and label a graph, writing a certificate.
    Orient(OrientArgs),
    /// Re-check a certificate.
    Verify {
        /// Certificate JSON file.
        path: PathBuf,
    },
    /// Generate a graph as an edge list.
    Gen(GenArgs),
    /// Decide existence by exhaustive search (at most 10 edges).
    Oracle {
        #[arg(long)]
        input: PathBuf,
        /// Maximum number of search nodes.
        #[arg(long, default_value_t = DEFAULT_ORACLE_BUDGET)]
        budget: u64,
    },
    /// Run the acceptance suite.
    Selftest,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    /// Bipartite graphs with no vertex of degree 0 or 2.
    Bipartite,
    /// Graphs of minimum degree at least 33.
    Mindegree,
}

#[derive(Args, Debug)]
struct OrientArgs {
    #[arg(long, value_enum)]
    mode: Mode,
    #[arg(long)]
    input: PathBuf,
    /// Seed for the starting cut in mindegree mode (falls back to $ANTIMAGIC_SEED).
    #[arg(long)]
    seed: Option<u64>,
    /// Certificate destination; stdout if omitted.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Mindegree mode: skip the degree check and report failures as counterexamples.
    #[arg(long = "unsafe")]
    unsafe_mode: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyName {
    Complete,
    CompleteBipartite,
    Star,
    RandomBipartite,
    NearRegular,
    Hypercube,
    TreeOfStars,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: FamilyName,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    nx: Option<usize>,
    #[arg(long)]
    ny: Option<usize>,
    #[arg(long)]
    dmax: Option<usize>,
    #[arg(long, default_value_t = 0.3)]
    leaf_prob: f64,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    centers: Option<usize>,
    #[arg(long)]
    max_leaves: Option<usize>,
    /// Falls back to $ANTIMAGIC_SEED, then 0.
    #[arg(long)]
    seed: Option<u64>,
    /// Edge-list destination; stdout if omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// A failure carrying its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: exit_code(&e),
            message: e.to_string(),
        }
    }
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Malformed(_) => EXIT_MALFORMED,
        Error::Precondition(_) | Error::NotBipartite { .. } | Error::Structural { .. } => EXIT_PRECONDITION,
        Error::Internal(_) => EXIT_INTERNAL,
    }
}

/// Runs the CLI on `args` (including the program name) with the process's
/// standard streams.
pub fn run_cli<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_cli_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// [`run_cli`] with explicit output streams.
pub fn run_cli_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_MALFORMED,
            };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Orient(args) => orient(&args, out, err),
        Command::Verify { path } => verify(&path, out),
        Command::Gen(args) => gen(&args, out),
        Command::Oracle { input, budget } => oracle(&input, budget, out),
        Command::Selftest => Ok(selftest(out)),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::new(EXIT_MALFORMED, format!("cannot read {}: {e}", path.display())))
}

fn emit(path: Option<&Path>, text: &str, out: &mut dyn Write) -> Result<(), Failure> {
    let result = match path {
        Some(p) => fs::write(p, text).map_err(|e| format!("cannot write {}: {e}", p.display())),
        None => out
            .write_all(text.as_bytes())
            .map_err(|e| format!("cannot write output: {e}")),
    };
    result.map_err(|m| Failure::new(EXIT_INTERNAL, m))
}

fn resolve_seed(flag: Option<u64>) -> Result<Option<u64>, Failure> {
    if flag.is_some() {
        return Ok(flag);
    }
    match std::env::var(SEED_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| Failure::new(EXIT_MALFORMED, format!("{SEED_ENV}={v:?} is not a u64"))),
        Err(_) => Ok(None),
    }
}

fn orient(args: &OrientArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let g = parse_edge_list(&read(&args.input)?)?;
    let seed = resolve_seed(args.seed)?;
    let (doc, code) = match args.mode {
        Mode::Bipartite => {
            let plan = plan_theorem1(&g)?;
            let cert = label(&plan)?;
            let mut meta = Meta::new("bipartite");
            meta.case = Some(plan.case.to_string());
            meta.seed = seed;
            (CertificateDocument::from_certificate(&cert, meta), EXIT_OK)
        }
        Mode::Mindegree => {
            let options = MinDegreeOptions {
                seed,
                unsafe_mode: args.unsafe_mode,
            };
            let mut meta = Meta::new("mindegree");
            meta.seed = seed;
            match antimagic_orientation_mindegree_with(&g, &options)? {
                Outcome::Accepted(cert) => (CertificateDocument::from_certificate(&cert, meta), EXIT_OK),
                Outcome::Rejected {
                    certificate,
                    violation,
                } => {
                    let _ = writeln!(
                        err,
                        "counterexample: verifier rejected the construction: {violation}"
                    );
                    meta.case = Some("counterexample".into());
                    (
                        CertificateDocument::from_certificate(&certificate, meta),
                        EXIT_REJECT,
                    )
                }
            }
        }
    };
    emit(args.output.as_deref(), &doc.to_json(), out)?;
    Ok(code)
}

fn verify(path: &Path, out: &mut dyn Write) -> Result<i32, Failure> {
    let doc = CertificateDocument::from_json(&read(path)?)?;
    let cert = doc.to_certificate()?;
    let (line, code) = match verify_antimagic(&cert) {
        Verdict::Accept => ("accept".to_string(), EXIT_OK),
        Verdict::Reject(v) => (format!("reject: {v}"), EXIT_REJECT),
    };
    emit(None, &format!("{line}\n"), out)?;
    Ok(code)
}

fn require(value: Option<usize>, flag: &str, family: FamilyName) -> Result<usize, Failure> {
    value.ok_or_else(|| {
        Failure::new(
            EXIT_MALFORMED,
            format!(
                "--{flag} is required for family {}",
                family.to_possible_value().unwrap().get_name()
            ),
        )
    })
}

fn gen(args: &GenArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let f = args.family;
    let family = match f {
        FamilyName::Complete => Family::Complete {
            n: require(args.n, "n", f)?,
        },
        FamilyName::CompleteBipartite => Family::CompleteBipartite {
            a: require(args.a, "a", f)?,
            b: require(args.b, "b", f)?,
        },
        FamilyName::Star => Family::Star {
            t: require(args.t, "t", f)?,
        },
        FamilyName::RandomBipartite => Family::RandomBipartite {
            nx: require(args.nx, "nx", f)?,
            ny: require(args.ny, "ny", f)?,
            dmax: require(args.dmax, "dmax", f)?,
            leaf_prob: args.leaf_prob,
        },
        FamilyName::NearRegular => Family::NearRegular {
            n: require(args.n, "n", f)?,
            d: require(args.d, "d", f)?,
        },
        FamilyName::Hypercube => Family::Hypercube {
            k: require(args.k, "k", f)?,
        },
        FamilyName::TreeOfStars => Family::TreeOfStars {
            centers: require(args.centers, "centers", f)?,
            max_leaves: require(args.max_leaves, "max-leaves", f)?,
        },
    };
    let seed = resolve_seed(args.seed)?.unwrap_or(0);
    let g = generate(&family, seed)?;
    emit(args.out.as_deref(), &write_edge_list(&g), out)?;
    Ok(EXIT_OK)
}

fn oracle(input: &Path, budget: u64, out: &mut dyn Write) -> Result<i32, Failure> {
    let g = parse_edge_list(&read(input)?)?;
    let result = brute_force_antimagic(&g, budget)?;
    let witness = result
        .witness
        .as_ref()
        .map(|c| CertificateDocument::from_certificate(c, Meta::new("oracle")));
    let report = serde_json::json!({
        "status": result.status,
        "exists": result.exists(),
        "explored": result.explored,
        "nodes": result.nodes,
        "witness": witness,
    });
    let text = serde_json::to_string_pretty(&report).expect("oracle report serializes") + "\n";
    emit(None, &text, out)?;
    Ok(match result.status {
        antimagic::oracle::OracleStatus::NotExists => EXIT_REJECT,
        _ => EXIT_OK,
    })
}

fn selftest(out: &mut dyn Write) -> i32 {
    let mut all = true;
    for report in acceptance::run_all() {
        all &= report.passed;
        let _ = writeln!(out, "{report}");
    }
    if all {
        EXIT_OK
    } else {
        EXIT_REJECT
    }
}
