//! The `homhopf` command line: check structure-constant files, build derived
//! objects, run verification suites and export catalog entries.
//!
//! Exit codes: 0 when everything checked passes, 1 when a check or suite
//! fails (or a construction's hypotheses fail), 2 for unreadable input or
//! bad usage.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use homhopf::catalog::{lookup, CatalogEntry, CATALOG_NAMES};
use homhopf::constructions::{
    bicrossproduct, canonical_cocycles, co_opposite, cocycle_twist, drinfeld_double, drinfeld_double_tilde, dual,
    dual_pair_double, evaluation_pairing, heisenberg_double, opposite, self_bicross, Precheck,
};
use homhopf::exactlin::format_scalar;
use homhopf::format::{self, dual_labels, pair_labels, AlgebraFile};
use homhopf::structures::{
    check_hom_algebra, check_hom_bialgebra, check_hom_coalgebra, check_hopf_suite, check_quasitriangular, CheckReport,
    Side,
};
use homhopf::verify::{run_suite, SuiteKind, SuiteResult};
use homhopf::HomError;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "homhopf", version, about = "Exact checks and constructions for finite-dimensional Hom-Hopf algebras")]
pub struct Cli {
    /// Worker threads for basis sweeps (results do not depend on it).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run the axiom checkers up to the given level.
    Check {
        /// File path or catalog name such as `cyclic:3`.
        input: String,
        #[arg(long, value_enum, default_value_t = Level::Hopf)]
        level: Level,
        /// Write the JSON report document here.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Build a derived object and write it in the file format.
    Construct {
        #[arg(value_enum)]
        kind: Kind,
        input: String,
        /// Cocycle file for `twist`.
        #[arg(long)]
        cocycle: Option<String>,
        /// Side of the cocycle, overriding the file.
        #[arg(long, value_enum)]
        side: Option<SideArg>,
        /// Output path; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Skip precondition checks; the output is then unvalidated.
        #[arg(long)]
        force: bool,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Run a verification suite.
    Verify {
        /// One of bicrossproduct, self-bicross, double-r-matrix,
        /// heisenberg-twist, dual-pair, comodule-algebra.
        suite: String,
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// List catalog entries or export one.
    Catalog {
        #[command(subcommand)]
        action: Option<CatalogAction>,
    },
}

#[derive(Subcommand, Debug)]
pub enum CatalogAction {
    List,
    Export {
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Level {
    Algebra,
    Coalgebra,
    Bialgebra,
    Hopf,
    Quasitriangular,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Dual,
    Op,
    CoOp,
    Double,
    DoubleTilde,
    Heisenberg,
    Bicross,
    SelfBicross,
    DualPairDouble,
    Twist,
    Sigma,
    Eta,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
}

impl From<SideArg> for Side {
    fn from(s: SideArg) -> Side {
        match s {
            SideArg::Left => Side::Left,
            SideArg::Right => Side::Right,
        }
    }
}

/// An input resolved from a path or a catalog name.
pub struct Input {
    pub source: String,
    pub text: String,
    pub file: AlgebraFile,
    pub entry: Option<CatalogEntry>,
}

/// Reads `spec` as a file when one exists there, otherwise as a catalog name.
pub fn load_input(spec: &str) -> Result<Input, String> {
    let path = Path::new(spec);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{spec}: {e}"))?;
        let file = format::parse(&text).map_err(|e| format!("{spec}: {e}"))?;
        return Ok(Input { source: spec.to_string(), text, file, entry: None });
    }
    match lookup(spec) {
        Ok(entry) => {
            let file = AlgebraFile::from_entry(&entry);
            Ok(Input { source: spec.to_string(), text: format::serialize(&file), file, entry: Some(entry) })
        }
        Err(e) => Err(format!("{spec}: no such file, and not a catalog entry ({e})")),
    }
}

#[derive(Serialize)]
struct InputDigest {
    source: String,
    sha256: String,
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum ResultItem {
    Check { name: String, passed: bool, report: CheckReport },
    Suite(SuiteResult),
    Output { path: String, sha256: String },
}

#[derive(Serialize)]
struct ReportDocument {
    tool: &'static str,
    version: &'static str,
    schema_version: u32,
    command: String,
    inputs: Vec<InputDigest>,
    results: Vec<ResultItem>,
    passed: bool,
    exit_status: i32,
    /// SHA-256 of this document with `digest` empty and wall times zeroed.
    digest: String,
}

fn zero_wall_times(v: &mut serde_json::Value) {
    match v {
        serde_json::Value::Object(map) => {
            for (k, val) in map.iter_mut() {
                if k == "wall_time" {
                    *val = serde_json::Value::from(0);
                } else {
                    zero_wall_times(val);
                }
            }
        }
        serde_json::Value::Array(items) => items.iter_mut().for_each(zero_wall_times),
        _ => {}
    }
}

fn write_report(
    path: &Path,
    command: &str,
    inputs: &[&Input],
    results: Vec<ResultItem>,
    exit_status: i32,
) -> Result<(), String> {
    let mut doc = ReportDocument {
        tool: "homhopf",
        version: env!("CARGO_PKG_VERSION"),
        schema_version: format::SCHEMA_VERSION,
        command: command.to_string(),
        inputs: inputs
            .iter()
            .map(|i| InputDigest { source: i.source.clone(), sha256: format::digest(&i.text) })
            .collect(),
        results,
        passed: exit_status == EXIT_PASS,
        exit_status,
        digest: String::new(),
    };
    let mut canonical = serde_json::to_value(&doc).map_err(|e| e.to_string())?;
    zero_wall_times(&mut canonical);
    doc.digest = format::digest(&canonical.to_string());
    let text = serde_json::to_string_pretty(&doc).map_err(|e| e.to_string())?;
    std::fs::write(path, text + "\n").map_err(|e| format!("{}: {e}", path.display()))
}

fn print_report(out: &mut dyn Write, title: &str, r: &CheckReport) {
    let _ = writeln!(out, "{title}: {}", r.summary());
    for c in &r.checks {
        let _ = writeln!(out, "  [{}] {}", if c.passed { "ok" } else { "FAIL" }, c.axiom);
        if let Some(w) = &c.witness {
            let fmt = |v: &[homhopf::exactlin::Scalar]| v.iter().map(format_scalar).collect::<Vec<_>>().join(" ");
            let _ = writeln!(out, "      witness at {:?}", w.index);
            let _ = writeln!(out, "        lhs: {}", fmt(&w.lhs));
            let _ = writeln!(out, "        rhs: {}", fmt(&w.rhs));
        }
    }
    for n in &r.notes {
        let _ = writeln!(out, "  note: {n}");
    }
}

/// Parses arguments and runs the command, returning the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_PASS,
                _ => EXIT_INPUT,
            };
            let _ = if code == EXIT_PASS { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            let _ = writeln!(err, "--jobs must be positive");
            return EXIT_INPUT;
        }
        // Only the first configuration in a process takes effect.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
    let result = match cli.command {
        Command::Check { input, level, report } => cmd_check(&input, level, report.as_deref(), out),
        Command::Construct { kind, input, cocycle, side, out: path, force, report } => {
            cmd_construct(kind, &input, cocycle.as_deref(), side, path.as_deref(), force, report.as_deref(), out)
        }
        Command::Verify { suite, algebra, report } => cmd_verify(&suite, &algebra, report.as_deref(), out),
        Command::Catalog { action } => cmd_catalog(action, out),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
    }
}

fn verdict(passed: bool) -> i32 {
    if passed {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

pub fn cmd_check(spec: &str, level: Level, report: Option<&Path>, out: &mut dyn Write) -> Result<i32, String> {
    let input = load_input(spec)?;
    let structure = input.file.structure().map_err(|e| e.to_string())?;
    let need_bi =
        || structure.bialgebra().ok_or_else(|| format!("{spec}: level {level:?} needs comul and counit blocks"));
    let mut r = CheckReport::new();
    match level {
        Level::Algebra => r.extend(check_hom_algebra(structure.algebra())),
        Level::Coalgebra => r.extend(check_hom_coalgebra(need_bi()?.coalgebra())),
        Level::Bialgebra => {
            let b = need_bi()?;
            r.extend_prefixed("algebra", check_hom_algebra(b.algebra()));
            r.extend_prefixed("coalgebra", check_hom_coalgebra(b.coalgebra()));
            r.extend_prefixed("bialgebra", check_hom_bialgebra(b));
        }
        Level::Hopf => {
            let h = structure.hopf().ok_or_else(|| format!("{spec}: level hopf needs an antipode block"))?;
            r.extend(check_hopf_suite(h));
        }
        Level::Quasitriangular => {
            let b = need_bi()?;
            let rm = input
                .file
                .r_matrix()
                .map_err(|e| e.to_string())?
                .ok_or_else(|| format!("{spec}: level quasitriangular needs an rmatrix block"))?;
            r.extend_prefixed("algebra", check_hom_algebra(b.algebra()));
            r.extend_prefixed("coalgebra", check_hom_coalgebra(b.coalgebra()));
            r.extend_prefixed("bialgebra", check_hom_bialgebra(b));
            r.extend_prefixed("quasitriangular", check_quasitriangular(b, &rm));
        }
    }
    let name = format!("{level:?}").to_lowercase();
    print_report(out, &format!("{} ({name})", input.file.name), &r);
    let code = verdict(r.passed());
    if let Some(path) = report {
        let item = ResultItem::Check { name, passed: r.passed(), report: r };
        write_report(path, "check", &[&input], vec![item], code)?;
    }
    Ok(code)
}

/// Outcome of a construction: the file, or a failed precondition report.
enum Built {
    File(AlgebraFile),
    Rejected(String, CheckReport),
}

fn built_from(result: homhopf::Result<AlgebraFile>) -> Result<Built, String> {
    match result {
        Ok(f) => Ok(Built::File(f)),
        Err(e) => match e.report() {
            Some(r) => Ok(Built::Rejected(e.to_string(), r.clone())),
            None => match e {
                HomError::Singular { .. } | HomError::NotAMorphism(_) => {
                    Ok(Built::Rejected(e.to_string(), CheckReport::new()))
                }
                other => Err(other.to_string()),
            },
        },
    }
}

#[allow(clippy::too_many_arguments)]
pub fn cmd_construct(
    kind: Kind,
    spec: &str,
    cocycle: Option<&str>,
    side: Option<SideArg>,
    path: Option<&Path>,
    force: bool,
    report: Option<&Path>,
    out: &mut dyn Write,
) -> Result<i32, String> {
    let input = load_input(spec)?;
    let pre = if force { Precheck::Skip } else { Precheck::Verify };
    let f = &input.file;
    let name = f.name.clone();
    let basis = f.basis.clone();
    let hopf = || f.hopf().map_err(|e| e.to_string());
    let mut cocycle_input = None;
    let result: homhopf::Result<AlgebraFile> = match kind {
        Kind::Dual => {
            dual(&hopf()?).map(|d| AlgebraFile::from_hopf(&format!("dual({name})"), Some(dual_labels(&basis)), &d))
        }
        Kind::Op => Ok(AlgebraFile::from_hopf(&format!("op({name})"), Some(basis.clone()), &opposite(&hopf()?))),
        Kind::CoOp => Ok(AlgebraFile::from_hopf(&format!("coop({name})"), Some(basis.clone()), &co_opposite(&hopf()?))),
        Kind::Double => drinfeld_double(&hopf()?).map(|d| {
            AlgebraFile::from_hopf(&format!("double({name})"), Some(pair_labels(&basis, "|", &dual_labels(&basis))), &d)
        }),
        Kind::DoubleTilde => drinfeld_double_tilde(&hopf()?).map(|d| {
            let labels = pair_labels(&dual_labels(&basis), "|", &basis);
            AlgebraFile::from_bialgebra(&format!("double_tilde({name})"), Some(labels), &d)
        }),
        Kind::Heisenberg => heisenberg_double(&hopf()?).map(|d| {
            let labels = pair_labels(&basis, ".", &dual_labels(&basis));
            AlgebraFile::from_algebra(&format!("heisenberg({name})"), Some(labels), &d)
        }),
        Kind::Bicross => {
            let h = hopf()?;
            let b = f
                .bicross()
                .map_err(|e| e.to_string())?
                .ok_or_else(|| format!("{spec}: bicross needs action, coaction and actor blocks"))?;
            bicrossproduct(&h, &b.actor, &b.action, &b.coaction, pre).map(|d| {
                let labels = pair_labels(&basis, ".", &b.actor_basis);
                AlgebraFile::from_hopf(&format!("bicross({name})"), Some(labels), &d)
            })
        }
        Kind::SelfBicross => self_bicross(&hopf()?, pre).map(|d| {
            AlgebraFile::from_hopf(&format!("self_bicross({name})"), Some(pair_labels(&basis, "x", &basis)), &d)
        }),
        Kind::DualPairDouble => {
            let h = hopf()?;
            evaluation_pairing(&h).and_then(|p| dual_pair_double(&p, pre)).map(|d| {
                let labels = pair_labels(&basis, "|", &dual_labels(&basis));
                AlgebraFile::from_hopf(&format!("dual_pair_double({name})"), Some(labels), &d.hopf)
            })
        }
        Kind::Sigma | Kind::Eta => canonical_cocycles(&hopf()?).map(|(s, e)| {
            let (label, c) = if kind == Kind::Sigma { ("sigma", s) } else { ("eta", e) };
            AlgebraFile::from_cocycle(&format!("{label}({name})"), &c)
        }),
        Kind::Twist => {
            let structure = f.structure().map_err(|e| e.to_string())?;
            let b = structure.bialgebra().ok_or_else(|| format!("{spec}: twist needs a Hom-bialgebra"))?.clone();
            let cspec = cocycle.ok_or("twist needs --cocycle")?;
            let cin = load_input(cspec)?;
            let mut sigma = cin
                .file
                .cocycle()
                .map_err(|e| format!("{cspec}: {e}"))?
                .ok_or_else(|| format!("{cspec}: no cocycle block"))?;
            if let Some(s) = side {
                sigma.side = s.into();
            }
            cocycle_input = Some(cin);
            cocycle_twist(&b, &sigma, pre)
                .map(|t| AlgebraFile::from_algebra(&format!("twist({name})"), Some(basis.clone()), &t))
        }
    };
    let mut inputs = vec![&input];
    if let Some(c) = &cocycle_input {
        inputs.push(c);
    }
    match built_from(result)? {
        Built::File(file) => {
            let text = format::serialize(&file);
            let target = match path {
                Some(p) => {
                    std::fs::write(p, &text).map_err(|e| format!("{}: {e}", p.display()))?;
                    let _ = writeln!(out, "wrote {} (dimension {}) to {}", file.name, file.dim, p.display());
                    p.display().to_string()
                }
                None => {
                    let _ = write!(out, "{text}");
                    "-".to_string()
                }
            };
            if let Some(rp) = report {
                let item = ResultItem::Output { path: target, sha256: format::digest(&text) };
                write_report(rp, "construct", &inputs, vec![item], EXIT_PASS)?;
            }
            Ok(EXIT_PASS)
        }
        Built::Rejected(msg, r) => {
            let _ = writeln!(out, "construction rejected: {msg}");
            print_report(out, "report", &r);
            if let Some(rp) = report {
                let item = ResultItem::Check { name: "preconditions".into(), passed: false, report: r };
                write_report(rp, "construct", &inputs, vec![item], EXIT_FAIL)?;
            }
            Ok(EXIT_FAIL)
        }
    }
}

pub fn cmd_verify(suite: &str, spec: &str, report: Option<&Path>, out: &mut dyn Write) -> Result<i32, String> {
    let kind: SuiteKind = suite.parse().map_err(|e: HomError| e.to_string())?;
    let input = load_input(spec)?;
    let entry = match &input.entry {
        Some(e) => e.clone(),
        None => input.file.to_entry().map_err(|e| e.to_string())?,
    };
    let result = run_suite(kind, &entry).map_err(|e| e.to_string())?;
    let _ = write!(out, "{result}");
    let code = verdict(result.passed);
    if let Some(path) = report {
        write_report(path, "verify", &[&input], vec![ResultItem::Suite(result)], code)?;
    }
    Ok(code)
}

pub fn cmd_catalog(action: Option<CatalogAction>, out: &mut dyn Write) -> Result<i32, String> {
    match action.unwrap_or(CatalogAction::List) {
        CatalogAction::List => {
            for n in CATALOG_NAMES {
                let _ = writeln!(out, "{n}");
            }
        }
        CatalogAction::Export { name, out: path } => {
            let entry = lookup(&name).map_err(|e| e.to_string())?;
            let text = format::serialize(&AlgebraFile::from_entry(&entry));
            match path {
                Some(p) => std::fs::write(&p, text).map_err(|e| format!("{}: {e}", p.display()))?,
                None => {
                    let _ = write!(out, "{text}");
                }
            }
        }
    }
    Ok(EXIT_PASS)
}
