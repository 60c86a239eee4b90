//! Batch front end behind the `kuroda` binary.
//!
//! Exit codes: 0 pass, 1 a checked assertion failed, 2 usage or config
//! error, 3 precondition error raised by a computation.

pub mod config;
mod verify;

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::error::{Error, Result};
use crate::intersect::{graded_intersection, kuroda_intersection_basis, GradedIntersectionReport};
use crate::kuroda::{check_star, check_starstar, implication_scan, ScanReport};
use crate::lattice::IntMatrix;
use crate::laurent::{ExponentVector, Field};
use crate::monoid::{hilbert_basis, intersection_generators, SubalgebraGens};
pub use config::Config;
pub use verify::VERIFY_IDS;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Largest degree bound accepted by `--dmax`.
pub const MAX_DMAX: i64 = 24;
/// Largest entry bound accepted by `scan`.
pub const MAX_SCAN_BOUND: i64 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "kuroda",
    version,
    about = "Exact checks for Kuroda-type subalgebras"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// JSON instance config.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Degree bound.
    #[arg(long, global = true)]
    pub dmax: Option<i64>,
    /// Coefficient field: Q, Fp:<p> or F<p>.
    #[arg(long, global = true)]
    pub field: Option<String>,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Write the report table to this path and bases to `<path>.basis.txt`.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Entry or box bound for scans and coset checks.
    #[arg(long, global = true)]
    pub bound: Option<i64>,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Print conditions (*)/(**), det T and the ratios ξ.
    CheckConditions,
    /// Run one named check (or `all`).
    Verify { id: String },
    /// Hilbert basis of `u` and the generators of K(M) ∩ K[X].
    Hilbert,
    /// Graded intersection of `gens_a`, `gens_b`, or K[π] ∩ K[X] for an instance.
    Intersect,
    /// Exhaustive scan of δ boxes for the condition ⟹ det T ≠ 0 implication.
    Scan {
        /// 3 or 4; both when omitted.
        #[arg(long)]
        n: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    /// Reported without an assertion.
    Reported,
}

impl Outcome {
    /// `1` for a failed assertion, `0` otherwise.
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Fail => 1,
            Outcome::Pass | Outcome::Reported => 0,
        }
    }
}

/// A rendered command result.
#[derive(Clone, Debug)]
pub struct Report {
    pub header: Vec<(String, String)>,
    pub lines: Vec<String>,
    pub table: Option<Vec<Vec<String>>>,
    pub basis: Option<String>,
    pub table_on_stdout: bool,
    pub outcome: Outcome,
}

impl Report {
    fn new(outcome: Outcome) -> Self {
        Report {
            header: Vec::new(),
            lines: Vec::new(),
            table: None,
            basis: None,
            table_on_stdout: true,
            outcome,
        }
    }

    fn header_text(&self) -> String {
        let mut s = format!("# kuroda {VERSION}\n");
        for (k, v) in &self.header {
            let _ = writeln!(s, "# {k}: {v}");
        }
        s
    }

    fn table_text(&self) -> String {
        self.table
            .iter()
            .flatten()
            .map(|row| row.join("\t") + "\n")
            .collect()
    }

    pub fn render(&self) -> String {
        let mut s = self.header_text();
        for l in &self.lines {
            s.push_str(l);
            s.push('\n');
        }
        if self.table_on_stdout {
            s.push_str(&self.table_text());
        }
        let verdict = match self.outcome {
            Outcome::Pass => "PASS",
            Outcome::Fail => "FAIL",
            Outcome::Reported => "REPORTED (no assertion)",
        };
        let _ = writeln!(s, "result: {verdict}");
        s
    }

    fn write_files(&self, out: &PathBuf) -> Result<()> {
        let io = |e: std::io::Error| Error::Usage(format!("cannot write {}: {e}", out.display()));
        let body = match &self.table {
            Some(_) => self.header_text() + &self.table_text(),
            None => self.render(),
        };
        std::fs::write(out, body).map_err(io)?;
        if let Some(b) = &self.basis {
            let mut p = out.clone().into_os_string();
            p.push(".basis.txt");
            std::fs::write(PathBuf::from(p), b).map_err(io)?;
        }
        Ok(())
    }
}

/// Shared state handed to every command.
pub(crate) struct Context {
    pub config: Config,
    pub config_label: String,
    pub field_flag: Option<String>,
    pub dmax: Option<i64>,
    pub seed: u64,
    pub bound: Option<i64>,
}

impl Context {
    pub fn field(&self) -> Result<Field> {
        self.config.field(self.field_flag.as_deref())
    }

    pub fn dmax_or(&self, default: i64) -> Result<i64> {
        let d = self.dmax.unwrap_or(default);
        if !(0..=MAX_DMAX).contains(&d) {
            return Err(Error::Usage(format!("--dmax {d} outside 0..={MAX_DMAX}")));
        }
        Ok(d)
    }

    pub fn bound_or(&self, default: i64) -> Result<i64> {
        let b = self.bound.unwrap_or(default);
        if b < 0 {
            return Err(Error::Usage(format!("--bound {b} must be ≥ 0")));
        }
        Ok(b)
    }

    pub fn report(&self, command: &str, outcome: Outcome) -> Report {
        let mut r = Report::new(outcome);
        r.header.push(("command".into(), command.into()));
        r.header.push(("config".into(), self.config_label.clone()));
        r
    }
}

/// `X1^2 X3` style name of a monomial; `1` for the zero vector.
pub fn monomial_name(e: &ExponentVector) -> String {
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &a)| a != 0)
        .map(|(i, &a)| match a {
            1 => format!("X{}", i + 1),
            _ => format!("X{}^{a}", i + 1),
        })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" ")
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Usage(_) | Error::Parse(_) | Error::Validation(_) | Error::Shape(_) => 2,
        Error::Singular(_)
        | Error::Lineality { .. }
        | Error::Dependent { .. }
        | Error::Condition(_)
        | Error::Grading(_)
        | Error::Precondition(_) => 3,
    }
}

/// Parses arguments, runs the command, prints the report and returns the
/// process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(report) => {
            print!("{}", report.render());
            if let Some(out) = &cli.out {
                if let Err(e) = report.write_files(out) {
                    eprintln!("error: {e}");
                    return 2;
                }
            }
            report.outcome.exit_code()
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

/// Runs a parsed command and returns its report.
pub fn execute(cli: &RunConfig) -> Result<Report> {
    if let Some(j) = cli.jobs {
        if j == 0 {
            return Err(Error::Usage("--jobs must be ≥ 1".into()));
        }
        // a second initialisation in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build_global();
    }
    let (config, config_label) = match &cli.config {
        Some(p) => {
            let c = Config::load(p)?;
            let label = c.to_json();
            (c, label)
        }
        None => (Config::default(), "(none)".to_string()),
    };
    let ctx = Context {
        config,
        config_label,
        field_flag: cli.field.clone(),
        dmax: cli.dmax,
        seed: cli.seed,
        bound: cli.bound,
    };
    match &cli.command {
        Command::CheckConditions => check_conditions(&ctx),
        Command::Verify { id } => verify::run(&ctx, id),
        Command::Hilbert => hilbert(&ctx),
        Command::Intersect => intersect(&ctx),
        Command::Scan { n } => scan(&ctx, *n),
    }
}

fn check_conditions(ctx: &Context) -> Result<Report> {
    if !ctx.config.has_instance() {
        return Err(Error::Usage(
            "check-conditions needs --config with delta".into(),
        ));
    }
    let field = ctx.field()?;
    let inst = ctx.config.instance(field)?;
    let mut r = ctx.report("check-conditions", Outcome::Reported);
    r.header.push(("field".into(), field.to_string()));
    r.lines.push(format!("n\t{}", inst.n()));
    r.lines.push(format!("T\t{}", inst.t_matrix()));
    r.lines.push(format!("det_T\t{}", inst.det_t()));
    if inst.is_three_variable() {
        let c = check_starstar(&inst)?;
        r.lines.push(format!(
            "condition\t(**)\nvalue\t{}\nholds\t{}",
            c.value, c.holds
        ));
    } else {
        let xi = inst.xi()?;
        for (i, x) in xi.iter().enumerate() {
            r.lines.push(format!("xi_{}\t{x}", i + 1));
        }
        if inst.n() == 4 {
            let c = check_star(&inst)?;
            r.lines.push(format!(
                "condition\t(*)\nvalue\t{}\nholds\t{}",
                c.value, c.holds
            ));
        }
    }
    for (i, p) in inst.pi().iter().enumerate() {
        r.lines.push(format!("pi_{}\t{p}", i + 1));
    }
    Ok(r)
}

fn hilbert(ctx: &Context) -> Result<Report> {
    let u = ctx
        .config
        .u
        .as_ref()
        .ok_or_else(|| Error::Usage("hilbert needs --config with u".into()))?;
    let nvars = u.first().map_or(0, Vec::len);
    let gens = SubalgebraGens::from_rows(nvars, u)?;
    let m = IntMatrix::from_rows(u)?;
    let hb = hilbert_basis(&m)?;
    let exps = intersection_generators(&gens)?;
    let mut r = ctx.report("hilbert", Outcome::Reported);
    r.lines.push(format!("U\t{m}"));
    r.lines
        .push(format!("hilbert_basis_size\t{}", hb.elements.len()));
    for b in &hb.elements {
        r.lines.push(format!("beta\t{b:?}"));
    }
    for e in &exps {
        r.lines.push(format!("generator\t{}", monomial_name(e)));
    }
    Ok(r)
}

pub(crate) fn intersection_table(report: &GradedIntersectionReport) -> (Vec<Vec<String>>, String) {
    let mut table = vec![vec![
        "degree".to_string(),
        "ambient_dim_a".into(),
        "ambient_dim_b".into(),
        "intersection_dim".into(),
        "new_generators".into(),
    ]];
    let mut basis = String::new();
    for s in &report.slices {
        let new = report
            .new_generators
            .iter()
            .find(|(d, _)| *d == s.degree)
            .map_or(0, |(_, k)| *k);
        table.push(vec![
            s.degree.to_string(),
            s.dim_a.to_string(),
            s.dim_b.to_string(),
            s.dim().to_string(),
            new.to_string(),
        ]);
        for p in &s.in_x {
            let _ = writeln!(basis, "{}\t{p}", s.degree);
        }
    }
    (table, basis)
}

fn intersect(ctx: &Context) -> Result<Report> {
    let field = ctx.field()?;
    let dmax = ctx.dmax_or(8)?;
    let (report, what) = match ctx.config.generator_sets(field)? {
        Some((a, b, w)) => (graded_intersection(&a, &b, &w, dmax)?, "gens_a ∩ gens_b"),
        None if ctx.config.has_instance() => {
            let inst = ctx.config.instance(field)?;
            (kuroda_intersection_basis(&inst, dmax)?, "K[pi] ∩ K[X]")
        }
        None => {
            return Err(Error::Usage(
                "intersect needs gens_a/gens_b/weights or an instance in --config".into(),
            ))
        }
    };
    let mut r = ctx.report("intersect", Outcome::Reported);
    r.header.push(("field".into(), field.to_string()));
    r.header.push(("bounds".into(), format!("dmax={dmax}")));
    r.header.push(("algebra".into(), what.into()));
    r.header.push((
        "note".into(),
        "new generators are counted only up to dmax".into(),
    ));
    let (table, basis) = intersection_table(&report);
    r.table = Some(table);
    r.basis = Some(basis);
    Ok(r)
}

fn scan_lines(r: &mut Report, s: &ScanReport) {
    r.lines.push(format!(
        "n={}\tbound={}\tinstances={}\tviolations={}\tconverse_witnesses={}",
        s.n,
        s.bound,
        s.instances,
        s.violations.len(),
        s.converse.len()
    ));
    for e in &s.violations {
        r.lines.push(format!(
            "violation\t{:?}\tvalue={}\tdet={}",
            e.delta, e.value, e.det
        ));
    }
}

fn scan(ctx: &Context, n: Option<usize>) -> Result<Report> {
    let ns: Vec<usize> = match n {
        Some(n) => vec![n],
        None => vec![3, 4],
    };
    let mut r = ctx.report("scan", Outcome::Pass);
    let mut table = vec![vec![
        "n".to_string(),
        "delta".into(),
        "value".into(),
        "det".into(),
        "kind".into(),
    ]];
    let mut bounds = Vec::new();
    for n in ns {
        let default = if n == 3 { 4 } else { 2 };
        let b = ctx.bound_or(default)?;
        if !(1..=MAX_SCAN_BOUND).contains(&b) {
            return Err(Error::Usage(format!(
                "scan bound {b} outside 1..={MAX_SCAN_BOUND}"
            )));
        }
        bounds.push(format!("n={n}:B={b}"));
        let s = implication_scan(n, b)?;
        scan_lines(&mut r, &s);
        if !s.violations.is_empty() {
            r.outcome = Outcome::Fail;
        }
        for (kind, list) in [("violation", &s.violations), ("converse", &s.converse)] {
            for e in list.iter() {
                table.push(vec![
                    n.to_string(),
                    format!("{:?}", e.delta),
                    e.value.to_string(),
                    e.det.to_string(),
                    kind.into(),
                ]);
            }
        }
    }
    r.header.push(("bounds".into(), bounds.join(" ")));
    r.table = Some(table);
    r.table_on_stdout = false;
    r.lines
        .push("(individual witnesses are written to --out)".into());
    Ok(r)
}
