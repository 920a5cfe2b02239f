use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use totring::check::{builtin_corpus, check_ring, load_corpus, selfcheck, CheckOptions, CorpusError, Status};
use totring::domin::{
    conjecture_check, gamma_report, gamma_upper, matrix_dominating_set, ConjectureVerdict, DomError, SolveOptions,
    DEFAULT_SOLVE_GUARD,
};
use totring::expr::parse;
use totring::graph::{dot, TotalGraph};
use totring::hamilton::{ham_cycle, verify_cycle, HamError};
use totring::report::{Config, Report};
use totring::ring::{
    make_ring_with, quotient_mod_radical, semisimple_shape, Ring, RingError, RingOptions, SemisimpleShape,
    DEFAULT_MAX_ORDER, HARD_MAX_ORDER,
};

#[derive(Parser)]
#[command(name = "totring", version, about = "Total graphs of finite rings: structure, Hamiltonian cycles, domination")]
struct Cli {
    /// Print the full JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Refuse rings with more elements than this.
    #[arg(long, global = true, env = "TOTRING_MAX_ORDER", default_value_t = DEFAULT_MAX_ORDER as u64,
          value_parser = clap::value_parser!(u64).range(1..=HARD_MAX_ORDER as u64))]
    max_order: u64,
    /// Lift the exact-solver guard and run heavy corpus entries.
    #[arg(long, global = true)]
    slow: bool,
    /// Use all cores where the computation allows it.
    #[arg(long, global = true)]
    parallel: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Ring and total-graph invariants.
    Analyze(RingArg),
    /// Graph metrics, optionally written as DOT.
    Graph {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long, value_name = "FILE")]
        dot: Option<PathBuf>,
    },
    /// Construct and verify a Hamiltonian cycle.
    Hamilton {
        #[command(flatten)]
        ring: RingArg,
        /// Write the graph with the cycle highlighted as DOT.
        #[arg(long, value_name = "FILE")]
        emit_edges: Option<PathBuf>,
    },
    /// Domination number and related sets. Defaults to --exact.
    Dominate {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long)]
        exact: bool,
        #[arg(long)]
        bound: bool,
        #[arg(long)]
        set: bool,
        #[arg(long)]
        conjecture: bool,
    },
    /// Jacobson radical and the quotient R/J.
    Quotient(RingArg),
    /// Every law on one ring.
    Check(RingArg),
    /// Whether γ meets the semisimple bound.
    Conjecture(RingArg),
    /// Every law over a corpus of rings.
    Selfcheck {
        /// One ring expression per line; defaults to the built-in corpus.
        #[arg(long, value_name = "FILE")]
        corpus: Option<PathBuf>,
    },
}

#[derive(Args)]
struct RingArg {
    /// Ring expression, e.g. "M(2,GF(3))" or "Z(4) x GF(8)" or "@table.json".
    expr: String,
}

/// Exit codes.
const FAILED: u8 = 1;
const USAGE: u8 = 2;
const GUARD: u8 = 3;

struct Failure {
    code: u8,
    message: String,
}

fn failure(code: u8, message: impl ToString) -> Failure {
    Failure { code, message: message.to_string() }
}

impl From<RingError> for Failure {
    fn from(e: RingError) -> Self {
        let code = match e {
            RingError::OrderGuardExceeded { .. } => GUARD,
            RingError::NotPrime(_)
            | RingError::InvalidSpec(_)
            | RingError::TableFormat(_)
            | RingError::TableAxiom { .. } => USAGE,
            _ => FAILED,
        };
        failure(code, e)
    }
}

impl From<DomError> for Failure {
    fn from(e: DomError) -> Self {
        match e {
            DomError::Ring(r) => r.into(),
            DomError::SolveGuardExceeded { .. } => failure(GUARD, e),
            DomError::NotLocal | DomError::ShapeUnknown | DomError::NotMatrixOverField(_) => failure(USAGE, e),
            DomError::Profile(_) => failure(FAILED, e),
        }
    }
}

impl From<HamError> for Failure {
    fn from(e: HamError) -> Self {
        match e {
            HamError::Ring(r) => r.into(),
            other => failure(FAILED, other),
        }
    }
}

struct Ctx {
    check: CheckOptions,
}

impl Ctx {
    fn solve(&self) -> SolveOptions {
        SolveOptions { guard: self.check.solve_guard, parallel: self.check.parallel }
    }

    fn ring(&self, expr: &str) -> Result<Ring, Failure> {
        let spec = parse(expr).map_err(|e| failure(USAGE, e))?;
        Ok(make_ring_with(&spec, &RingOptions { max_order: self.check.max_order })?)
    }
}

fn shape_json(ring: &Ring) -> Value {
    match semisimple_shape(ring) {
        SemisimpleShape::Known(f) => json!(f.iter().map(|&(n, q)| json!({"n": n, "q": q})).collect::<Vec<_>>()),
        SemisimpleShape::Unknown => Value::Null,
    }
}

fn labels(ring: &Ring, xs: &[usize]) -> Vec<String> {
    xs.iter().map(|&x| ring.label(x)).collect()
}

fn analyze(ctx: &Ctx, expr: &str, out: &mut Value) -> Result<u8, Failure> {
    let r = ctx.ring(expr)?;
    let m = TotalGraph::build(&r).metrics();
    *out = json!({
        "order": r.order(),
        "characteristic": r.characteristic(),
        "commutative": r.is_commutative(),
        "local": r.is_local(),
        "field": r.is_field(),
        "units": r.units().len(),
        "zsize": m.zsize,
        "radical": r.radical().len(),
        "shape": shape_json(&r),
        "connected": m.connected,
        "diameter": m.diameter,
        "regular": m.regular,
        "eulerian": m.eulerian,
        "edges": m.edges,
        "profile": m.profile,
    });
    Ok(0)
}

fn graph(ctx: &Ctx, expr: &str, dot_path: Option<&PathBuf>, out: &mut Value) -> Result<u8, Failure> {
    let r = ctx.ring(expr)?;
    let g = TotalGraph::build(&r);
    *out = serde_json::to_value(g.metrics()).unwrap();
    if let Some(path) = dot_path {
        std::fs::write(path, dot::to_dot(&g)).map_err(|e| failure(USAGE, format!("{}: {e}", path.display())))?;
        out["dot"] = json!(path.display().to_string());
    }
    Ok(0)
}

fn hamilton(ctx: &Ctx, expr: &str, emit: Option<&PathBuf>, out: &mut Value) -> Result<u8, Failure> {
    let r = ctx.ring(expr)?;
    let c = ham_cycle(&r)?;
    let verification = match verify_cycle(&r, &c.seq) {
        Ok(()) => json!({"ok": true}),
        Err(v) => json!({"ok": false, "violation": v}),
    };
    let ok = verification["ok"] == json!(true);
    *out = json!({
        "method": c.method,
        "notes": c.notes,
        "length": c.seq.len(),
        "cycle": c.labels(&r),
        "verification": verification,
    });
    if let Some(path) = emit {
        let g = TotalGraph::build(&r);
        std::fs::write(path, dot::to_dot_with_cycle(&g, Some(&c.seq)))
            .map_err(|e| failure(USAGE, format!("{}: {e}", path.display())))?;
        out["dot"] = json!(path.display().to_string());
    }
    Ok(if ok { 0 } else { FAILED })
}

fn verdict_json(r: &Ring, v: &ConjectureVerdict) -> Value {
    let mut j = serde_json::to_value(v).unwrap();
    if let ConjectureVerdict::Refuted { witness, .. } = v {
        j["witness_labels"] = json!(witness.labels(r));
    }
    j
}

struct DominateFlags {
    exact: bool,
    bound: bool,
    set: bool,
    conjecture: bool,
}

fn dominate(ctx: &Ctx, expr: &str, mut f: DominateFlags, out: &mut Value) -> Result<u8, Failure> {
    let r = ctx.ring(expr)?;
    if !(f.exact || f.bound || f.set || f.conjecture) {
        f.exact = true;
    }
    let mut code = 0;
    *out = json!({});
    if f.bound {
        out["upper_bound"] = json!(gamma_upper(&r));
    }
    if f.set {
        let d = matrix_dominating_set(&r)?;
        out["set"] = json!({
            "size": d.len(),
            "members": d.labels(&r),
            "dominates": d.dominates(&TotalGraph::build(&r)),
        });
        if out["set"]["dominates"] != json!(true) {
            code = FAILED;
        }
    }
    if f.exact {
        let rep = gamma_report(&r, &ctx.solve())?;
        let witness = rep.witness.labels(&r);
        let mut j = serde_json::to_value(&rep).unwrap();
        j["witness"] = json!(witness);
        for (k, v) in j.as_object().unwrap() {
            out[k] = v.clone();
        }
    }
    if f.conjecture {
        let v = conjecture_check(&r, &ctx.solve())?;
        if matches!(v, ConjectureVerdict::Refuted { .. }) {
            code = FAILED;
        }
        out["conjecture"] = verdict_json(&r, &v);
    }
    Ok(code)
}

fn quotient(ctx: &Ctx, expr: &str, out: &mut Value) -> Result<u8, Failure> {
    let r = ctx.ring(expr)?;
    let q = quotient_mod_radical(&r)?;
    let qr = q.ring();
    let violation = q.correspondence_violation();
    *out = json!({
        "order": r.order(),
        "radical_order": r.radical().len(),
        "radical": labels(&r, r.radical()),
        "quotient_order": qr.order(),
        "quotient_units": qr.units().len(),
        "quotient_zsize": qr.zero_divisor_count(),
        "quotient_local": qr.is_local(),
        "shape": shape_json(&r),
        "cosets": qr.elements().map(|c| labels(&r, &q.coset(c))).collect::<Vec<_>>(),
        "correspondence": violation.map_or(json!({"ok": true}), |(a, b)| json!({"ok": false, "pair": [a, b]})),
    });
    Ok(if violation.is_some() { FAILED } else { 0 })
}

fn check(ctx: &Ctx, expr: &str, out: &mut Value) -> Result<u8, Failure> {
    let r = ctx.ring(expr)?;
    let c = check_ring(&r, &r.spec().to_string(), false, &ctx.check);
    *out = serde_json::to_value(&c).unwrap();
    Ok(if c.worst() == Status::Fail { FAILED } else { 0 })
}

fn conjecture(ctx: &Ctx, expr: &str, out: &mut Value) -> Result<u8, Failure> {
    let r = ctx.ring(expr)?;
    let v = conjecture_check(&r, &ctx.solve())?;
    *out = verdict_json(&r, &v);
    Ok(if matches!(v, ConjectureVerdict::Refuted { .. }) { FAILED } else { 0 })
}

fn run_selfcheck(ctx: &Ctx, corpus: Option<&PathBuf>, out: &mut Value, timing: &mut Value) -> Result<u8, Failure> {
    let entries = match corpus {
        Some(path) => load_corpus(path).map_err(|e| match e {
            CorpusError::Io(_) | CorpusError::Empty | CorpusError::Parse { .. } => failure(USAGE, e),
        })?,
        None => builtin_corpus(),
    };
    let (s, t) = selfcheck(&entries, &ctx.check)?;
    *out = serde_json::to_value(&s).unwrap();
    *timing = serde_json::to_value(&t).unwrap();
    Ok(if s.tally.fail > 0 { FAILED } else { 0 })
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Flattens results into `key: value` lines.
fn flatten(prefix: &str, v: &Value, lines: &mut Vec<String>) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, x, lines);
            }
        }
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
            lines.push(format!("{prefix}: {}", a.iter().map(scalar).collect::<Vec<_>>().join(" ")));
        }
        Value::Array(a) => {
            for (i, x) in a.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), x, lines);
            }
        }
        other => lines.push(format!("{prefix}: {}", scalar(other))),
    }
}

fn law_lines(ring: &Value, lines: &mut Vec<String>) {
    let name = scalar(&ring["name"]);
    for l in ring["laws"].as_array().into_iter().flatten() {
        let detail = scalar(&l["detail"]);
        let sep = if detail.is_empty() { "" } else { "  " };
        lines.push(format!("{:<4}  {name:<22} {:<24}{sep}{detail}", scalar(&l["status"]), scalar(&l["law"])));
    }
}

fn render_text(report: &Report) -> String {
    let mut lines = Vec::new();
    match report.command.as_str() {
        "check" => law_lines(&report.results, &mut lines),
        "selfcheck" if report.results.is_object() => {
            for r in report.results["rings"].as_array().into_iter().flatten() {
                law_lines(r, &mut lines);
            }
            for p in report.results["pairs"].as_array().into_iter().flatten() {
                lines.push(format!(
                    "{:<4}  product_min {} x {}: {} vs min({}, {})",
                    scalar(&p["status"]),
                    scalar(&p["left"]),
                    scalar(&p["right"]),
                    p["gamma_product"],
                    p["gamma_left"],
                    p["gamma_right"]
                ));
            }
            let t = &report.results["tally"];
            lines.push(format!("pass {} warn {} skip {} fail {}", t["pass"], t["warn"], t["skip"], t["fail"]));
        }
        _ if report.results.is_null() => {}
        _ => flatten("", &report.results, &mut lines),
    }
    for e in &report.errors {
        lines.push(format!("error: {e}"));
    }
    let mut s = lines.join("\n");
    s.push('\n');
    s
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = CheckOptions {
        max_order: cli.max_order as usize,
        slow: cli.slow,
        parallel: cli.parallel,
        solve_guard: if cli.slow { HARD_MAX_ORDER } else { DEFAULT_SOLVE_GUARD },
    };
    let ctx = Ctx { check: opts };
    let config =
        Config { max_order: opts.max_order, slow: opts.slow, parallel: opts.parallel, solve_guard: opts.solve_guard };
    let (name, expr) = match &cli.cmd {
        Cmd::Analyze(a) => ("analyze", Some(&a.expr)),
        Cmd::Graph { ring, .. } => ("graph", Some(&ring.expr)),
        Cmd::Hamilton { ring, .. } => ("hamilton", Some(&ring.expr)),
        Cmd::Dominate { ring, .. } => ("dominate", Some(&ring.expr)),
        Cmd::Quotient(a) => ("quotient", Some(&a.expr)),
        Cmd::Check(a) => ("check", Some(&a.expr)),
        Cmd::Conjecture(a) => ("conjecture", Some(&a.expr)),
        Cmd::Selfcheck { .. } => ("selfcheck", None),
    };
    let mut report = Report::new(name, expr.cloned(), config);
    let start = Instant::now();
    let mut results = Value::Null;
    let mut timing = json!({});
    let outcome = match &cli.cmd {
        Cmd::Analyze(a) => analyze(&ctx, &a.expr, &mut results),
        Cmd::Graph { ring, dot } => graph(&ctx, &ring.expr, dot.as_ref(), &mut results),
        Cmd::Hamilton { ring, emit_edges } => hamilton(&ctx, &ring.expr, emit_edges.as_ref(), &mut results),
        Cmd::Dominate { ring, exact, bound, set, conjecture } => {
            let flags = DominateFlags { exact: *exact, bound: *bound, set: *set, conjecture: *conjecture };
            dominate(&ctx, &ring.expr, flags, &mut results)
        }
        Cmd::Quotient(a) => quotient(&ctx, &a.expr, &mut results),
        Cmd::Check(a) => check(&ctx, &a.expr, &mut results),
        Cmd::Conjecture(a) => conjecture(&ctx, &a.expr, &mut results),
        Cmd::Selfcheck { corpus } => run_selfcheck(&ctx, corpus.as_ref(), &mut results, &mut timing),
    };
    let code = outcome.unwrap_or_else(|f| {
        report.errors.push(f.message);
        f.code
    });
    report.results = results;
    timing["elapsed_ms"] = json!(start.elapsed().as_secs_f64() * 1e3);
    report.timing = timing;
    // A closed pipe downstream is not an error worth reporting.
    let mut stdout = std::io::stdout().lock();
    if cli.json {
        let _ = writeln!(stdout, "{}", report.to_json());
    } else if code == 0 || code == FAILED {
        let _ = write!(stdout, "{}", render_text(&report));
    } else {
        for e in &report.errors {
            eprintln!("error: {e}");
        }
    }
    ExitCode::from(code)
}
