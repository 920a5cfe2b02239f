//! Law-by-law verification of a ring, and the corpus self-check.
//!
//! Each law yields PASS, FAIL, WARN or SKIP. WARN marks a claimed identity
//! that the exact solver contradicts (the solver is ground truth); FAIL is
//! reserved for broken invariants and failed constructions.

use std::collections::BTreeMap;
use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::domin::{
    check_product_min, check_quotient_invariance, conjecture_verdict, gamma_exact, gamma_from_profile,
    gamma_local_formula, gamma_upper, matrix_dominating_set, ConjectureVerdict, DomError, SolveOptions,
};
use crate::expr::{parse, ParseError};
use crate::graph::{ComponentKind, ComponentProfile, Diameter, TotalGraph};
use crate::hamilton::{ham_cycle, verify_cycle, HamError};
use crate::ring::{
    make_ring_with, quotient_mod_radical, semisimple_shape, Ring, RingError, RingOptions, RingSpec, SemisimpleShape,
    TableSpec,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Skip,
    Warn,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct LawResult {
    pub law: &'static str,
    pub status: Status,
    pub detail: String,
}

fn law(law: &'static str, status: Status, detail: impl Into<String>) -> LawResult {
    LawResult { law, status, detail: detail.into() }
}

fn pass_fail(name: &'static str, ok: bool, detail: impl Into<String>) -> LawResult {
    law(name, if ok { Status::Pass } else { Status::Fail }, detail)
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub spec: RingSpec,
    /// Domination is only solved under `--slow`.
    pub heavy: bool,
}

impl CorpusEntry {
    fn new(spec: RingSpec) -> Self {
        CorpusEntry { name: spec.to_string(), spec, heavy: false }
    }
}

/// `GF(2)[e]/(e^2)` by explicit tables; ids are `a + 2b` for `a + b e`.
pub fn dual_numbers_table() -> TableSpec {
    let add = (0..4).map(|x| (0..4).map(|y| x ^ y).collect()).collect();
    let mul = (0..4usize)
        .map(|x| {
            (0..4usize)
                .map(|y| {
                    let (a, b, c, d) = (x & 1, x >> 1, y & 1, y >> 1);
                    (a & c) | ((a & d ^ b & c) << 1)
                })
                .collect()
        })
        .collect();
    TableSpec { order: 4, add, mul, zero: 0, one: 1, source: Some("dual-numbers".into()) }
}

pub fn builtin_corpus() -> Vec<CorpusEntry> {
    let texts = [
        "Z(2)",
        "Z(3)",
        "Z(4)",
        "Z(6)",
        "Z(8)",
        "Z(9)",
        "Z(12)",
        "GF(4)",
        "GF(8)",
        "GF(9)",
        "GF(2) x GF(2)",
        "GF(2) x GF(3)",
        "GF(4) x GF(2)",
        "Z(3) x Z(3)",
        "M(2,GF(2))",
        "M(2,GF(3))",
        "M(2,GF(4))",
        "M(3,GF(2))",
        "T(2,GF(2))",
        "T(2,GF(3))",
        "M(2,Z(4))",
        "M(2,GF(2)) x GF(3)",
    ];
    let mut out: Vec<CorpusEntry> =
        texts.iter().map(|t| CorpusEntry::new(parse(t).expect("corpus expression"))).collect();
    for e in out.iter_mut() {
        e.heavy = matches!(e.name.as_str(), "M(2,GF(2,2))" | "M(3,GF(2))");
    }
    out.push(CorpusEntry::new(RingSpec::table(dual_numbers_table())));
    out
}

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("cannot read corpus file: {0}")]
    Io(#[from] std::io::Error),
    #[error("corpus file has no entries")]
    Empty,
    #[error("line {line}: {error}")]
    Parse { line: usize, error: ParseError },
}

/// One ring expression per line; blank lines and `#` comments are ignored.
pub fn load_corpus(path: &Path) -> Result<Vec<CorpusEntry>, CorpusError> {
    let text = std::fs::read_to_string(path)?;
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let spec = parse(line).map_err(|error| CorpusError::Parse { line: i + 1, error })?;
        out.push(CorpusEntry::new(spec));
    }
    if out.is_empty() {
        return Err(CorpusError::Empty);
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct CheckOptions {
    pub max_order: usize,
    pub slow: bool,
    pub parallel: bool,
    pub solve_guard: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            max_order: crate::ring::DEFAULT_MAX_ORDER,
            slow: false,
            parallel: false,
            solve_guard: crate::domin::DEFAULT_SOLVE_GUARD,
        }
    }
}

impl CheckOptions {
    fn solve(&self) -> SolveOptions {
        SolveOptions { guard: self.solve_guard, parallel: self.parallel }
    }
}

/// Invariants of one ring that the laws refer to.
#[derive(Clone, Debug, Default, Serialize)]
pub struct RingValues {
    pub order: usize,
    pub characteristic: usize,
    pub units: usize,
    pub zsize: usize,
    pub radical: usize,
    pub local: bool,
    pub commutative: bool,
    pub shape: Option<Vec<(usize, usize)>>,
    pub diameter: Option<Diameter>,
    pub profile: Option<ComponentProfile>,
    pub gamma: Option<usize>,
    pub gamma_upper: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RingCheck {
    pub name: String,
    pub values: RingValues,
    pub laws: Vec<LawResult>,
}

impl RingCheck {
    pub fn worst(&self) -> Status {
        self.laws.iter().map(|l| l.status).max().unwrap_or(Status::Pass)
    }
}

fn expected_local_profile(r: &Ring) -> ComponentProfile {
    let z = r.zero_divisor_count();
    let classes = r.order() / z;
    let mut p = if r.characteristic().is_power_of_two() {
        vec![(ComponentKind::Complete(z), classes)]
    } else {
        vec![(ComponentKind::Complete(z), 1), (ComponentKind::Biclique(z), (classes - 1) / 2)]
    };
    p.retain(|&(_, c)| c > 0);
    p.sort();
    ComponentProfile(p)
}

/// Product of at least two even-order fields.
fn even_field_product(r: &Ring) -> bool {
    r.radical().len() == 1 && r.is_commutative() && r.characteristic() == 2 && !r.is_local()
}

/// Runs every law on one ring. `heavy` rings skip domination unless `slow`.
pub fn check_ring(ring: &Ring, name: &str, heavy: bool, opts: &CheckOptions) -> RingCheck {
    let mut laws = Vec::new();
    let n = ring.order();
    let z = ring.zero_divisor_count();
    let shape = semisimple_shape(ring);
    let mut values = RingValues {
        order: n,
        characteristic: ring.characteristic(),
        units: ring.units().len(),
        zsize: z,
        radical: ring.radical().len(),
        local: ring.is_local(),
        commutative: ring.is_commutative(),
        shape: match &shape {
            SemisimpleShape::Known(f) => Some(f.clone()),
            SemisimpleShape::Unknown => None,
        },
        ..Default::default()
    };

    // Ring structure.
    let partition = ring.elements().all(|x| ring.is_unit(x) != ring.is_zero_divisor(x));
    laws.push(pass_fail("partition", partition, format!("{} units, {z} zero-divisors", values.units)));
    let one_plus_j = ring.radical().iter().all(|&j| ring.is_unit(ring.add(ring.one(), j)));
    laws.push(pass_fail("radical_units", one_plus_j, format!("|J| = {}", values.radical)));
    let absorbs =
        ring.zero_divisors().iter().all(|&x| ring.radical().iter().all(|&j| ring.is_zero_divisor(ring.add(x, j))));
    laws.push(pass_fail("radical_absorption", absorbs, ""));
    if z >= 2 {
        laws.push(pass_fail("ganesan_bound", n <= z * z, format!("{n} <= {}", z * z)));
    } else {
        laws.push(law("ganesan_bound", Status::Skip, "|Z| < 2"));
    }
    let quotient = quotient_mod_radical(ring);
    match (&quotient, ring.radical().len()) {
        (Ok(_), 1) => laws.push(law("quotient_correspondence", Status::Skip, "J = 0")),
        (Ok(q), _) => match q.correspondence_violation() {
            None => laws.push(law("quotient_correspondence", Status::Pass, format!("|R/J| = {}", q.ring().order()))),
            Some((a, b)) => laws.push(law("quotient_correspondence", Status::Fail, format!("pair ({a}, {b})"))),
        },
        (Err(e), _) => laws.push(law("quotient_correspondence", Status::Fail, e.to_string())),
    }
    match (&shape, &quotient) {
        (SemisimpleShape::Known(_), Ok(q)) => {
            let want = shape.quotient_order().unwrap_or(0);
            laws.push(pass_fail("shape_order", want == q.ring().order() as u128, format!("{want}")));
        }
        _ => laws.push(law("shape_order", Status::Skip, "shape unknown")),
    }

    // Graph laws.
    let g = TotalGraph::build(ring);
    let diameter = g.diameter();
    values.diameter = Some(diameter);
    let degree_ok = ring.elements().all(|x| {
        let want = if n.is_multiple_of(2) || ring.is_zero_divisor(x) { z - 1 } else { z };
        g.degree(x) == want
    });
    laws.push(pass_fail("degree_law", degree_ok, if n.is_multiple_of(2) { "even order" } else { "odd order" }));
    let (graph_e, label_e) = (g.is_eulerian(), even_field_product(ring));
    laws.push(pass_fail("eulerian", graph_e == label_e, format!("graph {graph_e}, label {label_e}")));
    let diameter_ok = if values.local { diameter == Diameter::Infinite } else { diameter == Diameter::Finite(2) };
    laws.push(pass_fail("diameter", diameter_ok, diameter.to_string()));
    if values.local {
        let got = g.component_profile();
        let want = expected_local_profile(ring);
        laws.push(pass_fail("local_profile", got == want, format!("{got}; expected {want}")));
        values.profile = Some(got);
    } else {
        laws.push(law("local_profile", Status::Skip, "not local"));
    }

    // Hamiltonicity.
    let ham = match (ham_cycle(ring), values.local) {
        (Ok(c), false) => match verify_cycle(ring, &c.seq) {
            Ok(()) => law("hamiltonian", Status::Pass, format!("verified cycle of {}", c.seq.len())),
            Err(v) => law("hamiltonian", Status::Fail, v.to_string()),
        },
        (Err(HamError::LocalRing), true) => pass_fail("hamiltonian", !g.is_connected(), "local, disconnected"),
        (Ok(_), true) => law("hamiltonian", Status::Fail, "cycle on a local ring"),
        (Err(e), _) => law("hamiltonian", Status::Fail, e.to_string()),
    };
    laws.push(ham);

    // Domination.
    values.gamma_upper = gamma_upper(ring);
    if let Some((nn, base)) = ring.matrix_parts().filter(|(nn, b)| *nn >= 2 && b.is_field()) {
        let d = matrix_dominating_set(ring).expect("matrix ring over a field");
        let size = nn * (base.order() - 1) + 1;
        laws.push(pass_fail("matrix_dominating_set", d.dominates(&g) && d.len() == size, format!("size {}", d.len())));
    } else {
        laws.push(law("matrix_dominating_set", Status::Skip, "not a matrix ring over a field"));
    }
    let domination_laws = ["gamma_profile", "gamma_local_formula", "gamma_bound", "quotient_gamma", "conjecture"];
    if heavy && !opts.slow {
        for name in domination_laws {
            laws.push(law(name, Status::Skip, "needs --slow"));
        }
        return RingCheck { name: name.to_string(), values, laws };
    }
    let exact = match gamma_exact(&g, &opts.solve()) {
        Ok(e) => e,
        Err(e) => {
            for name in domination_laws {
                laws.push(law(name, Status::Skip, e.to_string()));
            }
            return RingCheck { name: name.to_string(), values, laws };
        }
    };
    let gamma = exact.gamma;
    values.gamma = Some(gamma);
    if values.local {
        match gamma_from_profile(ring) {
            Ok(p) => laws.push(pass_fail("gamma_profile", p == gamma, format!("profile {p}, exact {gamma}"))),
            Err(e) => laws.push(law("gamma_profile", Status::Fail, e.to_string())),
        }
        let f = gamma_local_formula(ring).expect("local ring");
        let status = if f == gamma { Status::Pass } else { Status::Warn };
        laws.push(law("gamma_local_formula", status, format!("formula {f}, exact {gamma}")));
    } else {
        laws.push(law("gamma_profile", Status::Skip, "not local"));
        laws.push(law("gamma_local_formula", Status::Skip, "not local"));
    }
    match values.gamma_upper {
        Some(u) => laws.push(pass_fail("gamma_bound", gamma <= u, format!("{gamma} <= {u}"))),
        None => laws.push(law("gamma_bound", Status::Skip, "shape unknown")),
    }
    if ring.radical().len() == 1 {
        laws.push(law("quotient_gamma", Status::Skip, "J = 0"));
    } else {
        match check_quotient_invariance(ring, &opts.solve()) {
            Ok(c) => {
                let detail = format!(
                    "gamma {} vs quotient {}; projection dominates {}, lift dominates {}",
                    c.gamma_ring, c.gamma_quotient, c.projected_dominates, c.lifted_dominates
                );
                let status = if !c.projected_dominates {
                    Status::Fail
                } else if c.holds && c.lifted_dominates {
                    Status::Pass
                } else {
                    Status::Warn
                };
                laws.push(law("quotient_gamma", status, detail));
            }
            Err(e) => laws.push(law("quotient_gamma", Status::Skip, e.to_string())),
        }
    }
    match conjecture_verdict(ring, &exact) {
        Ok(ConjectureVerdict::Confirmed { gamma, bound }) => {
            laws.push(law("conjecture", Status::Pass, format!("{gamma} = {bound}")))
        }
        Ok(ConjectureVerdict::Refuted { gamma, bound, .. }) => {
            laws.push(law("conjecture", Status::Warn, format!("refuted: {gamma} < {bound}")))
        }
        Ok(ConjectureVerdict::Inapplicable { reason }) => laws.push(law("conjecture", Status::Skip, reason)),
        Err(e) => laws.push(law("conjecture", Status::Skip, e.to_string())),
    }
    RingCheck { name: name.to_string(), values, laws }
}

#[derive(Clone, Debug, Serialize)]
pub struct PairCheck {
    pub left: String,
    pub right: String,
    pub gamma_left: usize,
    pub gamma_right: usize,
    pub gamma_product: usize,
    pub status: Status,
}

/// γ(R x S) = min(γ(R), γ(S)) for every unordered pair (with repetition)
/// of `rings` whose product has at most `limit` elements.
pub fn check_pairs(rings: &[(&str, &Ring)], limit: usize, opts: &CheckOptions) -> Result<Vec<PairCheck>, DomError> {
    let mut jobs = Vec::new();
    for i in 0..rings.len() {
        for j in i..rings.len() {
            if rings[i].1.order() * rings[j].1.order() <= limit {
                jobs.push((i, j));
            }
        }
    }
    let run = |&(i, j): &(usize, usize)| -> Result<PairCheck, DomError> {
        let c = check_product_min(rings[i].1, rings[j].1, &SolveOptions { guard: opts.solve_guard, parallel: false })?;
        Ok(PairCheck {
            left: rings[i].0.to_string(),
            right: rings[j].0.to_string(),
            gamma_left: c.gamma_left,
            gamma_right: c.gamma_right,
            gamma_product: c.gamma_product,
            status: if c.holds { Status::Pass } else { Status::Warn },
        })
    };
    if opts.parallel {
        jobs.par_iter().map(run).collect()
    } else {
        jobs.iter().map(run).collect()
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Tally {
    pub pass: usize,
    pub warn: usize,
    pub skip: usize,
    pub fail: usize,
}

impl Tally {
    fn add(&mut self, s: Status) {
        match s {
            Status::Pass => self.pass += 1,
            Status::Warn => self.warn += 1,
            Status::Skip => self.skip += 1,
            Status::Fail => self.fail += 1,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Selfcheck {
    pub rings: Vec<RingCheck>,
    pub pairs: Vec<PairCheck>,
    pub tally: Tally,
}

#[derive(Clone, Debug, Serialize)]
pub struct SelfcheckTiming {
    pub total_ms: f64,
    pub rings_ms: BTreeMap<String, f64>,
}

/// Product order up to which corpus pairs are checked.
pub const PAIR_LIMIT: usize = 256;

pub fn selfcheck(corpus: &[CorpusEntry], opts: &CheckOptions) -> Result<(Selfcheck, SelfcheckTiming), RingError> {
    let start = Instant::now();
    let ring_opts = RingOptions { max_order: opts.max_order };
    let rings: Vec<Ring> = corpus.iter().map(|e| make_ring_with(&e.spec, &ring_opts)).collect::<Result<_, _>>()?;
    let one = |(e, r): (&CorpusEntry, &Ring)| {
        let t = Instant::now();
        let c = check_ring(r, &e.name, e.heavy, opts);
        (c, t.elapsed().as_secs_f64() * 1e3)
    };
    let checked: Vec<(RingCheck, f64)> = if opts.parallel {
        corpus.par_iter().zip(rings.par_iter()).map(one).collect()
    } else {
        corpus.iter().zip(rings.iter()).map(one).collect()
    };
    let named: Vec<(&str, &Ring)> = corpus.iter().zip(&rings).map(|(e, r)| (e.name.as_str(), r)).collect();
    let pairs = check_pairs(&named, PAIR_LIMIT, opts).unwrap_or_default();
    let mut tally = Tally::default();
    for (c, _) in &checked {
        c.laws.iter().for_each(|l| tally.add(l.status));
    }
    pairs.iter().for_each(|p| tally.add(p.status));
    let rings_ms = checked.iter().map(|(c, ms)| (c.name.clone(), *ms)).collect();
    let rings = checked.into_iter().map(|(c, _)| c).collect();
    let timing = SelfcheckTiming { total_ms: start.elapsed().as_secs_f64() * 1e3, rings_ms };
    Ok((Selfcheck { rings, pairs, tally }, timing))
}
