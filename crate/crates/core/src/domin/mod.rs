//! Domination in total graphs: explicit sets, closed-form values, the
//! reductions through `R/J` and products, and an exact solver that serves as
//! ground truth for all of them.

mod det;
mod solver;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{BitSet, ComponentKind, TotalGraph};
use crate::ring::{
    make_ring_with, quotient_mod_radical, semisimple_shape, Elem, Ring, RingError, RingOptions, RingSpec,
    SemisimpleShape, HARD_MAX_ORDER,
};

pub use det::{det_expansion, det_expansion_check, determinant, matrix_set_undominated, minor_first_row, DetExpansion};
pub use solver::{gamma_exact, greedy_dominating, lower_bound, ExactGamma, SolveOptions, DEFAULT_SOLVE_GUARD};

#[derive(Debug, Error)]
pub enum DomError {
    #[error("graph has {order} vertices, above the exact-solver guard of {guard} (try --slow)")]
    SolveGuardExceeded { order: usize, guard: usize },
    #[error("ring is not local")]
    NotLocal,
    #[error("semisimple shape of the ring is unknown")]
    ShapeUnknown,
    #[error("{0} is not a matrix ring of size at least 2 over a field")]
    NotMatrixOverField(String),
    #[error("component of unexpected shape: {0}")]
    Profile(String),
    #[error(transparent)]
    Ring(#[from] RingError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct DominatingSet {
    members: Vec<Elem>,
}

impl DominatingSet {
    pub fn new(mut members: Vec<Elem>) -> Self {
        members.sort_unstable();
        members.dedup();
        DominatingSet { members }
    }

    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// First vertex neither in the set nor adjacent to it.
    pub fn undominated(&self, g: &TotalGraph<'_>) -> Option<Elem> {
        let mut covered = BitSet::new(g.order());
        for &m in &self.members {
            covered.union_with(&g.closed_neighborhood(m));
        }
        (0..g.order()).find(|&v| !covered.contains(v))
    }

    pub fn dominates(&self, g: &TotalGraph<'_>) -> bool {
        self.undominated(g).is_none()
    }

    pub fn labels(&self, ring: &Ring) -> Vec<String> {
        self.members.iter().map(|&x| ring.label(x)).collect()
    }
}

/// `{x E_{1j} : x != 0} ∪ {0}` in `M_n(F)`, of size `n(|F| - 1) + 1`.
pub fn matrix_dominating_set(ring: &Ring) -> Result<DominatingSet, DomError> {
    let (n, base) = match ring.matrix_parts() {
        Some((n, base)) if n >= 2 && base.is_field() => (n, base),
        _ => return Err(DomError::NotMatrixOverField(ring.spec().to_string())),
    };
    let mut members = vec![ring.zero()];
    for j in 0..n {
        for x in base.elements().filter(|&x| x != base.zero()) {
            let mut digits = vec![0; n * n];
            digits[j] = x;
            members.push(ring.encode(&digits));
        }
    }
    Ok(DominatingSet::new(members))
}

/// Closed form claimed for local rings: `|R/J|` in characteristic `2^k`,
/// otherwise `(|R/J| + 1) / 2`.
pub fn gamma_local_formula(ring: &Ring) -> Result<usize, DomError> {
    if !ring.is_local() {
        return Err(DomError::NotLocal);
    }
    let residue = ring.order() / ring.radical().len();
    Ok(if ring.characteristic().is_power_of_two() { residue } else { residue.div_ceil(2) })
}

/// γ read off the component structure: one vertex per `K_m`, and for
/// `K_{m,m}` one vertex if `m = 1`, two otherwise.
pub fn gamma_from_profile(ring: &Ring) -> Result<usize, DomError> {
    if !ring.is_local() {
        return Err(DomError::NotLocal);
    }
    let profile = TotalGraph::build(ring).component_profile();
    profile.0.iter().try_fold(0, |acc, &(kind, count)| {
        let each = match kind {
            ComponentKind::Complete(_) | ComponentKind::Biclique(1) => 1,
            ComponentKind::Biclique(_) => 2,
            other => return Err(DomError::Profile(other.to_string())),
        };
        Ok(acc + each * count)
    })
}

/// `min_i n_i(|F_i| - 1) + 1` over the semisimple shape.
pub fn gamma_upper(ring: &Ring) -> Option<usize> {
    bound_of(&semisimple_shape(ring))
}

fn bound_of(shape: &SemisimpleShape) -> Option<usize> {
    match shape {
        SemisimpleShape::Known(f) => f.iter().map(|&(n, q)| n * (q - 1) + 1).min(),
        SemisimpleShape::Unknown => None,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GammaFlags {
    pub within_upper: Option<bool>,
    pub formula_agrees: Option<bool>,
    pub profile_agrees: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GammaReport {
    pub exact: usize,
    pub witness: DominatingSet,
    pub lower_bound: usize,
    pub greedy: usize,
    pub upper_bound: Option<usize>,
    pub local_formula: Option<usize>,
    pub profile_gamma: Option<usize>,
    pub flags: GammaFlags,
}

pub fn gamma_report(ring: &Ring, opts: &SolveOptions) -> Result<GammaReport, DomError> {
    let g = TotalGraph::build(ring);
    let exact = gamma_exact(&g, opts)?;
    let upper_bound = gamma_upper(ring);
    let local_formula = gamma_local_formula(ring).ok();
    let profile_gamma = gamma_from_profile(ring).ok();
    let e = exact.gamma;
    Ok(GammaReport {
        exact: e,
        witness: exact.witness,
        lower_bound: exact.lower_bound,
        greedy: exact.greedy,
        upper_bound,
        local_formula,
        profile_gamma,
        flags: GammaFlags {
            within_upper: upper_bound.map(|u| e <= u),
            formula_agrees: local_formula.map(|f| f == e),
            profile_agrees: profile_gamma.map(|p| p == e),
        },
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct QuotientInvariance {
    pub gamma_ring: usize,
    pub gamma_quotient: usize,
    pub radical_order: usize,
    /// γ(R) = γ(R/J)
    pub holds: bool,
    /// Cosets of a minimum dominating set of `R` dominate `R/J`.
    pub projected_dominates: bool,
    /// Least representatives of a minimum dominating set of `R/J` dominate `R`.
    pub lifted_dominates: bool,
}

pub fn check_quotient_invariance(ring: &Ring, opts: &SolveOptions) -> Result<QuotientInvariance, DomError> {
    let q = quotient_mod_radical(ring)?;
    let (gr, gq) = (TotalGraph::build(ring), TotalGraph::build(q.ring()));
    let er = gamma_exact(&gr, opts)?;
    let eq = gamma_exact(&gq, opts)?;
    let projected = DominatingSet::new(er.witness.members().iter().map(|&x| q.project(x)).collect());
    let lifted = DominatingSet::new(eq.witness.members().iter().map(|&c| q.section(c)).collect());
    Ok(QuotientInvariance {
        gamma_ring: er.gamma,
        gamma_quotient: eq.gamma,
        radical_order: ring.radical().len(),
        holds: er.gamma == eq.gamma,
        projected_dominates: projected.dominates(&gq),
        lifted_dominates: lifted.dominates(&gr),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ProductMin {
    pub gamma_left: usize,
    pub gamma_right: usize,
    pub gamma_product: usize,
    pub holds: bool,
}

/// γ(R x S) against min(γ(R), γ(S)), all three solved exactly.
pub fn check_product_min(r: &Ring, s: &Ring, opts: &SolveOptions) -> Result<ProductMin, DomError> {
    let order = r.order() * s.order();
    if order > opts.guard {
        return Err(DomError::SolveGuardExceeded { order, guard: opts.guard });
    }
    let spec = RingSpec::Prod(vec![r.spec().clone(), s.spec().clone()]);
    let rs = make_ring_with(&spec, &RingOptions { max_order: HARD_MAX_ORDER })?;
    let gamma = |ring: &Ring| gamma_exact(&TotalGraph::build(ring), opts).map(|e| e.gamma);
    let (gl, gr, gp) = (gamma(r)?, gamma(s)?, gamma(&rs)?);
    Ok(ProductMin { gamma_left: gl, gamma_right: gr, gamma_product: gp, holds: gp == gl.min(gr) })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum ConjectureVerdict {
    Confirmed { gamma: usize, bound: usize },
    Refuted { gamma: usize, bound: usize, witness: DominatingSet },
    Inapplicable { reason: String },
}

/// Equality of γ with the semisimple bound, claimed when every Wedderburn
/// factor is a matrix ring of size at least 2.
pub fn conjecture_check(ring: &Ring, opts: &SolveOptions) -> Result<ConjectureVerdict, DomError> {
    if let Some(v) = conjecture_precheck(ring)? {
        return Ok(v);
    }
    let exact = gamma_exact(&TotalGraph::build(ring), opts)?;
    conjecture_verdict(ring, &exact)
}

/// The verdict when it is decided without solving: `Inapplicable` when
/// some factor is a field.
pub fn conjecture_precheck(ring: &Ring) -> Result<Option<ConjectureVerdict>, DomError> {
    match semisimple_shape(ring) {
        SemisimpleShape::Unknown => Err(DomError::ShapeUnknown),
        SemisimpleShape::Known(f) => Ok(f.iter().find(|&&(n, _)| n == 1).map(|&(_, q)| {
            ConjectureVerdict::Inapplicable { reason: format!("a Wedderburn factor is the field of order {q}") }
        })),
    }
}

/// Verdict from an already solved γ.
pub fn conjecture_verdict(ring: &Ring, exact: &ExactGamma) -> Result<ConjectureVerdict, DomError> {
    if let Some(v) = conjecture_precheck(ring)? {
        return Ok(v);
    }
    let bound = gamma_upper(ring).expect("nonempty shape");
    Ok(if exact.gamma == bound {
        ConjectureVerdict::Confirmed { gamma: exact.gamma, bound }
    } else {
        ConjectureVerdict::Refuted { gamma: exact.gamma, bound, witness: exact.witness.clone() }
    })
}
