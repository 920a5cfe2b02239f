//! Hamiltonian cycles in total graphs of non-local rings.
//!
//! Every constructor checks each edge as it is appended, and every result
//! is re-checked by [`verify_cycle`], which shares nothing with them.

mod index;
mod lift;
mod matrix;
mod product;
mod search;
mod verify;

use serde::Serialize;
use thiserror::Error;

use crate::graph::TotalGraph;
use crate::ring::{quotient_mod_radical, Elem, Ring, RingError, Structure};

pub use index::MatrixIndexSet;
pub use lift::lift_mod_radical;
pub use matrix::{extend_layer_char2, extend_layer_odd, ham_matrix};
pub use product::{ham_product, product_sequence, AdditiveGroup};
pub use search::{search_ham, search_ham_with, DEFAULT_SEARCH_BUDGET};
pub use verify::{verify_cycle, verify_with, zero_divisor_flags, CycleViolation};

#[derive(Debug, Error)]
pub enum HamError {
    #[error("ring is local, its total graph is disconnected")]
    LocalRing,
    #[error("no Hamiltonian cycle found after {explored} search steps")]
    SearchExhausted { explored: u64 },
    #[error("{context}: {a} + {b} is not a zero-divisor")]
    EdgeViolation { a: Elem, b: Elem, context: &'static str },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("endpoint contract failed: {0}")]
    EndpointContract(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("constructed cycle failed verification: {0}")]
    Unverified(CycleViolation),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// Remarks recorded while running the snake construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum HamNote {
    /// Length `t` of the path being extended (number of vertices minus one).
    SnakeParity { k: usize, l: usize, t: usize },
    /// The last scalar pair was oriented as `x_m = -(-1)^m c` so the path end
    /// is constant on the closed prefix.
    LastPairNegated { k: usize, l: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum HamMethod {
    Matrix,
    Product,
    QuotientLift { quotient_order: usize, radical_order: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HamPath {
    pub seq: Vec<Elem>,
    pub notes: Vec<HamNote>,
}

impl HamPath {
    pub fn new(seq: Vec<Elem>) -> Self {
        HamPath { seq, notes: Vec::new() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HamCycle {
    pub seq: Vec<Elem>,
    pub method: HamMethod,
    pub notes: Vec<HamNote>,
}

impl HamCycle {
    pub fn labels(&self, ring: &Ring) -> Vec<String> {
        self.seq.iter().map(|&x| ring.label(x)).collect()
    }
}

/// Appends vertices, refusing any step whose sum is not a zero-divisor.
pub(crate) struct EdgeWriter<'r> {
    ring: &'r Ring,
    seq: Vec<Elem>,
    context: &'static str,
}

impl<'r> EdgeWriter<'r> {
    pub(crate) fn new(ring: &'r Ring, context: &'static str) -> Self {
        Self::resume(ring, Vec::with_capacity(ring.order()), context)
    }

    pub(crate) fn resume(ring: &'r Ring, seq: Vec<Elem>, context: &'static str) -> Self {
        EdgeWriter { ring, seq, context }
    }

    fn check(&self, a: Elem, b: Elem) -> Result<(), HamError> {
        if self.ring.is_zero_divisor(self.ring.add(a, b)) {
            Ok(())
        } else {
            Err(HamError::EdgeViolation { a, b, context: self.context })
        }
    }

    pub(crate) fn push(&mut self, v: Elem) -> Result<(), HamError> {
        if let Some(&last) = self.seq.last() {
            self.check(last, v)?;
        }
        self.seq.push(v);
        Ok(())
    }

    pub(crate) fn finish(self) -> Vec<Elem> {
        self.seq
    }

    /// Checks the wrap-around edge.
    pub(crate) fn close(self) -> Result<Vec<Elem>, HamError> {
        if let (Some(&first), Some(&last)) = (self.seq.first(), self.seq.last()) {
            self.check(last, first)?;
        }
        Ok(self.seq)
    }
}

/// A verified Hamiltonian cycle of `τ(R)` for non-local `R`.
///
/// Products use the product construction directly and matrix rings over
/// fields the snake construction. Anything else goes through `R/J`: a cycle
/// is searched on the quotient and lifted.
pub fn ham_cycle(ring: &Ring) -> Result<HamCycle, HamError> {
    if ring.is_local() {
        return Err(HamError::LocalRing);
    }
    let cycle = match ring.structure() {
        Structure::Prod { factors } if factors.len() >= 2 => ham_product(ring)?,
        Structure::Mat { n, base } if *n >= 2 && base.is_field() => ham_matrix(ring)?,
        _ => {
            let q = quotient_mod_radical(ring)?;
            let g = TotalGraph::build(q.ring());
            let qcycle = search_ham(&g)?;
            lift_mod_radical(&q, &qcycle)?
        }
    };
    verify_cycle(ring, &cycle.seq).map_err(HamError::Unverified)?;
    Ok(cycle)
}
