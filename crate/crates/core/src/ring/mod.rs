//! Finite rings built compositionally, with full operation tables and the
//! cached element classification every other module relies on.

mod build;
pub mod gf;
pub mod quotient;
pub mod radical;
pub mod shape;
pub mod spec;

use std::fmt;

use thiserror::Error;

pub use build::{make_ring, make_ring_with, RingOptions};
pub use gf::GfArith;
pub use quotient::{quotient_mod_radical, QuotientRing};
pub use shape::{semisimple_shape, SemisimpleShape};
pub use spec::{RingSpec, TableSpec};

/// Element id, `0 .. order`.
pub type Elem = usize;

pub const DEFAULT_MAX_ORDER: usize = 4096;
/// Ids are stored as `u16` in the operation tables.
pub const HARD_MAX_ORDER: usize = 1 << 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("ring order {order} exceeds the order guard {max}")]
    OrderGuardExceeded { order: u128, max: usize },
    #[error("{0} is not prime")]
    NotPrime(usize),
    #[error("invalid ring spec: {0}")]
    InvalidSpec(String),
    #[error("malformed table: {0}")]
    TableFormat(String),
    #[error("table violates {law} at ({a}, {b}, {c})")]
    TableAxiom { law: &'static str, a: Elem, b: Elem, c: Elem },
    #[error("element {0} is neither a unit nor a zero-divisor (or both)")]
    Classification(Elem),
    #[error("radical mismatch at element {elem}: brute force says {brute}, structural rule says {structural}")]
    RadicalMismatch { elem: Elem, brute: bool, structural: bool },
    #[error("radical is not a two-sided ideal: {0}")]
    RadicalNotIdeal(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ElementClass {
    Unit,
    ZeroDivisor,
}

/// How element ids decode into structured values.
#[derive(Clone, Debug)]
pub enum Structure {
    Zn {
        n: usize,
    },
    Gf(GfArith),
    /// Entries row-major, entry (1,1) the most significant digit.
    Mat {
        n: usize,
        base: Box<Ring>,
    },
    /// Entries on and above the diagonal, packed row-major.
    Tri {
        n: usize,
        base: Box<Ring>,
    },
    Prod {
        factors: Vec<Ring>,
    },
    Table,
}

/// A realized finite ring. Immutable once built.
#[derive(Clone)]
pub struct Ring {
    spec: RingSpec,
    structure: Structure,
    order: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    zero: Elem,
    one: Elem,
    characteristic: usize,
    units: Vec<bool>,
    zero_divisors: Vec<bool>,
    in_radical: Vec<bool>,
    radical: Vec<Elem>,
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Ring").field("spec", &self.spec.to_string()).field("order", &self.order).finish_non_exhaustive()
    }
}

impl Ring {
    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    pub fn structure(&self) -> &Structure {
        &self.structure
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a * self.order + b] as Elem
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a * self.order + b] as Elem
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a] as Elem
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn zero(&self) -> Elem {
        self.zero
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    /// Additive order of 1.
    pub fn characteristic(&self) -> usize {
        self.characteristic
    }

    #[inline]
    pub fn is_unit(&self, x: Elem) -> bool {
        self.units[x]
    }

    #[inline]
    pub fn is_zero_divisor(&self, x: Elem) -> bool {
        self.zero_divisors[x]
    }

    #[inline]
    pub fn in_radical(&self, x: Elem) -> bool {
        self.in_radical[x]
    }

    pub fn classify(&self, x: Elem) -> ElementClass {
        if self.units[x] {
            ElementClass::Unit
        } else {
            ElementClass::ZeroDivisor
        }
    }

    pub fn units(&self) -> Vec<Elem> {
        self.elements().filter(|&x| self.units[x]).collect()
    }

    pub fn zero_divisors(&self) -> Vec<Elem> {
        self.elements().filter(|&x| self.zero_divisors[x]).collect()
    }

    pub fn zero_divisor_count(&self) -> usize {
        self.zero_divisors.iter().filter(|&&z| z).count()
    }

    /// The Jacobson radical, ascending ids.
    pub fn radical(&self) -> &[Elem] {
        &self.radical
    }

    /// True iff the non-units are exactly the radical.
    pub fn is_local(&self) -> bool {
        self.elements().all(|x| self.units[x] != self.in_radical[x])
    }

    pub fn is_commutative(&self) -> bool {
        self.elements().all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Field test: every nonzero element is a unit.
    pub fn is_field(&self) -> bool {
        self.is_commutative() && self.elements().all(|x| x == self.zero || self.units[x])
    }

    /// `n` times `x`.
    pub fn times(&self, n: usize, x: Elem) -> Elem {
        (0..n).fold(self.zero, |acc, _| self.add(acc, x))
    }

    /// Mixed-radix digits of `x` according to the structure: matrix entries,
    /// product components, polynomial coefficients (constant first) or the
    /// residue itself.
    pub fn decode(&self, x: Elem) -> Vec<Elem> {
        match &self.structure {
            Structure::Zn { .. } | Structure::Table => vec![x],
            Structure::Gf(f) => f.decode(x),
            Structure::Mat { n, base } => digits_msb(x, base.order, n * n),
            Structure::Tri { n, base } => digits_msb(x, base.order, n * (n + 1) / 2),
            Structure::Prod { factors } => {
                let mut out = vec![0; factors.len()];
                let mut r = x;
                for (i, f) in factors.iter().enumerate().rev() {
                    out[i] = r % f.order;
                    r /= f.order;
                }
                out
            }
        }
    }

    /// Inverse of [`Ring::decode`].
    pub fn encode(&self, digits: &[Elem]) -> Elem {
        match &self.structure {
            Structure::Zn { .. } | Structure::Table => digits[0],
            Structure::Gf(f) => f.encode(digits),
            Structure::Mat { base, .. } | Structure::Tri { base, .. } => {
                digits.iter().fold(0, |acc, &d| acc * base.order + d)
            }
            Structure::Prod { factors } => factors.iter().zip(digits).fold(0, |acc, (f, &d)| acc * f.order + d),
        }
    }

    /// For `M_n(S)`, the size `n` and the entry ring `S`.
    pub fn matrix_parts(&self) -> Option<(usize, &Ring)> {
        match &self.structure {
            Structure::Mat { n, base } => Some((*n, base)),
            _ => None,
        }
    }

    pub fn factors(&self) -> Option<&[Ring]> {
        match &self.structure {
            Structure::Prod { factors } => Some(factors),
            _ => None,
        }
    }

    /// Human-readable element label from the structural decoding.
    pub fn label(&self, x: Elem) -> String {
        match &self.structure {
            Structure::Zn { .. } | Structure::Table => x.to_string(),
            Structure::Gf(f) => f.label(x),
            Structure::Mat { n, base } => {
                let d = self.decode(x);
                matrix_label(*n, |i, j| base.label(d[i * n + j]))
            }
            Structure::Tri { n, base } => {
                let d = self.decode(x);
                matrix_label(*n, |i, j| if i > j { base.label(base.zero) } else { base.label(d[tri_index(*n, i, j)]) })
            }
            Structure::Prod { factors } => {
                let d = self.decode(x);
                let parts: Vec<String> = factors.iter().zip(&d).map(|(f, &e)| f.label(e)).collect();
                format!("({})", parts.join(","))
            }
        }
    }
}

/// Position of entry `(i, j)`, `i <= j`, in the packed upper-triangular layout.
/// Row `i` starts after rows `0..i`, which hold `n, n-1, ..., n-i+1` entries.
pub(crate) fn tri_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i <= j && j < n);
    i * n - i * i.saturating_sub(1) / 2 + (j - i)
}

fn digits_msb(mut x: usize, base: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = x % base;
        x /= base;
    }
    out
}

fn matrix_label(n: usize, entry: impl Fn(usize, usize) -> String) -> String {
    let rows: Vec<String> = (0..n)
        .map(|i| {
            let cells: Vec<String> = (0..n).map(|j| entry(i, j)).collect();
            format!("[{}]", cells.join(","))
        })
        .collect();
    format!("[{}]", rows.join(","))
}
