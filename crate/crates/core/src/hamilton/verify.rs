//! Independent cycle checker. Recomputes zero-divisors straight from the
//! multiplication table instead of trusting the ring's classification.

use std::fmt;

use serde::Serialize;

use crate::ring::{Elem, Ring};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum CycleViolation {
    TooShort { len: usize },
    OutOfRange { position: usize, elem: Elem },
    DuplicateVertex { position: usize, elem: Elem },
    WrongLength { expected: usize, got: usize },
    NotAdjacent { position: usize, a: Elem, b: Elem, sum: Elem },
}

impl fmt::Display for CycleViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CycleViolation::TooShort { len } => {
                write!(f, "a cycle needs at least 3 vertices, got {len}")
            }
            CycleViolation::OutOfRange { position, elem } => {
                write!(f, "element {elem} at position {position} is not in the ring")
            }
            CycleViolation::DuplicateVertex { position, elem } => {
                write!(f, "element {elem} repeats at position {position}")
            }
            CycleViolation::WrongLength { expected, got } => {
                write!(f, "cycle has {got} vertices, ring has {expected}")
            }
            CycleViolation::NotAdjacent { position, a, b, sum } => {
                write!(f, "{a} + {b} = {sum} is not a zero-divisor (position {position})")
            }
        }
    }
}

/// Zero-divisor flags from the raw tables.
pub fn zero_divisor_flags(ring: &Ring) -> Vec<bool> {
    let z = ring.zero();
    ring.elements().map(|x| ring.elements().any(|y| y != z && (ring.mul(x, y) == z || ring.mul(y, x) == z))).collect()
}

/// Checks that `seq` lists every element exactly once and every cyclic
/// neighbor sum is a zero-divisor. Reports the first problem found.
pub fn verify_cycle(ring: &Ring, seq: &[Elem]) -> Result<(), CycleViolation> {
    verify_with(ring, seq, &zero_divisor_flags(ring))
}

pub fn verify_with(ring: &Ring, seq: &[Elem], zd: &[bool]) -> Result<(), CycleViolation> {
    let n = ring.order();
    if seq.len() < 3 {
        return Err(CycleViolation::TooShort { len: seq.len() });
    }
    let mut seen = vec![false; n];
    for (position, &elem) in seq.iter().enumerate() {
        if elem >= n {
            return Err(CycleViolation::OutOfRange { position, elem });
        }
        if std::mem::replace(&mut seen[elem], true) {
            return Err(CycleViolation::DuplicateVertex { position, elem });
        }
    }
    if seq.len() != n {
        return Err(CycleViolation::WrongLength { expected: n, got: seq.len() });
    }
    for position in 0..n {
        let (a, b) = (seq[position], seq[(position + 1) % n]);
        let sum = ring.add(a, b);
        if !zd[sum] {
            return Err(CycleViolation::NotAdjacent { position, a, b, sum });
        }
    }
    Ok(())
}
