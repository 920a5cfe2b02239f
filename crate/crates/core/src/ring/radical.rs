//! Jacobson radical: `J = { x : 1 - r x is a unit for every r }`.
//!
//! In a finite ring one-sided inverses are two-sided, so left
//! quasi-regularity of every `r x` characterizes the radical.

use super::{gf, Elem, Ring, RingError, Structure};

pub fn jacobson(ring: &Ring) -> Vec<Elem> {
    ring.radical().to_vec()
}

pub fn brute_force_radical(ring: &Ring) -> Vec<bool> {
    let one = ring.one();
    ring.elements().map(|x| ring.elements().all(|r| ring.is_unit(ring.sub(one, ring.mul(r, x))))).collect()
}

/// Radical membership derived from how the ring was composed, using the
/// already-verified radicals of the component rings. `None` for table rings.
pub fn structural_radical(ring: &Ring) -> Option<Vec<bool>> {
    let mask = match ring.structure() {
        Structure::Zn { n } => {
            let rad: usize = gf::prime_factors(*n).iter().product();
            ring.elements().map(|x| x % rad == 0).collect()
        }
        Structure::Gf(_) => ring.elements().map(|x| x == ring.zero()).collect(),
        Structure::Mat { base, .. } => {
            ring.elements().map(|x| ring.decode(x).iter().all(|&e| base.in_radical(e))).collect()
        }
        Structure::Tri { n, base } => {
            let diag: Vec<usize> = (0..*n).map(|i| super::tri_index(*n, i, i)).collect();
            ring.elements()
                .map(|x| {
                    let d = ring.decode(x);
                    diag.iter().all(|&s| d[s] == base.zero())
                })
                .collect()
        }
        Structure::Prod { factors } => {
            ring.elements().map(|x| ring.decode(x).iter().zip(factors).all(|(&e, f)| f.in_radical(e))).collect()
        }
        Structure::Table => return None,
    };
    Some(mask)
}

/// Checks that the cached radical is closed under addition and under
/// multiplication by ring elements on both sides.
pub fn check_ideal(ring: &Ring) -> Result<(), RingError> {
    let j = ring.radical();
    if !ring.in_radical(ring.zero()) {
        return Err(RingError::RadicalNotIdeal("0 is missing".into()));
    }
    for &a in j {
        for &b in j {
            if !ring.in_radical(ring.add(a, b)) {
                return Err(RingError::RadicalNotIdeal(format!("{a} + {b} leaves J")));
            }
        }
        for r in ring.elements() {
            if !ring.in_radical(ring.mul(r, a)) || !ring.in_radical(ring.mul(a, r)) {
                return Err(RingError::RadicalNotIdeal(format!("{r} * {a} leaves J")));
            }
        }
    }
    Ok(())
}
