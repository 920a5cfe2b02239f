use crate::ring::{Elem, QuotientRing};

use super::verify::verify_cycle;
use super::{EdgeWriter, HamCycle, HamError, HamMethod};

/// Lifts a Hamiltonian cycle of `R/J` (given as coset ids) to `R`: the
/// representative sequence is repeated once per radical element `j`,
/// shifted by `j`.
pub fn lift_mod_radical(q: &QuotientRing<'_>, qcycle: &[Elem]) -> Result<HamCycle, HamError> {
    if let Err(v) = verify_cycle(q.ring(), qcycle) {
        return Err(HamError::InvalidInput(format!("quotient cycle rejected: {v}")));
    }
    let r = q.base();
    let reps: Vec<Elem> = qcycle.iter().map(|&c| q.section(c)).collect();
    let mut w = EdgeWriter::new(r, "radical lift");
    for &j in r.radical() {
        for &x in &reps {
            w.push(r.add(x, j))?;
        }
    }
    let method = HamMethod::QuotientLift { quotient_order: q.ring().order(), radical_order: r.radical().len() };
    Ok(HamCycle { seq: w.close()?, method, notes: Vec::new() })
}
