use super::build::make_derived_table;
use super::{Elem, Ring, RingError, TableSpec};

/// `R / J(R)`, materialized as a table ring on coset ids. Coset ids follow
/// the order of their least element.
pub struct QuotientRing<'a> {
    base: &'a Ring,
    ring: Ring,
    project: Vec<Elem>,
    section: Vec<Elem>,
}

impl<'a> QuotientRing<'a> {
    pub fn base(&self) -> &'a Ring {
        self.base
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Coset id of `x`.
    pub fn project(&self, x: Elem) -> Elem {
        self.project[x]
    }

    /// Least element of coset `c`.
    pub fn section(&self, c: Elem) -> Elem {
        self.section[c]
    }

    pub fn coset(&self, c: Elem) -> Vec<Elem> {
        let rep = self.section[c];
        let mut out: Vec<Elem> = self.base.radical().iter().map(|&j| self.base.add(rep, j)).collect();
        out.sort_unstable();
        out
    }

    /// Exhaustive check that `a + b` is a zero-divisor of the base exactly
    /// when the sum of the cosets is a zero-divisor of the quotient. Returns
    /// the first counterexample.
    pub fn correspondence_violation(&self) -> Option<(Elem, Elem)> {
        let (r, q) = (self.base, &self.ring);
        for a in r.elements() {
            for b in r.elements() {
                let up = r.is_zero_divisor(r.add(a, b));
                let down = q.is_zero_divisor(q.add(self.project[a], self.project[b]));
                if up != down {
                    return Some((a, b));
                }
            }
        }
        None
    }
}

pub fn quotient_mod_radical(ring: &Ring) -> Result<QuotientRing<'_>, RingError> {
    let n = ring.order();
    let mut project = vec![usize::MAX; n];
    let mut section = Vec::new();
    for x in ring.elements() {
        if project[x] != usize::MAX {
            continue;
        }
        let id = section.len();
        for &j in ring.radical() {
            project[ring.add(x, j)] = id;
        }
        section.push(x);
    }
    let m = section.len();
    let table = |op: &dyn Fn(Elem, Elem) -> Elem| -> Vec<Vec<usize>> {
        (0..m).map(|a| (0..m).map(|b| project[op(section[a], section[b])]).collect()).collect()
    };
    let spec = TableSpec {
        order: m,
        add: table(&|a, b| ring.add(a, b)),
        mul: table(&|a, b| ring.mul(a, b)),
        zero: project[ring.zero()],
        one: project[ring.one()],
        source: None,
    };
    let q = make_derived_table(spec)?;
    Ok(QuotientRing { base: ring, ring: q, project, section })
}
