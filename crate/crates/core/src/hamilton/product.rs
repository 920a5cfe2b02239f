use crate::ring::{Elem, Ring};

use super::{EdgeWriter, HamCycle, HamError, HamMethod};

/// The additive group of a ring (or a product of rings), which is all the
/// product construction needs to know about a factor.
#[derive(Clone, Debug)]
pub struct AdditiveGroup {
    neg: Vec<Elem>,
}

impl AdditiveGroup {
    pub fn of(ring: &Ring) -> Self {
        AdditiveGroup { neg: ring.elements().map(|x| ring.neg(x)).collect() }
    }

    /// Product of `factors`, first factor most significant.
    pub fn of_product(factors: &[Ring]) -> Self {
        let order: usize = factors.iter().map(Ring::order).product();
        let neg = (0..order)
            .map(|x| {
                let mut rem = x;
                let mut digits = vec![0; factors.len()];
                for (i, f) in factors.iter().enumerate().rev() {
                    digits[i] = f.neg(rem % f.order());
                    rem /= f.order();
                }
                factors.iter().zip(&digits).fold(0, |acc, (f, &d)| acc * f.order() + d)
            })
            .collect();
        AdditiveGroup { neg }
    }

    pub fn order(&self) -> usize {
        self.neg.len()
    }

    pub fn neg(&self, x: Elem) -> Elem {
        self.neg[x]
    }

    /// Every element has `2x = 0`.
    pub fn is_char2(&self) -> bool {
        self.neg.iter().enumerate().all(|(x, &y)| x == y)
    }
}

/// Cycle order of pairs `(a, b)` in `R x S`.
pub fn product_sequence(r: &AdditiveGroup, s: &AdditiveGroup) -> Vec<(Elem, Elem)> {
    if s.is_char2() {
        boustrophedon(r, (0..r.order()).collect(), &(0..s.order()).collect::<Vec<_>>())
    } else if r.is_char2() {
        product_sequence(s, r).into_iter().map(|(b, a)| (a, b)).collect()
    } else {
        odd_odd(r, s)
    }
}

/// Columns `b_1, b_2, ...` walked down `a_1..a_r` then up `-a_r..-a_1`.
fn boustrophedon(r: &AdditiveGroup, order: Vec<Elem>, cols: &[Elem]) -> Vec<(Elem, Elem)> {
    let mut out = Vec::with_capacity(order.len() * cols.len());
    for (j, &b) in cols.iter().enumerate() {
        if j % 2 == 0 {
            out.extend(order.iter().map(|&a| (a, b)));
        } else {
            out.extend(order.iter().rev().map(|&a| (r.neg(a), b)));
        }
    }
    out
}

fn odd_odd(r: &AdditiveGroup, s: &AdditiveGroup) -> Vec<(Elem, Elem)> {
    // R reordered so that a_r = -a_1.
    let a1 = (0..r.order()).find(|&a| r.neg(a) != a).expect("odd characteristic has an element with 2a != 0");
    let ar = r.neg(a1);
    let mut order = vec![a1];
    order.extend((0..r.order()).filter(|&a| a != a1 && a != ar));
    order.push(ar);

    let pairs: Vec<(Elem, Elem)> = (0..s.order()).filter(|&b| b < s.neg(b)).map(|b| (b, s.neg(b))).collect();
    let tail: Vec<Elem> = (0..s.order()).filter(|&b| b == s.neg(b)).collect();

    let mut out = Vec::with_capacity(r.order() * s.order());
    for (i, &(b, nb)) in pairs.iter().enumerate() {
        let col: Vec<Elem> = if i % 2 == 0 { order.clone() } else { order.iter().rev().map(|&a| r.neg(a)).collect() };
        for a in col {
            out.push((a, b));
            out.push((a, nb));
        }
    }
    out.extend(boustrophedon(r, order, &tail));
    out
}

/// Hamiltonian cycle on a product ring, split as first factor times the rest.
pub fn ham_product(ring: &Ring) -> Result<HamCycle, HamError> {
    let factors = match ring.factors() {
        Some(f) if f.len() >= 2 => f,
        _ => return Err(HamError::Precondition(format!("{} is not a product of two or more rings", ring.spec()))),
    };
    let r = AdditiveGroup::of(&factors[0]);
    let s = AdditiveGroup::of_product(&factors[1..]);
    let mut w = EdgeWriter::new(ring, "product cycle");
    for (a, b) in product_sequence(&r, &s) {
        w.push(a * s.order() + b)?;
    }
    Ok(HamCycle { seq: w.close()?, method: HamMethod::Product, notes: Vec::new() })
}
