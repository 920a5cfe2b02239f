use serde::Serialize;

use super::{gf, Ring, RingSpec};

/// Wedderburn shape of `R / J`: pairs `(n_i, |F_i|)` with
/// `R / J = M_{n_1}(F_1) x ... x M_{n_k}(F_k)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SemisimpleShape {
    Known(Vec<(usize, usize)>),
    Unknown,
}

impl SemisimpleShape {
    pub fn factors(&self) -> Option<&[(usize, usize)]> {
        match self {
            SemisimpleShape::Known(f) => Some(f),
            SemisimpleShape::Unknown => None,
        }
    }

    /// `prod q_i^(n_i^2)`, the order of `R / J` this shape predicts.
    pub fn quotient_order(&self) -> Option<u128> {
        self.factors()?.iter().try_fold(1u128, |acc, &(n, q)| acc.checked_mul((q as u128).checked_pow((n * n) as u32)?))
    }
}

pub fn semisimple_shape(ring: &Ring) -> SemisimpleShape {
    shape_of(ring.spec())
}

pub fn shape_of(spec: &RingSpec) -> SemisimpleShape {
    use SemisimpleShape::*;
    match spec {
        RingSpec::Zn(n) => Known(gf::prime_factors(*n).into_iter().map(|p| (1, p)).collect()),
        RingSpec::Gf { p, k } => Known(vec![(1, p.pow(*k as u32))]),
        RingSpec::Mat { n, base } => match shape_of(base) {
            Known(fs) => Known(fs.into_iter().map(|(m, q)| (n * m, q)).collect()),
            Unknown => Unknown,
        },
        RingSpec::Tri { n, base } => match shape_of(base) {
            Known(fs) => Known(std::iter::repeat_n(fs, *n).flatten().collect()),
            Unknown => Unknown,
        },
        RingSpec::Prod(parts) => {
            let mut out = Vec::new();
            for p in parts {
                match shape_of(p) {
                    Known(fs) => out.extend(fs),
                    Unknown => return Unknown,
                }
            }
            Known(out)
        }
        RingSpec::Table(_) => Unknown,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{make_ring, quotient_mod_radical};

    #[test]
    fn examples() {
        let m = RingSpec::mat(2, RingSpec::Gf { p: 3, k: 1 });
        assert_eq!(shape_of(&m), SemisimpleShape::Known(vec![(2, 3)]));
        assert_eq!(shape_of(&RingSpec::Zn(12)), SemisimpleShape::Known(vec![(1, 2), (1, 3)]));
        let t = RingSpec::tri(2, RingSpec::Gf { p: 2, k: 1 });
        assert_eq!(shape_of(&t), SemisimpleShape::Known(vec![(1, 2), (1, 2)]));
    }

    #[test]
    fn m2_z4_shape_matches_quotient() {
        let r = make_ring(&RingSpec::mat(2, RingSpec::Zn(4))).unwrap();
        let shape = semisimple_shape(&r);
        assert_eq!(shape, SemisimpleShape::Known(vec![(2, 2)]));
        let q = quotient_mod_radical(&r).unwrap();
        assert_eq!(shape.quotient_order(), Some(q.ring().order() as u128));
        assert_eq!(q.ring().order(), 16);
        // central idempotents of M_2(GF(2)) are only 0 and 1
        let qr = q.ring();
        let central_idem: Vec<_> = qr
            .elements()
            .filter(|&e| qr.mul(e, e) == e)
            .filter(|&e| qr.elements().all(|x| qr.mul(e, x) == qr.mul(x, e)))
            .collect();
        assert_eq!(central_idem, vec![qr.zero(), qr.one()]);
    }
}
