use super::gf::{self, GfArith};
use super::radical;
use super::{tri_index, Elem, Ring, RingError, RingSpec, Structure, TableSpec};
use super::{DEFAULT_MAX_ORDER, HARD_MAX_ORDER};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RingOptions {
    /// Largest ring order `make_ring` will realize.
    pub max_order: usize,
}

impl Default for RingOptions {
    fn default() -> Self {
        RingOptions { max_order: DEFAULT_MAX_ORDER }
    }
}

pub fn make_ring(spec: &RingSpec) -> Result<Ring, RingError> {
    make_ring_with(spec, &RingOptions::default())
}

pub fn make_ring_with(spec: &RingSpec, opts: &RingOptions) -> Result<Ring, RingError> {
    let max = opts.max_order.min(HARD_MAX_ORDER);
    let order = spec.order().ok_or(RingError::OrderGuardExceeded { order: u128::MAX, max })?;
    if order > max as u128 {
        return Err(RingError::OrderGuardExceeded { order, max });
    }
    build(spec)
}

/// Realizes tables that are homomorphic images of an existing ring, so the
/// axiom check is skipped.
pub(crate) fn make_derived_table(t: TableSpec) -> Result<Ring, RingError> {
    let order = t.order;
    let spec = RingSpec::table(t);
    let RingSpec::Table(t) = &spec else { unreachable!() };
    let tables = Tables {
        structure: Structure::Table,
        order,
        add: tabulate(order, |a, b| t.add[a][b]),
        mul: tabulate(order, |a, b| t.mul[a][b]),
        zero: t.zero,
        one: t.one,
    };
    finish(spec.clone(), tables)
}

struct Tables {
    structure: Structure,
    order: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    zero: Elem,
    one: Elem,
}

fn tabulate(order: usize, f: impl Fn(Elem, Elem) -> Elem) -> Vec<u16> {
    let mut t = Vec::with_capacity(order * order);
    for a in 0..order {
        for b in 0..order {
            t.push(f(a, b) as u16);
        }
    }
    t
}

fn build(spec: &RingSpec) -> Result<Ring, RingError> {
    let tables = match spec {
        RingSpec::Zn(n) => {
            let n = *n;
            if n < 2 {
                return Err(RingError::InvalidSpec(format!("Z({n}) has fewer than 2 elements")));
            }
            Tables {
                structure: Structure::Zn { n },
                order: n,
                add: tabulate(n, |a, b| (a + b) % n),
                mul: tabulate(n, |a, b| (a * b) % n),
                zero: 0,
                one: 1,
            }
        }
        RingSpec::Gf { p, k } => {
            if !gf::is_prime(*p) {
                return Err(RingError::NotPrime(*p));
            }
            if *k == 0 {
                return Err(RingError::InvalidSpec("GF(p,0) is the zero ring".into()));
            }
            let f = GfArith::new(*p, *k);
            let q = f.order();
            // Addition is digitwise, so a direct table is cheap.
            let add = tabulate(q, |a, b| f.add(a, b));
            let mul = tabulate(q, |a, b| f.mul(a, b));
            Tables { structure: Structure::Gf(f), order: q, add, mul, zero: 0, one: 1 }
        }
        RingSpec::Mat { n, base } => {
            let n = *n;
            if n == 0 {
                return Err(RingError::InvalidSpec("M(0, _) is the zero ring".into()));
            }
            let s = build(base)?;
            matrix_tables(n, s, false)
        }
        RingSpec::Tri { n, base } => {
            let n = *n;
            if n < 2 {
                return Err(RingError::InvalidSpec("T(n, _) needs n >= 2".into()));
            }
            if !matches!(**base, RingSpec::Gf { .. }) {
                return Err(RingError::InvalidSpec(format!(
                    "T({n}, {base}): triangular rings are built over GF(q) only"
                )));
            }
            let s = build(base)?;
            matrix_tables(n, s, true)
        }
        RingSpec::Prod(fs) => {
            if fs.is_empty() {
                return Err(RingError::InvalidSpec("empty product".into()));
            }
            let factors = fs.iter().map(build).collect::<Result<Vec<_>, _>>()?;
            product_tables(factors)
        }
        RingSpec::Table(t) => {
            validate_table(t)?;
            let order = t.order;
            Tables {
                structure: Structure::Table,
                order,
                add: tabulate(order, |a, b| t.add[a][b]),
                mul: tabulate(order, |a, b| t.mul[a][b]),
                zero: t.zero,
                one: t.one,
            }
        }
    };
    finish(spec.clone(), tables)
}

fn matrix_tables(n: usize, s: Ring, triangular: bool) -> Tables {
    let positions: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|&(i, j)| !triangular || i <= j).collect();
    let slot = |i: usize, j: usize| {
        if triangular {
            tri_index(n, i, j)
        } else {
            i * n + j
        }
    };
    let q = s.order();
    let digits = positions.len();
    let order = q.pow(digits as u32);
    let decode = |mut x: usize| {
        let mut d = vec![0; digits];
        for e in d.iter_mut().rev() {
            *e = x % q;
            x /= q;
        }
        d
    };
    let encode = |d: &[usize]| d.iter().fold(0, |acc, &e| acc * q + e);
    let all: Vec<Vec<usize>> = (0..order).map(decode).collect();
    let sz = s.zero();
    let entry = |m: &[usize], i: usize, j: usize| {
        if triangular && i > j {
            sz
        } else {
            m[slot(i, j)]
        }
    };
    let add = tabulate(order, |a, b| {
        let c: Vec<usize> = all[a].iter().zip(&all[b]).map(|(&x, &y)| s.add(x, y)).collect();
        encode(&c)
    });
    let mul = tabulate(order, |a, b| {
        let (x, y) = (&all[a], &all[b]);
        let c: Vec<usize> = positions
            .iter()
            .map(|&(i, j)| (0..n).fold(sz, |acc, t| s.add(acc, s.mul(entry(x, i, t), entry(y, t, j)))))
            .collect();
        encode(&c)
    });
    let one_digits: Vec<usize> = positions.iter().map(|&(i, j)| if i == j { s.one() } else { sz }).collect();
    let zero = encode(&vec![sz; digits]);
    let one = encode(&one_digits);
    let base = Box::new(s);
    let structure = if triangular { Structure::Tri { n, base } } else { Structure::Mat { n, base } };
    Tables { structure, order, add, mul, zero, one }
}

fn product_tables(factors: Vec<Ring>) -> Tables {
    let order: usize = factors.iter().map(Ring::order).product();
    let decode = |mut x: usize| {
        let mut d = vec![0; factors.len()];
        for (i, f) in factors.iter().enumerate().rev() {
            d[i] = x % f.order();
            x /= f.order();
        }
        d
    };
    let encode = |d: &[usize]| factors.iter().zip(d).fold(0, |acc, (f, &e)| acc * f.order() + e);
    let all: Vec<Vec<usize>> = (0..order).map(decode).collect();
    let add = tabulate(order, |a, b| {
        let c: Vec<usize> = factors.iter().enumerate().map(|(i, f)| f.add(all[a][i], all[b][i])).collect();
        encode(&c)
    });
    let mul = tabulate(order, |a, b| {
        let c: Vec<usize> = factors.iter().enumerate().map(|(i, f)| f.mul(all[a][i], all[b][i])).collect();
        encode(&c)
    });
    let zero = encode(&factors.iter().map(Ring::zero).collect::<Vec<_>>());
    let one = encode(&factors.iter().map(Ring::one).collect::<Vec<_>>());
    Tables { structure: Structure::Prod { factors }, order, add, mul, zero, one }
}

/// Exhaustive check of the ring axioms on operation tables.
fn validate_table(t: &TableSpec) -> Result<(), RingError> {
    let n = t.order;
    if n < 2 {
        return Err(RingError::InvalidSpec(format!("table ring of order {n}")));
    }
    if n > HARD_MAX_ORDER {
        return Err(RingError::OrderGuardExceeded { order: n as u128, max: HARD_MAX_ORDER });
    }
    for (name, tab) in [("add", &t.add), ("mul", &t.mul)] {
        if tab.len() != n || tab.iter().any(|row| row.len() != n) {
            return Err(RingError::TableFormat(format!("{name} table is not {n}x{n}")));
        }
        if tab.iter().flatten().any(|&e| e >= n) {
            return Err(RingError::TableFormat(format!("{name} table has an entry >= {n}")));
        }
    }
    if t.zero >= n || t.one >= n {
        return Err(RingError::TableFormat("zero/one out of range".into()));
    }
    if t.zero == t.one {
        return Err(RingError::InvalidSpec("zero equals one".into()));
    }
    let (add, mul, z, o) = (&t.add, &t.mul, t.zero, t.one);
    let fail = |law, a, b, c| Err(RingError::TableAxiom { law, a, b, c });
    for a in 0..n {
        if add[a][z] != a || add[z][a] != a {
            return fail("additive identity", a, z, z);
        }
        if mul[a][o] != a || mul[o][a] != a {
            return fail("multiplicative identity", a, o, o);
        }
        if !(0..n).any(|b| add[a][b] == z) {
            return fail("additive inverse", a, z, z);
        }
        if let Some(b) = (0..n).find(|&b| add[a][b] != add[b][a]) {
            return fail("additive commutativity", a, b, b);
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if add[add[a][b]][c] != add[a][add[b][c]] {
                    return fail("additive associativity", a, b, c);
                }
                if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                    return fail("multiplicative associativity", a, b, c);
                }
                if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]] {
                    return fail("left distributivity", a, b, c);
                }
                if mul[add[a][b]][c] != add[mul[a][c]][mul[b][c]] {
                    return fail("right distributivity", a, b, c);
                }
            }
        }
    }
    Ok(())
}

fn finish(spec: RingSpec, t: Tables) -> Result<Ring, RingError> {
    let n = t.order;
    let at = |tab: &Vec<u16>, a: usize, b: usize| tab[a * n + b] as usize;
    let neg: Vec<u16> =
        (0..n).map(|x| (0..n).find(|&y| at(&t.add, x, y) == t.zero).expect("additive inverse") as u16).collect();
    let mut characteristic = 1;
    let mut acc = t.one;
    while acc != t.zero {
        acc = at(&t.add, acc, t.one);
        characteristic += 1;
    }
    let units: Vec<bool> =
        (0..n).map(|x| (0..n).any(|y| at(&t.mul, x, y) == t.one && at(&t.mul, y, x) == t.one)).collect();
    let zero_divisors: Vec<bool> = (0..n)
        .map(|x| (0..n).any(|y| y != t.zero && (at(&t.mul, x, y) == t.zero || at(&t.mul, y, x) == t.zero)))
        .collect();
    if let Some(x) = (0..n).find(|&x| units[x] == zero_divisors[x]) {
        return Err(RingError::Classification(x));
    }
    let mut ring = Ring {
        spec,
        structure: t.structure,
        order: n,
        add: t.add,
        mul: t.mul,
        neg,
        zero: t.zero,
        one: t.one,
        characteristic,
        units,
        zero_divisors,
        in_radical: vec![false; n],
        radical: Vec::new(),
    };
    let brute = radical::brute_force_radical(&ring);
    if let Some(structural) = radical::structural_radical(&ring) {
        if let Some(elem) = (0..n).find(|&x| brute[x] != structural[x]) {
            return Err(RingError::RadicalMismatch { elem, brute: brute[elem], structural: structural[elem] });
        }
    }
    ring.radical = (0..n).filter(|&x| brute[x]).collect();
    ring.in_radical = brute;
    radical::check_ideal(&ring)?;
    Ok(ring)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: usize, k: usize) -> RingSpec {
        RingSpec::Gf { p, k }
    }

    #[test]
    fn z6() {
        let r = make_ring(&RingSpec::Zn(6)).unwrap();
        assert_eq!(r.order(), 6);
        assert_eq!(r.characteristic(), 6);
        assert_eq!(r.add(4, 5), 3);
    }

    #[test]
    fn gf4_field() {
        let r = make_ring(&gf(2, 2)).unwrap();
        assert_eq!(r.order(), 4);
        assert_eq!(r.characteristic(), 2);
        assert_eq!(r.units(), vec![1, 2, 3]);
        assert_eq!(r.mul(2, 2), 3);
    }

    #[test]
    fn m2_gf2_units() {
        let r = make_ring(&RingSpec::mat(2, RingSpec::Zn(2))).unwrap();
        assert_eq!(r.order(), 16);
        assert_eq!(r.units().len(), 6);
        assert_eq!(r.zero_divisor_count(), 10);
        assert_eq!(r.label(r.one()), "[[1,0],[0,1]]");
    }

    #[test]
    fn tri_layout() {
        let r = make_ring(&RingSpec::tri(3, gf(2, 1))).unwrap();
        assert_eq!(r.order(), 64);
        assert_eq!(r.label(r.one()), "[[1,0,0],[0,1,0],[0,0,1]]");
        // upper triangular matrices over GF(2): units have unit diagonal
        assert_eq!(r.units().len(), 8);
    }

    #[test]
    fn guard_and_errors() {
        let big = RingSpec::mat(3, gf(2, 2));
        assert!(matches!(make_ring(&big), Err(RingError::OrderGuardExceeded { .. })));
        assert_eq!(make_ring(&gf(4, 1)).unwrap_err(), RingError::NotPrime(4));
        assert!(make_ring(&RingSpec::Zn(1)).is_err());
        assert!(make_ring(&RingSpec::tri(2, RingSpec::Zn(4))).is_err());
        let opts = RingOptions { max_order: 8 };
        assert!(make_ring_with(&RingSpec::Zn(9), &opts).is_err());
        assert!(make_ring_with(&RingSpec::Zn(8), &opts).is_ok());
    }

    #[test]
    fn table_axiom_failure_reports_triple() {
        // Z_3 addition with a non-associative multiplication
        let add = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]];
        let mut mul = vec![vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 1]];
        mul[2][2] = 2;
        let t = TableSpec { order: 3, add, mul, zero: 0, one: 1, source: None };
        match make_ring(&RingSpec::table(t)) {
            Err(RingError::TableAxiom { .. }) => {}
            other => panic!("expected axiom failure, got {other:?}"),
        }
    }

    #[test]
    fn table_ring_matches_zn() {
        let n = 4;
        let t = TableSpec {
            order: n,
            add: (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect(),
            mul: (0..n).map(|a| (0..n).map(|b| (a * b) % n).collect()).collect(),
            zero: 0,
            one: 1,
            source: None,
        };
        let r = make_ring(&RingSpec::table(t)).unwrap();
        assert_eq!(r.radical(), &[0, 2]);
        assert!(r.is_local());
    }
}
