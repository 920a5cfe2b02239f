use std::time::Instant;

use totring::graph::TotalGraph;
use totring::hamilton::*;
use totring::ring::{make_ring, quotient_mod_radical, Ring, RingSpec};

fn gf(p: usize, k: usize) -> RingSpec {
    RingSpec::Gf { p, k }
}

fn ring(spec: RingSpec) -> Ring {
    make_ring(&spec).unwrap()
}

#[test]
fn constructed_cycles_verify() {
    let cases = [
        (RingSpec::mat(2, gf(2, 1)), 16),
        (RingSpec::mat(2, gf(3, 1)), 81),
        (RingSpec::mat(3, gf(2, 1)), 512),
        (RingSpec::mat(2, gf(2, 2)), 256),
        (RingSpec::Prod(vec![RingSpec::Zn(2), RingSpec::Zn(2)]), 4),
        (RingSpec::Prod(vec![RingSpec::Zn(2), RingSpec::Zn(3)]), 6),
        (RingSpec::Prod(vec![RingSpec::Zn(3), RingSpec::Zn(3)]), 9),
        (RingSpec::Zn(12), 12),
        (RingSpec::Zn(6), 6),
        (RingSpec::tri(2, gf(2, 1)), 8),
        (RingSpec::tri(2, gf(3, 1)), 27),
        (RingSpec::mat(2, RingSpec::Zn(4)), 256),
        (RingSpec::Prod(vec![RingSpec::mat(2, gf(2, 1)), gf(3, 1)]), 48),
        (RingSpec::Prod(vec![gf(2, 2), gf(2, 1)]), 8),
        (RingSpec::Prod(vec![RingSpec::Zn(3), RingSpec::Zn(5), RingSpec::Zn(2)]), 30),
        (RingSpec::Prod(vec![RingSpec::Zn(9), RingSpec::Zn(3)]), 27),
    ];
    for (spec, len) in cases {
        let r = ring(spec.clone());
        let t = Instant::now();
        let c = ham_cycle(&r).unwrap_or_else(|e| panic!("{spec}: {e}"));
        assert!(t.elapsed().as_secs_f64() < 5.0, "{spec} too slow");
        assert_eq!(c.seq.len(), len, "{spec}");
        assert_eq!(verify_cycle(&r, &c.seq), Ok(()), "{spec}");
    }
}

#[test]
fn local_rings_rejected() {
    for spec in [RingSpec::Zn(4), RingSpec::Zn(9), gf(3, 2), RingSpec::Zn(2)] {
        let r = ring(spec);
        assert!(matches!(ham_cycle(&r), Err(HamError::LocalRing)));
        assert!(!TotalGraph::build(&r).is_connected());
    }
}

#[test]
fn methods_follow_structure() {
    let m = ring(RingSpec::mat(2, gf(2, 1)));
    assert_eq!(ham_cycle(&m).unwrap().method, HamMethod::Matrix);
    let t = ring(RingSpec::tri(2, gf(2, 1)));
    assert_eq!(ham_cycle(&t).unwrap().method, HamMethod::QuotientLift { quotient_order: 4, radical_order: 2 });
    let m4 = ring(RingSpec::mat(2, RingSpec::Zn(4)));
    assert_eq!(ham_cycle(&m4).unwrap().method, HamMethod::QuotientLift { quotient_order: 16, radical_order: 16 });
}

#[test]
fn product_examples() {
    let v4 = ring(RingSpec::Prod(vec![RingSpec::Zn(2), RingSpec::Zn(2)]));
    assert_eq!(ham_product(&v4).unwrap().seq, vec![0, 2, 3, 1]);
    let z33 = ring(RingSpec::Prod(vec![RingSpec::Zn(3), RingSpec::Zn(3)]));
    let c = ham_product(&z33).unwrap();
    assert_eq!(verify_cycle(&z33, &c.seq), Ok(()));
    // Odd/odd case with a nontrivial 2-torsion tail in S.
    let r = AdditiveGroup::of(&ring(RingSpec::Zn(5)));
    let s = AdditiveGroup::of(&ring(RingSpec::Zn(6)));
    let seq = product_sequence(&r, &s);
    let p = ring(RingSpec::Prod(vec![RingSpec::Zn(5), RingSpec::Zn(6)]));
    let ids: Vec<usize> = seq.iter().map(|&(a, b)| a * 6 + b).collect();
    assert_eq!(verify_cycle(&p, &ids), Ok(()));
    assert!(ham_product(&ring(RingSpec::Zn(6))).is_err());
}

#[test]
fn lift_examples() {
    let t = ring(RingSpec::tri(2, gf(2, 1)));
    let q = quotient_mod_radical(&t).unwrap();
    let qc = search_ham(&TotalGraph::build(q.ring())).unwrap();
    let c = lift_mod_radical(&q, &qc).unwrap();
    assert_eq!(c.seq.len(), 8);
    assert_eq!(verify_cycle(&t, &c.seq), Ok(()));
    // Each block projects back onto the quotient cycle.
    for block in c.seq.chunks(qc.len()) {
        assert_eq!(block.iter().map(|&x| q.project(x)).collect::<Vec<_>>(), qc);
    }

    let z4 = ring(RingSpec::Zn(4));
    let q = quotient_mod_radical(&z4).unwrap();
    assert!(matches!(lift_mod_radical(&q, &[0, 1]), Err(HamError::InvalidInput(_))));
}

#[test]
fn search_examples() {
    let z6 = ring(RingSpec::Zn(6));
    let c = search_ham(&TotalGraph::build(&z6)).unwrap();
    assert_eq!(verify_cycle(&z6, &c), Ok(()));
    let v4 = ring(RingSpec::Prod(vec![RingSpec::Zn(2), RingSpec::Zn(2)]));
    let c = search_ham(&TotalGraph::build(&v4)).unwrap();
    assert_eq!(verify_cycle(&v4, &c), Ok(()));
    let z4 = ring(RingSpec::Zn(4));
    assert!(matches!(search_ham(&TotalGraph::build(&z4)), Err(HamError::SearchExhausted { .. })));
}

#[test]
fn snake_layers_char2() {
    let r = ring(RingSpec::mat(2, gf(2, 1)));
    let first = MatrixIndexSet::first(2);
    let p = extend_layer_char2(&r, &HamPath::new(vec![0]), first).unwrap();
    assert_eq!(p.seq, vec![0, first.scaled_unit(&r, 1)]);

    let r4 = ring(RingSpec::mat(2, gf(2, 2)));
    let p = extend_layer_char2(&r4, &HamPath::new(vec![0]), first).unwrap();
    assert_eq!(p.seq, (0..4).map(|x| first.scaled_unit(&r4, x)).collect::<Vec<_>>());

    let mut path = HamPath::new(vec![0]);
    for pos in MatrixIndexSet::all(2) {
        path = extend_layer_char2(&r, &path, pos).unwrap();
        let mut got = path.seq.clone();
        got.sort_unstable();
        assert_eq!(got, pos.a_bar_members(&r));
        assert!(pos.in_c(&r, *path.seq.last().unwrap(), 0));
    }
    assert_eq!(path.seq.len(), 16);
}

#[test]
fn snake_layers_odd() {
    let r = ring(RingSpec::mat(2, gf(3, 1)));
    let first = MatrixIndexSet::first(2);
    let p = extend_layer_odd(&r, &HamPath::new(vec![0]), first).unwrap();
    let mut got = p.seq.clone();
    got.sort_unstable();
    assert_eq!(got, vec![0, first.scaled_unit(&r, 1), first.scaled_unit(&r, 2)]);

    let mut path = HamPath::new(vec![0]);
    for pos in MatrixIndexSet::all(2) {
        path = extend_layer_odd(&r, &path, pos).unwrap();
        let end = *path.seq.last().unwrap();
        let d = pos.entry(&r, end, pos.k, pos.l);
        assert!(d != 0 && pos.in_c_bar(&r, end, d));
        assert_eq!(path.seq.len(), 3usize.pow(pos.len() as u32 + 1));
    }
    assert_eq!(path.seq.len(), 81);
    assert!(path.notes.iter().all(|n| !matches!(n, HamNote::SnakeParity { t, .. } if t % 2 == 1)));

    // A path ending on the zero class is refused.
    let second = first.next().unwrap();
    let bad = HamPath::new(vec![0, first.scaled_unit(&r, 1), 0]);
    assert!(extend_layer_odd(&r, &bad, second).is_err());
    let zero_end = HamPath::new(vec![0, first.scaled_unit(&r, 1), first.scaled_unit(&r, 2)]);
    let mut reversed = zero_end.clone();
    reversed.seq = vec![0, first.scaled_unit(&r, 2), first.scaled_unit(&r, 1)];
    assert!(extend_layer_odd(&r, &zero_end, second).is_ok());
    assert!(extend_layer_odd(&r, &reversed, second).is_ok());
}

#[test]
fn deterministic() {
    let r = ring(RingSpec::Zn(12));
    assert_eq!(ham_cycle(&r).unwrap(), ham_cycle(&r).unwrap());
}
