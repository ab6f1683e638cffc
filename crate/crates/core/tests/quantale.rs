mod common;

use std::sync::OnceLock;

use common::brute_quantale_count;
use proptest::prelude::*;
use vtop::lattice::{catalog, FiniteLattice};
use vtop::quantale::{enumerate_quantales, Monoid, Quantale, QuantaleError, StandardKind};
use vtop::Elem;

fn standard_zoo() -> &'static [Quantale] {
    static ZOO: OnceLock<Vec<Quantale>> = OnceLock::new();
    ZOO.get_or_init(build_zoo)
}

fn build_zoo() -> Vec<Quantale> {
    let mut v = vec![
        Quantale::trivial(),
        Quantale::two(),
        Quantale::chain_frame(4).unwrap(),
        Quantale::lawvere_chain(3).unwrap(),
        Quantale::lukasiewicz_chain(3).unwrap(),
        Quantale::frame(FiniteLattice::boolean(2).unwrap()).unwrap(),
        Quantale::free_on_monoid(&Monoid::idempotent()).unwrap(),
        Quantale::free_on_monoid(&Monoid::cyclic(2).unwrap()).unwrap(),
        Quantale::free_on_monoid(&Monoid::symmetric3()).unwrap(),
        Quantale::product(&Quantale::two(), &Quantale::lawvere_chain(1).unwrap()).unwrap(),
    ];
    for l in [FiniteLattice::m3(), FiniteLattice::n5()] {
        v.extend(enumerate_quantales(&l, 3).unwrap().quantales);
    }
    v
}

#[test]
fn enumeration_matches_brute_force() {
    let cases = [
        ("2-chain", FiniteLattice::chain(2).unwrap(), 1),
        ("3-chain", FiniteLattice::chain(3).unwrap(), 3),
        ("2x2", FiniteLattice::boolean(2).unwrap(), 9),
        ("M3", FiniteLattice::m3(), 39),
        ("N5", FiniteLattice::n5(), 26),
    ];
    for (name, l, frozen) in cases {
        let e = enumerate_quantales(&l, usize::MAX).unwrap();
        assert_eq!(e.total, brute_quantale_count(&l), "{name}");
        assert_eq!(e.total, frozen, "{name}");
        assert_eq!(e.quantales.len(), e.total);
    }
}

#[test]
fn enumeration_is_sorted_and_distinct() {
    let e = enumerate_quantales(&FiniteLattice::m3(), usize::MAX).unwrap();
    let keys: Vec<(Vec<Elem>, Elem)> = e.quantales.iter().map(|q| (q.tensor_table().to_vec(), q.unit())).collect();
    assert!(keys.windows(2).all(|w| w[0] < w[1]));
    let limited = enumerate_quantales(&FiniteLattice::m3(), 5).unwrap();
    assert_eq!(limited.total, 39);
    assert_eq!(limited.quantales, e.quantales[..5]);
}

#[test]
fn non_spatial_quantales_exist() {
    let e = enumerate_quantales(&FiniteLattice::m3(), usize::MAX).unwrap();
    assert!(e.quantales.iter().all(|q| !q.is_spatial()));
    assert!(e.quantales.iter().any(|q| q.classify().commutative));
}

#[test]
fn enumeration_cap() {
    let big = FiniteLattice::chain(6).unwrap();
    assert!(enumerate_quantales(&big, 1).is_err());
}

#[test]
fn residual_adjunction_on_the_zoo() {
    for q in standard_zoo() {
        for u in q.elements() {
            for v in q.elements() {
                for w in q.elements() {
                    assert_eq!(q.leq(q.tensor(u, v), w), q.leq(u, q.residual(v, w)));
                }
            }
        }
    }
}

#[test]
fn lawvere_chain_arithmetic() {
    // index 0 is distance infinity, index i is distance n + 1 - i
    let q = Quantale::lawvere_chain(2).unwrap();
    let d = |name: &str| q.lattice().element(name).unwrap();
    assert_eq!(q.unit(), d("0"));
    assert_eq!(q.bottom(), d("inf"));
    assert_eq!(q.tensor(d("1"), d("1")), d("2"));
    assert_eq!(q.tensor(d("1"), d("2")), d("inf"));
    // [v, w] is truncated subtraction w - v
    assert_eq!(q.residual(d("1"), d("2")), d("1"));
    assert_eq!(q.residual(d("2"), d("1")), d("0"));
}

#[test]
fn free_quantale_on_a_monoid() {
    let q = Quantale::free_on_monoid(&Monoid::idempotent()).unwrap();
    let s = |name: &str| q.lattice().element(name).unwrap();
    assert_eq!(q.unit(), s("{e}"));
    assert_eq!(q.tensor(s("{a}"), s("{e,a}")), s("{a}"));
    let c = q.classify();
    assert!(!c.integral && c.commutative && c.lattice_spatial);
    assert!(q.monoid().is_some());
}

#[test]
fn invalid_tables_are_rejected() {
    let l = FiniteLattice::chain(3).unwrap();
    // unit law broken
    let e = Quantale::from_rows(l.clone(), &[vec![0, 0, 0], vec![0, 1, 1], vec![0, 1, 1]], 2).unwrap_err();
    assert!(matches!(e, QuantaleError::UnitLawFails(_)), "{e:?}");
    // join preservation broken: bottom does not absorb
    let e = Quantale::from_rows(l, &[vec![1, 1, 0], vec![1, 1, 1], vec![0, 1, 2]], 2).unwrap_err();
    assert!(matches!(e, QuantaleError::BottomNotAbsorbing(_) | QuantaleError::JoinNotPreserved { .. }), "{e:?}");
}

#[test]
fn standard_kinds_roundtrip_through_text() {
    for s in [
        "trivial",
        "two",
        "chain_frame(3)",
        "lawvere_chain(2)",
        "lukasiewicz_chain(4)",
        "free_on_monoid(s3)",
        "product(two,lawvere_chain(1))",
    ] {
        let k: StandardKind = s.parse().unwrap();
        assert_eq!(k.to_string(), s);
        assert!(Quantale::standard(&k).is_ok());
    }
}

#[test]
fn catalog_lattices_carry_quantales() {
    // a finite lattice is a quantale under its meet exactly when it is distributive
    for entry in catalog() {
        let frame = Quantale::frame(entry.lattice.clone());
        assert_eq!(frame.is_ok(), vtop::lattice::is_coframe(&entry.lattice).holds(), "{}", entry.name);
    }
}

fn zoo_index() -> impl Strategy<Value = usize> {
    0..standard_zoo().len()
}

proptest! {
    #[test]
    fn tensor_laws(i in zoo_index(), a in 0usize..64, b in 0usize..64, c in 0usize..64) {
        let q = &standard_zoo()[i];
        let n = q.size();
        let (a, b, c) = (Elem::new(a % n), Elem::new(b % n), Elem::new(c % n));
        prop_assert_eq!(q.tensor(q.tensor(a, b), c), q.tensor(a, q.tensor(b, c)));
        prop_assert_eq!(q.tensor(a, q.join(b, c)), q.join(q.tensor(a, b), q.tensor(a, c)));
        prop_assert_eq!(q.tensor(q.join(b, c), a), q.join(q.tensor(b, a), q.tensor(c, a)));
        prop_assert_eq!(q.tensor(q.unit(), a), a);
        prop_assert_eq!(q.tensor(a, q.bottom()), q.bottom());
        // [v, -] is monotone and [-, w] antitone
        prop_assert!(!q.leq(b, c) || q.leq(q.residual(a, b), q.residual(a, c)));
        prop_assert!(!q.leq(b, c) || q.leq(q.residual(c, a), q.residual(b, a)));
        prop_assert!(q.leq(q.tensor(q.residual(b, c), b), c));
    }
}
