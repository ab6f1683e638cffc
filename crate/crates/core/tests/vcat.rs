mod common;

use std::sync::Arc;

use common::*;
use proptest::prelude::*;
use vtop::quantale::Quantale;
use vtop::vcat::{
    check_closure_criteria, check_composites_and_recovery, closure_functor, decode_function, encode_function, f_shriek,
    power_category, pset_category, self_category, yoneda, VCatError, VCategory,
};
use vtop::{Elem, Subset};

/// `[v, w]` as the join of everything `u` with `u (x) v <= w`.
fn residual(q: &Quantale, v: Elem, w: Elem) -> Elem {
    join_all(q, q.elements().filter(|&u| q.leq(q.tensor(u, v), w)))
}

/// Smallest `V`-category above a raw hom table.
fn close(q: &Arc<Quantale>, n: usize, mut h: Vec<Elem>) -> VCategory {
    for x in 0..n {
        h[x * n + x] = q.join(h[x * n + x], q.unit());
    }
    loop {
        let mut grown = false;
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let t = q.join(h[x * n + z], q.tensor(h[y * n + z], h[x * n + y]));
                    if t != h[x * n + z] {
                        h[x * n + z] = t;
                        grown = true;
                    }
                }
            }
        }
        if !grown {
            return VCategory::new(q.clone(), n, h).unwrap();
        }
    }
}

fn quantales() -> Vec<Arc<Quantale>> {
    let mut v: Vec<Arc<Quantale>> = small_catalog().into_iter().map(|(_, q)| q).collect();
    v.push(arc(Quantale::chain_frame(3).unwrap()));
    v.push(arc(Quantale::lukasiewicz_chain(2).unwrap()));
    v
}

#[test]
fn self_and_power_categories_are_categories() {
    for q in quantales() {
        let s = self_category(&q);
        s.check_laws().unwrap();
        for v in q.elements() {
            for w in q.elements() {
                assert_eq!(s.hom(v.idx(), w.idx()), residual(&q, v, w));
            }
        }
        let p = power_category(&q, 2).unwrap();
        p.check_laws().unwrap();
        for i in 0..p.size() {
            assert_eq!(encode_function(&q, &decode_function(&q, 2, i)), i);
        }
    }
}

#[test]
fn powerset_homs() {
    for q in quantales() {
        let p = pset_category(&q, 3).unwrap();
        let (kk, kb) = (residual(&q, q.unit(), q.unit()), residual(&q, q.unit(), q.bottom()));
        for a in (0..8).map(Subset) {
            for b in (0..8).map(Subset) {
                let expected = meet_all(&q, a.iter().map(|x| if b.contains(x) { kk } else { kb }));
                assert_eq!(p.hom(a.0 as usize, b.0 as usize), expected, "{a} {b}");
            }
        }
        if q.classify().integral && q.size() > 1 {
            assert_eq!(p.hom(1, 3), q.top());
            assert_eq!(p.hom(3, 1), q.bottom());
        }
    }
}

#[test]
fn restriction_is_functorial() {
    let q = arc(Quantale::lawvere_chain(1).unwrap());
    let maps32 = all_maps(3, 2);
    let maps22 = all_maps(2, 2);
    for f in &maps32 {
        for g in &maps22 {
            let gf: Vec<usize> = f.iter().map(|&y| g[y]).collect();
            let whole = f_shriek(&q, &gf, 2).unwrap();
            let fs = f_shriek(&q, f, 2).unwrap();
            let gs = f_shriek(&q, g, 2).unwrap();
            for s in 0..whole.domain().size() {
                assert_eq!(whole.apply(s), fs.apply(gs.apply(s)));
            }
        }
    }
    assert_eq!(f_shriek(&q, &[0, 2], 2).unwrap_err(), VCatError::MapOutOfRange { x: 1 });
}

#[test]
fn characterization_over_all_two_point_tables() {
    for q in quantales() {
        for c in every_table(&q, 2) {
            let p = check_closure_criteria(&c);
            assert!(p.agree(), "{p:?}");
            assert_eq!(p.i, reflexive(&c) && transitive(&c));
            // condition (iii) straight from the residual oracle
            let n = 2;
            let hom = |s: &[Elem], t: &[Elem]| meet_all(&q, (0..n).map(|x| residual(&q, s[x], t[x])));
            let disc = |b: Subset| -> Vec<Elem> {
                (0..n).map(|x| if b.contains(x) { q.unit() } else { q.bottom() }).collect()
            };
            let iii =
                Subset::all(n).all(|a| Subset::all(n).all(|b| hom(&disc(b), c.row(a)) == hom(c.row(b), c.row(a))));
            assert_eq!(p.iii, iii);
            let r = check_composites_and_recovery(&c);
            assert_eq!(r.passed("composites-agree"), Some(p.i));
            assert!(r.entries.iter().filter(|e| e.name != "composites-agree").all(|e| e.passed), "{r:?}");
            if p.i {
                assert!(closure_functor(&c).is_ok());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn yoneda_is_fully_faithful(qi in 0usize..7, n in 1usize..4, raw in prop::collection::vec(0usize..64, 9)) {
        let q = &quantales()[qi];
        let h: Vec<Elem> = raw[..n * n].iter().map(|&i| Elem::new(i % q.size())).collect();
        let c = Arc::new(close(q, n, h));
        let y = yoneda(&c).unwrap();
        prop_assert!(y.is_fully_faithful());
        for x in 0..n {
            for z in 0..n {
                let col = |w: usize| c.column(w);
                let via = meet_all(q, (0..n).map(|t| residual(q, col(x)[t], col(z)[t])));
                prop_assert_eq!(via, c.hom(x, z));
            }
        }
    }
}
