//! V-categories, the Yoneda functor, and closure structures as maps `PX -> V^X`.
//!
//! ```text
//! cargo run --example yoneda_characterization
//! ```

use std::sync::Arc;

use vtop::closure::sample::table_from_index;
use vtop::vcat::{check_closure_criteria, check_composites_and_recovery, closure_functor, yoneda, VCategory};
use vtop::Quantale;

fn main() {
    let q = Arc::new(Quantale::lawvere_chain(2).unwrap());
    // a three-point generalized metric: hom(x, y) is the distance from x to y
    let dist = [[0, 1, 2], [2, 0, 1], [2, 2, 0]];
    let cat = Arc::new(VCategory::from_fn(q.clone(), 3, |x, y| vtop::closure::lawvere_value(dist[x][y], 2)).unwrap());
    let y = yoneda(&cat).unwrap();
    println!("yoneda sends points to objects {:?} of V^X ({} objects)", y.point_map(), y.codomain().size());
    println!("fully faithful: {}", y.is_fully_faithful());

    // which tables on two points over the 2-chain are closure structures
    let two = Arc::new(Quantale::two());
    let mut closure = 0;
    for i in 0..256 {
        let c = table_from_index(&two, 2, i);
        let p = check_closure_criteria(&c);
        assert!(p.agree());
        let r = check_composites_and_recovery(&c);
        assert_eq!(r.passed("composites-agree"), Some(p.i));
        if p.i {
            closure += 1;
            assert!(closure_functor(&c).is_ok());
        }
    }
    println!("{closure} of 256 tables on two points are closure structures; all three criteria agree on each");
}
