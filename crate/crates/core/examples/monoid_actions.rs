//! Closure spaces over the free quantale on a monoid seen as lax monoid actions on subsets.
//!
//! ```text
//! cargo run --example monoid_actions
//! ```

use std::sync::Arc;

use vtop::closure::{action_to_closure, check_axioms, monoid_action_view, ClosureStructure};
use vtop::quantale::Monoid;
use vtop::{Quantale, Subset};

fn main() {
    let m = Monoid::idempotent();
    let q = Arc::new(Quantale::free_on_monoid(&m).unwrap());
    let s = |name: &str| q.lattice().element(name).unwrap();
    // points of A get {e,a}, points to the right of A get {a}, the rest nothing
    let c = ClosureStructure::from_fn(q.clone(), 3, |a, x| {
        if a.contains(x) {
            s("{e,a}")
        } else if a.iter().any(|y| y < x) {
            s("{a}")
        } else {
            s("{}")
        }
    })
    .unwrap();
    assert!(check_axioms(&c).passed("T").unwrap());
    let act = monoid_action_view(&c).unwrap();
    println!("monoid {:?}", act.monoid().names());
    for a in Subset::all(3) {
        let images: Vec<String> = (0..act.monoid().size()).map(|alpha| act.act(a, alpha).to_string()).collect();
        println!("  {a:<8} -> {}", images.join("  "));
    }
    println!("laws: {}", act.check_laws().all_passed());
    assert_eq!(action_to_closure(&act), c);

    // shrink one image so the identity no longer acts inflationarily
    let mut broken = act.clone();
    broken.set(Subset(0b010), 0, Subset::EMPTY);
    for e in broken.check_laws().failures() {
        println!("{} fails: {}", e.name, e.witness.as_ref().unwrap());
    }
}
