//! Checking R, T and A on hand-built structures, with witnesses for failures.
//!
//! ```text
//! cargo run --example closure_axioms
//! ```

use std::sync::Arc;

use vtop::closure::{check_axioms, check_continuous, ClosureStructure, SpaceMap};
use vtop::{Quantale, Subset};

fn show(name: &str, c: &ClosureStructure) {
    let r = check_axioms(c);
    println!("{name}:");
    for e in &r.entries {
        match &e.witness {
            None => println!("  {:<18} ok", e.name),
            Some(w) => println!("  {:<18} FAILS  {w}", e.name),
        }
    }
}

fn main() {
    let two = Arc::new(Quantale::two());
    let bit = |b: bool| vtop::Elem::new(b as usize);

    // closure of A in the Sierpinski space on {s, t}: {t} is closed
    let sierpinski =
        ClosureStructure::from_fn(two.clone(), 2, |a, x| bit(!a.is_empty() && (a.contains(0) || x == 1))).unwrap();
    show("sierpinski", &sierpinski);

    // every pair of points closes to everything, singletons are closed: not additive
    let pairs = ClosureStructure::from_fn(two.clone(), 3, |a, x| bit(a.len() >= 2 || a.contains(x))).unwrap();
    show("pairs-close-up", &pairs);

    // {0} reaches 1 and {1} reaches 2, but {0} does not reach 2: not transitive
    let steps = ClosureStructure::from_fn(two.clone(), 3, |a, x| {
        let reach = a.0 | (a.0 << 1 & 0b111);
        bit(reach >> x & 1 == 1)
    })
    .unwrap();
    show("one-step", &steps);

    let discrete = vtop::closure::discrete(two, 2);
    let id = SpaceMap::identity(&sierpinski, &discrete).unwrap();
    let r = check_continuous(&id);
    println!("identity sierpinski -> discrete continuous: {}", r.all_passed());
    for e in r.failures() {
        println!("  {}", e.witness.as_ref().unwrap());
    }
    let t = Subset(0b10);
    let row: Vec<&str> = sierpinski.row(t).iter().map(|&v| sierpinski.quantale().name(v)).collect();
    println!("closure of {t} in sierpinski: {row:?}");
}
