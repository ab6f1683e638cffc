//! Initial structures and topological limits for a family of maps.
//!
//! ```text
//! cargo run --example initial_and_limits
//! ```

use std::sync::Arc;

use vtop::closure::{check_axioms, initial_structure, vtop_limit, ClosureStructure, Source};
use vtop::{Elem, Quantale};

fn print(name: &str, c: &ClosureStructure) {
    println!("{name}:");
    for (a, row) in c.describe() {
        println!("  {a:<8} {}", row.join(" "));
    }
    let r = check_axioms(c);
    println!("  R {} T {} A {}", r.passed("R").unwrap(), r.passed("T").unwrap(), r.passed("A").unwrap());
}

fn main() {
    let q = Arc::new(Quantale::chain_frame(3).unwrap());
    let (bot, mid, top) = (Elem(0), Elem(1), Elem(2));

    // a three-point space where 0 is half-close to {1} and 2 is close to {0, 1}
    let y = ClosureStructure::from_fn(q.clone(), 3, |a, x| {
        if a.contains(x) {
            top
        } else if a.is_empty() {
            bot
        } else if x == 2 && a.contains(0) && a.contains(1) {
            top
        } else if x == 0 && a.contains(1) {
            mid
        } else {
            bot
        }
    })
    .unwrap();
    print("Y", &y);

    // pull Y back along two maps from a two-point set
    let g1 = [0, 1];
    let g2 = [2, 1];
    let init = initial_structure(&q, 2, &[Source::new(&g1, &y), Source::new(&g2, &y)]).unwrap();
    print("initial structure on {0, 1}", &init);
    let limit = vtop_limit(&q, 2, &[Source::new(&g1, &y), Source::new(&g2, &y)]).unwrap();
    print("topological limit", &limit);

    print("limit of the empty family", &vtop_limit(&q, 2, &[]).unwrap());
}
