//! The bar operator, level sets and the conditions C0 to C3.
//!
//! ```text
//! cargo run --example bar_and_levels
//! ```

use std::sync::Arc;

use vtop::closure::sample::closure_hull;
use vtop::closure::{
    bar, check_levels, check_t_via_bar, from_levels, lawvere_value, level_set, to_levels, ClosureStructure,
};
use vtop::{Quantale, Subset};

fn print(c: &ClosureStructure) {
    for (a, row) in c.describe() {
        println!("  {a:<8} {}", row.join(" "));
    }
}

fn main() {
    let q = Arc::new(Quantale::lawvere_chain(2).unwrap());
    // distances 0-1 and 1-2 are 1, but 0-2 is infinite: the triangle inequality fails
    let d = [[0, 1, 9], [1, 0, 1], [9, 1, 0]];
    let raw = ClosureStructure::from_fn(q.clone(), 3, |a, x| {
        q.lattice().join_all(a.iter().map(|y| lawvere_value(d[x][y], 2)))
    })
    .unwrap();
    println!("delta over lawvere_chain(2):");
    print(&raw);
    println!("bar:");
    print(&bar(&raw, false));
    println!("T via bar <= c: {:?}", check_t_via_bar(&raw));

    let c = closure_hull(&raw);
    println!("after closing up, T via bar <= c: {:?}", check_t_via_bar(&c));

    for v in q.elements() {
        println!("level {:>3} of {{0}}: {}", q.name(v), level_set(&c, v, Subset(0b001)));
    }

    let f = to_levels(&c);
    println!("C0-C3 on the level family: {}", check_levels(&f).all_passed());
    assert_eq!(from_levels(&f).unwrap(), c);

    // break one level set and ask which condition notices
    let mut broken = f.clone();
    let k = q.unit();
    let a = Subset(0b011);
    broken.set_level(k, a, Subset(f.level(k, a).0 & !1));
    for e in check_levels(&broken).failures() {
        println!("{} fails: {}", e.name, e.witness.as_ref().unwrap());
    }
}
