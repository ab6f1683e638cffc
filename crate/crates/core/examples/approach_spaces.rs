//! Point-set distances of a finite metric as a closure structure over a truncated Lawvere chain.
//!
//! ```text
//! cargo run --example approach_spaces
//! ```

use vtop::closure::{approach_from_metric, check_axioms, core};

fn main() {
    // four points on a line at 0, 1, 2, 3; distances above 2 read as infinite
    let d: Vec<Vec<u32>> = (0..4).map(|x: i32| (0..4).map(|y: i32| (x - y).unsigned_abs()).collect()).collect();
    let c = approach_from_metric(&d, 2).unwrap();
    let q = c.quantale();
    println!("delta(x, A) over {}:", q.lattice().names().join(" > "));
    for (a, row) in c.describe() {
        println!("  {a:<10} {}", row.join(" "));
    }
    let r = check_axioms(&c);
    for e in &r.entries {
        println!("{:<18} {}", e.name, if e.passed { "ok" } else { "FAILS" });
    }
    println!("already its own core: {}", core(&c).unwrap() == c);

    let bad = vec![vec![0, 1, 3], vec![1, 0, 1], vec![3, 1, 0]];
    match approach_from_metric(&bad, 3) {
        Ok(_) => println!("accepted?"),
        Err(e) => println!("rejected: {e}"),
    }
}
