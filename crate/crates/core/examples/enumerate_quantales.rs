//! Counts every quantale structure on a few small lattices, M3 and N5 included.
//!
//! ```text
//! cargo run --release --example enumerate_quantales
//! ```

use vtop::lattice::FiniteLattice;
use vtop::quantale::enumerate_quantales;

fn main() {
    let lattices = [
        ("2-chain", FiniteLattice::chain(2).unwrap()),
        ("3-chain", FiniteLattice::chain(3).unwrap()),
        ("4-chain", FiniteLattice::chain(4).unwrap()),
        ("2x2", FiniteLattice::boolean(2).unwrap()),
        ("M3", FiniteLattice::m3()),
        ("N5", FiniteLattice::n5()),
    ];
    for (name, l) in lattices {
        let e = enumerate_quantales(&l, usize::MAX).unwrap();
        let commutative = e.quantales.iter().filter(|q| q.classify().commutative).count();
        let integral = e.quantales.iter().filter(|q| q.classify().integral).count();
        println!("{name:<8} {:>4} quantales, {commutative:>4} commutative, {integral:>4} integral", e.total);
    }

    // a commutative one on M3, with its unit
    let e = enumerate_quantales(&FiniteLattice::m3(), usize::MAX).unwrap();
    let q = e.quantales.iter().find(|q| q.classify().commutative && !q.classify().integral).unwrap();
    println!("\nM3 with unit {}:", q.name(q.unit()));
    for a in q.elements() {
        let row: Vec<&str> = q.elements().map(|b| q.name(q.tensor(a, b))).collect();
        println!("  {:>3} | {}", q.name(a), row.join(" "));
    }
}
