//! The standard quantales, their tensor tables and residuals.
//!
//! ```text
//! cargo run --example quantale_zoo
//! ```

use vtop::quantale::{Quantale, StandardKind};

fn print_table(q: &Quantale, title: &str, f: impl Fn(vtop::Elem, vtop::Elem) -> vtop::Elem) {
    let w = q.elements().map(|e| q.name(e).len()).max().unwrap_or(1).max(3);
    print!("{title:>w$} |");
    for b in q.elements() {
        print!(" {:>w$}", q.name(b));
    }
    println!();
    for a in q.elements() {
        print!("{:>w$} |", q.name(a));
        for b in q.elements() {
            print!(" {:>w$}", q.name(f(a, b)));
        }
        println!();
    }
}

fn main() {
    for kind in ["two", "chain_frame(3)", "lawvere_chain(3)", "lukasiewicz_chain(3)", "free_on_monoid(idempotent)"] {
        let k: StandardKind = kind.parse().unwrap();
        let q = Quantale::standard(&k).unwrap();
        let c = q.classify();
        println!(
            "== {k}: {} elements, unit {}, integral {}, commutative {}, spatial {}",
            q.size(),
            q.name(q.unit()),
            c.integral,
            c.commutative,
            c.lattice_spatial
        );
        print_table(&q, "(x)", |a, b| q.tensor(a, b));
        print_table(&q, "[,]", |a, b| q.residual(a, b));
        println!();
    }
}
