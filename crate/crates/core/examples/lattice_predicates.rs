//! Order-theoretic predicates on the built-in lattice catalog.
//!
//! ```text
//! cargo run --example lattice_predicates
//! ```

use vtop::lattice::{catalog, coprimes, is_ccd, is_coframe, is_sup_generated_by_coprimes, spatial_embedding};

fn main() {
    println!("{:<16} {:>4} {:>8} {:>8} {:>8} {:>5}", "lattice", "size", "coprimes", "sup-gen", "coframe", "ccd");
    for entry in catalog() {
        let l = &entry.lattice;
        let ps = coprimes(l);
        let sup = is_sup_generated_by_coprimes(l);
        assert!(sup.criteria_agree());
        let ccd = is_ccd(l).map(|v| v.holds().to_string()).unwrap_or_else(|e| format!("({e})"));
        println!(
            "{:<16} {:>4} {:>8} {:>8} {:>8} {:>5}",
            entry.name,
            l.size(),
            ps.len(),
            sup.holds(),
            is_coframe(l).holds(),
            ccd
        );
    }

    // N5 is not distributive; its coprimes fail to separate two elements
    let n5 = vtop::FiniteLattice::n5();
    let emb = spatial_embedding(&n5);
    let names: Vec<&str> = coprimes(&n5).into_iter().map(|p| n5.name(p)).collect();
    println!("\nN5 coprimes: {names:?}");
    println!("embedding into sets of coprimes is injective: {}", emb.injective.holds());
    if let Some((a, b)) = emb.injective.witness() {
        println!("  {} and {} have the same image", n5.name(*a), n5.name(*b));
    }
}
