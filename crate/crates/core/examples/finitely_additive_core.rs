//! The finitely additive core of a closure space and its universal property.
//!
//! ```text
//! cargo run --example finitely_additive_core
//! ```

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use vtop::closure::sample::{random_closure_space, random_continuous_map};
use vtop::closure::{check_axioms, check_core_theorem, core, core_with_covers, CoverFamily};
use vtop::quantale::Monoid;
use vtop::Quantale;

fn main() {
    let q = Arc::new(Quantale::free_on_monoid(&Monoid::idempotent()).unwrap());
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let c = random_closure_space(&q, 3, &mut rng);
    let plus = core(&c).unwrap();
    println!("{:<8} {:<24} core", "A", "c");
    for ((a, row), (_, prow)) in c.describe().into_iter().zip(plus.describe()) {
        println!("{:<8} {:<24} {}", a.to_string(), row.join(" "), prow.join(" "));
    }
    let axioms = check_axioms(&c);
    println!(
        "c additive: {}, core additive: {}",
        axioms.passed("A").unwrap(),
        check_axioms(&plus).passed("A").unwrap()
    );

    // allowing empty parts in covers changes nothing
    let all = core_with_covers(&c, CoverFamily::AllParts).unwrap();
    println!("covers with empty parts give the same table: {}", all == plus);

    let probes: Vec<_> = (0..5).map(|m| random_continuous_map(&c, 1 + m % 3, &mut rng).unwrap()).collect();
    let refs: Vec<_> = probes.iter().map(|(d, g)| (d, g.as_slice())).collect::<Vec<_>>();
    let report = check_core_theorem(&c, &refs).unwrap();
    for e in &report.entries {
        println!("  {:<24} {}", e.name, if e.passed { "ok" } else { "FAILS" });
    }
}
