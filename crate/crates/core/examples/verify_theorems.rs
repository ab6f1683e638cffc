//! The exhaustive and sampled theorem suites over a chosen quantale, then the
//! same suites outside their hypotheses.
//!
//! ```text
//! cargo run --release --example verify_theorems -- "lukasiewicz_chain(2)"
//! ```

use std::sync::Arc;

use vtop::quantale::{Quantale, StandardKind};
use vtop::theorems::{search_counterexample, verify_theorems, SuiteConfig, SuiteOutcome};

fn print(outcomes: &[SuiteOutcome]) {
    for o in outcomes {
        let verdict = match (&o.counterexample, o.exploratory) {
            (None, _) => "holds".to_string(),
            (Some(cx), true) => format!("finding at case {}: {}", cx.case, cx.detail),
            (Some(cx), false) => format!("FAILS at case {}: {}", cx.case, cx.detail),
        };
        let how = if o.exhaustive { "all" } else { "sampled" };
        println!("  {:<22} {:>6} cases ({how}), {:>6} applicable: {verdict}", o.name, o.cases, o.applicable);
    }
}

fn main() {
    let kind: StandardKind = std::env::args().nth(1).as_deref().unwrap_or("lawvere_chain(2)").parse().unwrap();
    let q = Arc::new(Quantale::standard(&kind).unwrap());
    let cfg = SuiteConfig { samples: 100, ..SuiteConfig::default() };
    println!("{kind}:");
    print(&verify_theorems(&q, &cfg));
    println!("outside the hypotheses:");
    print(&search_counterexample(&q, &cfg));
}
