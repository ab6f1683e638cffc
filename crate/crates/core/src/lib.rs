//! Exact computation with finite quantales and quantale-valued closure and
//! topological spaces.
//!
//! A quantale `V` here is a finite lattice with an associative, join-preserving
//! tensor and a unit `k`. A `V`-valued closure space on a finite set `X` is a
//! table `c: PX -> V^X` that is reflexive (`k <= (cA)(x)` for `x` in `A`) and
//! transitive; it is topological when it also preserves finite joins.
//!
//! The crate is organised by layer:
//!
//! * [`lattice`]: finite lattices and their order-theoretic predicates
//!   (coprimes, distributivity, totally-below, spatial embedding);
//! * [`quantale`]: quantale validation, residuation, standard constructors and
//!   exhaustive enumeration;
//! * [`closure`]: closure structures, axiom checking, the bar operator, level
//!   families, the finitely additive core, initial structures and limits;
//! * [`vcat`]: `V`-categories, powers, the Yoneda functor and the equational
//!   characterization of closure structures;
//! * [`theorems`]: exhaustive and sampled verification suites;
//! * [`format`], [`report`], [`cli`]: text formats, reports and the batch front end.
//!
//! ```
//! use std::sync::Arc;
//! use vtop::closure::{check_axioms, core, ClosureStructure};
//! use vtop::{Elem, Quantale};
//!
//! let q = Arc::new(Quantale::chain_frame(3).unwrap());
//! let c = ClosureStructure::from_fn(q, 2, |a, x| {
//!     if a.contains(x) { Elem(2) } else if a.is_empty() { Elem(0) } else { Elem(1) }
//! })
//! .unwrap();
//! assert!(check_axioms(&c).all_passed());
//! assert!(check_axioms(&core(&c).unwrap()).all_passed());
//! ```

pub mod cli;
pub mod closure;
pub mod format;
pub mod lattice;
pub mod quantale;
pub mod report;
pub mod subset;
pub mod theorems;
pub mod vcat;

pub use closure::{CheckReport, ClosureStructure, SpaceMap};
pub use lattice::{Elem, FiniteLattice};
pub use quantale::Quantale;
pub use subset::Subset;
pub use vcat::{VCategory, VFunctor};

use std::fmt;

/// A brute-force routine refused an input above its configured size cap.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{op}: size {size} exceeds the cap of {cap}")]
pub struct SizeLimit {
    pub op: &'static str,
    pub size: usize,
    pub cap: usize,
}

impl SizeLimit {
    pub fn new(op: &'static str, size: usize, cap: usize) -> Self {
        SizeLimit { op, size, cap }
    }

    pub(crate) fn check(op: &'static str, size: usize, cap: usize) -> Result<(), SizeLimit> {
        if size > cap {
            Err(SizeLimit::new(op, size, cap))
        } else {
            Ok(())
        }
    }
}

/// Result of a yes/no check that names a counterexample when the answer is no.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict<W> {
    Holds,
    Fails(W),
}

impl<W> Verdict<W> {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(w) => Some(w),
        }
    }
}

impl<W> From<Option<W>> for Verdict<W> {
    fn from(counterexample: Option<W>) -> Self {
        match counterexample {
            None => Verdict::Holds,
            Some(w) => Verdict::Fails(w),
        }
    }
}

impl<W: fmt::Debug> fmt::Display for Verdict<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Holds => write!(f, "holds"),
            Verdict::Fails(w) => write!(f, "fails at {w:?}"),
        }
    }
}
