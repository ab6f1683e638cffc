//! Closure structures over the free quantale `PM` on a monoid, read as lax
//! right actions `A . a` of `M` on subsets: `x in A . a` iff `a in (cA)(x)`.

use std::sync::Arc;

use super::axioms::{CheckEntry, CheckReport, Witness};
use super::{ClosureError, ClosureStructure};
use crate::lattice::Elem;
use crate::quantale::{Monoid, Quantale};
use crate::subset::Subset;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaxAction {
    quantale: Arc<Quantale>,
    points: usize,
    // indexed [A * |M| + a]
    table: Vec<Subset>,
}

impl LaxAction {
    /// Wraps a table indexed `[A * |M| + a]`; the quantale must be a free monoid quantale.
    pub fn new(quantale: Arc<Quantale>, points: usize, table: Vec<Subset>) -> Result<Self, ClosureError> {
        let m = quantale.monoid().ok_or(ClosureError::NotFreeMonoidQuantale)?.size();
        let expected = (1usize << points) * m;
        if table.len() != expected {
            return Err(ClosureError::TableShape { expected, got: table.len() });
        }
        let full = Subset::full(points);
        if let Some(pos) = table.iter().position(|s| !s.is_subset_of(full)) {
            let point = (table[pos].0 & !full.0).trailing_zeros() as usize;
            return Err(ClosureError::ValueOutOfRange { subset: Subset((pos / m) as u32), point });
        }
        Ok(LaxAction { quantale, points, table })
    }

    pub fn monoid(&self) -> &Monoid {
        self.quantale.monoid().expect("checked on construction")
    }

    pub fn quantale_arc(&self) -> &Arc<Quantale> {
        &self.quantale
    }

    pub fn points(&self) -> usize {
        self.points
    }

    /// `A . a`.
    pub fn act(&self, a: Subset, alpha: usize) -> Subset {
        self.table[a.bits() * self.monoid().size() + alpha]
    }

    pub fn set(&mut self, a: Subset, alpha: usize, s: Subset) {
        let m = self.monoid().size();
        self.table[a.bits() * m + alpha] = s;
    }

    /// `A <= A . e`, `(A . a) . b <= A . ab`, and `B <= A` implies `B . a <= A . a`.
    pub fn check_laws(&self) -> CheckReport {
        let m = self.monoid();
        let n = self.points;
        let mut unit = CheckEntry::pass("unit");
        let mut comp = CheckEntry::pass("composition");
        let mut mono = CheckEntry::pass("monotone");
        'unit: for a in Subset::all(n) {
            if !a.is_subset_of(self.act(a, m.unit())) {
                unit = CheckEntry::fail("unit", Witness::Text(format!("A={a} is not inside A.e")));
                break 'unit;
            }
        }
        'comp: for a in Subset::all(n) {
            for x in 0..m.size() {
                for y in 0..m.size() {
                    let lhs = self.act(self.act(a, x), y);
                    let rhs = self.act(a, m.mul(x, y));
                    if !lhs.is_subset_of(rhs) {
                        let (nx, ny) = (&m.names()[x], &m.names()[y]);
                        comp = CheckEntry::fail(
                            "composition",
                            Witness::Text(format!("A={a} a={nx} b={ny}: (A.a).b={lhs} is not inside A.ab={rhs}")),
                        );
                        break 'comp;
                    }
                }
            }
        }
        'mono: for a in Subset::all(n) {
            for y in a.iter() {
                let b = Subset(a.0 & !(1 << y));
                for x in 0..m.size() {
                    if !self.act(b, x).is_subset_of(self.act(a, x)) {
                        let nx = &m.names()[x];
                        mono = CheckEntry::fail("monotone", Witness::Text(format!("B={b} A={a} a={nx}")));
                        break 'mono;
                    }
                }
            }
        }
        CheckReport::new(vec![unit, comp, mono])
    }
}

/// The action table of `c`; fails unless `c` is valued in a free monoid quantale.
pub fn monoid_action_view(c: &ClosureStructure) -> Result<LaxAction, ClosureError> {
    let m = c.quantale().monoid().ok_or(ClosureError::NotFreeMonoidQuantale)?.size();
    let n = c.points();
    let mut table = Vec::with_capacity((1 << n) * m);
    for a in Subset::all(n) {
        for alpha in 0..m {
            table.push(Subset::from_points((0..n).filter(|&x| c.value(a, x).idx() >> alpha & 1 == 1)));
        }
    }
    LaxAction::new(c.quantale_arc().clone(), n, table)
}

/// `(cA)(x) = {a | x in A . a}`.
pub fn action_to_closure(action: &LaxAction) -> ClosureStructure {
    let m = action.monoid().size();
    ClosureStructure::from_fn_unchecked(action.quantale.clone(), action.points, |a, x| {
        Elem::new((0..m).filter(|&alpha| action.act(a, alpha).contains(x)).fold(0, |acc, al| acc | 1 << al))
    })
}
