//! The level sets `c^v A` and the "self-composite" `c-bar` of a closure table.

use super::{ClosureError, ClosureStructure};
use crate::lattice::{coprimes, Elem};
use crate::subset::Subset;
use crate::Verdict;

/// `c^v A = {z | v <= (cA)(z)}`.
pub fn level_set(c: &ClosureStructure, v: Elem, a: Subset) -> Subset {
    let q = c.quantale();
    Subset::from_points((0..c.points()).filter(|&z| q.leq(v, c.value(a, z))))
}

/// `(c-bar A)(x) = join over v of v (x) c(c^v A)(x)`; with `coprime_only` the
/// join ranges over coprime `v` only.
pub fn bar(c: &ClosureStructure, coprime_only: bool) -> ClosureStructure {
    let q = c.quantale();
    let levels: Vec<Elem> = if coprime_only { coprimes(q.lattice()) } else { q.elements().collect() };
    let n = c.points();
    let mut table = Vec::with_capacity(c.table().len());
    for a in Subset::all(n) {
        let mut row = vec![q.bottom(); n];
        for &v in &levels {
            let lv = level_set(c, v, a);
            for (x, acc) in row.iter_mut().enumerate() {
                *acc = q.join(*acc, q.tensor(v, c.value(lv, x)));
            }
        }
        table.extend(row);
    }
    ClosureStructure::new(c.quantale_arc().clone(), n, table).expect("bar of a valid table")
}

/// Transitivity tested as `c-bar <= c`; meaningful for monotone `c` only, so a
/// non-monotone input is an error.
pub fn check_t_via_bar(c: &ClosureStructure) -> Result<bool, ClosureError> {
    if let Verdict::Fails((b, a, x)) = c.monotone() {
        return Err(ClosureError::NotMonotone { b, a, x });
    }
    Ok(bar(c, false).leq(c).expect("same shape"))
}
