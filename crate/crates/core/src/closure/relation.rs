use crate::lattice::Elem;
use crate::quantale::Quantale;
use crate::subset::Subset;

/// `P r(A, B) = meet_{y in B} join_{x in A} r(x, y)` for a relation `r` given
/// as rows `r[x][y]`. An empty `B` gives `top`; an empty `A` with nonempty `B`
/// gives `bot`.
pub fn powerset_lax_extension(q: &Quantale, r: &[Vec<Elem>], a: Subset, b: Subset) -> Elem {
    let l = q.lattice();
    l.meet_all(b.iter().map(|y| l.join_all(a.iter().map(|x| r[x][y]))))
}
