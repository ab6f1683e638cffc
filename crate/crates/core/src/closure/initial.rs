//! Discrete, indiscrete and initial structures, and limits of topological spaces.

use std::sync::Arc;

use super::{check_point_map, core, ClosureError, ClosureStructure};
use crate::quantale::Quantale;

/// `(c A)(x) = k` for `x` in `A`, `bot` otherwise.
pub fn discrete(q: Arc<Quantale>, n: usize) -> ClosureStructure {
    let (k, bot) = (q.unit(), q.bottom());
    ClosureStructure::from_fn_unchecked(q, n, |a, x| if a.contains(x) { k } else { bot })
}

/// Constant `top`; with `topological` the empty set is sent to `bot` instead.
pub fn indiscrete(q: Arc<Quantale>, n: usize, topological: bool) -> ClosureStructure {
    let (top, bot) = (q.top(), q.bottom());
    ClosureStructure::from_fn_unchecked(q, n, |a, _| if topological && a.is_empty() { bot } else { top })
}

/// A map `f: X -> Y` together with the structure on `Y`.
#[derive(Clone, Copy, Debug)]
pub struct Source<'a> {
    pub map: &'a [usize],
    pub codomain: &'a ClosureStructure,
}

impl<'a> Source<'a> {
    pub fn new(map: &'a [usize], codomain: &'a ClosureStructure) -> Self {
        Source { map, codomain }
    }
}

/// `(cA)(x) = meet_i d_i(f_i A)(f_i x)`. An empty family gives constant `top`.
pub fn initial_structure(
    q: &Arc<Quantale>,
    n: usize,
    sources: &[Source<'_>],
) -> Result<ClosureStructure, ClosureError> {
    for s in sources {
        if !(Arc::ptr_eq(q, s.codomain.quantale_arc()) || **q == *s.codomain.quantale()) {
            return Err(ClosureError::QuantaleMismatch);
        }
        check_point_map(s.map, n, s.codomain.points())?;
    }
    ClosureStructure::from_fn(q.clone(), n, |a, x| {
        sources.iter().fold(q.top(), |acc, s| q.meet(acc, s.codomain.value(a.image(s.map), s.map[x])))
    })
}

/// The coreflection of the initial structure.
pub fn vtop_limit(q: &Arc<Quantale>, n: usize, sources: &[Source<'_>]) -> Result<ClosureStructure, ClosureError> {
    Ok(core(&initial_structure(q, n, sources)?)?)
}

#[cfg(test)]
mod tests {
    use super::super::check_axioms;
    use super::super::fixtures::*;
    use super::*;
    use crate::subset::Subset;

    #[test]
    fn discrete_and_indiscrete() {
        let q = two();
        let d = discrete(q.clone(), 2);
        for a in Subset::all(2) {
            for x in 0..2 {
                assert_eq!(d.value(a, x).0 == 1, a.contains(x));
            }
        }
        let r = check_axioms(&indiscrete(q.clone(), 2, false));
        assert_eq!(r.passed("A"), Some(false));
        assert!(check_axioms(&indiscrete(q, 2, true)).all_passed());
    }

    #[test]
    fn identity_pullback_and_meets() {
        let s = sierpinski();
        let id = [0usize, 1];
        let q = s.quantale_arc().clone();
        assert_eq!(initial_structure(&q, 2, &[Source::new(&id, &s)]).unwrap(), s);
        let swap = [1usize, 0];
        let c = initial_structure(&q, 2, &[Source::new(&id, &s), Source::new(&swap, &s)]).unwrap();
        let flipped = initial_structure(&q, 2, &[Source::new(&swap, &s)]).unwrap();
        assert_eq!(c, s.pointwise_meet(&flipped));
        assert_eq!(c, discrete(q, 2));
    }

    #[test]
    fn empty_family() {
        let q = two();
        let c = initial_structure(&q, 2, &[]).unwrap();
        assert_eq!(c, indiscrete(q.clone(), 2, false));
        assert_eq!(vtop_limit(&q, 2, &[]).unwrap(), indiscrete(q, 2, true));
    }

    #[test]
    fn product_of_discrete_spaces() {
        let q = two();
        let (a, b) = (discrete(q.clone(), 2), discrete(q.clone(), 2));
        // X = A x B, points indexed i * 2 + j
        let p1 = [0usize, 0, 1, 1];
        let p2 = [0usize, 1, 0, 1];
        let lim = vtop_limit(&q, 4, &[Source::new(&p1, &a), Source::new(&p2, &b)]).unwrap();
        assert_eq!(lim, discrete(q, 4));
    }

    #[test]
    fn map_validation() {
        let s = sierpinski();
        let bad = [0usize, 2];
        assert!(initial_structure(s.quantale_arc(), 2, &[Source::new(&bad, &s)]).is_err());
    }
}
