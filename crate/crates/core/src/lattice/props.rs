//! Order-theoretic predicates on finite lattices: coprime elements,
//! sup-generation, distributivity, the totally-below and way-below relations,
//! and the embedding into a powerset of coprimes.

use super::{Elem, FiniteLattice};
use crate::{SizeLimit, Verdict};

/// Subset enumeration over the elements is done for lattices up to this size.
pub const TOTALLY_BELOW_CAP: usize = 16;

/// Elements `p > bot` such that `p <= u v v` forces `p <= u` or `p <= v`.
///
/// Bottom is never coprime. The binary condition covers all finite joins by
/// induction, so only pairs are checked.
pub fn coprimes(l: &FiniteLattice) -> Vec<Elem> {
    l.elements()
        .filter(|&p| p != l.bottom())
        .filter(|&p| l.elements().all(|u| l.elements().all(|v| !l.leq(p, l.join(u, v)) || l.leq(p, u) || l.leq(p, v))))
        .collect()
}

/// Outcome of the sup-generation test, computed by two independent criteria.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupGeneration {
    /// Every `a` equals the join of the coprimes below it; otherwise the first `a` that does not.
    pub by_joins: Verdict<Elem>,
    /// Separation: `x !<= y` always has a coprime `p <= x` with `p !<= y`;
    /// otherwise the first pair `(x, y)` with no separating coprime.
    pub by_separation: Verdict<(Elem, Elem)>,
}

impl SupGeneration {
    pub fn holds(&self) -> bool {
        self.by_joins.holds()
    }

    pub fn criteria_agree(&self) -> bool {
        self.by_joins.holds() == self.by_separation.holds()
    }
}

pub fn is_sup_generated_by_coprimes(l: &FiniteLattice) -> SupGeneration {
    let ps = coprimes(l);
    let by_joins = l.elements().find(|&a| l.join_all(ps.iter().copied().filter(|&p| l.leq(p, a))) != a).into();
    let mut by_separation = Verdict::Holds;
    'outer: for x in l.elements() {
        for y in l.elements() {
            let dominated = ps.iter().all(|&p| !l.leq(p, x) || l.leq(p, y));
            if dominated && !l.leq(x, y) {
                by_separation = Verdict::Fails((x, y));
                break 'outer;
            }
        }
    }
    SupGeneration { by_joins, by_separation }
}

/// Binary distributivity `x v (y ^ z) = (x v y) ^ (x v z)`, with the first
/// failing triple. Arbitrary meets in a finite lattice are finite meets, so
/// this is the full coframe law.
pub fn is_coframe(l: &FiniteLattice) -> Verdict<(Elem, Elem, Elem)> {
    for x in l.elements() {
        for y in l.elements() {
            for z in l.elements() {
                let lhs = l.join(x, l.meet(y, z));
                let rhs = l.meet(l.join(x, y), l.join(x, z));
                if lhs != rhs {
                    return Verdict::Fails((x, y, z));
                }
            }
        }
    }
    Verdict::Holds
}

fn check_cap(l: &FiniteLattice, op: &'static str) -> Result<(), SizeLimit> {
    if l.size() > TOTALLY_BELOW_CAP {
        Err(SizeLimit::new(op, l.size(), TOTALLY_BELOW_CAP))
    } else {
        Ok(())
    }
}

/// Join of every subset of the elements, indexed by bitmask.
fn subset_joins(l: &FiniteLattice) -> Vec<Elem> {
    let n = l.size();
    let mut joins = vec![l.bottom(); 1 << n];
    for mask in 1usize..1 << n {
        let low = mask.trailing_zeros() as usize;
        joins[mask] = l.join(joins[mask & (mask - 1)], Elem::new(low));
    }
    joins
}

fn up_mask(l: &FiniteLattice, x: Elem) -> usize {
    l.elements().filter(|&b| l.leq(x, b)).fold(0, |m, b| m | 1 << b.idx())
}

/// `x << a`: every subset whose join dominates `a` has a member above `x`.
pub fn totally_below(l: &FiniteLattice, x: Elem, a: Elem) -> Result<bool, SizeLimit> {
    check_cap(l, "totally-below")?;
    let joins = subset_joins(l);
    let up = up_mask(l, x);
    Ok((0..joins.len()).all(|mask| !l.leq(a, joins[mask]) || mask & up != 0))
}

/// Full `x << a` table, row `x`, column `a`.
pub fn totally_below_table(l: &FiniteLattice) -> Result<Vec<Vec<bool>>, SizeLimit> {
    check_cap(l, "totally-below")?;
    let joins = subset_joins(l);
    let ups: Vec<usize> = l.elements().map(|x| up_mask(l, x)).collect();
    let mut table = vec![vec![true; l.size()]; l.size()];
    for a in l.elements() {
        for (mask, &j) in joins.iter().enumerate() {
            if !l.leq(a, j) {
                continue;
            }
            for x in l.elements() {
                if mask & ups[x.idx()] == 0 {
                    table[x.idx()][a.idx()] = false;
                }
            }
        }
    }
    Ok(table)
}

/// Way-below on a finite lattice. Every directed subset of a finite poset
/// contains its own join, so the relation collapses to the order.
pub fn way_below(l: &FiniteLattice, x: Elem, a: Elem) -> bool {
    l.leq(x, a)
}

/// Way-below by enumerating every directed subset `D` with `a <= join D`.
pub fn way_below_brute(l: &FiniteLattice, x: Elem, a: Elem) -> Result<bool, SizeLimit> {
    check_cap(l, "way-below")?;
    let n = l.size();
    let joins = subset_joins(l);
    let up = up_mask(l, x);
    for mask in 1usize..1 << n {
        if !l.leq(a, joins[mask]) || mask & up != 0 {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let directed = members.iter().all(|&p| {
            members.iter().all(|&q| {
                members.iter().any(|&r| l.leq(Elem::new(p), Elem::new(r)) && l.leq(Elem::new(q), Elem::new(r)))
            })
        });
        if directed {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every element is the join of the elements totally below it; otherwise the
/// first element that is not.
pub fn is_ccd(l: &FiniteLattice) -> Result<Verdict<Elem>, SizeLimit> {
    let tb = totally_below_table(l)?;
    Ok(l.elements().find(|&a| l.join_all(l.elements().filter(|x| tb[x.idx()][a.idx()])) != a).into())
}

/// Behaviour of the up-set indicator of one element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoprimeChar {
    pub element: Elem,
    pub coprime: bool,
    pub preserves_meets: bool,
    pub preserves_finite_joins: bool,
}

/// The map sending `x` to the set of coprimes below it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpatialEmbedding {
    pub coprimes: Vec<Elem>,
    /// `image[x]` lists the coprimes below `x`, in increasing index order.
    pub image: Vec<Vec<Elem>>,
    pub injective: Verdict<(Elem, Elem)>,
    pub preserves_meets: Verdict<(Elem, Elem)>,
    pub preserves_joins: Verdict<(Elem, Elem)>,
    pub characters: Vec<CoprimeChar>,
}

impl SpatialEmbedding {
    pub fn is_lattice_embedding(&self) -> bool {
        self.injective.holds() && self.preserves_meets.holds() && self.preserves_joins.holds()
    }
}

pub fn spatial_embedding(l: &FiniteLattice) -> SpatialEmbedding {
    let ps = coprimes(l);
    let image: Vec<Vec<Elem>> = l.elements().map(|x| ps.iter().copied().filter(|&p| l.leq(p, x)).collect()).collect();
    let chi = |x: Elem| &image[x.idx()];
    let sorted_union = |a: &[Elem], b: &[Elem]| {
        let mut v: Vec<Elem> = a.iter().chain(b).copied().collect();
        v.sort();
        v.dedup();
        v
    };
    let intersection = |a: &[Elem], b: &[Elem]| -> Vec<Elem> { a.iter().copied().filter(|e| b.contains(e)).collect() };

    let pairs = || l.elements().flat_map(|x| l.elements().map(move |y| (x, y)));
    let injective = pairs().find(|&(x, y)| x < y && chi(x) == chi(y)).into();
    let preserves_meets = if chi(l.top()).len() != ps.len() {
        Verdict::Fails((l.top(), l.top()))
    } else {
        pairs().find(|&(x, y)| *chi(l.meet(x, y)) != intersection(chi(x), chi(y))).into()
    };
    let preserves_joins = if !chi(l.bottom()).is_empty() {
        Verdict::Fails((l.bottom(), l.bottom()))
    } else {
        pairs().find(|&(x, y)| *chi(l.join(x, y)) != sorted_union(chi(x), chi(y))).into()
    };

    let characters = l
        .elements()
        .map(|p| {
            let ind = |x: Elem| l.leq(p, x);
            let preserves_meets = ind(l.top()) && pairs().all(|(x, y)| ind(l.meet(x, y)) == (ind(x) && ind(y)));
            let preserves_finite_joins =
                !ind(l.bottom()) && pairs().all(|(x, y)| ind(l.join(x, y)) == (ind(x) || ind(y)));
            CoprimeChar { element: p, coprime: ps.contains(&p), preserves_meets, preserves_finite_joins }
        })
        .collect();

    SpatialEmbedding { coprimes: ps, image, injective, preserves_meets, preserves_joins, characters }
}
