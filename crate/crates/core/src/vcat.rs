//! `V`-categories and the equational presentation of closure structures.
//!
//! Objects of the power `V^X` are functions `X -> V`, numbered by reading
//! `sigma(0), sigma(1), ..` as base-`|V|` digits, least significant first. The
//! object `V^(V^X)` of the composite maps is never built; both composites are
//! evaluated at each pair of subsets instead.

use std::sync::Arc;

use crate::closure::{CheckEntry, CheckReport, ClosureStructure, Witness};
use crate::lattice::Elem;
use crate::quantale::Quantale;
use crate::subset::Subset;
use crate::SizeLimit;

/// Largest carrier a power category is materialized for.
pub const POWER_CAP: usize = 4096;
/// Largest base set for the powerset category.
pub const PSET_CAP: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum VCatError {
    #[error("hom table has {got} entries, expected {expected}")]
    TableShape { expected: usize, got: usize },
    #[error("hom({x},{y}) is not an element of the quantale")]
    ValueOutOfRange { x: usize, y: usize },
    #[error("unit law fails: k is not below hom({0},{0})")]
    UnitLawFails(usize),
    #[error("composition fails: hom({y},{z}) (x) hom({x},{y}) is not below hom({x},{z})", x = .0, y = .1, z = .2)]
    CompositionFails(usize, usize, usize),
    #[error("categories are enriched in different quantales")]
    QuantaleMismatch,
    #[error("object map has {got} entries, expected {expected}")]
    MapLength { expected: usize, got: usize },
    #[error("object map sends {x} outside the codomain")]
    MapOutOfRange { x: usize },
    #[error("not a V-functor: hom({x},{y}) exceeds the hom of the images")]
    NotAFunctor { x: usize, y: usize },
    #[error(transparent)]
    SizeLimitExceeded(#[from] SizeLimit),
}

/// A finite set with a hom table `a(x, y)` valued in a quantale.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VCategory {
    quantale: Arc<Quantale>,
    size: usize,
    hom: Vec<Elem>,
}

impl VCategory {
    /// Validates `k <= a(x,x)` and `a(y,z) (x) a(x,y) <= a(x,z)`; `hom` is indexed `[x * size + y]`.
    pub fn new(quantale: Arc<Quantale>, size: usize, hom: Vec<Elem>) -> Result<Self, VCatError> {
        let expected = size * size;
        if hom.len() != expected {
            return Err(VCatError::TableShape { expected, got: hom.len() });
        }
        if let Some(pos) = hom.iter().position(|e| e.idx() >= quantale.size()) {
            return Err(VCatError::ValueOutOfRange { x: pos / size, y: pos % size });
        }
        let c = VCategory { quantale, size, hom };
        c.check_laws()?;
        Ok(c)
    }

    pub fn from_fn(
        quantale: Arc<Quantale>,
        size: usize,
        mut f: impl FnMut(usize, usize) -> Elem,
    ) -> Result<Self, VCatError> {
        let hom = (0..size * size).map(|i| f(i / size, i % size)).collect();
        Self::new(quantale, size, hom)
    }

    fn trusted(quantale: Arc<Quantale>, size: usize, mut f: impl FnMut(usize, usize) -> Elem) -> Self {
        let hom = (0..size * size).map(|i| f(i / size, i % size)).collect();
        VCategory { quantale, size, hom }
    }

    /// `k` on the diagonal, `bot` elsewhere.
    pub fn discrete(quantale: Arc<Quantale>, size: usize) -> Self {
        let (k, bot) = (quantale.unit(), quantale.bottom());
        Self::trusted(quantale, size, |x, y| if x == y { k } else { bot })
    }

    /// Re-checks the unit and composition laws.
    pub fn check_laws(&self) -> Result<(), VCatError> {
        let q = &self.quantale;
        let n = self.size;
        if let Some(x) = (0..n).find(|&x| !q.leq(q.unit(), self.hom(x, x))) {
            return Err(VCatError::UnitLawFails(x));
        }
        for x in 0..n {
            for y in 0..n {
                let axy = self.hom(x, y);
                for z in 0..n {
                    if !q.leq(q.tensor(self.hom(y, z), axy), self.hom(x, z)) {
                        return Err(VCatError::CompositionFails(x, y, z));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn quantale(&self) -> &Quantale {
        &self.quantale
    }

    pub fn quantale_arc(&self) -> &Arc<Quantale> {
        &self.quantale
    }

    #[inline]
    pub fn hom(&self, x: usize, y: usize) -> Elem {
        self.hom[x * self.size + y]
    }

    /// The column `a(-, x)`.
    pub fn column(&self, x: usize) -> Vec<Elem> {
        (0..self.size).map(|y| self.hom(y, x)).collect()
    }
}

/// A map of objects with `a(x, y) <= b(fx, fy)`.
#[derive(Clone, Debug)]
pub struct VFunctor {
    domain: Arc<VCategory>,
    codomain: Arc<VCategory>,
    point_map: Vec<usize>,
}

impl VFunctor {
    pub fn new(domain: Arc<VCategory>, codomain: Arc<VCategory>, point_map: Vec<usize>) -> Result<Self, VCatError> {
        if !(Arc::ptr_eq(domain.quantale_arc(), codomain.quantale_arc()) || domain.quantale() == codomain.quantale()) {
            return Err(VCatError::QuantaleMismatch);
        }
        if point_map.len() != domain.size() {
            return Err(VCatError::MapLength { expected: domain.size(), got: point_map.len() });
        }
        if let Some(x) = point_map.iter().position(|&y| y >= codomain.size()) {
            return Err(VCatError::MapOutOfRange { x });
        }
        let q = domain.quantale();
        for x in 0..domain.size() {
            for y in 0..domain.size() {
                if !q.leq(domain.hom(x, y), codomain.hom(point_map[x], point_map[y])) {
                    return Err(VCatError::NotAFunctor { x, y });
                }
            }
        }
        Ok(VFunctor { domain, codomain, point_map })
    }

    pub fn domain(&self) -> &VCategory {
        &self.domain
    }

    pub fn codomain(&self) -> &VCategory {
        &self.codomain
    }

    pub fn point_map(&self) -> &[usize] {
        &self.point_map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.point_map[x]
    }

    /// Whether `a(x, y) = b(fx, fy)` for all `x, y`.
    pub fn is_fully_faithful(&self) -> bool {
        let n = self.domain.size();
        (0..n).all(|x| (0..n).all(|y| self.domain.hom(x, y) == self.codomain.hom(self.apply(x), self.apply(y))))
    }
}

/// `V` with `hom(v, w) = [v, w]`.
pub fn self_category(q: &Arc<Quantale>) -> VCategory {
    let qq = q.clone();
    VCategory::trusted(q.clone(), q.size(), move |v, w| qq.residual(Elem::new(v), Elem::new(w)))
}

/// Number of the function `sigma` as an object of `V^X`.
pub fn encode_function(q: &Quantale, sigma: &[Elem]) -> usize {
    sigma.iter().rev().fold(0, |acc, v| acc * q.size() + v.idx())
}

/// The function numbered `index` on `n` points.
pub fn decode_function(q: &Quantale, n: usize, mut index: usize) -> Vec<Elem> {
    (0..n)
        .map(|_| {
            let v = Elem::new(index % q.size());
            index /= q.size();
            v
        })
        .collect()
}

/// `[sigma, tau] = meet_x [sigma x, tau x]`.
pub fn power_hom(q: &Quantale, sigma: &[Elem], tau: &[Elem]) -> Elem {
    sigma.iter().zip(tau).fold(q.top(), |acc, (&s, &t)| q.meet(acc, q.residual(s, t)))
}

fn power_size(q: &Quantale, n: usize) -> Result<usize, SizeLimit> {
    let size = u32::try_from(n)
        .ok()
        .and_then(|n| q.size().checked_pow(n))
        .ok_or_else(|| SizeLimit::new("power category", usize::MAX, POWER_CAP))?;
    SizeLimit::check("power category", size, POWER_CAP)?;
    Ok(size)
}

/// `V^X` for `|X| = n`, objects numbered as in [`encode_function`].
pub fn power_category(q: &Arc<Quantale>, n: usize) -> Result<VCategory, VCatError> {
    let size = power_size(q, n)?;
    let funcs: Vec<Vec<Elem>> = (0..size).map(|i| decode_function(q, n, i)).collect();
    let qq = q.clone();
    Ok(VCategory::trusted(q.clone(), size, move |s, t| power_hom(&qq, &funcs[s], &funcs[t])))
}

/// `f^!: V^Y -> V^X`, `sigma -> sigma f`, for `f: X -> Y` with `|Y| = y_size`.
pub fn f_shriek(q: &Arc<Quantale>, f: &[usize], y_size: usize) -> Result<VFunctor, VCatError> {
    if let Some(x) = f.iter().position(|&y| y >= y_size) {
        return Err(VCatError::MapOutOfRange { x });
    }
    let vy = Arc::new(power_category(q, y_size)?);
    let vx = Arc::new(power_category(q, f.len())?);
    let map = (0..vy.size())
        .map(|s| {
            let sigma = decode_function(q, y_size, s);
            let pulled: Vec<Elem> = f.iter().map(|&y| sigma[y]).collect();
            encode_function(q, &pulled)
        })
        .collect();
    VFunctor::new(vy, vx, map)
}

/// `(c_disc A)(x)`.
fn disc(q: &Quantale, a: Subset, x: usize) -> Elem {
    if a.contains(x) {
        q.unit()
    } else {
        q.bottom()
    }
}

/// `[c_disc B, sigma]`.
fn disc_hom(q: &Quantale, n: usize, b: Subset, sigma: &[Elem]) -> Elem {
    (0..n).fold(q.top(), |acc, x| q.meet(acc, q.residual(disc(q, b, x), sigma[x])))
}

/// `PX` with `hom(A, B) = [c_disc A, c_disc B]`; objects are subset bitmasks.
pub fn pset_category(q: &Arc<Quantale>, n: usize) -> Result<VCategory, VCatError> {
    SizeLimit::check("powerset category", n, PSET_CAP)?;
    let qq = q.clone();
    let cat = VCategory::trusted(q.clone(), 1 << n, move |a, b| {
        let sb: Vec<Elem> = (0..n).map(|x| disc(&qq, Subset(b as u32), x)).collect();
        disc_hom(&qq, n, Subset(a as u32), &sb)
    });
    Ok(cat)
}

/// `y: X -> V^X`, `x -> a(-, x)`.
pub fn yoneda(c: &Arc<VCategory>) -> Result<VFunctor, VCatError> {
    let q = c.quantale_arc();
    let power = Arc::new(power_category(q, c.size())?);
    let map = (0..c.size()).map(|x| encode_function(q, &c.column(x))).collect();
    VFunctor::new(c.clone(), power, map)
}

/// The three equivalent conditions on a table `c: PX -> V^X`: (i) reflexive and
/// transitive; (ii) `c_disc A <= cA` and `[c_disc B, cA] <= [cB, cA]`;
/// (iii) `[c_disc B, cA] = [cB, cA]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClosureCriteria {
    pub i: bool,
    pub ii: bool,
    pub iii: bool,
}

impl ClosureCriteria {
    pub fn agree(&self) -> bool {
        self.i == self.ii && self.ii == self.iii
    }
}

fn disc_and_c_homs(c: &ClosureStructure, a: Subset, b: Subset) -> (Elem, Elem) {
    let q = c.quantale();
    let n = c.points();
    let ca = c.row(a);
    (disc_hom(q, n, b, ca), power_hom(q, c.row(b), ca))
}

pub fn check_closure_criteria(c: &ClosureStructure) -> ClosureCriteria {
    let q = c.quantale();
    let n = c.points();
    let i = c.is_closure_space();
    let mut below = true;
    let mut equal = true;
    for a in Subset::all(n) {
        if below && !(0..n).all(|x| q.leq(disc(q, a, x), c.value(a, x))) {
            below = false;
        }
        for b in Subset::all(n) {
            let (lhs, rhs) = disc_and_c_homs(c, a, b);
            below &= q.leq(lhs, rhs);
            equal &= lhs == rhs;
        }
    }
    ClosureCriteria { i, ii: below, iii: equal }
}

/// Evaluates the two composites `PX -> V^PX` through `c_disc^!` and `c^!` at each
/// `(A, B)`; checks that they agree exactly when `c` is a closure structure,
/// that composing with `{-}^!` recovers `c`, that `[c_disc {x}, sigma] = sigma(x)`
/// on all of `V^X` when that carrier is within [`POWER_CAP`], and, for closure
/// structures, that `c: PX -> V^X` is a `V`-functor.
pub fn check_composites_and_recovery(c: &ClosureStructure) -> CheckReport {
    let q = c.quantale();
    let n = c.points();
    let closure = c.is_closure_space();

    let mut first_diff = None;
    'outer: for a in Subset::all(n) {
        for b in Subset::all(n) {
            let (lhs, rhs) = disc_and_c_homs(c, a, b);
            if lhs != rhs {
                first_diff = Some((a, b, lhs, rhs));
                break 'outer;
            }
        }
    }
    let agree = first_diff.is_none();
    let composites = match first_diff {
        None => CheckEntry::pass("composites-agree"),
        Some((a, b, l, r)) => CheckEntry::fail(
            "composites-agree",
            Witness::Text(format!("A={a} B={b}: [c_disc B, cA]={} but [cB, cA]={}", q.name(l), q.name(r))),
        ),
    };
    let iff = if agree == closure {
        CheckEntry::pass("composites-iff-closure")
    } else {
        CheckEntry::fail(
            "composites-iff-closure",
            Witness::Text(format!("composites agree: {agree}, closure structure: {closure}")),
        )
    };

    let mut recovery = CheckEntry::pass("recovery");
    'rec: for a in Subset::all(n) {
        for x in 0..n {
            let got = disc_hom(q, n, Subset::singleton(x), c.row(a));
            if got != c.value(a, x) {
                recovery = CheckEntry::fail(
                    "recovery",
                    Witness::Text(format!(
                        "A={a} x={x}: recovered {} but cA(x)={}",
                        q.name(got),
                        q.name(c.value(a, x))
                    )),
                );
                break 'rec;
            }
        }
    }

    let singletons = match power_size(q, n) {
        Err(e) => CheckEntry::pass("yoneda-singletons").with_note(format!("skipped: {e}")),
        Ok(size) => {
            let bad = (0..size).find_map(|s| {
                let sigma = decode_function(q, n, s);
                (0..n).find(|&x| disc_hom(q, n, Subset::singleton(x), &sigma) != sigma[x]).map(|x| (sigma, x))
            });
            match bad {
                None => CheckEntry::pass("yoneda-singletons"),
                Some((sigma, x)) => {
                    let names: Vec<&str> = sigma.iter().map(|&v| q.name(v)).collect();
                    CheckEntry::fail("yoneda-singletons", Witness::Text(format!("sigma=[{}] x={x}", names.join(","))))
                }
            }
        }
    };

    let functor = if !closure {
        CheckEntry::pass("functor").with_note("not a closure structure; not applicable")
    } else {
        let mut e = CheckEntry::pass("functor");
        'fun: for a in Subset::all(n) {
            let da: Vec<Elem> = (0..n).map(|x| disc(q, a, x)).collect();
            for b in Subset::all(n) {
                let lhs = disc_hom(q, n, b, &da);
                let rhs = power_hom(q, c.row(b), c.row(a));
                if !q.leq(lhs, rhs) {
                    e = CheckEntry::fail(
                        "functor",
                        Witness::Text(format!(
                            "hom(B,A)={} exceeds [cB, cA]={} at A={a} B={b}",
                            q.name(lhs),
                            q.name(rhs)
                        )),
                    );
                    break 'fun;
                }
            }
        }
        e
    };

    CheckReport::new(vec![composites, iff, recovery, singletons, functor])
}

/// `c` as a `V`-functor `PX -> V^X`, materializing both categories.
pub fn closure_functor(c: &ClosureStructure) -> Result<VFunctor, VCatError> {
    let q = c.quantale_arc();
    let n = c.points();
    let px = Arc::new(pset_category(q, n)?);
    let vx = Arc::new(power_category(q, n)?);
    let map = Subset::all(n).map(|a| encode_function(q, c.row(a))).collect();
    VFunctor::new(px, vx, map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::discrete;

    fn two() -> Arc<Quantale> {
        Arc::new(Quantale::two())
    }

    #[test]
    fn validation() {
        let q = two();
        assert!(VCategory::new(q.clone(), 2, vec![Elem(1), Elem(0), Elem(0), Elem(1)]).is_ok());
        assert!(VCategory::from_fn(q.clone(), 3, |_, _| Elem(1)).is_ok());
        assert_eq!(
            VCategory::new(q.clone(), 2, vec![Elem(0), Elem(0), Elem(0), Elem(1)]).unwrap_err(),
            VCatError::UnitLawFails(0)
        );
        // 0 -> 1 -> 2 but not 0 -> 2
        let hom = vec![1, 1, 0, 0, 1, 1, 0, 0, 1].into_iter().map(Elem).collect();
        assert_eq!(VCategory::new(q, 3, hom).unwrap_err(), VCatError::CompositionFails(0, 1, 2));
    }

    #[test]
    fn self_category_of_two() {
        let q = two();
        let v = self_category(&q);
        assert_eq!(v.hom, vec![Elem(1), Elem(1), Elem(0), Elem(1)]);
        v.check_laws().unwrap();
    }

    #[test]
    fn powers() {
        let q = two();
        let p0 = power_category(&q, 0).unwrap();
        assert_eq!((p0.size(), p0.hom(0, 0)), (1, q.top()));
        assert_eq!(power_category(&q, 1).unwrap(), self_category(&q));
        let p2 = power_category(&q, 2).unwrap();
        p2.check_laws().unwrap();
        for s in 0..4 {
            for t in 0..4 {
                assert_eq!(p2.hom(s, t) == q.top(), s & !t == 0);
            }
        }
        assert!(power_category(&q, 13).is_err());
    }

    #[test]
    fn shriek() {
        let q = two();
        let id = f_shriek(&q, &[0, 1], 2).unwrap();
        assert_eq!(id.point_map(), &[0, 1, 2, 3]);
        let collapse = f_shriek(&q, &[0, 0], 1).unwrap();
        assert_eq!(collapse.point_map(), &[0, 3]);
        assert!(collapse.is_fully_faithful());
    }

    #[test]
    fn pset_and_yoneda() {
        let q = two();
        let p = pset_category(&q, 3).unwrap();
        p.check_laws().unwrap();
        for a in 0..8usize {
            for b in 0..8usize {
                assert_eq!(p.hom(a, b) == q.top(), a & !b == 0);
            }
        }
        let d = Arc::new(VCategory::discrete(q.clone(), 3));
        let y = yoneda(&d).unwrap();
        for x in 0..3 {
            let col = decode_function(&q, 3, y.apply(x));
            assert!((0..3).all(|z| col[z] == if z == x { q.unit() } else { q.bottom() }));
        }
        let v = Arc::new(self_category(&q));
        let yv = yoneda(&v).unwrap();
        assert_eq!(decode_function(&q, 2, yv.apply(0)), vec![Elem(1), Elem(0)]);
    }

    #[test]
    fn closure_criteria_examples() {
        let q = two();
        let d = discrete(q.clone(), 2);
        assert_eq!(check_closure_criteria(&d), ClosureCriteria { i: true, ii: true, iii: true });
        let bad = ClosureStructure::from_fn(q, 2, |_, _| Elem(0)).unwrap();
        assert_eq!(check_closure_criteria(&bad), ClosureCriteria { i: false, ii: false, iii: false });
        let r = check_composites_and_recovery(&bad);
        assert_eq!(r.passed("composites-agree"), Some(false));
        assert_eq!(r.passed("composites-iff-closure"), Some(true));
        assert_eq!(r.passed("recovery"), Some(true));
        assert!(check_composites_and_recovery(&d).all_passed());
        closure_functor(&d).unwrap();
    }
}
