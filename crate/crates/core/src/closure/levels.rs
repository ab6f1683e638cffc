//! The level-set presentation `(c^v)_v` of a closure table.

use std::fmt;
use std::sync::Arc;

use super::axioms::{CheckEntry, CheckReport, Witness};
use super::{level_set, ClosureError, ClosureStructure, MAX_BASE_SIZE};
use crate::lattice::{coprimes, Elem};
use crate::quantale::Quantale;
use crate::subset::Subset;
use crate::{SizeLimit, Verdict};

/// A family of maps `c^v: PX -> PX`, one per quantale element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelFamily {
    quantale: Arc<Quantale>,
    points: usize,
    // indexed [v * 2^n + A]
    sets: Vec<Subset>,
}

/// A concrete failure of one of the conditions C0-C3 or of the coprime
/// additivity criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelWitness {
    pub condition: &'static str,
    pub a: Subset,
    pub b: Option<Subset>,
    pub v: Option<Elem>,
    pub u: Option<Elem>,
    /// The family `u_i` for C1.
    pub us: Vec<Elem>,
    pub point: usize,
}

impl LevelWitness {
    fn new(condition: &'static str, a: Subset, point: usize) -> Self {
        LevelWitness { condition, a, b: None, v: None, u: None, us: Vec::new(), point }
    }
}

impl fmt::Display for LevelWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: A={}", self.condition, self.a)?;
        if let Some(b) = self.b {
            write!(f, " B={b}")?;
        }
        if let Some(v) = self.v {
            write!(f, " v={v}")?;
        }
        if let Some(u) = self.u {
            write!(f, " u={u}")?;
        }
        if !self.us.is_empty() {
            let us: Vec<String> = self.us.iter().map(|u| u.to_string()).collect();
            write!(f, " u_i=[{}]", us.join(","))?;
        }
        write!(f, " point={}", self.point)
    }
}

impl LevelFamily {
    /// Wraps sets indexed `[v * 2^n + A]`.
    pub fn new(quantale: Arc<Quantale>, points: usize, sets: Vec<Subset>) -> Result<Self, ClosureError> {
        SizeLimit::check("level family", points, MAX_BASE_SIZE)?;
        let expected = quantale.size() << points;
        if sets.len() != expected {
            return Err(ClosureError::TableShape { expected, got: sets.len() });
        }
        let full = Subset::full(points);
        if let Some(pos) = sets.iter().position(|s| !s.is_subset_of(full)) {
            let a = Subset((pos % (1 << points)) as u32);
            let point = (sets[pos].0 & !full.0).trailing_zeros() as usize;
            return Err(ClosureError::ValueOutOfRange { subset: a, point });
        }
        Ok(LevelFamily { quantale, points, sets })
    }

    pub fn from_fn(
        quantale: Arc<Quantale>,
        points: usize,
        mut f: impl FnMut(Elem, Subset) -> Subset,
    ) -> Result<Self, ClosureError> {
        let sets =
            quantale.elements().flat_map(|v| Subset::all(points).map(move |a| (v, a))).map(|(v, a)| f(v, a)).collect();
        Self::new(quantale, points, sets)
    }

    pub fn quantale(&self) -> &Quantale {
        &self.quantale
    }

    pub fn points(&self) -> usize {
        self.points
    }

    /// `c^v A`.
    pub fn level(&self, v: Elem, a: Subset) -> Subset {
        self.sets[(v.idx() << self.points) + a.bits()]
    }

    /// Replaces `c^v A`.
    pub fn set_level(&mut self, v: Elem, a: Subset, s: Subset) {
        assert!(s.is_subset_of(Subset::full(self.points)), "level set outside the base");
        self.sets[(v.idx() << self.points) + a.bits()] = s;
    }
}

/// `c^v A = {x | v <= (cA)(x)}` for every `v`. The map is defined on every table;
/// on closure spaces it lands in families satisfying C0-C3.
pub fn to_levels(c: &ClosureStructure) -> LevelFamily {
    let q = c.quantale_arc().clone();
    let n = c.points();
    let sets = q.elements().flat_map(|v| Subset::all(n).map(move |a| level_set(c, v, a))).collect();
    LevelFamily { quantale: q, points: n, sets }
}

/// `(cA)(x) = join {v | x in c^v A}`, after checking C0-C3.
pub fn from_levels(f: &LevelFamily) -> Result<ClosureStructure, ClosureError> {
    if let Some(w) = first_violation(f) {
        return Err(ClosureError::LevelsInvalid(w));
    }
    Ok(join_levels(f))
}

pub(crate) fn join_levels(f: &LevelFamily) -> ClosureStructure {
    let q = f.quantale.clone();
    let qq = q.clone();
    ClosureStructure::from_fn_unchecked(q, f.points, |a, x| {
        qq.lattice().join_all(qq.elements().filter(|&v| f.level(v, a).contains(x)))
    })
}

fn c0(f: &LevelFamily) -> Option<LevelWitness> {
    for v in f.quantale.elements() {
        for a in Subset::all(f.points) {
            let ca = f.level(v, a);
            for y in a.iter() {
                let b = Subset(a.0 & !(1 << y));
                let extra = f.level(v, b).0 & !ca.0;
                if extra != 0 {
                    let mut w = LevelWitness::new("C0", a, extra.trailing_zeros() as usize);
                    w.b = Some(b);
                    w.v = Some(v);
                    return Some(w);
                }
            }
        }
    }
    None
}

/// C1 at `(A, x)` says `U = {u | x in c^u A}` is closed under joins and down-closed,
/// i.e. `U` is the principal ideal of its join; the witness family is `U` itself.
fn c1(f: &LevelFamily) -> Option<LevelWitness> {
    let q = &f.quantale;
    for a in Subset::all(f.points) {
        for x in 0..f.points {
            let us: Vec<Elem> = q.elements().filter(|&u| f.level(u, a).contains(x)).collect();
            let top = q.lattice().join_all(us.iter().copied());
            if let Some(v) = q.elements().find(|&v| q.leq(v, top) && !f.level(v, a).contains(x)) {
                let mut w = LevelWitness::new("C1", a, x);
                w.v = Some(v);
                w.us = us;
                return Some(w);
            }
        }
    }
    None
}

fn c2(f: &LevelFamily) -> Option<LevelWitness> {
    let k = f.quantale.unit();
    Subset::all(f.points).find_map(|a| {
        let missing = a.0 & !f.level(k, a).0;
        (missing != 0).then(|| {
            let mut w = LevelWitness::new("C2", a, missing.trailing_zeros() as usize);
            w.v = Some(k);
            w
        })
    })
}

fn c3(f: &LevelFamily) -> Option<LevelWitness> {
    let q = &f.quantale;
    for a in Subset::all(f.points) {
        for v in q.elements() {
            let inner = f.level(v, a);
            for u in q.elements() {
                let extra = f.level(u, inner).0 & !f.level(q.tensor(v, u), a).0;
                if extra != 0 {
                    let mut w = LevelWitness::new("C3", a, extra.trailing_zeros() as usize);
                    w.v = Some(v);
                    w.u = Some(u);
                    return Some(w);
                }
            }
        }
    }
    None
}

fn first_violation(f: &LevelFamily) -> Option<LevelWitness> {
    c0(f).or_else(|| c1(f)).or_else(|| c2(f)).or_else(|| c3(f))
}

/// One entry per condition C0-C3.
pub fn check_levels(f: &LevelFamily) -> CheckReport {
    let entry = |name: &str, w: Option<LevelWitness>| match w {
        None => CheckEntry::pass(name),
        Some(w) => CheckEntry::fail(name, Witness::Level(w)),
    };
    CheckReport::new(vec![entry("C0", c0(f)), entry("C1", c1(f)), entry("C2", c2(f)), entry("C3", c3(f))])
}

/// `c^p {} = {}` and `c^p (A u B) = c^p A u c^p B` for every coprime `p`.
/// `None` when the quantale is not sup-generated by its coprimes.
pub fn coprime_levels_additive(f: &LevelFamily) -> Option<Verdict<LevelWitness>> {
    let q = &f.quantale;
    if !q.is_spatial() {
        return None;
    }
    let n = f.points;
    for p in coprimes(q.lattice()) {
        let empty = f.level(p, Subset::EMPTY);
        if !empty.is_empty() {
            let mut w = LevelWitness::new("coprime-additive", Subset::EMPTY, empty.0.trailing_zeros() as usize);
            w.v = Some(p);
            return Some(Verdict::Fails(w));
        }
        for a in Subset::all(n) {
            for b in Subset::all(n) {
                let lhs = f.level(p, a.union(b));
                let rhs = f.level(p, a).union(f.level(p, b));
                if lhs != rhs {
                    let diff = lhs.0 ^ rhs.0;
                    let mut w = LevelWitness::new("coprime-additive", a, diff.trailing_zeros() as usize);
                    w.b = Some(b);
                    w.v = Some(p);
                    return Some(Verdict::Fails(w));
                }
            }
        }
    }
    Some(Verdict::Holds)
}
