use std::fmt;

use super::{ClosureStructure, LevelWitness, SpaceMap};
use crate::lattice::{Elem, FiniteLattice};
use crate::subset::Subset;

/// How the two sides of a witness are supposed to compare.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Leq,
    Eq,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Leq => "<=",
            Relation::Eq => "=",
        })
    }
}

/// A concrete failure of an inequality or equation between quantale values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValueWitness {
    pub law: &'static str,
    pub a: Subset,
    pub b: Option<Subset>,
    pub x: usize,
    pub lhs: Elem,
    pub rhs: Elem,
    pub relation: Relation,
}

impl ValueWitness {
    /// True when `lhs relation rhs` is false in `l`.
    pub fn is_violation(&self, l: &FiniteLattice) -> bool {
        match self.relation {
            Relation::Leq => !l.leq(self.lhs, self.rhs),
            Relation::Eq => self.lhs != self.rhs,
        }
    }

    /// Recomputes both sides of a closure-axiom witness from `c`.
    pub fn recompute(&self, c: &ClosureStructure) -> Option<(Elem, Elem)> {
        let q = c.quantale();
        let (a, x) = (self.a, self.x);
        Some(match (self.law, self.b) {
            ("R", None) => (q.unit(), c.value(a, x)),
            ("T", Some(b)) => {
                let m = q.lattice().meet_all(b.iter().map(|y| c.value(a, y)));
                (q.tensor(m, c.value(b, x)), c.value(a, x))
            }
            ("A", None) => (c.value(a, x), q.bottom()),
            ("A", Some(b)) => (c.value(a.union(b), x), q.join(c.value(a, x), c.value(b, x))),
            ("monotone" | "monotone-nonempty", Some(b)) => (c.value(b, x), c.value(a, x)),
            _ => return None,
        })
    }
}

impl fmt::Display for ValueWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: A={}", self.law, self.a)?;
        if let Some(b) = self.b {
            write!(f, " B={b}")?;
        }
        write!(f, " x={} lhs={} rhs={} (expected lhs {} rhs)", self.x, self.lhs, self.rhs, self.relation)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Value(ValueWitness),
    Level(LevelWitness),
    Text(String),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Value(w) => w.fmt(f),
            Witness::Level(w) => w.fmt(f),
            Witness::Text(s) => f.write_str(s),
        }
    }
}

/// Verdict for one named law.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckEntry {
    pub name: String,
    pub passed: bool,
    pub witness: Option<Witness>,
    pub note: Option<String>,
}

impl CheckEntry {
    pub fn pass(name: impl Into<String>) -> Self {
        CheckEntry { name: name.into(), passed: true, witness: None, note: None }
    }

    pub fn fail(name: impl Into<String>, witness: Witness) -> Self {
        CheckEntry { name: name.into(), passed: false, witness: Some(witness), note: None }
    }

    pub fn from_value(name: impl Into<String>, w: Option<ValueWitness>) -> Self {
        match w {
            None => CheckEntry::pass(name),
            Some(w) => CheckEntry::fail(name, Witness::Value(w)),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// Outcome of a batch of checks. A failed entry always carries a witness.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub entries: Vec<CheckEntry>,
    /// Set when a hypothesis of the checked statement is not met, so failures
    /// are findings rather than errors.
    pub exploratory: bool,
}

impl CheckReport {
    pub fn new(entries: Vec<CheckEntry>) -> Self {
        CheckReport { entries, exploratory: false }
    }

    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn passed(&self, name: &str) -> Option<bool> {
        self.entry(name).map(|e| e.passed)
    }

    pub fn entry(&self, name: &str) -> Option<&CheckEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| !e.passed)
    }
}

impl ClosureStructure {
    /// First `x` in `A` with `k !<= (cA)(x)`.
    pub fn reflexivity_violation(&self) -> Option<ValueWitness> {
        let q = self.quantale();
        let k = q.unit();
        for a in Subset::all(self.points()) {
            for x in a.iter() {
                let v = self.value(a, x);
                if !q.leq(k, v) {
                    return Some(ValueWitness { law: "R", a, b: None, x, lhs: k, rhs: v, relation: Relation::Leq });
                }
            }
        }
        None
    }

    /// First `(A, B, x)` with `(meet_{y in B} (cA)(y)) (x) (cB)(x) !<= (cA)(x)`.
    pub fn transitivity_violation(&self) -> Option<ValueWitness> {
        let q = self.quantale();
        let n = self.points();
        let mut meets = vec![q.top(); 1 << n];
        for a in Subset::all(n) {
            for bm in 1usize..1 << n {
                let low = bm.trailing_zeros() as usize;
                meets[bm] = q.meet(meets[bm & (bm - 1)], self.value(a, low));
            }
            for b in Subset::all(n) {
                let m = meets[b.bits()];
                for x in 0..n {
                    let lhs = q.tensor(m, self.value(b, x));
                    let rhs = self.value(a, x);
                    if !q.leq(lhs, rhs) {
                        return Some(ValueWitness { law: "T", a, b: Some(b), x, lhs, rhs, relation: Relation::Leq });
                    }
                }
            }
        }
        None
    }

    /// First failure of `c{} = bot` or `c(A u B) = cA v cB`.
    pub fn additivity_violation(&self) -> Option<ValueWitness> {
        let q = self.quantale();
        let n = self.points();
        for x in 0..n {
            let v = self.value(Subset::EMPTY, x);
            if v != q.bottom() {
                return Some(ValueWitness {
                    law: "A",
                    a: Subset::EMPTY,
                    b: None,
                    x,
                    lhs: v,
                    rhs: q.bottom(),
                    relation: Relation::Eq,
                });
            }
        }
        for a in Subset::all(n) {
            for b in Subset::all(n) {
                let u = a.union(b);
                for x in 0..n {
                    let lhs = self.value(u, x);
                    let rhs = q.join(self.value(a, x), self.value(b, x));
                    if lhs != rhs {
                        return Some(ValueWitness { law: "A", a, b: Some(b), x, lhs, rhs, relation: Relation::Eq });
                    }
                }
            }
        }
        None
    }

    fn monotonicity_violation(&self, skip_empty: bool) -> Option<ValueWitness> {
        self.monotone_from(skip_empty).witness().map(|&(b, a, x)| ValueWitness {
            law: if skip_empty { "monotone-nonempty" } else { "monotone" },
            a,
            b: Some(b),
            x,
            lhs: self.value(b, x),
            rhs: self.value(a, x),
            relation: Relation::Leq,
        })
    }

    pub fn is_reflexive(&self) -> bool {
        self.reflexivity_violation().is_none()
    }

    pub fn is_transitive(&self) -> bool {
        self.transitivity_violation().is_none()
    }

    pub fn is_additive(&self) -> bool {
        self.additivity_violation().is_none()
    }

    /// Reflexive and transitive.
    pub fn is_closure_space(&self) -> bool {
        self.is_reflexive() && self.is_transitive()
    }

    /// Reflexive, transitive and finitely additive.
    pub fn is_topological(&self) -> bool {
        self.is_closure_space() && self.is_additive()
    }
}

/// Evaluates reflexivity `R`, transitivity `T`, finite additivity `A`, and
/// monotonicity both for nonempty `B` (`monotone-nonempty`) and for all `B`
/// (`monotone`).
pub fn check_axioms(c: &ClosureStructure) -> CheckReport {
    CheckReport::new(vec![
        CheckEntry::from_value("R", c.reflexivity_violation()),
        CheckEntry::from_value("T", c.transitivity_violation()),
        CheckEntry::from_value("A", c.additivity_violation()),
        CheckEntry::from_value("monotone-nonempty", c.monotonicity_violation(true)),
        CheckEntry::from_value("monotone", c.monotonicity_violation(false)),
    ])
}

fn continuity_violation(f: &SpaceMap<'_>, relation: Relation) -> Option<ValueWitness> {
    let (c, d) = (f.domain(), f.codomain());
    let q = c.quantale();
    let map = f.point_map();
    for a in Subset::all(c.points()) {
        let fa = a.image(map);
        for x in 0..c.points() {
            let lhs = c.value(a, x);
            let rhs = d.value(fa, map[x]);
            let ok = match relation {
                Relation::Leq => q.leq(lhs, rhs),
                Relation::Eq => lhs == rhs,
            };
            if !ok {
                let law = if relation == Relation::Leq { "C" } else { "C=" };
                return Some(ValueWitness { law, a, b: None, x, lhs, rhs, relation });
            }
        }
    }
    None
}

/// `(cA)(x) <= d(fA)(fx)` for all `A`, `x`.
pub fn check_continuous(f: &SpaceMap<'_>) -> CheckReport {
    CheckReport::new(vec![CheckEntry::from_value("C", continuity_violation(f, Relation::Leq))])
}

/// The equational variant `(cA)(x) = d(fA)(fx)` of continuity, for closure-preserving maps.
pub fn check_closure_preserving(f: &SpaceMap<'_>) -> CheckReport {
    CheckReport::new(vec![CheckEntry::from_value("C=", continuity_violation(f, Relation::Eq))])
}

impl SpaceMap<'_> {
    pub fn is_continuous(&self) -> bool {
        continuity_violation(self, Relation::Leq).is_none()
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::super::{core, discrete};
    use super::*;

    #[test]
    fn sierpinski_is_topological() {
        let r = check_axioms(&sierpinski());
        assert!(r.all_passed(), "{r:?}");
    }

    #[test]
    fn three_point_example_fails_additivity() {
        let c = three_point();
        let r = check_axioms(&c);
        assert_eq!(r.passed("R"), Some(true));
        assert_eq!(r.passed("T"), Some(true));
        assert_eq!(r.passed("A"), Some(false));
        let Some(Witness::Value(w)) = &r.entry("A").unwrap().witness else { panic!() };
        assert_eq!((w.a, w.b), (Subset(0b001), Some(Subset(0b010))));
        assert!(w.is_violation(c.quantale().lattice()));
        assert_eq!(w.recompute(&c), Some((w.lhs, w.rhs)));
    }

    #[test]
    fn discrete_passes_everything() {
        for n in 0..4 {
            assert!(check_axioms(&discrete(two(), n)).all_passed());
        }
    }

    #[test]
    fn continuity_examples() {
        let c = three_point();
        let plus = core(&c).unwrap();
        let id = SpaceMap::identity(&c, &c).unwrap();
        assert!(check_continuous(&id).all_passed());
        assert!(check_closure_preserving(&id).all_passed());
        let counit = SpaceMap::identity(&plus, &c).unwrap();
        assert!(check_continuous(&counit).all_passed());
        let back = SpaceMap::identity(&c, &plus).unwrap();
        let r = check_continuous(&back);
        assert!(!r.all_passed());
        let Some(Witness::Value(w)) = &r.entries[0].witness else { panic!() };
        assert_eq!(w.a.len(), 2);
    }
}
