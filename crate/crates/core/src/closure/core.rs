//! The finitely additive core `c+` of a closure table.
//!
//! `(c+ A)(x)` is the meet, over all finite covers `(M_1, .., M_m)` of `A`, of
//! `(cM_1)(x) v .. v (cM_m)(x)`. Since the join is commutative and idempotent a
//! cover's value depends only on its set of parts, so covers are enumerated as
//! families of subsets of `A`; the empty family is the only cover of the empty
//! set and gives `bot`.

use super::axioms::{check_continuous, CheckEntry, CheckReport, ValueWitness, Witness};
use super::{ClosureError, ClosureStructure, SpaceMap};
use crate::subset::Subset;
use crate::SizeLimit;

/// Largest base set for which covers are enumerated.
pub const CORE_CAP: usize = 4;

/// Which subsets may appear as parts of a cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoverFamily {
    /// Parts are nonempty. An empty part adds `c{}` to the join and can only
    /// raise a cover's value, so dropping those covers leaves the meet unchanged.
    NonEmptyParts,
    /// Every subset of `A` may be a part.
    AllParts,
}

/// `c+` with covers by nonempty parts.
pub fn core(c: &ClosureStructure) -> Result<ClosureStructure, SizeLimit> {
    core_with_covers(c, CoverFamily::NonEmptyParts)
}

pub fn core_with_covers(c: &ClosureStructure, family: CoverFamily) -> Result<ClosureStructure, SizeLimit> {
    let n = c.points();
    SizeLimit::check("finitely additive core", n, CORE_CAP)?;
    let q = c.quantale();
    let mut table = Vec::with_capacity(c.table().len());
    for a in Subset::all(n) {
        let parts: Vec<Subset> = a.subsets().filter(|p| family == CoverFamily::AllParts || !p.is_empty()).collect();
        let families = 1usize << parts.len();
        let mut unions = vec![Subset::EMPTY; families];
        let mut values = vec![q.bottom(); families * n];
        let mut best = vec![q.top(); n];
        for f in 0..families {
            if f > 0 {
                let low = f.trailing_zeros() as usize;
                let rest = f & (f - 1);
                let part = parts[low];
                unions[f] = unions[rest].union(part);
                for x in 0..n {
                    values[f * n + x] = q.join(values[rest * n + x], c.value(part, x));
                }
            }
            if unions[f] == a {
                for (x, b) in best.iter_mut().enumerate() {
                    *b = q.meet(*b, values[f * n + x]);
                }
            }
        }
        table.extend(best);
    }
    Ok(ClosureStructure::new(c.quantale_arc().clone(), n, table).expect("core of a valid table"))
}

/// Checks that `c+` is topological, lies below `c`, is monotone, that the
/// identity `(X, c+) -> (X, c)` is continuous, and that each probe `g: (Y, d) -> (X, c)`
/// with `d` topological and `g` continuous stays continuous into `(X, c+)`.
///
/// When the quantale is not sup-generated by coprimes the report is marked
/// exploratory.
pub fn check_core_theorem(
    c: &ClosureStructure,
    probes: &[(&ClosureStructure, &[usize])],
) -> Result<CheckReport, ClosureError> {
    let plus = core(c)?;
    let spatial = c.quantale().is_spatial();
    let mut entries = Vec::new();

    let mut input = CheckEntry::pass("input-closure-space");
    if let Some(w) = c.reflexivity_violation().or_else(|| c.transitivity_violation()) {
        input = CheckEntry::fail("input-closure-space", Witness::Value(w));
    }
    entries.push(input);
    entries.push(CheckEntry::from_value("core-R", plus.reflexivity_violation()));
    entries.push(CheckEntry::from_value("core-T", plus.transitivity_violation()));
    entries.push(CheckEntry::from_value("core-A", plus.additivity_violation()));
    let excess = plus.first_excess(c).map(|(a, x)| ValueWitness {
        law: "core-le-c",
        a,
        b: None,
        x,
        lhs: plus.value(a, x),
        rhs: c.value(a, x),
        relation: super::Relation::Leq,
    });
    entries.push(CheckEntry::from_value("core-le-c", excess));
    let mono = plus.monotone().witness().map(|&(b, a, x)| ValueWitness {
        law: "monotone",
        a,
        b: Some(b),
        x,
        lhs: plus.value(b, x),
        rhs: plus.value(a, x),
        relation: super::Relation::Leq,
    });
    entries.push(CheckEntry::from_value("core-monotone", mono));
    let counit = SpaceMap::identity(&plus, c)?;
    let mut counit_entry = check_continuous(&counit).entries.remove(0);
    counit_entry.name = "counit-continuous".into();
    entries.push(counit_entry);

    let mut used = 0usize;
    let mut universal = CheckEntry::pass("universal-property");
    for (i, &(d, g)) in probes.iter().enumerate() {
        let into_c = SpaceMap::new(d, c, g.to_vec())?;
        if !d.is_topological() || !into_c.is_continuous() {
            continue;
        }
        used += 1;
        let into_plus = SpaceMap::new(d, &plus, g.to_vec())?;
        if let Some(entry) = check_continuous(&into_plus).failures().next() {
            let w = entry.witness.clone().expect("failed entry has a witness");
            universal = CheckEntry::fail("universal-property", Witness::Text(format!("probe {i}: {w}")));
            break;
        }
    }
    entries.push(
        universal.with_note(format!("{used} of {} probes were continuous maps from topological domains", probes.len())),
    );

    let mut report = CheckReport::new(entries);
    report.exploratory = !spatial;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::super::{check_axioms, discrete, initial_structure, Source};
    use super::*;

    #[test]
    fn core_of_three_point_example_is_discrete() {
        let c = three_point();
        let plus = core(&c).unwrap();
        assert_eq!(plus, discrete(two(), 3));
        let r = check_core_theorem(&c, &[]).unwrap();
        assert!(r.all_passed() && !r.exploratory, "{r:?}");
    }

    #[test]
    fn core_fixes_additive_structures() {
        let s = sierpinski();
        assert_eq!(core(&s).unwrap(), s);
        let d = discrete(two(), 4);
        assert_eq!(core(&d).unwrap(), d);
        assert!(check_axioms(&core(&three_point()).unwrap()).all_passed());
    }

    #[test]
    fn empty_set_gets_bottom() {
        let q = two();
        let c = ClosureStructure::from_fn(q.clone(), 2, |_, _| q.top()).unwrap();
        let plus = core(&c).unwrap();
        for x in 0..2 {
            assert_eq!(plus.value(Subset::EMPTY, x), q.bottom());
            assert_eq!(plus.value(Subset(1), x), q.top());
        }
    }

    #[test]
    fn pruned_covers_agree_with_all_parts() {
        for c in [three_point(), sierpinski()] {
            assert_eq!(core(&c).unwrap(), core_with_covers(&c, CoverFamily::AllParts).unwrap());
        }
    }

    #[test]
    fn cap() {
        let d = discrete(two(), 5);
        assert!(core(&d).is_err());
    }

    #[test]
    fn universal_property_probe() {
        let c = three_point();
        let s = sierpinski();
        // pull the three-point structure back along g: {s, t} -> X, then
        // coreflect; g stays continuous into c+
        let g = vec![0usize, 1];
        let pulled = initial_structure(c.quantale_arc(), 2, &[Source::new(&g, &c)]).unwrap();
        let d = core(&pulled).unwrap();
        let r = check_core_theorem(&c, &[(&d, &g), (&s, &g)]).unwrap();
        assert!(r.all_passed(), "{r:?}");
    }
}
