//! Quantale-valued closure structures on finite sets.
//!
//! A [`ClosureStructure`] is any table `c: PX -> V^X`; the type itself assumes
//! no axioms. Reflexivity, transitivity, finite additivity and continuity are
//! checked by the functions in this module and reported in a [`CheckReport`].

mod action;
mod approach;
mod axioms;
mod bar;
mod core;
mod initial;
mod levels;
mod relation;
pub mod sample;

pub use self::core::{check_core_theorem, core, core_with_covers, CoverFamily, CORE_CAP};
pub use action::{action_to_closure, monoid_action_view, LaxAction};
pub use approach::{approach_from_metric, lawvere_value, MetricViolation};
pub use axioms::{
    check_axioms, check_closure_preserving, check_continuous, CheckEntry, CheckReport, Relation, ValueWitness, Witness,
};
pub use bar::{bar, check_t_via_bar, level_set};
pub use initial::{discrete, indiscrete, initial_structure, vtop_limit, Source};
pub use levels::{check_levels, coprime_levels_additive, from_levels, to_levels, LevelFamily, LevelWitness};
pub use relation::powerset_lax_extension;

use std::sync::Arc;

use crate::lattice::Elem;
use crate::quantale::Quantale;
use crate::subset::{Subset, MAX_POINTS};
use crate::{SizeLimit, Verdict};

/// Largest base set a closure table is built for (the table has `2^n * n` entries).
pub const MAX_BASE_SIZE: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ClosureError {
    #[error("closure table has {got} entries, expected {expected}")]
    TableShape { expected: usize, got: usize },
    #[error("closure value at subset {subset}, point {point} is not an element of the quantale")]
    ValueOutOfRange { subset: Subset, point: usize },
    #[error("structures are valued in different quantales")]
    QuantaleMismatch,
    #[error("point map sends {point} to {image}, outside a codomain of size {size}")]
    MapOutOfRange { point: usize, image: usize, size: usize },
    #[error("point map has {got} entries, expected {expected}")]
    MapLength { expected: usize, got: usize },
    #[error("structure is not monotone: {b} is inside {a} but c({b}) exceeds c({a}) at point {x}")]
    NotMonotone { b: Subset, a: Subset, x: usize },
    #[error("level family violates {0}")]
    LevelsInvalid(LevelWitness),
    #[error("not a metric: {0}")]
    NotAMetric(MetricViolation),
    #[error("the quantale is not the powerset of a monoid")]
    NotFreeMonoidQuantale,
    #[error(transparent)]
    SizeLimitExceeded(#[from] SizeLimit),
}

/// A table assigning to each subset `A` of `{0, .., n-1}` and point `x` the value `(cA)(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureStructure {
    quantale: Arc<Quantale>,
    points: usize,
    table: Vec<Elem>,
}

impl ClosureStructure {
    /// Wraps a table indexed `[A * n + x]`, with `A` a subset bitmask.
    pub fn new(quantale: Arc<Quantale>, points: usize, table: Vec<Elem>) -> Result<Self, ClosureError> {
        SizeLimit::check("closure table", points, MAX_BASE_SIZE.min(MAX_POINTS))?;
        let expected = (1usize << points) * points;
        if table.len() != expected {
            return Err(ClosureError::TableShape { expected, got: table.len() });
        }
        if points > 0 {
            if let Some(pos) = table.iter().position(|e| e.idx() >= quantale.size()) {
                return Err(ClosureError::ValueOutOfRange {
                    subset: Subset((pos / points) as u32),
                    point: pos % points,
                });
            }
        }
        Ok(ClosureStructure { quantale, points, table })
    }

    pub fn from_fn(
        quantale: Arc<Quantale>,
        points: usize,
        mut f: impl FnMut(Subset, usize) -> Elem,
    ) -> Result<Self, ClosureError> {
        SizeLimit::check("closure table", points, MAX_BASE_SIZE.min(MAX_POINTS))?;
        let table = Subset::all(points).flat_map(|a| (0..points).map(move |x| (a, x))).map(|(a, x)| f(a, x)).collect();
        Self::new(quantale, points, table)
    }

    /// Builds from a table known to be in range.
    pub(crate) fn from_fn_unchecked(
        quantale: Arc<Quantale>,
        points: usize,
        mut f: impl FnMut(Subset, usize) -> Elem,
    ) -> Self {
        let table = Subset::all(points).flat_map(|a| (0..points).map(move |x| (a, x))).map(|(a, x)| f(a, x)).collect();
        ClosureStructure { quantale, points, table }
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.points)
    }

    pub fn quantale(&self) -> &Quantale {
        &self.quantale
    }

    pub fn quantale_arc(&self) -> &Arc<Quantale> {
        &self.quantale
    }

    pub fn table(&self) -> &[Elem] {
        &self.table
    }

    /// `(cA)(x)`.
    #[inline]
    pub fn value(&self, a: Subset, x: usize) -> Elem {
        self.table[a.bits() * self.points + x]
    }

    /// The function `cA` as a slice indexed by point.
    pub fn row(&self, a: Subset) -> &[Elem] {
        let n = self.points;
        &self.table[a.bits() * n..(a.bits() + 1) * n]
    }

    pub fn same_quantale(&self, other: &ClosureStructure) -> bool {
        Arc::ptr_eq(&self.quantale, &other.quantale) || self.quantale == other.quantale
    }

    /// Pointwise order; `None` when the shapes or quantales differ.
    pub fn leq(&self, other: &ClosureStructure) -> Option<bool> {
        if self.points != other.points || !self.same_quantale(other) {
            return None;
        }
        let q = &self.quantale;
        Some(self.table.iter().zip(&other.table).all(|(&a, &b)| q.leq(a, b)))
    }

    /// First `(A, x)` where `self` exceeds `other`.
    pub fn first_excess(&self, other: &ClosureStructure) -> Option<(Subset, usize)> {
        let q = &self.quantale;
        Subset::all(self.points)
            .flat_map(|a| (0..self.points).map(move |x| (a, x)))
            .find(|&(a, x)| !q.leq(self.value(a, x), other.value(a, x)))
    }

    pub fn pointwise_join(&self, other: &ClosureStructure) -> ClosureStructure {
        let q = &self.quantale;
        let table = self.table.iter().zip(&other.table).map(|(&a, &b)| q.join(a, b)).collect();
        ClosureStructure { quantale: self.quantale.clone(), points: self.points, table }
    }

    pub fn pointwise_meet(&self, other: &ClosureStructure) -> ClosureStructure {
        let q = &self.quantale;
        let table = self.table.iter().zip(&other.table).map(|(&a, &b)| q.meet(a, b)).collect();
        ClosureStructure { quantale: self.quantale.clone(), points: self.points, table }
    }

    /// `B` inside `A` implies `cB <= cA`, for all `B` including the empty set.
    pub fn monotone(&self) -> Verdict<(Subset, Subset, usize)> {
        self.monotone_from(false)
    }

    pub(crate) fn monotone_from(&self, skip_empty: bool) -> Verdict<(Subset, Subset, usize)> {
        let q = &self.quantale;
        for a in Subset::all(self.points) {
            // immediate subsets suffice; a chain from a nonempty B up to A stays nonempty
            for y in a.iter() {
                let b = Subset(a.0 & !(1 << y));
                if skip_empty && b.is_empty() {
                    continue;
                }
                for x in 0..self.points {
                    if !q.leq(self.value(b, x), self.value(a, x)) {
                        return Verdict::Fails((b, a, x));
                    }
                }
            }
        }
        Verdict::Holds
    }

    /// Every point list for display; values by name.
    pub fn describe(&self) -> Vec<(Subset, Vec<String>)> {
        Subset::all(self.points)
            .map(|a| (a, self.row(a).iter().map(|&e| self.quantale.name(e).to_string()).collect()))
            .collect()
    }
}

/// A map of points between two closure structures over the same quantale.
#[derive(Clone, Debug)]
pub struct SpaceMap<'a> {
    domain: &'a ClosureStructure,
    codomain: &'a ClosureStructure,
    point_map: Vec<usize>,
}

impl<'a> SpaceMap<'a> {
    pub fn new(
        domain: &'a ClosureStructure,
        codomain: &'a ClosureStructure,
        point_map: Vec<usize>,
    ) -> Result<Self, ClosureError> {
        if !domain.same_quantale(codomain) {
            return Err(ClosureError::QuantaleMismatch);
        }
        check_point_map(&point_map, domain.points(), codomain.points())?;
        Ok(SpaceMap { domain, codomain, point_map })
    }

    pub fn identity(space: &'a ClosureStructure, target: &'a ClosureStructure) -> Result<Self, ClosureError> {
        SpaceMap::new(space, target, (0..space.points()).collect())
    }

    pub fn domain(&self) -> &ClosureStructure {
        self.domain
    }

    pub fn codomain(&self) -> &ClosureStructure {
        self.codomain
    }

    pub fn point_map(&self) -> &[usize] {
        &self.point_map
    }
}

pub(crate) fn check_point_map(map: &[usize], from: usize, to: usize) -> Result<(), ClosureError> {
    if map.len() != from {
        return Err(ClosureError::MapLength { expected: from, got: map.len() });
    }
    if let Some((point, &image)) = map.iter().enumerate().find(|(_, &y)| y >= to) {
        return Err(ClosureError::MapOutOfRange { point, image, size: to });
    }
    Ok(())
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    pub fn two() -> Arc<Quantale> {
        Arc::new(Quantale::two())
    }

    /// Structure over the two-element quantale from a closure map `PX -> PX`.
    pub fn from_sets(n: usize, sets: &[u32]) -> ClosureStructure {
        let q = two();
        ClosureStructure::from_fn(q, n, |a, x| Elem((sets[a.bits()] >> x & 1) as u8)).unwrap()
    }

    /// X = {s, t}: c{} = {}, c{t} = {t}, c{s} = cX = X.
    pub fn sierpinski() -> ClosureStructure {
        from_sets(2, &[0b00, 0b11, 0b10, 0b11])
    }

    /// X = {0, 1, 2}: cA = A for |A| <= 1, X otherwise.
    pub fn three_point() -> ClosureStructure {
        let sets: Vec<u32> = (0..8u32).map(|a| if a.count_ones() <= 1 { a } else { 0b111 }).collect();
        from_sets(3, &sets)
    }
}
