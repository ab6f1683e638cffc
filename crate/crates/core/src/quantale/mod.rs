//! Unital quantales on finite lattices.
//!
//! Only the residual with `u <= [v, w]` iff `u (x) v <= w` is provided; for a
//! non-commutative tensor the other residual (`v (x) u <= w`) is a different
//! map and is not used anywhere in the crate.

mod enumerate;
mod standard;

pub use enumerate::{enumerate_quantales, ENUMERATION_CAP};
pub use standard::{Monoid, StandardKind};

use std::fmt;

use crate::lattice::{is_sup_generated_by_coprimes, Elem, FiniteLattice, LatticeError};
use crate::SizeLimit;

/// Which argument of the tensor a join-preservation failure concerns.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum QuantaleError {
    #[error("tensor table has {got} entries, expected {expected}")]
    TableShape { expected: usize, got: usize },
    #[error("tensor entry ({0}, {1}) is not an element of the lattice")]
    EntryOutOfRange(usize, usize),
    #[error("unit {0} is not an element of the lattice")]
    UnitOutOfRange(usize),
    #[error("tensor is not associative at ({0}, {1}, {2})")]
    NotAssociative(Elem, Elem, Elem),
    #[error("unit law fails at {0}")]
    UnitLawFails(Elem),
    #[error("tensor does not preserve the join of {u} and {u2} in its {side} argument (other argument {v})")]
    JoinNotPreserved { side: Side, u: Elem, u2: Elem, v: Elem },
    #[error("bottom does not absorb {0}")]
    BottomNotAbsorbing(Elem),
    #[error("invalid monoid table: {0}")]
    InvalidMonoidTable(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    SizeLimitExceeded(#[from] SizeLimit),
}

/// How a quantale was built. Only the powerset-of-monoid tag changes behaviour
/// (it enables the lax-action view of closure structures).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    Custom,
    Standard(StandardKind),
    FreeOnMonoid(Monoid),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub integral: bool,
    pub commutative: bool,
    pub lattice_spatial: bool,
}

/// A finite unital quantale `(V, (x), k)`.
#[derive(Clone, Debug)]
pub struct Quantale {
    lattice: FiniteLattice,
    tensor: Vec<Elem>,
    unit: Elem,
    residual: Vec<Elem>,
    provenance: Provenance,
}

impl PartialEq for Quantale {
    fn eq(&self, other: &Self) -> bool {
        self.lattice == other.lattice && self.tensor == other.tensor && self.unit == other.unit
    }
}

impl Eq for Quantale {}

/// Checks the quantale laws on a raw table, returning the first violation.
pub(crate) fn check_laws(l: &FiniteLattice, t: &[Elem], unit: Elem) -> Result<(), QuantaleError> {
    let n = l.size();
    let ten = |a: Elem, b: Elem| t[a.idx() * n + b.idx()];
    for v in l.elements() {
        if ten(unit, v) != v || ten(v, unit) != v {
            return Err(QuantaleError::UnitLawFails(v));
        }
    }
    let bot = l.bottom();
    for v in l.elements() {
        if ten(bot, v) != bot || ten(v, bot) != bot {
            return Err(QuantaleError::BottomNotAbsorbing(v));
        }
    }
    for u in l.elements() {
        for u2 in l.elements().filter(|&u2| u2 > u) {
            let j = l.join(u, u2);
            for v in l.elements() {
                if ten(j, v) != l.join(ten(u, v), ten(u2, v)) {
                    return Err(QuantaleError::JoinNotPreserved { side: Side::Left, u, u2, v });
                }
                if ten(v, j) != l.join(ten(v, u), ten(v, u2)) {
                    return Err(QuantaleError::JoinNotPreserved { side: Side::Right, u, u2, v });
                }
            }
        }
    }
    for u in l.elements() {
        for v in l.elements() {
            let uv = ten(u, v);
            for w in l.elements() {
                if ten(uv, w) != ten(u, ten(v, w)) {
                    return Err(QuantaleError::NotAssociative(u, v, w));
                }
            }
        }
    }
    Ok(())
}

impl Quantale {
    /// Validates a tensor table (row-major, `tensor[u * n + v] = u (x) v`) and unit.
    pub fn new(lattice: FiniteLattice, tensor: Vec<Elem>, unit: Elem) -> Result<Self, QuantaleError> {
        Self::with_provenance(lattice, tensor, unit, Provenance::Custom)
    }

    /// Same as [`Quantale::new`] with the table given as rows.
    pub fn from_rows(lattice: FiniteLattice, rows: &[Vec<usize>], unit: usize) -> Result<Self, QuantaleError> {
        let n = lattice.size();
        let mut tensor = Vec::with_capacity(n * n);
        if rows.len() != n {
            return Err(QuantaleError::TableShape { expected: n * n, got: rows.iter().map(Vec::len).sum() });
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(QuantaleError::TableShape { expected: n * n, got: rows.iter().map(Vec::len).sum() });
            }
            for (j, &e) in row.iter().enumerate() {
                if e >= n {
                    return Err(QuantaleError::EntryOutOfRange(i, j));
                }
                tensor.push(Elem::new(e));
            }
        }
        if unit >= n {
            return Err(QuantaleError::UnitOutOfRange(unit));
        }
        Self::new(lattice, tensor, Elem::new(unit))
    }

    pub(crate) fn with_provenance(
        lattice: FiniteLattice,
        tensor: Vec<Elem>,
        unit: Elem,
        provenance: Provenance,
    ) -> Result<Self, QuantaleError> {
        let n = lattice.size();
        if tensor.len() != n * n {
            return Err(QuantaleError::TableShape { expected: n * n, got: tensor.len() });
        }
        if let Some(pos) = tensor.iter().position(|e| e.idx() >= n) {
            return Err(QuantaleError::EntryOutOfRange(pos / n, pos % n));
        }
        if unit.idx() >= n {
            return Err(QuantaleError::UnitOutOfRange(unit.idx()));
        }
        check_laws(&lattice, &tensor, unit)?;
        let mut residual = vec![lattice.bottom(); n * n];
        for v in lattice.elements() {
            for w in lattice.elements() {
                residual[v.idx() * n + w.idx()] =
                    lattice.join_all(lattice.elements().filter(|&u| lattice.leq(tensor[u.idx() * n + v.idx()], w)));
            }
        }
        Ok(Quantale { lattice, tensor, unit, residual, provenance })
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn size(&self) -> usize {
        self.lattice.size()
    }

    pub fn unit(&self) -> Elem {
        self.unit
    }

    pub fn bottom(&self) -> Elem {
        self.lattice.bottom()
    }

    pub fn top(&self) -> Elem {
        self.lattice.top()
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// The monoid this quantale is the powerset of, if it was built that way.
    pub fn monoid(&self) -> Option<&Monoid> {
        match &self.provenance {
            Provenance::FreeOnMonoid(m) => Some(m),
            _ => None,
        }
    }

    #[inline]
    pub fn tensor(&self, u: Elem, v: Elem) -> Elem {
        self.tensor[u.idx() * self.size() + v.idx()]
    }

    pub fn tensor_table(&self) -> &[Elem] {
        &self.tensor
    }

    /// `[v, w]`, the largest `u` with `u (x) v <= w`.
    #[inline]
    pub fn residual(&self, v: Elem, w: Elem) -> Elem {
        self.residual[v.idx() * self.size() + w.idx()]
    }

    #[inline]
    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.lattice.leq(a, b)
    }

    #[inline]
    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        self.lattice.join(a, b)
    }

    #[inline]
    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.lattice.meet(a, b)
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        self.lattice.elements()
    }

    pub fn name(&self, e: Elem) -> &str {
        self.lattice.name(e)
    }

    pub fn classify(&self) -> Classification {
        let n = self.size();
        let commutative = (0..n).all(|u| (0..n).all(|v| self.tensor[u * n + v] == self.tensor[v * n + u]));
        Classification { integral: self.unit == self.top(), commutative, lattice_spatial: self.is_spatial() }
    }

    /// The lattice is sup-generated by its coprime elements.
    pub fn is_spatial(&self) -> bool {
        is_sup_generated_by_coprimes(&self.lattice).holds()
    }

    /// Tensor rows as element indices.
    pub fn tensor_rows(&self) -> Vec<Vec<usize>> {
        self.tensor.chunks(self.size()).map(|r| r.iter().map(|e| e.idx()).collect()).collect()
    }
}
