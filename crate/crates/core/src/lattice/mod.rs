//! Finite complete lattices stored as an explicit order matrix with cached
//! join and meet tables.

mod catalog;
mod props;

pub use catalog::{catalog, CatalogEntry};
pub use props::{
    coprimes, is_ccd, is_coframe, is_sup_generated_by_coprimes, spatial_embedding, totally_below, totally_below_table,
    way_below, way_below_brute, CoprimeChar, SpatialEmbedding, SupGeneration, TOTALLY_BELOW_CAP,
};

use std::fmt;

use crate::SizeLimit;

/// Largest lattice the crate will build; element indices are stored in a byte.
pub const MAX_LATTICE_SIZE: usize = 255;

/// Index of an element of a [`FiniteLattice`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(pub u8);

impl Elem {
    #[inline]
    pub fn idx(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn new(i: usize) -> Elem {
        debug_assert!(i < 256);
        Elem(i as u8)
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// First law an order relation breaks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderViolation {
    NotReflexive(usize),
    NotAntisymmetric(usize, usize),
    NotTransitive(usize, usize, usize),
}

impl fmt::Display for OrderViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            OrderViolation::NotReflexive(x) => write!(f, "{x} is not below itself"),
            OrderViolation::NotAntisymmetric(x, y) => {
                write!(f, "{x} <= {y} and {y} <= {x} but {x} != {y}")
            }
            OrderViolation::NotTransitive(x, y, z) => {
                write!(f, "{x} <= {y} and {y} <= {z} but not {x} <= {z}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum LatticeError {
    #[error("a lattice needs at least one element")]
    Empty,
    #[error("order matrix row {row} has {len} entries, expected {size}")]
    NotSquare { row: usize, len: usize, size: usize },
    #[error("expected {expected} element names, got {got}")]
    NameCount { expected: usize, got: usize },
    #[error("element index {index} out of range for a lattice of size {size}")]
    OutOfRange { index: usize, size: usize },
    #[error("not a partial order: {0}")]
    NotAPartialOrder(OrderViolation),
    #[error("elements {0} and {1} have no least upper bound")]
    MissingJoin(usize, usize),
    #[error("elements {0} and {1} have no greatest lower bound")]
    MissingMeet(usize, usize),
    #[error(transparent)]
    SizeLimitExceeded(#[from] SizeLimit),
}

/// A finite complete lattice.
///
/// Elements are `0..size`. The order is kept as a dense boolean matrix; binary
/// joins and meets are derived once on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteLattice {
    size: usize,
    leq: Vec<bool>,
    names: Vec<String>,
    join_table: Vec<Elem>,
    meet_table: Vec<Elem>,
    bottom: Elem,
    top: Elem,
}

impl FiniteLattice {
    /// Validates an order matrix (`leq[x][y]` iff `x <= y`) and derives the
    /// lattice operations.
    pub fn from_leq(leq: &[Vec<bool>], names: Option<Vec<String>>) -> Result<Self, LatticeError> {
        let n = leq.len();
        if n == 0 {
            return Err(LatticeError::Empty);
        }
        if n > MAX_LATTICE_SIZE {
            return Err(SizeLimit::new("lattice construction", n, MAX_LATTICE_SIZE).into());
        }
        for (row, r) in leq.iter().enumerate() {
            if r.len() != n {
                return Err(LatticeError::NotSquare { row, len: r.len(), size: n });
            }
        }
        let flat: Vec<bool> = leq.iter().flatten().copied().collect();
        Self::from_flat(n, flat, names)
    }

    /// Builds the order generated by `pairs` (each `(x, y)` meaning `x <= y`)
    /// under reflexive-transitive closure, then validates it.
    pub fn from_cover_pairs(
        size: usize,
        pairs: &[(usize, usize)],
        names: Option<Vec<String>>,
    ) -> Result<Self, LatticeError> {
        if size == 0 {
            return Err(LatticeError::Empty);
        }
        if size > MAX_LATTICE_SIZE {
            return Err(SizeLimit::new("lattice construction", size, MAX_LATTICE_SIZE).into());
        }
        let mut leq = vec![false; size * size];
        for x in 0..size {
            leq[x * size + x] = true;
        }
        for &(x, y) in pairs {
            for i in [x, y] {
                if i >= size {
                    return Err(LatticeError::OutOfRange { index: i, size });
                }
            }
            leq[x * size + y] = true;
        }
        // Warshall
        for k in 0..size {
            for i in 0..size {
                if leq[i * size + k] {
                    for j in 0..size {
                        if leq[k * size + j] {
                            leq[i * size + j] = true;
                        }
                    }
                }
            }
        }
        Self::from_flat(size, leq, names)
    }

    fn from_flat(n: usize, leq: Vec<bool>, names: Option<Vec<String>>) -> Result<Self, LatticeError> {
        let le = |x: usize, y: usize| leq[x * n + y];
        for x in 0..n {
            if !le(x, x) {
                return Err(LatticeError::NotAPartialOrder(OrderViolation::NotReflexive(x)));
            }
        }
        for x in 0..n {
            for y in x + 1..n {
                if le(x, y) && le(y, x) {
                    return Err(LatticeError::NotAPartialOrder(OrderViolation::NotAntisymmetric(x, y)));
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                if !le(x, y) {
                    continue;
                }
                for z in 0..n {
                    if le(y, z) && !le(x, z) {
                        return Err(LatticeError::NotAPartialOrder(OrderViolation::NotTransitive(x, y, z)));
                    }
                }
            }
        }

        let names = match names {
            Some(names) if names.len() != n => return Err(LatticeError::NameCount { expected: n, got: names.len() }),
            Some(names) => names,
            None => (0..n).map(|i| i.to_string()).collect(),
        };

        let mut join_table = vec![Elem(0); n * n];
        let mut meet_table = vec![Elem(0); n * n];
        for x in 0..n {
            for y in x..n {
                let j = (0..n)
                    .filter(|&u| le(x, u) && le(y, u))
                    .find(|&u| (0..n).all(|w| !(le(x, w) && le(y, w)) || le(u, w)))
                    .ok_or(LatticeError::MissingJoin(x, y))?;
                let m = (0..n)
                    .filter(|&l| le(l, x) && le(l, y))
                    .find(|&l| (0..n).all(|w| !(le(w, x) && le(w, y)) || le(w, l)))
                    .ok_or(LatticeError::MissingMeet(x, y))?;
                join_table[x * n + y] = Elem::new(j);
                join_table[y * n + x] = Elem::new(j);
                meet_table[x * n + y] = Elem::new(m);
                meet_table[y * n + x] = Elem::new(m);
            }
        }
        // With binary joins and meets on a nonempty finite poset, the joins of
        // everything and of nothing exist.
        let top = (0..n).find(|&t| (0..n).all(|x| le(x, t))).expect("finite lattice has a top");
        let bottom = (0..n).find(|&b| (0..n).all(|x| le(b, x))).expect("finite lattice has a bottom");

        Ok(FiniteLattice {
            size: n,
            leq,
            names,
            join_table,
            meet_table,
            bottom: Elem::new(bottom),
            top: Elem::new(top),
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn bottom(&self) -> Elem {
        self.bottom
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, e: Elem) -> &str {
        &self.names[e.idx()]
    }

    /// Looks an element up by display name, falling back to a decimal index.
    pub fn element(&self, name: &str) -> Option<Elem> {
        self.names
            .iter()
            .position(|n| n == name)
            .or_else(|| name.parse::<usize>().ok().filter(|&i| i < self.size))
            .map(Elem::new)
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.size).map(Elem::new)
    }

    #[inline]
    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.leq[a.idx() * self.size + b.idx()]
    }

    #[inline]
    pub fn lt(&self, a: Elem, b: Elem) -> bool {
        a != b && self.leq(a, b)
    }

    #[inline]
    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        self.join_table[a.idx() * self.size + b.idx()]
    }

    #[inline]
    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.meet_table[a.idx() * self.size + b.idx()]
    }

    /// Least upper bound of any set of elements; the empty join is bottom.
    pub fn join_all<I: IntoIterator<Item = Elem>>(&self, items: I) -> Elem {
        items.into_iter().fold(self.bottom, |acc, e| self.join(acc, e))
    }

    /// Greatest lower bound of any set of elements; the empty meet is top.
    pub fn meet_all<I: IntoIterator<Item = Elem>>(&self, items: I) -> Elem {
        items.into_iter().fold(self.top, |acc, e| self.meet(acc, e))
    }

    /// The order as matrix rows.
    pub fn leq_matrix(&self) -> Vec<Vec<bool>> {
        self.leq.chunks(self.size).map(|r| r.to_vec()).collect()
    }

    /// Pairs `(x, y)` with `y` covering `x`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in self.elements() {
            for y in self.elements() {
                if self.lt(x, y) && !self.elements().any(|z| self.lt(x, z) && self.lt(z, y)) {
                    out.push((x.idx(), y.idx()));
                }
            }
        }
        out
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self, LatticeError> {
        if names.len() != self.size {
            return Err(LatticeError::NameCount { expected: self.size, got: names.len() });
        }
        self.names = names;
        Ok(self)
    }

    /// The chain `0 < 1 < .. < n-1`.
    pub fn chain(n: usize) -> Result<Self, LatticeError> {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_cover_pairs(n, &pairs, None)
    }

    /// The powerset of a `k`-element set; element `i` is the subset with bitmask `i`.
    pub fn boolean(k: usize) -> Result<Self, LatticeError> {
        if k > 7 {
            return Err(SizeLimit::new("boolean lattice", 1 << k.min(16), 128).into());
        }
        let n = 1usize << k;
        let leq: Vec<Vec<bool>> = (0..n).map(|x| (0..n).map(|y| x & !y == 0).collect()).collect();
        let names = (0..n).map(|x| crate::subset::Subset(x as u32).to_string()).collect();
        Self::from_leq(&leq, Some(names))
    }

    /// The diamond `M3`: bottom, three pairwise incomparable atoms, top.
    pub fn m3() -> Self {
        Self::from_cover_pairs(
            5,
            &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
            Some(["bot", "a", "b", "c", "top"].map(String::from).to_vec()),
        )
        .expect("M3 is a lattice")
    }

    /// The pentagon `N5`: `bot < a < b < top` and `bot < c < top`.
    pub fn n5() -> Self {
        Self::from_cover_pairs(
            5,
            &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)],
            Some(["bot", "a", "b", "c", "top"].map(String::from).to_vec()),
        )
        .expect("N5 is a lattice")
    }

    /// Componentwise product; element `(i, j)` has index `i * other.size() + j`.
    pub fn product(&self, other: &FiniteLattice) -> Result<Self, LatticeError> {
        let (n1, n2) = (self.size, other.size);
        let n = n1 * n2;
        if n > MAX_LATTICE_SIZE {
            return Err(SizeLimit::new("lattice product", n, MAX_LATTICE_SIZE).into());
        }
        let leq: Vec<Vec<bool>> = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| {
                        self.leq(Elem::new(a / n2), Elem::new(b / n2))
                            && other.leq(Elem::new(a % n2), Elem::new(b % n2))
                    })
                    .collect()
            })
            .collect();
        let names = (0..n).map(|a| format!("({},{})", self.names[a / n2], other.names[a % n2])).collect();
        Self::from_leq(&leq, Some(names))
    }
}
