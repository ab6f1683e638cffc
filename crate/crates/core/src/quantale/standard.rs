//! Standard quantales: the trivial and two-element quantales, chain frames,
//! truncated Lawvere and Lukasiewicz chains, powersets of finite monoids and
//! products.

use std::fmt;
use std::str::FromStr;

use super::{Provenance, Quantale, QuantaleError};
use crate::lattice::{Elem, FiniteLattice};
use crate::subset::Subset;
use crate::SizeLimit;

/// Largest monoid whose powerset quantale is built.
pub const MAX_MONOID_SIZE: usize = 7;

/// A finite monoid given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monoid {
    names: Vec<String>,
    table: Vec<usize>,
    unit: usize,
}

impl Monoid {
    /// Validates a multiplication table (`rows[a][b] = ab`): entries in range,
    /// associative, with a two-sided neutral element.
    pub fn new(rows: &[Vec<usize>], names: Option<Vec<String>>) -> Result<Self, QuantaleError> {
        let m = rows.len();
        let bad = |msg: String| Err(QuantaleError::InvalidMonoidTable(msg));
        if m == 0 {
            return bad("a monoid needs at least one element".into());
        }
        if m > MAX_MONOID_SIZE {
            return Err(SizeLimit::new("monoid powerset", m, MAX_MONOID_SIZE).into());
        }
        if let Some(r) = rows.iter().position(|r| r.len() != m) {
            return bad(format!("row {r} does not have {m} entries"));
        }
        let table: Vec<usize> = rows.iter().flatten().copied().collect();
        if let Some(pos) = table.iter().position(|&e| e >= m) {
            return bad(format!("entry ({}, {}) out of range", pos / m, pos % m));
        }
        let mul = |a: usize, b: usize| table[a * m + b];
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                        return bad(format!("not associative at ({a}, {b}, {c})"));
                    }
                }
            }
        }
        let Some(unit) = (0..m).find(|&e| (0..m).all(|a| mul(e, a) == a && mul(a, e) == a)) else {
            return bad("no neutral element".into());
        };
        let names = match names {
            Some(n) if n.len() == m => n,
            Some(n) => return bad(format!("expected {m} names, got {}", n.len())),
            None => (0..m).map(|i| if i == unit { "e".to_string() } else { format!("m{i}") }).collect(),
        };
        Ok(Monoid { names, table, unit })
    }

    /// `{e, a}` with `aa = a`.
    pub fn idempotent() -> Monoid {
        Monoid::new(&[vec![0, 1], vec![1, 1]], Some(vec!["e".into(), "a".into()])).expect("monoid")
    }

    /// The cyclic group of order `n`.
    pub fn cyclic(n: usize) -> Result<Monoid, QuantaleError> {
        let rows: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let names = (0..n).map(|i| if i == 0 { "e".to_string() } else { format!("g{i}") }).collect();
        Monoid::new(&rows, Some(names))
    }

    /// The symmetric group on three letters, composition `(pq)(i) = p(q(i))`.
    pub fn symmetric3() -> Monoid {
        let perms: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
        let names = ["e", "s01", "s12", "s02", "r", "rr"].map(String::from).to_vec();
        let idx = |p: [usize; 3]| perms.iter().position(|&q| q == p).expect("closed");
        let rows: Vec<Vec<usize>> =
            perms.iter().map(|p| perms.iter().map(|q| idx([p[q[0]], p[q[1]], p[q[2]]])).collect()).collect();
        Monoid::new(&rows, Some(names)).expect("S3 is a group")
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size() + b]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.size()).map(<[usize]>::to_vec).collect()
    }

    pub fn is_commutative(&self) -> bool {
        let m = self.size();
        (0..m).all(|a| (0..m).all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}

/// Named constructors, with a textual form such as `lawvere_chain(2)` or
/// `product(two,two)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StandardKind {
    Trivial,
    Two,
    ChainFrame(usize),
    BooleanFrame(usize),
    LawvereChain(usize),
    LukasiewiczChain(usize),
    /// `idempotent`, `s3` or `cyclic<n>`.
    FreeOnMonoid(String),
    Product(Box<StandardKind>, Box<StandardKind>),
}

impl fmt::Display for StandardKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StandardKind::Trivial => write!(f, "trivial"),
            StandardKind::Two => write!(f, "two"),
            StandardKind::ChainFrame(n) => write!(f, "chain_frame({n})"),
            StandardKind::BooleanFrame(k) => write!(f, "boolean_frame({k})"),
            StandardKind::LawvereChain(n) => write!(f, "lawvere_chain({n})"),
            StandardKind::LukasiewiczChain(n) => write!(f, "lukasiewicz_chain({n})"),
            StandardKind::FreeOnMonoid(m) => write!(f, "free_on_monoid({m})"),
            StandardKind::Product(a, b) => write!(f, "product({a},{b})"),
        }
    }
}

impl FromStr for StandardKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        let (head, arg) = match s.find('(') {
            Some(i) if s.ends_with(')') => (&s[..i], Some(&s[i + 1..s.len() - 1])),
            Some(_) => return Err(format!("unbalanced parentheses in `{s}`")),
            None => (s, None),
        };
        let num = |a: Option<&str>| -> Result<usize, String> {
            a.ok_or_else(|| format!("`{head}` needs an argument"))?
                .trim()
                .parse()
                .map_err(|e| format!("bad argument to `{head}`: {e}"))
        };
        match head {
            "trivial" => Ok(StandardKind::Trivial),
            "two" => Ok(StandardKind::Two),
            "chain_frame" => Ok(StandardKind::ChainFrame(num(arg)?)),
            "boolean_frame" => Ok(StandardKind::BooleanFrame(num(arg)?)),
            "lawvere_chain" => Ok(StandardKind::LawvereChain(num(arg)?)),
            "lukasiewicz_chain" => Ok(StandardKind::LukasiewiczChain(num(arg)?)),
            "free_on_monoid" => {
                Ok(StandardKind::FreeOnMonoid(arg.ok_or("`free_on_monoid` needs a monoid name")?.trim().to_string()))
            }
            "product" => {
                let arg = arg.ok_or("`product` needs two arguments")?;
                // split at the top-level comma
                let mut depth = 0i32;
                let split = arg
                    .char_indices()
                    .find(|&(_, c)| {
                        match c {
                            '(' => depth += 1,
                            ')' => depth -= 1,
                            _ => {}
                        }
                        c == ',' && depth == 0
                    })
                    .map(|(i, _)| i)
                    .ok_or("`product` needs two arguments")?;
                Ok(StandardKind::Product(Box::new(arg[..split].parse()?), Box::new(arg[split + 1..].parse()?)))
            }
            other => Err(format!("unknown quantale kind `{other}`")),
        }
    }
}

fn named_monoid(name: &str) -> Result<Monoid, QuantaleError> {
    match name {
        "idempotent" => Ok(Monoid::idempotent()),
        "s3" | "S3" => Ok(Monoid::symmetric3()),
        _ => match name.strip_prefix("cyclic").and_then(|n| n.parse().ok()) {
            Some(n) => Monoid::cyclic(n),
            None => Err(QuantaleError::InvalidMonoidTable(format!("unknown monoid `{name}`"))),
        },
    }
}

impl Quantale {
    pub fn standard(kind: &StandardKind) -> Result<Quantale, QuantaleError> {
        let mut q = match kind {
            StandardKind::Trivial => Quantale::trivial(),
            StandardKind::Two => Quantale::two(),
            StandardKind::ChainFrame(n) => Quantale::chain_frame(*n)?,
            StandardKind::BooleanFrame(k) => Quantale::frame(FiniteLattice::boolean(*k)?)?,
            StandardKind::LawvereChain(n) => Quantale::lawvere_chain(*n)?,
            StandardKind::LukasiewiczChain(n) => Quantale::lukasiewicz_chain(*n)?,
            StandardKind::FreeOnMonoid(name) => return Quantale::free_on_monoid(&named_monoid(name)?),
            StandardKind::Product(a, b) => Quantale::product(&Quantale::standard(a)?, &Quantale::standard(b)?)?,
        };
        q.provenance = Provenance::Standard(kind.clone());
        Ok(q)
    }

    /// The one-element quantale, where `k = bot = top`.
    pub fn trivial() -> Quantale {
        Quantale::chain_frame(1).expect("trivial quantale")
    }

    /// `({bot < top}, meet, top)`.
    pub fn two() -> Quantale {
        Quantale::chain_frame(2).expect("two-element quantale")
    }

    /// The chain with `n` elements, tensor = meet, unit = top.
    pub fn chain_frame(n: usize) -> Result<Quantale, QuantaleError> {
        Quantale::frame(FiniteLattice::chain(n)?)
    }

    /// Tensor = meet, unit = top. Valid exactly when the lattice is distributive.
    pub fn frame(lattice: FiniteLattice) -> Result<Quantale, QuantaleError> {
        let tensor = lattice
            .elements()
            .flat_map(|a| lattice.elements().map(move |b| (a, b)))
            .map(|(a, b)| lattice.meet(a, b))
            .collect();
        let top = lattice.top();
        Quantale::new(lattice, tensor, top)
    }

    /// Distances `{0, 1, .., n, inf}` ordered by reverse magnitude (`inf` is
    /// bottom, `0` is top and the unit) with addition truncated at `inf`.
    ///
    /// Element index `i` holds distance `n + 1 - i`, index 0 holding `inf`.
    pub fn lawvere_chain(n: usize) -> Result<Quantale, QuantaleError> {
        let size = n + 2;
        let names = (0..size).map(|i| if i == 0 { "inf".to_string() } else { (n + 1 - i).to_string() }).collect();
        let lattice = FiniteLattice::chain(size)?.with_names(names)?;
        let dist = |i: usize| n + 1 - i;
        let tensor = (0..size)
            .flat_map(|a| (0..size).map(move |b| (a, b)))
            .map(|(a, b)| {
                if a == 0 || b == 0 || dist(a) + dist(b) > n {
                    Elem(0)
                } else {
                    Elem::new(n + 1 - (dist(a) + dist(b)))
                }
            })
            .collect();
        let unit = Elem::new(size - 1);
        Quantale::new(lattice, tensor, unit)
    }

    /// `{0, 1/n, .., 1}` with `a (x) b = max(a + b - 1, 0)`, unit 1. Index `i` is `i/n`.
    pub fn lukasiewicz_chain(n: usize) -> Result<Quantale, QuantaleError> {
        if n == 0 {
            return Ok(Quantale::trivial());
        }
        let size = n + 1;
        let names = (0..size).map(|i| format!("{i}/{n}")).collect();
        let lattice = FiniteLattice::chain(size)?.with_names(names)?;
        let tensor = (0..size)
            .flat_map(|a| (0..size).map(move |b| (a, b)))
            .map(|(a, b)| Elem::new((a + b).saturating_sub(n)))
            .collect();
        Quantale::new(lattice, tensor, Elem::new(n))
    }

    /// The powerset of `m` under inclusion with `AB = {ab | a in A, b in B}` and
    /// unit `{e}`. Element index = bitmask of monoid elements.
    pub fn free_on_monoid(m: &Monoid) -> Result<Quantale, QuantaleError> {
        let k = m.size();
        let n = 1usize << k;
        let leq: Vec<Vec<bool>> = (0..n).map(|x| (0..n).map(|y| x & !y == 0).collect()).collect();
        let names = (0..n)
            .map(|mask| {
                let parts: Vec<&str> = Subset(mask as u32).iter().map(|i| m.names()[i].as_str()).collect();
                format!("{{{}}}", parts.join(","))
            })
            .collect();
        let lattice = FiniteLattice::from_leq(&leq, Some(names))?;
        let mut tensor = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let mut prod = 0usize;
                for x in Subset(a as u32).iter() {
                    for y in Subset(b as u32).iter() {
                        prod |= 1 << m.mul(x, y);
                    }
                }
                tensor.push(Elem::new(prod));
            }
        }
        let unit = Elem::new(1 << m.unit());
        Quantale::with_provenance(lattice, tensor, unit, Provenance::FreeOnMonoid(m.clone()))
    }

    /// Componentwise product; `(i, j)` has index `i * q2.size() + j`.
    pub fn product(q1: &Quantale, q2: &Quantale) -> Result<Quantale, QuantaleError> {
        let lattice = q1.lattice().product(q2.lattice())?;
        let n2 = q2.size();
        let n = lattice.size();
        let split = |a: usize| (Elem::new(a / n2), Elem::new(a % n2));
        let tensor = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .map(|(a, b)| {
                let ((a1, a2), (b1, b2)) = (split(a), split(b));
                Elem::new(q1.tensor(a1, b1).idx() * n2 + q2.tensor(a2, b2).idx())
            })
            .collect();
        let unit = Elem::new(q1.unit().idx() * n2 + q2.unit().idx());
        Quantale::new(lattice, tensor, unit)
    }
}
