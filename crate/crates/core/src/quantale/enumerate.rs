//! Exhaustive search for every unital quantale structure on a small lattice.
//!
//! A tensor that preserves joins in each variable is determined by its values
//! on pairs of join-irreducible elements. The search fixes the unit, fills the
//! join-irreducible cells row by row with monotonicity checked against the
//! cells already filled, extends each complete assignment by joins and keeps
//! the extensions that pass the full law check.

use rayon::prelude::*;

use super::{check_laws, Quantale};
use crate::lattice::{Elem, FiniteLattice};
use crate::SizeLimit;

/// Lattices above this size are refused.
pub const ENUMERATION_CAP: usize = 5;

/// All quantale structures found, in lexicographic order of `(tensor, unit)`.
#[derive(Clone, Debug)]
pub struct Enumeration {
    /// Number of structures that exist, whether or not they were all returned.
    pub total: usize,
    pub quantales: Vec<Quantale>,
}

fn join_irreducibles(l: &FiniteLattice) -> Vec<Elem> {
    l.elements().filter(|&j| j != l.bottom() && l.join_all(l.elements().filter(|&x| l.lt(x, j))) != j).collect()
}

struct Search<'a> {
    l: &'a FiniteLattice,
    ji: Vec<Elem>,
    unit: Elem,
    cells: Vec<(Elem, Elem)>,
    values: Vec<Elem>,
    found: Vec<Vec<Elem>>,
}

impl Search<'_> {
    fn admissible(&self, cell: usize, v: Elem) -> bool {
        let l = self.l;
        let (a, b) = self.cells[cell];
        let e = self.unit;
        if a == e && v != b || b == e && v != a {
            return false;
        }
        if l.leq(b, e) && !l.leq(v, a) || l.leq(a, e) && !l.leq(v, b) {
            return false;
        }
        if l.leq(e, b) && !l.leq(a, v) || l.leq(e, a) && !l.leq(b, v) {
            return false;
        }
        self.cells[..cell].iter().zip(&self.values).all(|(&(a2, b2), &v2)| {
            (!(l.leq(a2, a) && l.leq(b2, b)) || l.leq(v2, v)) && (!(l.leq(a, a2) && l.leq(b, b2)) || l.leq(v, v2))
        })
    }

    fn extend(&self) -> Vec<Elem> {
        let l = self.l;
        let n = l.size();
        let k = self.ji.len();
        let mut t = Vec::with_capacity(n * n);
        for u in l.elements() {
            for v in l.elements() {
                let mut acc = l.bottom();
                for (i, &a) in self.ji.iter().enumerate() {
                    if !l.leq(a, u) {
                        continue;
                    }
                    for (j, &b) in self.ji.iter().enumerate() {
                        if l.leq(b, v) {
                            acc = l.join(acc, self.values[i * k + j]);
                        }
                    }
                }
                t.push(acc);
            }
        }
        t
    }

    fn run(&mut self, cell: usize) {
        if cell == self.cells.len() {
            let t = self.extend();
            if check_laws(self.l, &t, self.unit).is_ok() {
                self.found.push(t);
            }
            return;
        }
        for v in self.l.elements() {
            if self.admissible(cell, v) {
                self.values.push(v);
                self.run(cell + 1);
                self.values.pop();
            }
        }
    }
}

/// Every `(tensor, unit)` making `l` a unital quantale, up to `max_results`
/// returned (the count in [`Enumeration::total`] is always exact).
pub fn enumerate_quantales(l: &FiniteLattice, max_results: usize) -> Result<Enumeration, SizeLimit> {
    SizeLimit::check("quantale enumeration", l.size(), ENUMERATION_CAP)?;
    let ji = join_irreducibles(l);
    let cells: Vec<(Elem, Elem)> = ji.iter().flat_map(|&a| ji.iter().map(move |&b| (a, b))).collect();
    let units: Vec<Elem> = l.elements().collect();
    let mut tables: Vec<(Vec<Elem>, Elem)> = units
        .par_iter()
        .flat_map_iter(|&unit| {
            let mut s = Search {
                l,
                ji: ji.clone(),
                unit,
                cells: cells.clone(),
                values: Vec::with_capacity(cells.len()),
                found: Vec::new(),
            };
            s.run(0);
            s.found.into_iter().map(move |t| (t, unit))
        })
        .collect();
    tables.sort();
    let total = tables.len();
    let quantales = tables
        .into_iter()
        .take(max_results)
        .map(|(t, unit)| Quantale::new(l.clone(), t, unit).expect("enumerated table passed the law check"))
        .collect();
    Ok(Enumeration { total, quantales })
}
