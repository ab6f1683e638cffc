//! Point-set distances of a finite metric, valued in a truncated Lawvere chain.

use std::fmt;
use std::sync::Arc;

use super::{ClosureError, ClosureStructure};
use crate::lattice::{Elem, MAX_LATTICE_SIZE};
use crate::quantale::Quantale;
use crate::SizeLimit;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MetricViolation {
    NotSquare { row: usize },
    NonZeroDiagonal { x: usize },
    Asymmetric { x: usize, y: usize },
    Triangle { x: usize, y: usize, z: usize },
}

impl fmt::Display for MetricViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MetricViolation::NotSquare { row } => write!(f, "row {row} has the wrong length"),
            MetricViolation::NonZeroDiagonal { x } => write!(f, "d({x},{x}) is not 0"),
            MetricViolation::Asymmetric { x, y } => write!(f, "d({x},{y}) differs from d({y},{x})"),
            MetricViolation::Triangle { x, y, z } => write!(f, "d({x},{z}) exceeds d({x},{y}) + d({y},{z})"),
        }
    }
}

/// The element of `lawvere_chain(n)` holding `dist`; distances above `n` become `inf`.
pub fn lawvere_value(dist: u32, n: usize) -> Elem {
    let d = dist as usize;
    if d > n {
        Elem(0)
    } else {
        Elem::new(n + 1 - d)
    }
}

fn check_metric(d: &[Vec<u32>]) -> Result<(), MetricViolation> {
    let n = d.len();
    if let Some(row) = d.iter().position(|r| r.len() != n) {
        return Err(MetricViolation::NotSquare { row });
    }
    for x in 0..n {
        if d[x][x] != 0 {
            return Err(MetricViolation::NonZeroDiagonal { x });
        }
        for y in 0..n {
            if d[x][y] != d[y][x] {
                return Err(MetricViolation::Asymmetric { x, y });
            }
            for z in 0..n {
                if u64::from(d[x][z]) > u64::from(d[x][y]) + u64::from(d[y][z]) {
                    return Err(MetricViolation::Triangle { x, y, z });
                }
            }
        }
    }
    Ok(())
}

/// `delta(x, A) = min_{a in A} d(x, a)` and `delta(x, {}) = inf`, over `lawvere_chain(n)`.
pub fn approach_from_metric(d: &[Vec<u32>], n: usize) -> Result<ClosureStructure, ClosureError> {
    SizeLimit::check("lawvere chain truncation", n + 2, MAX_LATTICE_SIZE)?;
    check_metric(d).map_err(ClosureError::NotAMetric)?;
    let q = Arc::new(Quantale::lawvere_chain(n).expect("chain within size cap"));
    let l = q.lattice().clone();
    ClosureStructure::from_fn(q, d.len(), |a, x| l.join_all(a.iter().map(|y| lawvere_value(d[x][y], n))))
}
