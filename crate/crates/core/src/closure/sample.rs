//! Exhaustive and seeded random generation of closure tables.
//!
//! Tables over `n` points are numbered by reading the `2^n * n` entries,
//! in table order, as base-`|V|` digits with the first entry least significant.
//! Random generation uses `ChaCha8Rng::seed_from_u64(seed)`, so every sample
//! is reproducible from its seed.

use std::sync::Arc;

use rand::Rng;

use super::{bar, core, discrete, initial_structure, ClosureStructure, Source};
use crate::lattice::Elem;
use crate::quantale::Quantale;
use crate::SizeLimit;

/// Largest number of tables an exhaustive enumeration will visit.
pub const EXHAUSTIVE_CAP: u64 = 1 << 24;

/// `|V|^(2^n * n)`, or `None` on overflow.
pub fn table_count(q_size: usize, n: usize) -> Option<u64> {
    let entries = (1u32 << n).checked_mul(n as u32)?;
    (q_size as u64).checked_pow(entries)
}

/// Checks that an exhaustive pass over all tables stays within [`EXHAUSTIVE_CAP`].
pub fn exhaustive_count(q_size: usize, n: usize) -> Result<u64, SizeLimit> {
    match table_count(q_size, n) {
        Some(t) if t <= EXHAUSTIVE_CAP => Ok(t),
        Some(t) => Err(SizeLimit::new(
            "exhaustive table enumeration",
            t.min(usize::MAX as u64) as usize,
            EXHAUSTIVE_CAP as usize,
        )),
        None => Err(SizeLimit::new("exhaustive table enumeration", usize::MAX, EXHAUSTIVE_CAP as usize)),
    }
}

/// The table numbered `index`.
pub fn table_from_index(q: &Arc<Quantale>, n: usize, mut index: u64) -> ClosureStructure {
    let base = q.size() as u64;
    let len = (1usize << n) * n;
    let mut table = Vec::with_capacity(len);
    for _ in 0..len {
        table.push(Elem::new((index % base) as usize));
        index /= base;
    }
    ClosureStructure::new(q.clone(), n, table).expect("digits are in range")
}

/// Every table over `n` points, in index order.
pub fn all_tables(q: &Arc<Quantale>, n: usize) -> Result<impl Iterator<Item = ClosureStructure> + '_, SizeLimit> {
    let count = exhaustive_count(q.size(), n)?;
    Ok((0..count).map(move |i| table_from_index(q, n, i)))
}

/// A table whose entries are `bot` with probability `p_bottom` and uniform otherwise.
pub fn random_table<R: Rng>(q: &Arc<Quantale>, n: usize, p_bottom: f64, rng: &mut R) -> ClosureStructure {
    let bot = q.bottom();
    let size = q.size();
    ClosureStructure::from_fn_unchecked(q.clone(), n, |_, _| {
        if rng.gen_bool(p_bottom) {
            bot
        } else {
            Elem::new(rng.gen_range(0..size))
        }
    })
}

/// A monotone table above `c` satisfying (R) and (T): join in the discrete
/// structure, take the monotone hull, then repeat `c <- c v c-bar` until stable.
/// `c-bar` of a monotone table is monotone, and a monotone fixpoint has
/// `c-bar <= c`.
pub fn closure_hull(c: &ClosureStructure) -> ClosureStructure {
    let q = c.quantale_arc().clone();
    let n = c.points();
    let mut cur = monotone_hull(&c.pointwise_join(&discrete(q, n)));
    loop {
        let next = cur.pointwise_join(&bar(&cur, false));
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// `A -> join of cB over B inside A`.
pub fn monotone_hull(c: &ClosureStructure) -> ClosureStructure {
    let q = c.quantale();
    let n = c.points();
    let mut table = c.table().to_vec();
    // sum over subsets, one point at a time
    for y in 0..n {
        for a in 0..1usize << n {
            if a >> y & 1 == 1 {
                let b = a & !(1 << y);
                for x in 0..n {
                    table[a * n + x] = q.join(table[a * n + x], table[b * n + x]);
                }
            }
        }
    }
    ClosureStructure::new(c.quantale_arc().clone(), n, table).expect("same shape")
}

/// A closure space: the hull of a random table whose sparsity is itself random.
pub fn random_closure_space<R: Rng>(q: &Arc<Quantale>, n: usize, rng: &mut R) -> ClosureStructure {
    let p = rng.gen_range(0.6..0.98);
    closure_hull(&random_table(q, n, p, rng))
}

/// The finitely additive core of a random closure space; topological when the
/// quantale is sup-generated by its coprimes.
pub fn random_topological<R: Rng>(q: &Arc<Quantale>, n: usize, rng: &mut R) -> Result<ClosureStructure, SizeLimit> {
    core(&random_closure_space(q, n, rng))
}

/// A random map `g: {0, .., m-1} -> X` and a structure `d` on its domain making
/// `g: (Y, d) -> (X, c)` continuous: `d` is the core of the initial structure of
/// `g` and the identity into a random topological space on `Y`.
pub fn random_continuous_map<R: Rng>(
    c: &ClosureStructure,
    m: usize,
    rng: &mut R,
) -> Result<(ClosureStructure, Vec<usize>), SizeLimit> {
    let q = c.quantale_arc();
    let n = c.points();
    let g: Vec<usize> = (0..m).map(|_| rng.gen_range(0..n.max(1))).collect();
    let d0 = random_topological(q, m, rng)?;
    let id: Vec<usize> = (0..m).collect();
    let init = initial_structure(q, m, &[Source::new(&g, c), Source::new(&id, &d0)]).map_err(|e| match e {
        super::ClosureError::SizeLimitExceeded(s) => s,
        other => unreachable!("maps are in range: {other}"),
    })?;
    Ok((core(&init)?, g))
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::super::{check_axioms, check_t_via_bar, SpaceMap};
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn indexing() {
        let q = two();
        assert_eq!(table_count(2, 2), Some(256));
        assert_eq!(table_count(4, 2), Some(65536));
        let t = table_from_index(&q, 2, 0b1000_0001);
        assert_eq!(t.table()[0], Elem(1));
        assert_eq!(t.table()[7], Elem(1));
        assert_eq!(all_tables(&q, 2).unwrap().count(), 256);
        assert!(all_tables(&q, 4).is_err());
    }

    #[test]
    fn hull_is_closure_space() {
        let q = Arc::new(Quantale::lawvere_chain(2).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let c = random_closure_space(&q, 3, &mut rng);
            assert!(c.is_closure_space());
            assert!(c.monotone().holds());
            assert_eq!(check_t_via_bar(&c), Ok(true));
        }
        let t = three_point();
        assert_eq!(closure_hull(&t), t);
    }

    #[test]
    fn continuous_maps() {
        let q = two();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let c = three_point();
        for _ in 0..20 {
            let (d, g) = random_continuous_map(&c, 3, &mut rng).unwrap();
            assert!(check_axioms(&d).all_passed());
            assert!(SpaceMap::new(&d, &c, g).unwrap().is_continuous());
        }
        let d = random_topological(&q, 3, &mut rng).unwrap();
        assert!(d.is_topological());
    }
}
