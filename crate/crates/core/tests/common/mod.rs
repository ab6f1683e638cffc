//! Brute-force oracles, written straight from the definitions and sharing no
//! code with the library beyond quantale arithmetic and table storage.
#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;
use std::sync::Arc;

use rayon::prelude::*;
use vtop::closure::{LevelFamily, LevelWitness};
use vtop::lattice::{Elem, FiniteLattice};
use vtop::quantale::{Monoid, Quantale};
use vtop::{ClosureStructure, Subset};

pub fn arc(q: Quantale) -> Arc<Quantale> {
    Arc::new(q)
}

pub fn free_idempotent() -> Arc<Quantale> {
    arc(Quantale::free_on_monoid(&Monoid::idempotent()).unwrap())
}

/// The small catalog: every quantale with at most four elements used by the
/// exhaustive suites, with a label.
pub fn small_catalog() -> Vec<(&'static str, Arc<Quantale>)> {
    vec![
        ("trivial", arc(Quantale::trivial())),
        ("two", arc(Quantale::two())),
        ("lawvere_chain(2)", arc(Quantale::lawvere_chain(2).unwrap())),
        ("free_on_monoid(idempotent)", free_idempotent()),
        ("boolean_frame(2)", arc(Quantale::frame(FiniteLattice::boolean(2).unwrap()).unwrap())),
    ]
}

fn subsets(n: usize) -> impl Iterator<Item = Subset> {
    (0..1u32 << n).map(Subset)
}

fn members(a: Subset, n: usize) -> impl Iterator<Item = usize> {
    (0..n).filter(move |&x| a.0 >> x & 1 == 1)
}

/// Every table `PX -> V^X`, by an odometer over entries.
pub fn every_table(q: &Arc<Quantale>, n: usize) -> Vec<ClosureStructure> {
    let len = (1usize << n) * n;
    let k = q.size();
    let total = k.pow(len as u32);
    (0..total)
        .map(|mut i| {
            let mut t = Vec::with_capacity(len);
            for _ in 0..len {
                t.push(Elem::new(i % k));
                i /= k;
            }
            ClosureStructure::new(q.clone(), n, t).unwrap()
        })
        .collect()
}

pub fn meet_all(q: &Quantale, it: impl IntoIterator<Item = Elem>) -> Elem {
    it.into_iter().fold(q.top(), |a, b| q.meet(a, b))
}

pub fn join_all(q: &Quantale, it: impl IntoIterator<Item = Elem>) -> Elem {
    it.into_iter().fold(q.bottom(), |a, b| q.join(a, b))
}

pub fn reflexive(c: &ClosureStructure) -> bool {
    let q = c.quantale();
    let n = c.points();
    subsets(n).all(|a| members(a, n).all(|x| q.leq(q.unit(), c.value(a, x))))
}

pub fn transitive(c: &ClosureStructure) -> bool {
    let q = c.quantale();
    let n = c.points();
    subsets(n).all(|a| {
        subsets(n).all(|b| {
            let m = meet_all(q, members(b, n).map(|y| c.value(a, y)));
            (0..n).all(|x| q.leq(q.tensor(m, c.value(b, x)), c.value(a, x)))
        })
    })
}

pub fn additive(c: &ClosureStructure) -> bool {
    let q = c.quantale();
    let n = c.points();
    (0..n).all(|x| c.value(Subset(0), x) == q.bottom())
        && subsets(n).all(|a| {
            subsets(n).all(|b| (0..n).all(|x| c.value(Subset(a.0 | b.0), x) == q.join(c.value(a, x), c.value(b, x))))
        })
}

pub fn monotone(c: &ClosureStructure) -> bool {
    let q = c.quantale();
    let n = c.points();
    subsets(n)
        .all(|a| subsets(n).filter(|b| b.0 & !a.0 == 0).all(|b| (0..n).all(|x| q.leq(c.value(b, x), c.value(a, x)))))
}

pub fn pointwise_leq(c: &ClosureStructure, d: &ClosureStructure) -> bool {
    let q = c.quantale();
    c.table().iter().zip(d.table()).all(|(&a, &b)| q.leq(a, b))
}

/// `c^v A`.
pub fn level(c: &ClosureStructure, v: Elem, a: Subset) -> Subset {
    let q = c.quantale();
    Subset((0..c.points()).filter(|&z| q.leq(v, c.value(a, z))).fold(0, |m, z| m | 1 << z))
}

/// `(c-bar A)(x) = join_v v (x) c(c^v A)(x)`, optionally over a subset of `v`.
pub fn bar_over(c: &ClosureStructure, vs: &[Elem]) -> ClosureStructure {
    let q = c.quantale();
    let n = c.points();
    let mut t = Vec::with_capacity(c.table().len());
    for a in subsets(n) {
        for x in 0..n {
            t.push(join_all(q, vs.iter().map(|&v| q.tensor(v, c.value(level(c, v, a), x)))));
        }
    }
    ClosureStructure::new(c.quantale_arc().clone(), n, t).unwrap()
}

pub fn bar(c: &ClosureStructure) -> ClosureStructure {
    let vs: Vec<Elem> = c.quantale().elements().collect();
    bar_over(c, &vs)
}

/// Coprimes of a lattice by the two-element definition.
pub fn coprimes(l: &FiniteLattice) -> Vec<Elem> {
    l.elements()
        .filter(|&p| {
            p != l.bottom()
                && l.elements().all(|u| l.elements().all(|v| !l.leq(p, l.join(u, v)) || l.leq(p, u) || l.leq(p, v)))
        })
        .collect()
}

/// Number of quantale structures on `l`: bottom absorbs, the unit acts as
/// identity, every remaining cell ranges freely, and associativity plus
/// binary-join preservation are checked on the full table.
pub fn brute_quantale_count(l: &FiniteLattice) -> usize {
    let n = l.size();
    if n == 1 {
        return 1;
    }
    let e = |i: usize| Elem::new(i);
    (0..n)
        .filter(|&u| u != l.bottom().idx())
        .map(|unit| {
            let free: Vec<(usize, usize)> = (0..n)
                .flat_map(|a| (0..n).map(move |b| (a, b)))
                .filter(|&(a, b)| a != l.bottom().idx() && b != l.bottom().idx() && a != unit && b != unit)
                .collect();
            let combos = n.pow(free.len() as u32);
            (0..combos)
                .into_par_iter()
                .filter(|&idx| {
                    let bot = l.bottom().idx();
                    let mut t = vec![bot; n * n];
                    for a in 0..n {
                        t[unit * n + a] = a;
                        t[a * n + unit] = a;
                    }
                    for a in 0..n {
                        t[bot * n + a] = bot;
                        t[a * n + bot] = bot;
                    }
                    let mut i = idx;
                    for &(a, b) in &free {
                        t[a * n + b] = i % n;
                        i /= n;
                    }
                    let m = |a: usize, b: usize| t[a * n + b];
                    let joins = (0..n).all(|a| {
                        (0..n).all(|b| {
                            let j = l.join(e(a), e(b)).idx();
                            (0..n).all(|c| {
                                m(j, c) == l.join(e(m(a, c)), e(m(b, c))).idx()
                                    && m(c, j) == l.join(e(m(c, a)), e(m(c, b))).idx()
                            })
                        })
                    });
                    joins && (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| m(m(a, b), c) == m(a, m(b, c)))))
                })
                .count()
        })
        .sum()
}

/// The core computed over covers written as strings `(M_1, .., M_m)` of
/// subsets with repetition, lengths `0..=max_len`.
pub fn string_cover_core(c: &ClosureStructure, max_len: usize) -> ClosureStructure {
    let q = c.quantale();
    let n = c.points();
    let k = 1usize << n;
    let mut t = Vec::with_capacity(c.table().len());
    for a in subsets(n) {
        let mut best = vec![q.top(); n];
        for len in 0..=max_len {
            for idx in 0..k.pow(len as u32) {
                let mut parts = Vec::with_capacity(len);
                let mut i = idx;
                for _ in 0..len {
                    parts.push(Subset((i % k) as u32));
                    i /= k;
                }
                if parts.iter().fold(0, |u, p| u | p.0) != a.0 {
                    continue;
                }
                for (x, b) in best.iter_mut().enumerate() {
                    *b = q.meet(*b, join_all(q, parts.iter().map(|&p| c.value(p, x))));
                }
            }
        }
        t.extend(best);
    }
    ClosureStructure::new(c.quantale_arc().clone(), n, t).unwrap()
}

/// Among `candidates` (all finitely additive (R,T) structures on the same
/// set) those below `c`; returns the greatest, or `None` when there is no
/// greatest one.
pub fn max_below<'a>(c: &ClosureStructure, candidates: &'a [ClosureStructure]) -> Option<&'a ClosureStructure> {
    let below: Vec<&ClosureStructure> = candidates.iter().filter(|d| pointwise_leq(d, c)).collect();
    below.iter().copied().find(|m| below.iter().all(|d| pointwise_leq(d, m)))
}

/// Every finitely additive (R,T) structure on `n` points over `q`.
pub fn all_topological(q: &Arc<Quantale>, n: usize) -> Vec<ClosureStructure> {
    every_table(q, n).into_par_iter().filter(|c| additive(c) && reflexive(c) && transitive(c)).collect()
}

/// C0-C3 directly from their statements; C1 ranges over every subset of `V`
/// as the family `u_i`, the empty family included.
pub fn levels_valid(f: &LevelFamily) -> [bool; 4] {
    let q = f.quantale();
    let n = f.points();
    let vs: Vec<Elem> = q.elements().collect();
    let c0 = vs.iter().all(|&v| {
        subsets(n).all(|a| subsets(n).filter(|b| b.0 & !a.0 == 0).all(|b| f.level(v, b).0 & !f.level(v, a).0 == 0))
    });
    let c1 = (0..1usize << vs.len()).all(|fam| {
        let us: Vec<Elem> = vs.iter().enumerate().filter(|(i, _)| fam >> i & 1 == 1).map(|(_, &u)| u).collect();
        let j = join_all(q, us.iter().copied());
        subsets(n).all(|a| {
            let inter = us.iter().fold((1u32 << n) - 1, |m, &u| m & f.level(u, a).0);
            vs.iter().filter(|&&v| q.leq(v, j)).all(|&v| inter & !f.level(v, a).0 == 0)
        })
    });
    let c2 = subsets(n).all(|a| a.0 & !f.level(q.unit(), a).0 == 0);
    let c3 = subsets(n).all(|a| {
        vs.iter().all(|&u| vs.iter().all(|&v| f.level(u, f.level(v, a)).0 & !f.level(q.tensor(v, u), a).0 == 0))
    });
    [c0, c1, c2, c3]
}

/// True when `w` describes an actual violation in `f`.
pub fn level_witness_holds(f: &LevelFamily, w: &LevelWitness) -> bool {
    let q = f.quantale();
    let x = w.point;
    let a = w.a;
    match w.condition {
        "C0" => {
            let (b, v) = (w.b.unwrap(), w.v.unwrap());
            b.0 & !a.0 == 0 && f.level(v, b).contains(x) && !f.level(v, a).contains(x)
        }
        "C1" => {
            let v = w.v.unwrap();
            q.leq(v, join_all(q, w.us.iter().copied()))
                && w.us.iter().all(|&u| f.level(u, a).contains(x))
                && !f.level(v, a).contains(x)
        }
        "C2" => a.contains(x) && !f.level(q.unit(), a).contains(x),
        "C3" => {
            let (u, v) = (w.u.unwrap(), w.v.unwrap());
            f.level(u, f.level(v, a)).contains(x) && !f.level(q.tensor(v, u), a).contains(x)
        }
        _ => false,
    }
}

/// `g: (X, c) -> (Y, d)` is continuous.
pub fn continuous(c: &ClosureStructure, d: &ClosureStructure, g: &[usize]) -> bool {
    let q = c.quantale();
    let n = c.points();
    subsets(n).all(|a| {
        let ga = Subset(members(a, n).fold(0, |m, x| m | 1 << g[x]));
        (0..n).all(|x| q.leq(c.value(a, x), d.value(ga, g[x])))
    })
}

/// Every map `m -> n` as a vector.
pub fn all_maps(m: usize, n: usize) -> Vec<Vec<usize>> {
    (0..n.pow(m as u32))
        .map(|mut i| {
            (0..m)
                .map(|_| {
                    let y = i % n;
                    i /= n;
                    y
                })
                .collect()
        })
        .collect()
}

/// Initiality of `c` for the source `(g_i: X -> (Y_i, d_i))`: for every
/// closure space `(Z, e)` among `tests` and every `h: Z -> X`, `h` is
/// continuous into `c` iff every `g_i h` is.
pub fn is_initial(c: &ClosureStructure, sources: &[(&[usize], &ClosureStructure)], tests: &[ClosureStructure]) -> bool {
    tests.iter().all(|e| {
        all_maps(e.points(), c.points()).iter().all(|h| {
            let via: bool = sources.iter().all(|(g, d)| {
                let gh: Vec<usize> = h.iter().map(|&z| g[z]).collect();
                continuous(e, d, &gh)
            });
            continuous(e, c, h) == via
        })
    })
}

/// Every closure space on `n` points over `q`.
pub fn closure_spaces(q: &Arc<Quantale>, n: usize) -> Vec<ClosureStructure> {
    every_table(q, n).into_par_iter().filter(|c| reflexive(c) && transitive(c)).collect()
}

pub fn crate_dir() -> &'static Path {
    Path::new(env!("CARGO_MANIFEST_DIR"))
}

/// Runs the binary from the crate directory; returns exit code and stdout.
pub fn vtop(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_vtop")).args(args).current_dir(crate_dir()).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

/// The golden runs: file stem, expected exit code, arguments.
pub const GOLDEN: &[(&str, i32, &[&str])] = &[
    (
        "check_sierpinski",
        0,
        &["check", "--space", "fixtures/sierpinski.space", "--maps", "fixtures/discrete_to_sierpinski.map"],
    ),
    ("check_three_point", 1, &["check", "--space", "fixtures/three_point.space"]),
    ("check_metric2", 0, &["check", "--space", "fixtures/metric2.space"]),
    ("core_three_point", 0, &["core", "--space", "fixtures/three_point.space"]),
    ("core_free_discrete", 0, &["core", "--space", "fixtures/free_discrete.space"]),
    ("lattice_report_m3", 0, &["lattice-report", "--lattice", "fixtures/m3.lattice"]),
    ("lattice_report_n5", 0, &["lattice-report", "--lattice", "fixtures/n5.lattice"]),
    ("lattice_report_boolean2", 0, &["lattice-report", "--lattice", "fixtures/boolean2.lattice"]),
];

pub fn golden_path(stem: &str) -> PathBuf {
    crate_dir().join("tests/golden").join(format!("{stem}.json"))
}
