use super::FiniteLattice;

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub lattice: FiniteLattice,
}

fn entry(name: impl Into<String>, lattice: FiniteLattice) -> CatalogEntry {
    CatalogEntry { name: name.into(), lattice }
}

fn pairs(n: usize, covers: &[(usize, usize)]) -> FiniteLattice {
    FiniteLattice::from_cover_pairs(n, covers, None).expect("catalog lattice")
}

/// Built-in lattices covering both sides of every predicate: chains, Boolean
/// lattices, the two minimal non-distributive lattices and a few products and
/// extensions of them.
pub fn catalog() -> Vec<CatalogEntry> {
    let chain = |n| FiniteLattice::chain(n).expect("chain");
    let mut out = Vec::new();
    for n in 1..=6 {
        out.push(entry(format!("chain{n}"), chain(n)));
    }
    for k in 1..=4 {
        out.push(entry(format!("boolean{k}"), FiniteLattice::boolean(k).expect("boolean")));
    }
    out.push(entry("M3", FiniteLattice::m3()));
    out.push(entry("N5", FiniteLattice::n5()));
    // four atoms under a common top
    out.push(entry("M4", pairs(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (2, 5), (3, 5), (4, 5)])));
    // M3 with a new top
    out.push(entry("M3+top", pairs(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4), (4, 5)])));
    // N5 with a new bottom
    out.push(entry("bot+N5", pairs(6, &[(0, 1), (1, 2), (2, 3), (3, 5), (1, 4), (4, 5)])));
    // two diamonds stacked
    out.push(entry("diamond^2", pairs(7, &[(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 6), (5, 6)])));
    // an antichain of 3 under top, a chain of 2 above bottom on one side
    out.push(entry("M3-split", pairs(7, &[(0, 1), (1, 2), (0, 3), (0, 4), (2, 5), (3, 5), (4, 5), (5, 6)])));
    let two = chain(2);
    let three = chain(3);
    out.push(entry("chain2xchain3", two.product(&three).expect("product")));
    out.push(entry("chain3xchain3", three.product(&three).expect("product")));
    out.push(entry("M3xchain2", FiniteLattice::m3().product(&two).expect("product")));
    out.push(entry("N5xchain2", FiniteLattice::n5().product(&two).expect("product")));
    out
}
