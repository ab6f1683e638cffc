mod common;

use std::path::Path;

use common::{crate_dir, golden_path, vtop, GOLDEN};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use vtop::closure::sample::random_table;
use vtop::format::{
    load_lattice, load_map, load_quantale, load_space, parse_lattice, parse_map, parse_quantale, parse_space,
    write_lattice, write_map, write_quantale, write_space, Space,
};
use vtop::quantale::{Quantale, StandardKind};
use vtop::report::zero_timings;

/// Set `VTOP_BLESS=1` to rewrite the golden files.
#[test]
fn golden_outputs() {
    let bless = std::env::var_os("VTOP_BLESS").is_some();
    for (stem, code, args) in GOLDEN {
        let (c1, first) = vtop(args);
        let (c2, second) = vtop(args);
        assert_eq!((c1, c2), (*code, *code), "{stem}");
        let first = zero_timings(&first).unwrap();
        assert_eq!(first, zero_timings(&second).unwrap(), "{stem}");
        let path = golden_path(stem);
        if bless {
            std::fs::create_dir_all(path.parent().unwrap()).unwrap();
            std::fs::write(&path, &first).unwrap();
        }
        let expected = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
        assert_eq!(first, expected, "{stem} differs from its golden file");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(vtop(&["check", "--space", "fixtures/sierpinski.space"]).0, 0);
    assert_eq!(vtop(&["check", "--space", "fixtures/three_point.space"]).0, 1);
    assert_eq!(vtop(&["check", "--space", "fixtures/no_such.space"]).0, 2);
    assert_eq!(vtop(&["check"]).0, 2);
    assert_eq!(vtop(&["no-such-command"]).0, 2);
    assert_eq!(vtop(&["validate", "--quantale", "builtin:lawvere_chain(2)"]).0, 0);
    assert_eq!(vtop(&["validate", "--quantale", "builtin:nonsense"]).0, 2);
    assert_eq!(vtop(&["enumerate-quantales", "--lattice", "fixtures/n5.lattice"]).0, 0);
    assert_eq!(vtop(&["check", "--space", "fixtures/three_point.space", "--cap-x", "2"]).0, 2);
}

#[test]
fn malformed_space_files() {
    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, body: &str| {
        let p = dir.path().join(name);
        std::fs::write(&p, body).unwrap();
        p.to_str().unwrap().to_string()
    };
    let missing = write("missing.space", "quantale = \"builtin:two\"\npoints = [\"s\"]\n[closure]\n\"{}\" = [\"0\"]\n");
    assert_eq!(vtop(&["check", "--space", &missing]).0, 2);
    let bad = write(
        "bad.space",
        "quantale = \"builtin:two\"\npoints = [\"s\"]\n[closure]\n\"{}\" = [\"0\"]\n\"{s}\" = [\"7\"]\n",
    );
    let (code, out) = vtop(&["check", "--space", &bad]);
    assert_eq!(code, 1);
    assert!(out.contains("\"input\""), "{out}");
    let syntax = write("syntax.space", "points = [\n");
    assert_eq!(vtop(&["validate", "--space", &syntax]).0, 2);
}

#[test]
fn same_seed_same_report() {
    let args = ["search-counterexample", "--quantale", "fixtures/chain3_truncated.quantale", "--seed", "7"];
    let (_, a) = vtop(&args);
    let (_, b) = vtop(&args);
    assert_eq!(zero_timings(&a).unwrap(), zero_timings(&b).unwrap());
}

#[test]
fn out_flag_writes_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("r.json");
    let (code, stdout) = vtop(&["levels", "--space", "fixtures/sierpinski.space", "--out", p.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap();
    assert_eq!(doc["command"], "levels");
    assert!(doc["summary"].as_str().unwrap().contains("0 failed"));
}

#[test]
fn fixtures_roundtrip() {
    let fx = crate_dir().join("fixtures");
    for entry in std::fs::read_dir(&fx).unwrap() {
        let path = entry.unwrap().path();
        match path.extension().and_then(|e| e.to_str()) {
            Some("lattice") => {
                let l = load_lattice(&path).unwrap();
                assert_eq!(parse_lattice(&write_lattice(&l)).unwrap(), l, "{}", path.display());
            }
            Some("quantale") => {
                let q = load_quantale(&path).unwrap();
                assert_eq!(parse_quantale(&write_quantale(&q), &fx).unwrap(), q, "{}", path.display());
            }
            Some("space") => {
                let s = load_space(&path).unwrap();
                assert_eq!(parse_space(&write_space(&s), &fx).unwrap(), s, "{}", path.display());
            }
            Some("map") => {
                let m = load_map(&path).unwrap();
                let from = m.from_path.as_ref().map(|p| p.file_name().unwrap().to_str().unwrap().to_string());
                let to = m.to_path.file_name().unwrap().to_str().unwrap().to_string();
                let text = write_map(&m, from.as_deref().unwrap_or(""), &to);
                assert_eq!(parse_map(&text, &fx).unwrap(), m, "{}", path.display());
            }
            _ => {}
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_spaces_roundtrip(kind in prop::sample::select(vec!["two", "chain_frame(3)", "lawvere_chain(2)", "free_on_monoid(idempotent)", "product(two,two)"]), n in 1usize..4, seed in any::<u64>()) {
        let k: StandardKind = kind.parse().unwrap();
        let q = common::arc(Quantale::standard(&k).unwrap());
        let c = random_table(&q, n, 0.5, &mut ChaCha8Rng::seed_from_u64(seed));
        let s = Space::unnamed(c);
        let back = parse_space(&write_space(&s), Path::new(".")).unwrap();
        prop_assert_eq!(back, s);
    }
}
