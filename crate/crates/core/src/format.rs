//! TOML text formats for lattices, quantales, spaces and maps.
//!
//! ```toml
//! # lattice
//! size = 3
//! names = ["bot", "mid", "top"]
//! leq = [["bot", "mid"], ["mid", "top"]]   # pairs, closed up; or rows of booleans
//!
//! # quantale: one of
//! builtin = "lawvere_chain(2)"
//! # or a monoid whose free quantale is wanted
//! [monoid]
//! names = ["e", "a"]
//! table = [["e", "a"], ["a", "a"]]
//! # or an explicit table over a lattice (inline or a file path)
//! lattice = "chain3.lattice"
//! tensor = [["bot", "bot", "bot"], ...]
//! unit = "top"
//!
//! # space
//! quantale = "builtin:two"          # or a file path, or an inline table
//! points = ["s", "t"]
//! [closure]
//! "{}" = ["bot", "bot"]
//! "{s}" = ["top", "top"]
//!
//! # map
//! from = "x.space"                  # or a list of point names
//! to = "y.space"
//! assignment = { p = "s", q = "t" }
//! ```
//!
//! File references are resolved against the directory of the referring file.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::Deserialize;
use toml::Value;

use crate::closure::{ClosureError, ClosureStructure};
use crate::lattice::{Elem, FiniteLattice, LatticeError};
use crate::quantale::{Monoid, Provenance, Quantale, QuantaleError, StandardKind};
use crate::subset::Subset;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum FormatError {
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
    #[error("validation error: {0}")]
    Validation(String),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
}

impl FormatError {
    fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        FormatError::Parse { location: location.into(), message: message.into() }
    }
}

impl From<LatticeError> for FormatError {
    fn from(e: LatticeError) -> Self {
        FormatError::Validation(e.to_string())
    }
}

impl From<QuantaleError> for FormatError {
    fn from(e: QuantaleError) -> Self {
        FormatError::Validation(e.to_string())
    }
}

impl From<ClosureError> for FormatError {
    fn from(e: ClosureError) -> Self {
        FormatError::Validation(e.to_string())
    }
}

fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let col = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, col)
}

fn from_toml<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T, FormatError> {
    toml::from_str(text).map_err(|e| {
        let location = match e.span() {
            Some(span) => {
                let (l, c) = line_col(text, span.start);
                format!("line {l}, column {c}")
            }
            None => "document".to_string(),
        };
        FormatError::parse(location, e.message().trim().to_string())
    })
}

fn read(path: &Path) -> Result<String, FormatError> {
    std::fs::read_to_string(path)
        .map_err(|e| FormatError::Io { path: path.display().to_string(), message: e.to_string() })
}

fn quote(s: &str) -> String {
    Value::String(s.to_string()).to_string()
}

fn quoted_list<'a>(items: impl IntoIterator<Item = &'a str>) -> String {
    let parts: Vec<String> = items.into_iter().map(quote).collect();
    format!("[{}]", parts.join(", "))
}

/// A name or an index.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
enum Ref {
    Name(String),
    Index(i64),
}

impl Ref {
    fn text(&self) -> String {
        match self {
            Ref::Name(s) => s.clone(),
            Ref::Index(i) => i.to_string(),
        }
    }
}

fn lookup(l: &FiniteLattice, r: &Ref, location: &str) -> Result<Elem, FormatError> {
    l.element(&r.text())
        .ok_or_else(|| FormatError::Validation(format!("{location}: `{}` is not an element of the quantale", r.text())))
}

// ---------------------------------------------------------------- lattices

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct LatticeDoc {
    size: usize,
    #[serde(default)]
    names: Option<Vec<String>>,
    leq: LeqDoc,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum LeqDoc {
    Matrix(Vec<Vec<bool>>),
    Pairs(Vec<[Ref; 2]>),
}

fn lattice_from_doc(doc: LatticeDoc) -> Result<FiniteLattice, FormatError> {
    match doc.leq {
        LeqDoc::Matrix(rows) => Ok(FiniteLattice::from_leq(&rows, doc.names)?),
        LeqDoc::Pairs(pairs) => {
            let names = doc.names.clone();
            let index = |r: &Ref, i: usize| -> Result<usize, FormatError> {
                let found = match (r, &names) {
                    (Ref::Name(s), Some(ns)) => ns.iter().position(|n| n == s).or_else(|| s.parse().ok()),
                    (Ref::Name(s), None) => s.parse().ok(),
                    (Ref::Index(k), _) => usize::try_from(*k).ok(),
                };
                match found {
                    Some(k) if k < doc.size => Ok(k),
                    _ => Err(FormatError::parse(format!("leq[{i}]"), format!("`{}` is not an element", r.text()))),
                }
            };
            let mut idx = Vec::with_capacity(pairs.len());
            for (i, [a, b]) in pairs.iter().enumerate() {
                idx.push((index(a, i)?, index(b, i)?));
            }
            Ok(FiniteLattice::from_cover_pairs(doc.size, &idx, names)?)
        }
    }
}

pub fn parse_lattice(text: &str) -> Result<FiniteLattice, FormatError> {
    lattice_from_doc(from_toml(text)?)
}

pub fn load_lattice(path: &Path) -> Result<FiniteLattice, FormatError> {
    parse_lattice(&read(path)?)
}

fn lattice_body(l: &FiniteLattice) -> String {
    let mut out = String::new();
    writeln!(out, "size = {}", l.size()).unwrap();
    writeln!(out, "names = {}", quoted_list(l.names().iter().map(String::as_str))).unwrap();
    let pairs: Vec<String> =
        l.covers().into_iter().map(|(a, b)| format!("[{}, {}]", quote(&l.names()[a]), quote(&l.names()[b]))).collect();
    writeln!(out, "leq = [{}]", pairs.join(", ")).unwrap();
    out
}

/// The lattice with its covering pairs as `leq`.
pub fn write_lattice(l: &FiniteLattice) -> String {
    lattice_body(l)
}

// ---------------------------------------------------------------- quantales

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum LatticeRef {
    Path(String),
    Inline(LatticeDoc),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct MonoidDoc {
    names: Vec<String>,
    table: Vec<Vec<String>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct QuantaleDoc {
    #[serde(default)]
    builtin: Option<String>,
    #[serde(default)]
    monoid: Option<MonoidDoc>,
    #[serde(default)]
    lattice: Option<LatticeRef>,
    #[serde(default)]
    tensor: Option<Vec<Vec<Ref>>>,
    #[serde(default)]
    unit: Option<Ref>,
}

fn builtin(kind: &str) -> Result<Quantale, FormatError> {
    let kind: StandardKind = kind.parse().map_err(|e: String| FormatError::parse("builtin", e))?;
    Ok(Quantale::standard(&kind)?)
}

fn quantale_from_doc(doc: QuantaleDoc, base: &Path) -> Result<Quantale, FormatError> {
    if doc.lattice.is_none() {
        if let Some(field) = [("tensor", doc.tensor.is_some()), ("unit", doc.unit.is_some())].iter().find(|f| f.1) {
            return Err(FormatError::parse(field.0, "only allowed together with `lattice`"));
        }
    }
    match (doc.builtin, doc.monoid, doc.lattice) {
        (Some(kind), None, None) => builtin(&kind),
        (None, Some(m), None) => {
            let index = |s: &String, loc: String| {
                m.names
                    .iter()
                    .position(|n| n == s)
                    .ok_or_else(|| FormatError::parse(loc, format!("`{s}` is not a monoid element")))
            };
            let mut rows = Vec::with_capacity(m.table.len());
            for (i, row) in m.table.iter().enumerate() {
                let r: Result<Vec<usize>, FormatError> =
                    row.iter().enumerate().map(|(j, s)| index(s, format!("monoid.table[{i}][{j}]"))).collect();
                rows.push(r?);
            }
            let monoid = Monoid::new(&rows, Some(m.names.clone()))?;
            Ok(Quantale::free_on_monoid(&monoid)?)
        }
        (None, None, Some(lref)) => {
            let lattice = match lref {
                LatticeRef::Path(p) => load_lattice(&base.join(p))?,
                LatticeRef::Inline(d) => lattice_from_doc(d)?,
            };
            let tensor = doc.tensor.ok_or_else(|| FormatError::parse("tensor", "missing field"))?;
            let unit = doc.unit.ok_or_else(|| FormatError::parse("unit", "missing field"))?;
            let n = lattice.size();
            if tensor.len() != n || tensor.iter().any(|r| r.len() != n) {
                return Err(FormatError::parse("tensor", format!("expected a {n} x {n} matrix")));
            }
            let mut table = Vec::with_capacity(n * n);
            for (i, row) in tensor.iter().enumerate() {
                for (j, r) in row.iter().enumerate() {
                    table.push(lookup(&lattice, r, &format!("tensor[{i}][{j}]"))?);
                }
            }
            let unit = lookup(&lattice, &unit, "unit")?;
            Ok(Quantale::new(lattice, table, unit)?)
        }
        _ => Err(FormatError::parse("document", "give exactly one of `builtin`, `monoid` or `lattice`")),
    }
}

/// Parses a quantale; lattice file references are resolved against `base`.
pub fn parse_quantale(text: &str, base: &Path) -> Result<Quantale, FormatError> {
    quantale_from_doc(from_toml(text)?, base)
}

pub fn load_quantale(path: &Path) -> Result<Quantale, FormatError> {
    parse_quantale(&read(path)?, parent(path))
}

fn parent(path: &Path) -> &Path {
    path.parent().unwrap_or(Path::new("."))
}

/// Body lines of a quantale document, with table headers under `prefix`
/// (empty for a top-level document).
fn quantale_body(q: &Quantale, prefix: &str) -> String {
    let mut out = String::new();
    let dot = if prefix.is_empty() { String::new() } else { format!("{prefix}.") };
    match q.provenance() {
        Provenance::Standard(kind) => {
            writeln!(out, "builtin = {}", quote(&kind.to_string())).unwrap();
        }
        Provenance::FreeOnMonoid(m) => {
            writeln!(out, "[{dot}monoid]").unwrap();
            writeln!(out, "names = {}", quoted_list(m.names().iter().map(String::as_str))).unwrap();
            let rows: Vec<String> =
                m.rows().iter().map(|r| quoted_list(r.iter().map(|&i| m.names()[i].as_str()))).collect();
            writeln!(out, "table = [{}]", rows.join(", ")).unwrap();
        }
        Provenance::Custom => {
            let l = q.lattice();
            let rows: Vec<String> =
                q.tensor_rows().iter().map(|r| quoted_list(r.iter().map(|&i| l.names()[i].as_str()))).collect();
            writeln!(out, "tensor = [{}]", rows.join(", ")).unwrap();
            writeln!(out, "unit = {}", quote(q.name(q.unit()))).unwrap();
            writeln!(out, "[{dot}lattice]").unwrap();
            out.push_str(&lattice_body(l));
        }
    }
    out
}

pub fn write_quantale(q: &Quantale) -> String {
    quantale_body(q, "")
}

// ---------------------------------------------------------------- spaces

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum QuantaleRef {
    Reference(String),
    Inline(QuantaleDoc),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpaceDoc {
    quantale: QuantaleRef,
    points: Vec<String>,
    closure: toml::Table,
}

/// A closure structure with names for its points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Space {
    pub points: Vec<String>,
    pub structure: ClosureStructure,
}

impl Space {
    /// Points named `0`, `1`, ...
    pub fn unnamed(structure: ClosureStructure) -> Self {
        Space { points: (0..structure.points()).map(|i| i.to_string()).collect(), structure }
    }

    pub fn quantale(&self) -> &Quantale {
        self.structure.quantale()
    }

    /// `{a,b}` over point names.
    pub fn subset_name(&self, a: Subset) -> String {
        subset_name(&self.points, a)
    }

    pub fn parse_subset(&self, expr: &str) -> Result<Subset, String> {
        parse_subset(expr, &self.points)
    }
}

pub fn subset_name(points: &[String], a: Subset) -> String {
    let names: Vec<&str> = a.iter().map(|x| points[x].as_str()).collect();
    format!("{{{}}}", names.join(","))
}

/// Parses a brace expression such as `{a, b}` over the given point names.
pub fn parse_subset(expr: &str, points: &[String]) -> Result<Subset, String> {
    let inner = expr
        .trim()
        .strip_prefix('{')
        .and_then(|s| s.strip_suffix('}'))
        .ok_or_else(|| format!("`{expr}` is not a brace expression"))?;
    let mut set = Subset::EMPTY;
    for part in inner.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let x = points.iter().position(|p| p == part).ok_or_else(|| format!("unknown point `{part}`"))?;
        set = set.insert(x);
    }
    Ok(set)
}

fn resolve_quantale(r: QuantaleRef, base: &Path) -> Result<Quantale, FormatError> {
    match r {
        QuantaleRef::Reference(s) => match s.strip_prefix("builtin:") {
            Some(kind) => builtin(kind),
            None => load_quantale(&base.join(s)),
        },
        QuantaleRef::Inline(doc) => quantale_from_doc(doc, base),
    }
}

fn space_from_doc(doc: SpaceDoc, base: &Path, cache: Option<&Arc<Quantale>>) -> Result<Space, FormatError> {
    let parsed = resolve_quantale(doc.quantale, base)?;
    let q = match cache {
        Some(c) if **c == parsed => c.clone(),
        _ => Arc::new(parsed),
    };
    let n = doc.points.len();
    if n > crate::closure::MAX_BASE_SIZE {
        return Err(FormatError::Validation(format!(
            "{n} points exceeds the cap of {}",
            crate::closure::MAX_BASE_SIZE
        )));
    }
    let mut seen: HashMap<Subset, String> = HashMap::new();
    let mut rows: Vec<Option<Vec<Elem>>> = vec![None; 1 << n];
    for (key, value) in &doc.closure {
        let loc = format!("closure.{}", quote(key));
        let a = parse_subset(key, &doc.points).map_err(|m| FormatError::parse(&loc, m))?;
        if let Some(prev) = seen.insert(a, key.clone()) {
            return Err(FormatError::parse(&loc, format!("same subset as `{prev}`")));
        }
        let vals: Vec<Ref> = value
            .clone()
            .try_into()
            .map_err(|e: toml::de::Error| FormatError::parse(&loc, e.message().trim().to_string()))?;
        if vals.len() != n {
            return Err(FormatError::parse(&loc, format!("expected {n} values, found {}", vals.len())));
        }
        let mut row = Vec::with_capacity(n);
        for (i, r) in vals.iter().enumerate() {
            row.push(lookup(q.lattice(), r, &format!("{loc}[{i}]"))?);
        }
        rows[a.bits()] = Some(row);
    }
    let mut table = Vec::with_capacity((1 << n) * n);
    for (bits, row) in rows.into_iter().enumerate() {
        match row {
            Some(r) => table.extend(r),
            None => {
                let name = subset_name(&doc.points, Subset(bits as u32));
                return Err(FormatError::parse("closure", format!("missing row for {name}")));
            }
        }
    }
    let structure = ClosureStructure::new(q, n, table)?;
    Ok(Space { points: doc.points, structure })
}

/// Parses a space; quantale file references are resolved against `base`.
pub fn parse_space(text: &str, base: &Path) -> Result<Space, FormatError> {
    space_from_doc(from_toml(text)?, base, None)
}

pub fn load_space(path: &Path) -> Result<Space, FormatError> {
    parse_space(&read(path)?, parent(path))
}

/// Like [`load_space`], reusing `q` when the file's quantale equals it.
pub fn load_space_sharing(path: &Path, q: &Arc<Quantale>) -> Result<Space, FormatError> {
    space_from_doc(from_toml(&read(path)?)?, parent(path), Some(q))
}

/// A self-contained space document (the quantale is written inline or as a builtin).
pub fn write_space(s: &Space) -> String {
    let q = s.quantale();
    let mut out = String::new();
    let inline_builtin = matches!(q.provenance(), Provenance::Standard(_));
    if let Provenance::Standard(kind) = q.provenance() {
        writeln!(out, "quantale = {}", quote(&format!("builtin:{kind}"))).unwrap();
    }
    writeln!(out, "points = {}", quoted_list(s.points.iter().map(String::as_str))).unwrap();
    writeln!(out).unwrap();
    writeln!(out, "[closure]").unwrap();
    for a in Subset::all(s.structure.points()) {
        let vals = s.structure.row(a).iter().map(|&v| q.name(v));
        writeln!(out, "{} = {}", quote(&s.subset_name(a)), quoted_list(vals)).unwrap();
    }
    if !inline_builtin {
        writeln!(out).unwrap();
        writeln!(out, "[quantale]").unwrap();
        out.push_str(&quantale_body(q, "quantale"));
    }
    out
}

// ---------------------------------------------------------------- maps

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum DomainDoc {
    Space(String),
    Points(Vec<String>),
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum AssignmentDoc {
    Table(toml::Table),
    List(Vec<String>),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct MapDoc {
    from: DomainDoc,
    to: String,
    assignment: AssignmentDoc,
}

/// The domain of a map: a space, or a bare set of named points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Domain {
    Space(Space),
    Points(Vec<String>),
}

impl Domain {
    pub fn points(&self) -> &[String] {
        match self {
            Domain::Space(s) => &s.points,
            Domain::Points(p) => p,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapSpec {
    pub from: Domain,
    pub from_path: Option<PathBuf>,
    pub to: Space,
    pub to_path: PathBuf,
    pub assignment: Vec<usize>,
}

pub fn parse_map(text: &str, base: &Path) -> Result<MapSpec, FormatError> {
    let doc: MapDoc = from_toml(text)?;
    let to_path = base.join(&doc.to);
    let to = load_space(&to_path)?;
    let (from, from_path) = match doc.from {
        DomainDoc::Space(p) => {
            let path = base.join(p);
            let s = load_space_sharing(&path, to.structure.quantale_arc())?;
            (Domain::Space(s), Some(path))
        }
        DomainDoc::Points(p) => (Domain::Points(p), None),
    };
    let target = |name: &str, loc: String| {
        to.points
            .iter()
            .position(|p| p == name)
            .ok_or_else(|| FormatError::parse(loc, format!("`{name}` is not a point of the codomain")))
    };
    let src = from.points();
    let assignment = match doc.assignment {
        AssignmentDoc::List(l) => {
            if l.len() != src.len() {
                return Err(FormatError::parse("assignment", format!("expected {} entries", src.len())));
            }
            l.iter().enumerate().map(|(i, y)| target(y, format!("assignment[{i}]"))).collect::<Result<_, _>>()?
        }
        AssignmentDoc::Table(t) => {
            let mut out = Vec::with_capacity(src.len());
            for x in src {
                let v = t.get(x).ok_or_else(|| FormatError::parse("assignment", format!("no image for `{x}`")))?;
                let y =
                    v.as_str().ok_or_else(|| FormatError::parse(format!("assignment.{x}"), "expected a point name"))?;
                out.push(target(y, format!("assignment.{x}"))?);
            }
            if let Some(k) = t.keys().find(|k| !src.contains(k)) {
                return Err(FormatError::parse(format!("assignment.{k}"), "not a point of the domain"));
            }
            out
        }
    };
    Ok(MapSpec { from, from_path, to, to_path, assignment })
}

pub fn load_map(path: &Path) -> Result<MapSpec, FormatError> {
    parse_map(&read(path)?, parent(path))
}

/// A map document referring to its spaces by the paths given.
pub fn write_map(m: &MapSpec, from: &str, to: &str) -> String {
    let mut out = String::new();
    match &m.from {
        Domain::Space(_) => writeln!(out, "from = {}", quote(from)).unwrap(),
        Domain::Points(p) => writeln!(out, "from = {}", quoted_list(p.iter().map(String::as_str))).unwrap(),
    }
    writeln!(out, "to = {}", quote(to)).unwrap();
    let parts: Vec<String> = m
        .from
        .points()
        .iter()
        .zip(&m.assignment)
        .map(|(x, &y)| format!("{} = {}", quote(x), quote(&m.to.points[y])))
        .collect();
    writeln!(out, "assignment = {{ {} }}", parts.join(", ")).unwrap();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const SIERPINSKI: &str = r#"
quantale = "builtin:two"
points = ["s", "t"]

[closure]
"{}" = ["0", "0"]
"{s}" = ["1", "1"]
"{t}" = ["0", "1"]
"{s,t}" = ["1", "1"]
"#;

    #[test]
    fn lattice_pairs_and_matrix() {
        let l =
            parse_lattice("size = 3\nnames = [\"b\", \"m\", \"t\"]\nleq = [[\"b\", \"m\"], [\"m\", \"t\"]]").unwrap();
        assert_eq!(l, FiniteLattice::chain(3).unwrap().with_names(vec!["b".into(), "m".into(), "t".into()]).unwrap());
        let m = parse_lattice("size = 2\nleq = [[true, true], [false, true]]").unwrap();
        assert_eq!(m.leq_matrix(), FiniteLattice::chain(2).unwrap().leq_matrix());
        let bad = parse_lattice("size = 4\nleq = [[0, 2], [0, 3], [1, 2], [1, 3]]").unwrap_err();
        assert!(matches!(bad, FormatError::Validation(ref m) if m.contains("upper bound")), "{bad}");
        for l in [FiniteLattice::m3(), FiniteLattice::n5(), FiniteLattice::boolean(3).unwrap()] {
            assert_eq!(parse_lattice(&write_lattice(&l)).unwrap(), l);
        }
    }

    #[test]
    fn quantale_forms() {
        let base = Path::new(".");
        let q = parse_quantale("builtin = \"lawvere_chain(2)\"", base).unwrap();
        assert_eq!(q, Quantale::lawvere_chain(2).unwrap());
        let free = Quantale::free_on_monoid(&Monoid::idempotent()).unwrap();
        let text = write_quantale(&free);
        let back = parse_quantale(&text, base).unwrap();
        assert_eq!(back, free);
        assert!(back.monoid().is_some());
        let custom =
            Quantale::from_rows(FiniteLattice::chain(3).unwrap(), &[vec![0, 0, 0], vec![0, 0, 1], vec![0, 1, 2]], 2)
                .unwrap();
        assert_eq!(parse_quantale(&write_quantale(&custom), base).unwrap(), custom);
        assert!(parse_quantale("builtin = \"nope\"", base).is_err());
        let e = parse_quantale("builtin = \"two\"\nunit = 1", base).unwrap_err();
        assert!(matches!(e, FormatError::Parse { .. }));
    }

    #[test]
    fn space_roundtrip() {
        let s = parse_space(SIERPINSKI, Path::new(".")).unwrap();
        assert_eq!(s.points, vec!["s", "t"]);
        assert_eq!(s.structure.value(Subset(0b10), 0), Elem(0));
        let again = parse_space(&write_space(&s), Path::new(".")).unwrap();
        assert_eq!(again, s);
        let free = Arc::new(Quantale::free_on_monoid(&Monoid::idempotent()).unwrap());
        let d = Space::unnamed(crate::closure::discrete(free, 2));
        assert_eq!(parse_space(&write_space(&d), Path::new(".")).unwrap(), d);
    }

    #[test]
    fn space_errors() {
        let missing = SIERPINSKI.replace("\"{}\" = [\"0\", \"0\"]\n", "");
        let e = parse_space(&missing, Path::new(".")).unwrap_err();
        assert!(
            matches!(e, FormatError::Parse { ref location, ref message } if location == "closure" && message.contains("{}"))
        );
        let bad_value = SIERPINSKI.replace("\"{t}\" = [\"0\", \"1\"]", "\"{t}\" = [\"0\", \"7\"]");
        assert!(matches!(parse_space(&bad_value, Path::new(".")).unwrap_err(), FormatError::Validation(_)));
        let bad_point = SIERPINSKI.replace("\"{t}\"", "\"{u}\"");
        assert!(matches!(parse_space(&bad_point, Path::new(".")).unwrap_err(), FormatError::Parse { .. }));
        let syntax = parse_space("points = [", Path::new(".")).unwrap_err();
        assert!(matches!(syntax, FormatError::Parse { ref location, .. } if location.starts_with("line 1")));
    }

    #[test]
    fn subsets() {
        let pts: Vec<String> = vec!["a".into(), "b".into()];
        assert_eq!(parse_subset("{ b , a }", &pts), Ok(Subset(3)));
        assert_eq!(parse_subset("{}", &pts), Ok(Subset::EMPTY));
        assert!(parse_subset("a", &pts).is_err());
    }
}
