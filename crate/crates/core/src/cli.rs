//! The `vtop` batch front end.
//!
//! Every command writes a report document (see [`crate::report`]) to `--out`
//! or standard output. Exit status: 0 when every check passed, 1 when a check
//! failed, 2 on a usage, parse or size error.

use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::closure::{
    self, bar, check_axioms, check_closure_preserving, check_continuous, check_core_theorem, check_levels,
    check_t_via_bar, coprime_levels_additive, initial_structure, to_levels, vtop_limit, ClosureStructure, SpaceMap,
    CORE_CAP, MAX_BASE_SIZE,
};
use crate::format::{self, Domain, FormatError, MapSpec, Space};
use crate::lattice::{self, FiniteLattice};
use crate::quantale::{enumerate_quantales, Quantale, ENUMERATION_CAP};
use crate::report::{write_report, Names, Record, Report, Status};
use crate::theorems::{search_counterexample, verify_theorems, SuiteConfig, SuiteOutcome};
use crate::vcat::check_closure_criteria;
use crate::SizeLimit;

#[derive(Clone, Debug, Parser)]
#[command(name = "vtop", version, about = "Checks laws and constructions for finite quantale-valued closure spaces")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Quantale file, or `builtin:<kind>` such as `builtin:lawvere_chain(2)`.
    #[arg(long, global = true)]
    pub quantale: Option<String>,
    /// Space file.
    #[arg(long, global = true)]
    pub space: Option<PathBuf>,
    /// Map file; repeatable.
    #[arg(long = "maps", global = true)]
    pub maps: Vec<PathBuf>,
    /// Lattice file.
    #[arg(long, global = true)]
    pub lattice: Option<PathBuf>,
    /// Largest base set accepted; for verify-theorems, the base size of the exhaustive suites.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub cap_x: Option<u64>,
    /// Largest quantale or lattice handled exhaustively.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub cap_v: Option<u64>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Take the bar operator over coprime levels only.
    #[arg(long, global = true)]
    pub coprime_only: bool,
    /// Also run the searches for counterexamples outside the hypotheses (verify-theorems).
    #[arg(long, global = true)]
    pub exploratory: bool,
    /// Most quantales listed by enumerate-quantales.
    #[arg(long, global = true, default_value_t = 100)]
    pub max_results: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Validate lattice, quantale, space and map files.
    Validate,
    /// Axioms R, T, A, monotonicity, continuity of maps, and the three closure criteria.
    Check,
    /// The bar operator of a space.
    Bar,
    /// The finitely additive core of a space.
    Core,
    /// The initial structure for a family of maps into spaces.
    Initial,
    /// The topological limit for a family of maps into spaces.
    Limit,
    /// Level sets and conditions C0-C3.
    Levels,
    /// Coprimes, spatiality, coframe, ccd and the spatial embedding.
    LatticeReport,
    /// All quantale structures on a lattice.
    EnumerateQuantales,
    /// The full theorem suite over a quantale.
    VerifyTheorems,
    /// Searches for counterexamples outside the hypotheses.
    SearchCounterexample,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Validate => "validate",
            Command::Check => "check",
            Command::Bar => "bar",
            Command::Core => "core",
            Command::Initial => "initial",
            Command::Limit => "limit",
            Command::Levels => "levels",
            Command::LatticeReport => "lattice-report",
            Command::EnumerateQuantales => "enumerate-quantales",
            Command::VerifyTheorems => "verify-theorems",
            Command::SearchCounterexample => "search-counterexample",
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Size(#[from] SizeLimit),
}

impl From<closure::ClosureError> for CliError {
    fn from(e: closure::ClosureError) -> Self {
        CliError::Format(e.into())
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Runs a command. An input that parses but breaks a law yields a report
/// with a failed `input` record rather than an error.
pub fn run(cfg: &RunConfig) -> Result<Report, CliError> {
    let mut report = Report::new(cfg.command.name());
    let result = match cfg.command {
        Command::Validate => validate(cfg, &mut report),
        Command::Check => check(cfg, &mut report),
        Command::Bar => bar_cmd(cfg, &mut report),
        Command::Core => core_cmd(cfg, &mut report),
        Command::Initial | Command::Limit => initial_cmd(cfg, &mut report),
        Command::Levels => levels_cmd(cfg, &mut report),
        Command::LatticeReport => lattice_report(cfg, &mut report),
        Command::EnumerateQuantales => enumerate_cmd(cfg, &mut report),
        Command::VerifyTheorems | Command::SearchCounterexample => theorems_cmd(cfg, &mut report),
    };
    match result {
        Err(CliError::Format(FormatError::Validation(msg))) => {
            report.push(Record::new("input", Status::Fail).with_witness(Value::String(msg)));
            Ok(report)
        }
        Err(e) => Err(e),
        Ok(()) => Ok(report),
    }
}

pub fn exit_status(r: &Report) -> i32 {
    i32::from(r.failed())
}

/// Parses `args`, runs the command and writes the report. Returns the exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cfg = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(&cfg) {
        Ok(report) => {
            let doc = write_report(&report);
            match &cfg.out {
                Some(p) => {
                    if let Err(e) = std::fs::write(p, doc) {
                        eprintln!("error: cannot write {}: {e}", p.display());
                        return 2;
                    }
                }
                None => print!("{doc}"),
            }
            exit_status(&report)
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

// ---------------------------------------------------------------- inputs

fn load_quantale_arg(arg: &str) -> Result<Quantale, FormatError> {
    match arg.strip_prefix("builtin:") {
        Some(kind) => {
            format::parse_quantale(&format!("builtin = {}", toml::Value::String(kind.into())), Path::new("."))
        }
        None => format::load_quantale(Path::new(arg)),
    }
}

fn quantale_arg(cfg: &RunConfig) -> Result<Arc<Quantale>, CliError> {
    let q = cfg.quantale.as_deref().ok_or_else(|| usage("--quantale is required"))?;
    Ok(Arc::new(load_quantale_arg(q)?))
}

fn cap_x(cfg: &RunConfig, default: usize) -> usize {
    cfg.cap_x.map_or(default, |c| c as usize)
}

fn space_arg(cfg: &RunConfig, cap: usize) -> Result<Space, CliError> {
    let path = cfg.space.as_deref().ok_or_else(|| usage("--space is required"))?;
    let s = format::load_space(path)?;
    SizeLimit::check("base set", s.structure.points(), cap_x(cfg, cap))?;
    Ok(s)
}

fn names(s: &Space) -> Names<'_> {
    Names::new(&s.points, s.quantale())
}

/// A constructed structure: its table and a space document for it.
fn structure_data(points: &[String], c: &ClosureStructure) -> Value {
    let space = Space { points: points.to_vec(), structure: c.clone() };
    json!({
        "table": names(&space).table(c),
        "space": format::write_space(&space),
    })
}

// ---------------------------------------------------------------- commands

fn validate(cfg: &RunConfig, report: &mut Report) -> Result<(), CliError> {
    if cfg.lattice.is_none() && cfg.quantale.is_none() && cfg.space.is_none() && cfg.maps.is_empty() {
        return Err(usage("give at least one of --lattice, --quantale, --space, --maps"));
    }
    let outcome = |r: Result<Value, FormatError>, name: &str, report: &mut Report| -> Result<(), CliError> {
        match r {
            Ok(data) => report.push(Record::verdict(name, true).with_data(data)),
            Err(FormatError::Validation(m)) => report.push(Record::verdict(name, false).with_witness(Value::String(m))),
            Err(e) => return Err(e.into()),
        }
        Ok(())
    };
    if let Some(p) = &cfg.lattice {
        let t = Instant::now();
        let r = format::load_lattice(p).map(|l| json!({ "size": l.size(), "names": l.names() }));
        outcome(r, "lattice", report)?;
        report.records.last_mut().unwrap().elapsed_us = t.elapsed().as_micros() as u64;
    }
    if let Some(q) = &cfg.quantale {
        let t = Instant::now();
        let r = load_quantale_arg(q).map(|q| {
            let c = q.classify();
            json!({ "size": q.size(), "unit": q.name(q.unit()), "integral": c.integral, "commutative": c.commutative, "spatial": c.lattice_spatial })
        });
        outcome(r, "quantale", report)?;
        report.records.last_mut().unwrap().elapsed_us = t.elapsed().as_micros() as u64;
    }
    if cfg.space.is_some() {
        let t = Instant::now();
        match space_arg(cfg, MAX_BASE_SIZE) {
            Ok(s) => {
                report.push(Record::verdict("space", true).with_data(json!({ "points": s.points })).timed(t));
                let c = &s.structure;
                let axioms = check_axioms(c);
                let mut closure = axioms.clone();
                closure.entries.retain(|e| e.name == "R" || e.name == "T");
                report.push_checks("space-", &closure, &names(&s), t);
            }
            Err(CliError::Format(FormatError::Validation(m))) => {
                report.push(Record::verdict("space", false).with_witness(Value::String(m)).timed(t))
            }
            Err(e) => return Err(e),
        }
    }
    for (i, p) in cfg.maps.iter().enumerate() {
        let t = Instant::now();
        let name = format!("map[{i}]");
        match format::load_map(p) {
            Ok(m) => {
                report.push(Record::verdict(&name, true).with_data(json!({ "assignment": assignment(&m) })).timed(t));
                if let Domain::Space(d) = &m.from {
                    let f = SpaceMap::new(&d.structure, &m.to.structure, m.assignment.clone())?;
                    report.push_checks(&format!("{name}-"), &check_continuous(&f), &names(d), t);
                }
            }
            Err(FormatError::Validation(msg)) => {
                report.push(Record::verdict(&name, false).with_witness(Value::String(msg)).timed(t))
            }
            Err(e) => return Err(e.into()),
        }
    }
    Ok(())
}

fn assignment(m: &MapSpec) -> Value {
    m.from.points().iter().zip(&m.assignment).map(|(x, &y)| json!([x, m.to.points[y]])).collect()
}

fn check(cfg: &RunConfig, report: &mut Report) -> Result<(), CliError> {
    if cfg.space.is_none() && cfg.maps.is_empty() {
        return Err(usage("check needs --space or --maps"));
    }
    if cfg.space.is_some() {
        let s = space_arg(cfg, MAX_BASE_SIZE)?;
        let t = Instant::now();
        report.push_checks("", &check_axioms(&s.structure), &names(&s), t);
        let t = Instant::now();
        let p = check_closure_criteria(&s.structure);
        report.push(
            Record::verdict("closure-criteria-agree", p.agree())
                .with_data(json!({ "closure-space": p.i, "discrete-below": p.ii, "composites-equal": p.iii }))
                .timed(t),
        );
    }
    for (i, p) in cfg.maps.iter().enumerate() {
        let m = format::load_map(p)?;
        let Domain::Space(d) = &m.from else {
            return Err(usage(format!("map {} has no domain space", p.display())));
        };
        let t = Instant::now();
        let f = SpaceMap::new(&d.structure, &m.to.structure, m.assignment.clone())?;
        report.push_checks(&format!("map[{i}]-"), &check_continuous(&f), &names(d), t);
        let strict = check_closure_preserving(&f);
        let mut rec = Record::info(format!("map[{i}]-C="), json!({ "holds": strict.all_passed() })).timed(t);
        if let Some(w) = strict.entries[0].witness.as_ref() {
            rec.witnesses.push(names(d).witness(w));
        }
        report.push(rec);
    }
    Ok(())
}

fn bar_cmd(cfg: &RunConfig, report: &mut Report) -> Result<(), CliError> {
    let s = space_arg(cfg, MAX_BASE_SIZE)?;
    let t = Instant::now();
    let b = bar(&s.structure, cfg.coprime_only);
    let check = if cfg.coprime_only { "bar-coprime" } else { "bar" };
    report.push(Record::info(check, structure_data(&s.points, &b)).timed(t));
    let t = Instant::now();
    match check_t_via_bar(&s.structure) {
        Ok(below) => {
            let t_holds = s.structure.is_transitive();
            report.push(
                Record::verdict("T-iff-bar-below", below == t_holds)
                    .with_data(json!({ "T": t_holds, "bar-below": below }))
                    .timed(t),
            );
        }
        Err(e) => report.push(Record::info("T-iff-bar-below", json!({ "skipped": e.to_string() }))),
    }
    Ok(())
}

/// Maps whose domain is a topological space, as probes for the universal property.
fn probes(cfg: &RunConfig) -> Result<Vec<MapSpec>, CliError> {
    let mut out = Vec::new();
    for p in &cfg.maps {
        let m = format::load_map(p)?;
        if !matches!(m.from, Domain::Space(_)) {
            return Err(usage(format!("map {} has no domain space", p.display())));
        }
        out.push(m);
    }
    Ok(out)
}

fn core_cmd(cfg: &RunConfig, report: &mut Report) -> Result<(), CliError> {
    let s = space_arg(cfg, CORE_CAP)?;
    let maps = probes(cfg)?;
    if maps.iter().any(|m| m.to.structure != s.structure) {
        return Err(usage("probe maps must have the --space structure as codomain"));
    }
    let t = Instant::now();
    let plus = closure::core(&s.structure)?;
    report.push(Record::info("core", structure_data(&s.points, &plus)).timed(t));
    let t = Instant::now();
    let probe_refs: Vec<(&ClosureStructure, &[usize])> = maps
        .iter()
        .filter_map(|m| match &m.from {
            Domain::Space(d) => Some((&d.structure, m.assignment.as_slice())),
            Domain::Points(_) => None,
        })
        .collect();
    let r = check_core_theorem(&s.structure, &probe_refs)?;
    report.push_checks("", &r, &names(&s), t);
    Ok(())
}

fn initial_cmd(cfg: &RunConfig, report: &mut Report) -> Result<(), CliError> {
    if cfg.maps.is_empty() {
        return Err(usage("give the family with one or more --maps"));
    }
    let maps: Vec<MapSpec> = cfg.maps.iter().map(|p| format::load_map(p)).collect::<Result<_, _>>()?;
    let points = maps[0].from.points().to_vec();
    if maps.iter().any(|m| m.from.points() != points.as_slice()) {
        return Err(usage("all maps must share the same domain points"));
    }
    let limit = cfg.command == Command::Limit;
    SizeLimit::check("base set", points.len(), cap_x(cfg, if limit { CORE_CAP } else { MAX_BASE_SIZE }))?;
    let q = maps[0].to.structure.quantale_arc().clone();
    let sources: Vec<closure::Source> =
        maps.iter().map(|m| closure::Source::new(&m.assignment, &m.to.structure)).collect();
    let t = Instant::now();
    let c =
        if limit { vtop_limit(&q, points.len(), &sources)? } else { initial_structure(&q, points.len(), &sources)? };
    report.push(Record::info(cfg.command.name(), structure_data(&points, &c)).timed(t));
    let space = Space { points: points.clone(), structure: c };
    let t = Instant::now();
    let mut axioms = check_axioms(&space.structure);
    axioms.entries.retain(|e| e.name == "R" || e.name == "T" || limit && e.name == "A");
    report.push_checks("", &axioms, &names(&space), t);
    for (i, m) in maps.iter().enumerate() {
        let t = Instant::now();
        let f = SpaceMap::new(&space.structure, &m.to.structure, m.assignment.clone())?;
        report.push_checks(&format!("map[{i}]-"), &check_continuous(&f), &names(&space), t);
    }
    Ok(())
}

fn levels_cmd(cfg: &RunConfig, report: &mut Report) -> Result<(), CliError> {
    let s = space_arg(cfg, MAX_BASE_SIZE)?;
    let q = s.quantale();
    let t = Instant::now();
    let f = to_levels(&s.structure);
    let data: serde_json::Map<String, Value> = q
        .elements()
        .map(|v| {
            let sets: Value = crate::Subset::all(s.structure.points())
                .map(|a| json!([s.subset_name(a), s.subset_name(f.level(v, a))]))
                .collect();
            (q.name(v).to_string(), sets)
        })
        .collect();
    report.push(Record::info("levels", Value::Object(data)).timed(t));
    let t = Instant::now();
    report.push_checks("", &check_levels(&f), &names(&s), t);
    let t = Instant::now();
    match coprime_levels_additive(&f) {
        Some(v) => {
            let mut rec = Record::info("coprime-levels-additive", json!({ "holds": v.holds() })).timed(t);
            if let Some(w) = v.witness() {
                rec.witnesses.push(names(&s).level_witness(w));
            }
            report.push(rec);
        }
        None => report.push(Record::info("coprime-levels-additive", json!({ "skipped": "quantale is not spatial" }))),
    }
    Ok(())
}

fn lattice_arg(cfg: &RunConfig) -> Result<FiniteLattice, CliError> {
    match (&cfg.lattice, &cfg.quantale) {
        (Some(p), _) => Ok(format::load_lattice(p)?),
        (None, Some(q)) => Ok(load_quantale_arg(q)?.lattice().clone()),
        (None, None) => Err(usage("--lattice or --quantale is required")),
    }
}

fn lattice_report(cfg: &RunConfig, report: &mut Report) -> Result<(), CliError> {
    let l = lattice_arg(cfg)?;
    let name = |e: crate::Elem| l.name(e).to_string();
    let names_of = |es: &[crate::Elem]| es.iter().map(|&e| name(e)).collect::<Vec<_>>();

    let t = Instant::now();
    let ps = lattice::coprimes(&l);
    report.push(Record::info("coprimes", json!(names_of(&ps))).timed(t));

    let t = Instant::now();
    let sup = lattice::is_sup_generated_by_coprimes(&l);
    let mut rec = Record::info("sup-generated-by-coprimes", json!({ "holds": sup.holds() })).timed(t);
    if let Some(&a) = sup.by_joins.witness() {
        rec.witnesses.push(json!({ "not-a-join-of-coprimes": name(a) }));
    }
    report.push(rec);
    report.push(Record::verdict("sup-generation-criteria-agree", sup.criteria_agree()).timed(t));

    let t = Instant::now();
    let coframe = lattice::is_coframe(&l);
    let mut rec = Record::info("coframe", json!({ "holds": coframe.holds() })).timed(t);
    if let Some(&(x, y, z)) = coframe.witness() {
        rec.witnesses.push(json!({ "x": name(x), "y": name(y), "z": name(z) }));
    }
    report.push(rec);

    let t = Instant::now();
    let ccd = match lattice::is_ccd(&l) {
        Ok(v) => {
            let mut rec = Record::info("ccd", json!({ "holds": v.holds() })).timed(t);
            if let Some(&a) = v.witness() {
                rec.witnesses.push(json!({ "not-a-join-of-totally-below": name(a) }));
            }
            report.push(rec);
            Some(v.holds())
        }
        Err(e) => {
            report.push(Record::info("ccd", json!({ "skipped": e.to_string() })));
            None
        }
    };
    let agree = ccd.is_none_or(|c| c == sup.holds()) && coframe.holds() == sup.holds();
    report.push(Record::verdict("characterizations-agree", agree));

    let t = Instant::now();
    let mut way_below = Ok(None);
    'outer: for x in l.elements() {
        for a in l.elements() {
            match lattice::way_below_brute(&l, x, a) {
                Ok(w) if w != l.leq(x, a) => {
                    way_below = Ok(Some((x, a)));
                    break 'outer;
                }
                Ok(_) => {}
                Err(e) => {
                    way_below = Err(e);
                    break 'outer;
                }
            }
        }
    }
    match way_below {
        Ok(w) => {
            let mut rec = Record::verdict("way-below-is-order", w.is_none()).timed(t);
            if let Some((x, a)) = w {
                rec.witnesses.push(json!({ "x": name(x), "a": name(a) }));
            }
            report.push(rec);
        }
        Err(e) => report.push(Record::info("way-below-is-order", json!({ "skipped": e.to_string() }))),
    }

    let t = Instant::now();
    let emb = lattice::spatial_embedding(&l);
    let pair = |v: &crate::Verdict<(crate::Elem, crate::Elem)>| match v.witness() {
        None => json!(true),
        Some(&(a, b)) => json!([name(a), name(b)]),
    };
    let image: serde_json::Map<String, Value> =
        l.elements().map(|x| (name(x), json!(names_of(&emb.image[x.idx()])))).collect();
    let data = json!({
        "image": image,
        "injective": pair(&emb.injective),
        "preserves-meets": pair(&emb.preserves_meets),
        "preserves-joins": pair(&emb.preserves_joins),
    });
    report.push(
        Record::verdict("spatial-embedding", !sup.holds() || emb.is_lattice_embedding()).with_data(data).timed(t),
    );
    let bad: Vec<String> = emb
        .characters
        .iter()
        .filter(|c| !c.preserves_meets || c.preserves_finite_joins != c.coprime)
        .map(|c| name(c.element))
        .collect();
    let mut rec = Record::verdict("coprime-characters", bad.is_empty());
    for b in bad {
        rec.witnesses.push(json!({ "element": b }));
    }
    report.push(rec.timed(t));
    Ok(())
}

fn enumerate_cmd(cfg: &RunConfig, report: &mut Report) -> Result<(), CliError> {
    let l = lattice_arg(cfg)?;
    let cap = cfg.cap_v.map_or(ENUMERATION_CAP, |c| (c as usize).min(ENUMERATION_CAP));
    SizeLimit::check("quantale enumeration", l.size(), cap)?;
    let t = Instant::now();
    let e = enumerate_quantales(&l, cfg.max_results)?;
    let listed: Vec<Value> = e
        .quantales
        .iter()
        .map(|q| {
            let c = q.classify();
            json!({
                "tensor": q.tensor_rows().iter().map(|r| r.iter().map(|&i| l.name(crate::Elem::new(i))).collect::<Vec<_>>()).collect::<Vec<_>>(),
                "unit": q.name(q.unit()),
                "integral": c.integral,
                "commutative": c.commutative,
            })
        })
        .collect();
    report.push(Record::info("quantales", json!({ "total": e.total, "listed": listed })).timed(t));
    Ok(())
}

fn suite_record(o: &SuiteOutcome, findings_only: bool) -> Record {
    let verdict = match (&o.counterexample, o.exploratory || findings_only) {
        (None, _) => Status::Pass,
        (Some(_), true) => Status::Finding,
        (Some(_), false) => Status::Fail,
    };
    let mut rec = Record::new(o.name, verdict).with_data(json!({
        "cases": o.cases,
        "applicable": o.applicable,
        "exhaustive": o.exhaustive,
        "exploratory": o.exploratory,
    }));
    if let Some(c) = &o.counterexample {
        rec.witnesses.push(json!({ "case": c.case, "detail": c.detail }));
    }
    rec
}

fn theorems_cmd(cfg: &RunConfig, report: &mut Report) -> Result<(), CliError> {
    let q = quantale_arg(cfg)?;
    let mut sc = SuiteConfig { seed: cfg.seed, ..SuiteConfig::default() };
    if let Some(x) = cfg.cap_x {
        sc.exhaustive_points = x as usize;
        sc.sample_points = x as usize + 1;
    }
    if let Some(v) = cfg.cap_v {
        sc.cap_v = v as usize;
    }
    SizeLimit::check("sampled base set", sc.sample_points, CORE_CAP)?;
    let search = cfg.command == Command::SearchCounterexample;
    let t = Instant::now();
    if !search {
        for o in verify_theorems(&q, &sc) {
            report.push(suite_record(&o, false).timed(t));
        }
    }
    if search || cfg.exploratory {
        for o in search_counterexample(&q, &sc) {
            report.push(suite_record(&o, true).timed(t));
        }
    }
    Ok(())
}
