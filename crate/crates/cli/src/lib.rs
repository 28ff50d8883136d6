//! Command-line front end: argument model, dispatch to the pipelines, result
//! records (table / JSON) and the built-in regression corpus.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{ArgGroup, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use instanton_chains::arith::LaurentPoly;
use instanton_chains::complexes::{
    montesinos_knot_complex, montesinos_link_complex, special_montesinos_complex, torus_complex,
    torus_even_cover_data, two_bridge_complex, Anchoring, FloerChains, LinkOptions, Origin,
};
use instanton_chains::covers::{
    branched_cover_h1, check_flat_cobordism, is_homology_s1xs2, seifert_h1_invariants, seifert_h1_order, SeifertData,
};
use instanton_chains::seifert::{enumerate_irreducibles, TwistMask};
use instanton_chains::signatures::torus_signature;
use instanton_chains::{Error, Result};

#[derive(Parser, Debug, Clone)]
#[command(name = "ichains", version, about = "Generators, Z/4 gradings and chain ranks of singular instanton Floer complexes")]
pub struct Cli {
    /// Emit a single JSON object instead of a table.
    #[arg(long, global = true)]
    pub json: bool,
    /// Read the command and its parameters from a flat TOML document.
    #[arg(long, value_name = "FILE")]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Subcommand, Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Command {
    /// Two-bridge knot of type −p/q (double cover L(p,q)).
    TwoBridge {
        #[arg(short, allow_hyphen_values = true)]
        p: i64,
        #[arg(short, allow_hyphen_values = true)]
        q: i64,
    },
    /// Montesinos knot from Seifert data of its double cover.
    MontesinosKnot {
        /// Seifert pairs "a,b;a,b;a,b".
        #[arg(long, allow_hyphen_values = true, value_parser = parse_pairs)]
        pairs: String,
        /// Knot signature (not computed for general Montesinos knots).
        #[arg(long, allow_hyphen_values = true)]
        signature: i64,
        /// Total contribution "r0,r1,r2,r3" of the irreducible classes.
        #[arg(long, value_parser = parse_pin)]
        pin: Option<String>,
    },
    /// Montesinos knot k(p,q,r) with double cover Σ(p,q,r).
    BrieskornKnot { p: i64, q: i64, r: i64 },
    /// Torus knot T(p,q); even q is routed through the Seifert data of the cover.
    Torus {
        #[arg(short)]
        p: i64,
        #[arg(short)]
        q: i64,
        /// Irreducible contribution "r0,r1,r2,r3" (even q only).
        #[arg(long, value_parser = parse_pin)]
        pin: Option<String>,
    },
    /// Two-component Montesinos link whose double cover is a homology S¹×S².
    MontesinosLink {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_pairs)]
        pairs: String,
        /// Linking number of the two components.
        #[arg(long, allow_hyphen_values = true)]
        lk: Option<i64>,
        /// Mark the linking number as inferred rather than given.
        #[arg(long, requires = "lk")]
        lk_inferred: bool,
        /// Centered Alexander coefficients "c,…,c" of the knot whose 0-surgery is the cover.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_alexander)]
        alexander: Option<String>,
        /// Relator signs "±1,±1,±1" (default: one −1 on an even fiber).
        #[arg(long, allow_hyphen_values = true, value_parser = parse_twist)]
        twist: Option<String>,
    },
    /// First homology of a double branched cover.
    #[command(group(ArgGroup::new("source").required(true).args(["pairs", "alexander"])))]
    Homology {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_pairs)]
        pairs: Option<String>,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_alexander)]
        alexander: Option<String>,
    },
    /// Run the built-in regression corpus.
    Regress {
        /// Only run cases whose family or name contains this string.
        #[arg(long)]
        filter: Option<String>,
    },
}

fn split_ints(s: &str) -> std::result::Result<Vec<i64>, String> {
    s.split(',').map(|x| x.trim().parse::<i64>().map_err(|e| format!("{x:?}: {e}"))).collect()
}

fn parse_pairs(s: &str) -> std::result::Result<String, String> {
    s.parse::<SeifertData>().map_err(|e| e.to_string())?;
    Ok(s.to_string())
}

fn parse_pin(s: &str) -> std::result::Result<String, String> {
    let v = split_ints(s)?;
    if v.len() != 4 || v.iter().any(|x| *x < 0) {
        return Err("expected four non-negative ranks r0,r1,r2,r3".into());
    }
    Ok(s.to_string())
}

fn parse_alexander(s: &str) -> std::result::Result<String, String> {
    LaurentPoly::from_centered_coeffs(&split_ints(s)?).map_err(|e| e.to_string())?;
    Ok(s.to_string())
}

fn parse_twist(s: &str) -> std::result::Result<String, String> {
    let v = split_ints(s)?;
    TwistMask::new(v.into_iter().map(|x| x as i8).collect()).map_err(|e| e.to_string())?;
    Ok(s.to_string())
}

fn pairs_of(s: &str) -> Result<SeifertData> {
    s.parse()
}

fn pin_of(s: &Option<String>) -> Option<[u64; 4]> {
    s.as_ref().map(|s| {
        let v: Vec<u64> = s.split(',').map(|x| x.trim().parse().expect("validated pin")).collect();
        [v[0], v[1], v[2], v[3]]
    })
}

fn alexander_of(s: &str) -> Result<LaurentPoly> {
    let v = split_ints(s).map_err(Error::InvalidInput)?;
    LaurentPoly::from_centered_coeffs(&v)
}

/// Expand a flat TOML document into command-line arguments. `command` names
/// the subcommand, `args` holds positional values, booleans become flags and
/// every other key becomes `--key value`.
pub fn config_argv(text: &str, json: bool) -> std::result::Result<Vec<String>, String> {
    let table: toml::Table = text.parse().map_err(|e: toml::de::Error| e.to_string())?;
    let mut argv = vec!["ichains".to_string()];
    if json {
        argv.push("--json".into());
    }
    match table.get("command") {
        Some(toml::Value::String(c)) => argv.push(c.clone()),
        _ => return Err("config needs a string key `command`".into()),
    }
    for (key, value) in &table {
        let flag = if key.len() == 1 { format!("-{key}") } else { format!("--{}", key.replace('_', "-")) };
        match (key.as_str(), value) {
            ("command", _) => {}
            ("args", toml::Value::Array(items)) => {
                for item in items {
                    argv.push(scalar(item)?);
                }
            }
            ("args", v) => argv.extend(scalar(v)?.split_whitespace().map(String::from)),
            (_, toml::Value::Boolean(true)) => argv.push(flag),
            (_, toml::Value::Boolean(false)) => {}
            (_, v) => {
                argv.push(flag);
                argv.push(scalar(v)?);
            }
        }
    }
    Ok(argv)
}

fn scalar(v: &toml::Value) -> std::result::Result<String, String> {
    match v {
        toml::Value::String(s) => Ok(s.clone()),
        toml::Value::Integer(i) => Ok(i.to_string()),
        other => Err(format!("unsupported config value {other}")),
    }
}

/// Grading of one generator, or an explicit unknown marker.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Grading {
    Known(u8),
    Unknown(UnknownMarker),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum UnknownMarker {
    #[serde(rename = "unknown")]
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorRecord {
    pub grading: Grading,
    pub multiplicity: u64,
    pub origin: Origin,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub input: Value,
    pub generators: Vec<GeneratorRecord>,
    pub ranks: Option<[u64; 4]>,
    /// "absolute" or "cyclic"; absent when no rank vector is determined.
    pub anchoring: Option<String>,
    pub conjectural: bool,
    /// Ranks of the generators with known grading, when `ranks` is absent.
    pub known_ranks: Option<[u64; 4]>,
    /// Admissible rank vectors when the split is ambiguous.
    pub candidates: Vec<[u64; 4]>,
    pub warnings: Vec<String>,
    pub notes: Vec<String>,
    pub details: Value,
}

impl ResultRecord {
    fn plain(input: Value, details: Value) -> Self {
        Self {
            input,
            generators: vec![],
            ranks: None,
            anchoring: None,
            conjectural: false,
            known_ranks: None,
            candidates: vec![],
            warnings: vec![],
            notes: vec![],
            details,
        }
    }

    fn from_chains(input: Value, chains: &FloerChains, details: Value) -> Self {
        let generators = chains
            .generators
            .entries()
            .iter()
            .map(|g| GeneratorRecord {
                grading: g.grading.map_or(Grading::Unknown(UnknownMarker::Unknown), |z| Grading::Known(z.value())),
                multiplicity: g.multiplicity,
                origin: g.origin,
            })
            .collect();
        let mut notes = Vec::new();
        if chains.homology_equals_chains {
            notes.push("the differential vanishes: these ranks are also the Floer homology ranks".to_string());
        }
        Self {
            input,
            generators,
            ranks: chains.ranks.map(|r| r.ranks),
            anchoring: chains.ranks.map(|r| anchoring_name(r.anchoring).to_string()),
            conjectural: chains.ranks.is_some_and(|r| r.conjectural),
            known_ranks: chains.ranks.is_none().then(|| chains.generators.known_ranks()),
            candidates: vec![],
            warnings: chains.warnings.iter().map(|w| w.to_string()).collect(),
            notes,
            details,
        }
    }

    pub fn generator_total(&self) -> u64 {
        self.generators.iter().map(|g| g.multiplicity).sum()
    }
}

fn anchoring_name(a: Anchoring) -> &'static str {
    match a {
        Anchoring::Absolute => "absolute",
        Anchoring::UpToCyclicPermutation => "cyclic",
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseOutcome {
    pub name: String,
    pub family: String,
    pub passed: bool,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegressReport {
    pub cases: Vec<CaseOutcome>,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Output {
    Record(Box<ResultRecord>),
    Regress(RegressReport),
}

/// Dispatch one command.
pub fn run(command: &Command) -> Result<Output> {
    let input = serde_json::to_value(command).expect("command serializes");
    let record = match command {
        Command::TwoBridge { p, q } => {
            let c = two_bridge_complex(*p, *q)?;
            let circles: Vec<Value> = c
                .circles
                .iter()
                .map(|l| json!({"ell": l.ell, "index_plus_one": l.index_plus_one, "mu": l.mu.value()}))
                .collect();
            let mut r = ResultRecord::from_chains(
                input,
                &c.chains,
                json!({"signature": c.signature, "special_grading": c.signature.rem_euclid(4), "circles": circles}),
            );
            r.notes = vec!["chain ranks equal Floer homology ranks: the Khovanov spectral sequence collapses for two-bridge knots".into()];
            r
        }
        Command::MontesinosKnot { pairs, signature, pin } => {
            montesinos_knot_record(input, &pairs_of(pairs)?, *signature, pin_of(pin))?
        }
        Command::BrieskornKnot { p, q, r } => {
            let c = special_montesinos_complex(*p, *q, *r)?;
            ResultRecord::from_chains(
                input,
                &c.chains,
                json!({"casson": c.casson, "irreducible_classes": c.irreducible_classes}),
            )
        }
        Command::Torus { p, q, pin } => {
            if q % 2 == 0 || p % 2 == 0 {
                let (odd, even) = if q % 2 == 0 { (*p, *q) } else { (*q, *p) };
                let s = torus_even_cover_data(odd, even)?;
                let mut r = montesinos_knot_record(input, &s, torus_signature(*p, *q)?, pin_of(pin))?;
                r.notes.push(format!("double cover has Seifert data {s}"));
                r
            } else {
                if pin.is_some() {
                    return Err(Error::InvalidPin("odd torus knots take no irreducible pin".into()));
                }
                let c = torus_complex(*p, *q)?;
                let mut r = ResultRecord::from_chains(
                    input,
                    &c.chains,
                    json!({
                        "signature": c.signature,
                        "a": c.a,
                        "certified_total": c.certified_total,
                        "special_grading": c.special_grading.value(),
                        "irreducible_classes": c.irreducible_classes,
                    }),
                );
                r.notes.push(format!("certified total rank {}; the split (1+a,a,a,a) is conjectural", c.certified_total));
                r
            }
        }
        Command::MontesinosLink { pairs, lk, lk_inferred, alexander, twist } => {
            let s = pairs_of(pairs)?;
            let twist = match twist {
                Some(t) => Some(TwistMask::new(split_ints(t).map_err(Error::InvalidInput)?.into_iter().map(|x| x as i8).collect())?),
                None => None,
            };
            let opts = LinkOptions {
                lk: *lk,
                lk_inferred: *lk_inferred,
                alexander: alexander.as_deref().map(alexander_of).transpose()?,
                twist,
            };
            let c = montesinos_link_complex(&s, &opts)?;
            let mut r = ResultRecord::from_chains(
                input,
                &c.chains,
                json!({
                    "su2_classes": c.su2_classes,
                    "so3_classes": c.so3_classes,
                    "split": c.split.map(|(n1, n3)| json!({"n1": n1, "n3": n3})),
                    "lambda_prime": c.lambda_prime,
                }),
            );
            if c.candidates.len() > 1 {
                r.candidates = c.candidates.iter().map(|x| x.ranks).collect();
                r.anchoring = Some("cyclic".into());
            }
            if let Some(lp) = c.lambda_prime {
                r.notes.push(format!("n1 + n3 = {} against -lambda' = {} from the Alexander polynomial", c.so3_classes, -lp));
            }
            r
        }
        Command::Homology { pairs, alexander } => match (pairs, alexander) {
            (Some(p), _) => {
                let s = pairs_of(p)?;
                let order = seifert_h1_order(&s);
                let flat = check_flat_cobordism(&s);
                ResultRecord::plain(
                    input,
                    json!({
                        "h1_order": order,
                        "h1_invariants": seifert_h1_invariants(&s),
                        "b1": seifert_h1_invariants(&s).iter().filter(|x| **x == 0).count(),
                        "homology_s1xs2": is_homology_s1xs2(&s),
                        "euler_number": s.euler_number().to_string(),
                        "flat_cobordism": flat.is_ok(),
                        "irreducible_classes": enumerate_irreducibles(&s).ok().map(|v| v.len()),
                    }),
                )
            }
            (None, Some(a)) => {
                let h = branched_cover_h1(&alexander_of(a)?);
                ResultRecord::plain(input, json!({"b1": h.b1, "h1_order": h.h1_order.as_u64()}))
            }
            (None, None) => return Err(Error::InvalidInput("homology needs --pairs or --alexander".into())),
        },
        Command::Regress { filter } => return Ok(Output::Regress(regress(&corpus(), filter.as_deref()))),
    };
    Ok(Output::Record(Box::new(record)))
}

fn montesinos_knot_record(input: Value, s: &SeifertData, sign_k: i64, pin: Option<[u64; 4]>) -> Result<ResultRecord> {
    let c = montesinos_knot_complex(s, sign_k, pin)?;
    let reducibles: Vec<Value> = c
        .reducibles
        .iter()
        .map(|r| json!({"fiber_index_plus_one": r.fiber_index_plus_one, "mu": r.mu.map(|m| m.value())}))
        .collect();
    let mut r = ResultRecord::from_chains(
        input,
        &c.chains,
        json!({
            "h1_order": c.h1_order,
            "special_grading": c.special_grading.value(),
            "reducibles": reducibles,
            "irreducible_classes": c.irreducible_classes,
        }),
    );
    if r.ranks.is_none() {
        r.notes.push("irreducible gradings are undetermined; supply --pin with their total contribution".into());
    }
    Ok(r)
}

/// Plain-text rendering of a record.
pub fn render_table(r: &ResultRecord) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "input       {}", r.input);
    if !r.generators.is_empty() {
        let _ = writeln!(out, "generators  grading  mult  origin");
        for g in &r.generators {
            let grading = match g.grading {
                Grading::Known(v) => v.to_string(),
                Grading::Unknown(_) => "unknown".into(),
            };
            let origin = match g.origin {
                Origin::Special => "special".to_string(),
                Origin::Reducible(i) => format!("reducible {i}"),
                Origin::Irreducible(i) => format!("irreducible {i}"),
            };
            let _ = writeln!(out, "            {grading:<7}  {:<4}  {origin}", g.multiplicity);
        }
    }
    if let Some(ranks) = r.ranks {
        let anchoring = r.anchoring.as_deref().unwrap_or("absolute");
        let conj = if r.conjectural { ", conjectural" } else { "" };
        let _ = writeln!(out, "ranks       {ranks:?} (grading order 0,1,2,3; {anchoring}{conj})");
    }
    if let Some(k) = r.known_ranks {
        let _ = writeln!(out, "known ranks {k:?} (generators with determined grading)");
    }
    for c in &r.candidates {
        let _ = writeln!(out, "candidate   {c:?} (cyclic)");
    }
    if let Value::Object(map) = &r.details {
        for (k, v) in map {
            let _ = writeln!(out, "{k:<11} {v}");
        }
    }
    for w in &r.warnings {
        let _ = writeln!(out, "warning     {w}");
    }
    for n in &r.notes {
        let _ = writeln!(out, "note        {n}");
    }
    out
}

pub fn render_regress(rep: &RegressReport) -> String {
    let mut out = String::new();
    for c in &rep.cases {
        let status = if c.passed { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "{status} {:<14} {:<28} expected {} actual {}", c.family, c.name, c.expected, c.actual);
    }
    let _ = writeln!(out, "{} passed, {} failed", rep.passed, rep.failed);
    out
}

/// One check of a regression case.
#[derive(Debug, Clone, PartialEq)]
pub enum Expect {
    Ranks([u64; 4], &'static str),
    Detail(&'static str, Value),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Case {
    pub name: &'static str,
    pub family: &'static str,
    pub argv: &'static [&'static str],
    pub expect: Vec<Expect>,
}

/// Worked examples with known chain data.
pub fn corpus() -> Vec<Case> {
    let case = |name, family, argv, expect| Case { name, family, argv, expect };
    vec![
        case("figure-eight", "two-bridge", &["two-bridge", "-p", "5", "-q", "3"][..], vec![
            Expect::Ranks([1, 1, 2, 1], "absolute"),
            Expect::Detail("signature", json!(0)),
        ]),
        case("trefoil", "two-bridge", &["two-bridge", "-p", "3", "-q", "1"], vec![
            Expect::Ranks([1, 1, 1, 0], "absolute"),
            Expect::Detail("signature", json!(-2)),
        ]),
        case("unknot", "two-bridge", &["two-bridge", "-p", "1", "-q", "1"], vec![Expect::Ranks([1, 0, 0, 0], "absolute")]),
        case("k(2,3,7)", "brieskorn-knot", &["brieskorn-knot", "2", "3", "7"], vec![
            Expect::Ranks([3, 2, 2, 2], "absolute"),
            Expect::Detail("casson", json!(-1)),
            Expect::Detail("irreducible_classes", json!(2)),
        ]),
        case("k(2,3,5)", "brieskorn-knot", &["brieskorn-knot", "2", "3", "5"], vec![Expect::Ranks([3, 2, 2, 2], "absolute")]),
        case("pretzel(-2,3,3)", "montesinos-knot", &[
            "montesinos-knot", "--pairs", "2,-1;3,1;3,1", "--signature", "-6", "--pin", "2,0,0,2",
        ], vec![
            Expect::Ranks([2, 1, 2, 2], "absolute"),
            Expect::Detail("h1_order", json!(3)),
            Expect::Detail("special_grading", json!(2)),
        ]),
        case("T(3,5)", "torus", &["torus", "-p", "3", "-q", "5"], vec![
            Expect::Ranks([3, 2, 2, 2], "absolute"),
            Expect::Detail("certified_total", json!(9)),
        ]),
        case("T(3,4)", "torus", &["torus", "-p", "3", "-q", "4", "--pin", "2,0,0,2"], vec![
            Expect::Ranks([2, 1, 2, 2], "absolute"),
        ]),
        case("P(2,-3,-6)", "montesinos-link", &["montesinos-link", "--pairs", "2,1;3,-1;6,-1", "--lk", "4"], vec![
            Expect::Ranks([2, 0, 2, 0], "cyclic"),
            Expect::Detail("su2_classes", json!(2)),
            Expect::Detail("so3_classes", json!(1)),
        ]),
        case("K(2,1;5,-2;10,-1)", "montesinos-link", &[
            "montesinos-link", "--pairs", "2,1;5,-2;10,-1", "--lk", "4", "--alexander", "1,-1,1,-1,1",
        ], vec![
            Expect::Ranks([2, 4, 2, 4], "cyclic"),
            Expect::Detail("so3_classes", json!(3)),
            Expect::Detail("lambda_prime", json!(-3)),
        ]),
        case("pretzel(-2,3,3) cover", "homology", &["homology", "--pairs", "2,-1;3,1;3,1"], vec![
            Expect::Detail("h1_order", json!(3)),
            Expect::Detail("flat_cobordism", json!(true)),
        ]),
    ]
}

fn run_case(case: &Case) -> std::result::Result<ResultRecord, String> {
    let argv = std::iter::once("ichains").chain(case.argv.iter().copied());
    let cli = Cli::try_parse_from(argv).map_err(|e| e.to_string())?;
    let command = cli.command.ok_or("no command")?;
    match run(&command).map_err(|e| format!("{}: {e}", e.name()))? {
        Output::Record(r) => Ok(*r),
        Output::Regress(_) => Err("nested regress".into()),
    }
}

fn describe(e: &Expect) -> String {
    match e {
        Expect::Ranks(r, a) => format!("ranks {r:?} {a}"),
        Expect::Detail(k, v) => format!("{k}={v}"),
    }
}

fn observe(e: &Expect, r: &ResultRecord) -> String {
    match e {
        Expect::Ranks(..) => match r.ranks {
            Some(ranks) => format!("ranks {ranks:?} {}", r.anchoring.as_deref().unwrap_or("?")),
            None => "ranks undetermined".into(),
        },
        Expect::Detail(k, _) => format!("{k}={}", r.details.get(*k).unwrap_or(&Value::Null)),
    }
}

/// Run the corpus cases whose family or name contains `filter`.
pub fn regress(cases: &[Case], filter: Option<&str>) -> RegressReport {
    let mut outcomes = Vec::new();
    for case in cases {
        if let Some(f) = filter {
            if !case.family.contains(f) && !case.name.contains(f) {
                continue;
            }
        }
        let expected = case.expect.iter().map(describe).collect::<Vec<_>>().join(", ");
        let (passed, actual) = match run_case(case) {
            Ok(record) => {
                let actual = case.expect.iter().map(|e| observe(e, &record)).collect::<Vec<_>>().join(", ");
                (actual == expected, actual)
            }
            Err(e) => (false, e),
        };
        outcomes.push(CaseOutcome {
            name: case.name.into(),
            family: case.family.into(),
            passed,
            expected,
            actual,
        });
    }
    let passed = outcomes.iter().filter(|c| c.passed).count();
    RegressReport { failed: outcomes.len() - passed, passed, cases: outcomes }
}
