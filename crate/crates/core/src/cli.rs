//! Command-line front end. [`run`] does all the work and returns the exit code
//! with the report text, so it can be driven in-process.
//!
//! Exit codes: 0 all requested certificates pass, 2 input error, 3 size cap
//! exceeded, 4 failed precondition, 5 certificate failure.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::cover::{gcover_check, Cover};
use crate::error::{Error, ErrorKind, Result};
use crate::generate::{
    instance_rng, random_ball_cover, random_complex, random_graded_instance, random_metric_instance,
    random_poset_instance,
};
use crate::group::{
    check_metric_projection, check_poset_projection, dimension_equality_check, quotient_metric, quotient_poset,
    Action, PermGroup, Symmetric, GROUP_ELEMENT_CAP,
};
use crate::io::{
    complex_to_json, cover_to_json, group_to_json, metric_to_json, parse_alpha, parse_complex, parse_cover,
    parse_group, parse_space, poset_to_json, AnySpace,
};
use crate::metric::FiniteMetricSpace;
use crate::nerve::{barycentric_subdivision, canonical_cover_check, nerve, nerve_map, pull_back_canonical};
use crate::pipeline::{cover_of_z, proposition_32_partial, proposition_33, DEFAULT_M_CAP};
use crate::poset::{FinitePoset, DIMENSION_SIZE_CAP};
use crate::rational::{format_rational, parse_rational, Rational};
use crate::refine::{equivariant_refine_with, Refinable, SelectionRule};
use crate::sets::Space;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAP: i32 = 3;
pub const EXIT_PRECONDITION: i32 = 4;
pub const EXIT_CERTIFICATE: i32 = 5;

/// Size caps, overridable through `EQUICOVER_CAPS="points=14,group=120,m_cap=64"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Caps {
    /// Largest poset whose covering dimension is computed.
    pub points: usize,
    /// Largest group order accepted.
    pub group: usize,
    /// Denominator bound for shrink scales and `delta`.
    pub m_cap: usize,
}

impl Default for Caps {
    fn default() -> Caps {
        Caps {
            points: DIMENSION_SIZE_CAP,
            group: GROUP_ELEMENT_CAP,
            m_cap: DEFAULT_M_CAP,
        }
    }
}

impl Caps {
    pub fn parse(spec: &str) -> Result<Caps> {
        let mut caps = Caps::default();
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("cap `{item}` is not key=value")))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("cap `{key}` needs a nonnegative integer")))?;
            match key.trim() {
                "points" => caps.points = value,
                "group" => caps.group = value,
                "m_cap" => caps.m_cap = value.max(1),
                other => return Err(Error::Parse(format!("unknown cap `{other}`"))),
            }
        }
        Ok(caps)
    }

    pub fn from_env() -> Result<Caps> {
        match std::env::var("EQUICOVER_CAPS") {
            Ok(spec) => Caps::parse(&spec),
            Err(_) => Ok(Caps::default()),
        }
    }
}

#[derive(Debug, Clone, Parser)]
#[command(name = "equicover", version, about = "Equivariant covers on finite spaces, with certificates")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Write the report to this file instead of standard output.
    #[arg(long, global = true)]
    pub report: Option<PathBuf>,

    /// Seed for randomized subcommands.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, clap::Args)]
pub struct SpaceArgs {
    /// Poset or metric space file.
    #[arg(long)]
    pub space: PathBuf,
    /// Group file; the trivial group when omitted.
    #[arg(long)]
    pub group: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Selection {
    First,
    Last,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Certifier {
    RefinePoset,
    RefineMetric,
    P33,
    CanonicalCover,
    Pullback,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Check that a cover is equivariant and a G-cover.
    GcoverCheck {
        #[command(flatten)]
        input: SpaceArgs,
        #[arg(long)]
        cover: PathBuf,
    },
    /// Build an equivariant refinement of bounded dimension.
    Refine {
        #[command(flatten)]
        input: SpaceArgs,
        #[arg(long)]
        cover: PathBuf,
        #[arg(long)]
        dim: usize,
        /// Write the refinement as a cover file.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also check the projection injection at every point.
        #[arg(long)]
        certify: bool,
        #[arg(long, value_enum, default_value = "first")]
        selection: Selection,
    },
    /// Orbit space with its projection certificate.
    Quotient {
        #[command(flatten)]
        input: SpaceArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Covering dimension of a poset, and of its quotient when a group is given.
    Dim {
        #[command(flatten)]
        input: SpaceArgs,
    },
    /// Nerve of a cover.
    Nerve {
        #[arg(long)]
        space: PathBuf,
        #[arg(long)]
        cover: PathBuf,
    },
    /// Check the canonical star cover of a subdivided complex.
    CanonicalCover {
        #[arg(long)]
        complex: PathBuf,
    },
    /// Pull the canonical cover of the nerve back to a metric space.
    Pullback {
        #[arg(long)]
        space: PathBuf,
        #[arg(long)]
        cover: PathBuf,
    },
    /// Small F-cover of bounded dimension around every point.
    CoverOfZ {
        #[command(flatten)]
        input: SpaceArgs,
        #[arg(long)]
        collection: PathBuf,
        #[arg(short = 'k')]
        k: usize,
        #[arg(short = 'n')]
        n: usize,
        #[arg(long, value_parser = parse_rational_arg)]
        delta: Rational,
    },
    /// Graded cover with the seven-property certificate.
    P33 {
        #[command(flatten)]
        input: SpaceArgs,
        #[arg(long)]
        collection: PathBuf,
        #[arg(short = 'k')]
        k: usize,
        #[arg(short = 'n')]
        n: usize,
        #[arg(long, value_parser = parse_rational_arg)]
        delta: Rational,
    },
    /// Delta, the F-refinement V_F and a candidate beta.
    P32 {
        #[command(flatten)]
        input: SpaceArgs,
        #[arg(long)]
        collection: PathBuf,
        #[arg(long)]
        alpha: PathBuf,
        #[arg(short = 'n')]
        n: usize,
    },
    /// Run a certifier on seeded random instances.
    Fuzz {
        #[arg(long, value_enum)]
        certifier: Certifier,
        #[arg(long, default_value_t = 100)]
        count: usize,
        /// Save failing instances here.
        #[arg(long)]
        save_failures: Option<PathBuf>,
    },
    /// Graphviz output for a complex, its subdivision, or the nerve of a cover.
    ExportDot {
        #[arg(long, conflicts_with_all = ["space", "cover"])]
        complex: Option<PathBuf>,
        #[arg(long)]
        subdivide: bool,
        #[arg(long, requires = "cover")]
        space: Option<PathBuf>,
        #[arg(long, requires = "space")]
        cover: Option<PathBuf>,
    },
}

fn parse_rational_arg(text: &str) -> std::result::Result<Rational, String> {
    parse_rational(text).map_err(|e| e.to_string())
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::GcoverCheck { .. } => "gcover-check",
            Command::Refine { .. } => "refine",
            Command::Quotient { .. } => "quotient",
            Command::Dim { .. } => "dim",
            Command::Nerve { .. } => "nerve",
            Command::CanonicalCover { .. } => "canonical-cover",
            Command::Pullback { .. } => "pullback",
            Command::CoverOfZ { .. } => "cover-of-z",
            Command::P33 { .. } => "p33",
            Command::P32 { .. } => "p32",
            Command::Fuzz { .. } => "fuzz",
            Command::ExportDot { .. } => "export-dot",
        }
    }
}

/// Outcome of one subcommand before rendering.
enum Outcome {
    Report { passed: bool, body: Value },
    Text(String),
}

/// Runs a configuration and returns the exit code and the report text.
pub fn run(config: &RunConfig, caps: &Caps) -> (i32, String) {
    let name = config.command.name();
    match execute(config, caps) {
        Ok(Outcome::Text(text)) => (EXIT_OK, text),
        Ok(Outcome::Report { passed, body }) => {
            let report = json!({ "command": name, "passed": passed, "report": body });
            (if passed { EXIT_OK } else { EXIT_CERTIFICATE }, render(&report))
        }
        Err(e) => {
            let (code, kind) = match e.kind() {
                ErrorKind::Input => (EXIT_INPUT, "input"),
                ErrorKind::Cap => (EXIT_CAP, "cap"),
                ErrorKind::Precondition => (EXIT_PRECONDITION, "precondition"),
            };
            let report = json!({ "command": name, "error": { "kind": kind, "message": e.to_string() } });
            (code, render(&report))
        }
    }
}

fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("reports serialize")
}

enum AnyAction {
    Poset(Action<FinitePoset>),
    Metric(Action<FiniteMetricSpace>),
}

fn bind<S: Symmetric>(space: S, group: Option<&Path>, caps: &Caps) -> Result<Action<S>> {
    match group {
        None => Ok(Action::trivial(space)),
        Some(path) => {
            let group: PermGroup = parse_group(&read(path)?, space.len(), caps.group)?;
            Action::new(group, space)
        }
    }
}

fn load(input: &SpaceArgs, caps: &Caps) -> Result<(AnySpace, AnyAction)> {
    let space = parse_space(&read(&input.space)?)?;
    let action = match &space {
        AnySpace::Poset(p) => AnyAction::Poset(bind(p.clone(), input.group.as_deref(), caps)?),
        AnySpace::Metric(m) => AnyAction::Metric(bind(m.clone(), input.group.as_deref(), caps)?),
    };
    Ok((space, action))
}

fn load_metric(input: &SpaceArgs, caps: &Caps) -> Result<(AnySpace, Action<FiniteMetricSpace>)> {
    match load(input, caps)? {
        (space, AnyAction::Metric(a)) => Ok((space, a)),
        _ => Err(Error::Invalid("this subcommand needs a metric space".into())),
    }
}

fn metric_only(path: &Path) -> Result<(AnySpace, FiniteMetricSpace)> {
    let space = parse_space(&read(path)?)?;
    match &space {
        AnySpace::Metric(m) => {
            let m = m.clone();
            Ok((space, m))
        }
        AnySpace::Poset(_) => Err(Error::Invalid("this subcommand needs a metric space".into())),
    }
}

fn execute(config: &RunConfig, caps: &Caps) -> Result<Outcome> {
    match &config.command {
        Command::GcoverCheck { input, cover } => {
            let (space, action) = load(input, caps)?;
            let cover = parse_cover(&read(cover)?, &space)?;
            let report = match &action {
                AnyAction::Poset(a) => gcover_check(&cover, a),
                AnyAction::Metric(a) => gcover_check(&cover, a),
            };
            Ok(Outcome::Report {
                passed: report.is_gcover,
                body: json!({ "is_cover": cover.is_cover(), "gcover": to_value(&report) }),
            })
        }
        Command::Refine {
            input,
            cover,
            dim,
            out,
            certify,
            selection,
        } => {
            let (space, action) = load(input, caps)?;
            let cover = parse_cover(&read(cover)?, &space)?;
            let rule = match selection {
                Selection::First => SelectionRule::First,
                Selection::Last => SelectionRule::Last,
            };
            let (passed, body, written) = match &action {
                AnyAction::Poset(a) => refine_report(a, &cover, *dim, rule, *certify)?,
                AnyAction::Metric(a) => refine_report(a, &cover, *dim, rule, *certify)?,
            };
            if let Some(path) = out {
                write(path, &render(&written))?;
            }
            Ok(Outcome::Report { passed, body })
        }
        Command::Quotient { input, out } => {
            let (_, action) = load(input, caps)?;
            let (cert, quotient_json, orbits) = match &action {
                AnyAction::Poset(a) => {
                    let q = quotient_poset(a)?;
                    let orbits = q.orbits.iter().map(|o| a.space().names(*o)).collect::<Vec<_>>();
                    (check_poset_projection(a, &q), poset_to_json(&q.space), orbits)
                }
                AnyAction::Metric(a) => {
                    // Construction re-validates every metric axiom.
                    let q = quotient_metric(a)?;
                    let orbits = q.orbits.iter().map(|o| a.space().names(*o)).collect::<Vec<_>>();
                    (check_metric_projection(a, &q), metric_to_json(&q.space), orbits)
                }
            };
            if let Some(path) = out {
                write(path, &render(&quotient_json))?;
            }
            Ok(Outcome::Report {
                passed: cert.passed(),
                body: json!({ "orbits": orbits, "quotient": quotient_json, "projection": to_value(&cert) }),
            })
        }
        Command::Dim { input } => {
            let (_, action) = load(input, caps)?;
            let AnyAction::Poset(a) = action else {
                return Err(Error::Invalid(
                    "covering dimension is computed for posets only".into(),
                ));
            };
            let report = dimension_equality_check(&a, caps.points)?;
            Ok(Outcome::Report {
                passed: true,
                body: to_value(&report),
            })
        }
        Command::Nerve { space, cover } => {
            let space = parse_space(&read(space)?)?;
            let cover = parse_cover(&read(cover)?, &space)?;
            let k = nerve(&cover)?;
            Ok(Outcome::Report {
                passed: true,
                body: json!({
                    "dimension": k.dim(),
                    "f_vector": k.f_vector(),
                    "complex": complex_to_json(&k),
                }),
            })
        }
        Command::CanonicalCover { complex } => {
            let k = parse_complex(&read(complex)?)?;
            let report = canonical_cover_check(&k)?;
            Ok(Outcome::Report {
                passed: report.passed(),
                body: to_value(&report),
            })
        }
        Command::Pullback { space, cover } => {
            let (any, m) = metric_only(space)?;
            let cover = parse_cover(&read(cover)?, &any)?;
            let pb = pull_back_canonical(&m, &cover)?;
            let report = pb.check(&cover);
            let points: Vec<Value> = (0..m.len())
                .map(|z| {
                    let p = nerve_map(&m, &cover, z)?;
                    let chain: Vec<String> = p.carrier_chain().iter().map(|s| pb.nerve.name(*s)).collect();
                    Ok(json!({ "point": m.point_ids()[z], "coords": to_value(&p)["coords"], "carrier": chain }))
                })
                .collect::<Result<_>>()?;
            let grades: Vec<Value> = pb
                .grades
                .iter()
                .map(|g| {
                    Value::Array(
                        g.iter()
                            .map(|e| crate::io::set_to_json(&m, &format!("st{}", pb.nerve.name(e.simplex)), &e.set))
                            .collect(),
                    )
                })
                .collect();
            Ok(Outcome::Report {
                passed: report.passed(),
                body: json!({ "check": to_value(&report), "grades": grades, "points": points }),
            })
        }
        Command::CoverOfZ {
            input,
            collection,
            k,
            n,
            delta,
        } => {
            let (space, action) = load_metric(input, caps)?;
            let u = parse_cover(&read(collection)?, &space)?;
            let out = cover_of_z(&action, &u, *k, *n, *delta)?;
            Ok(Outcome::Report {
                passed: out.certificate.passed() && out.refinement.passed(),
                body: json!({
                    "certificate": to_value(&out.certificate),
                    "refinement": to_value(&out.refinement),
                    "points": to_value(&out.points),
                    "initial": cover_to_json(action.space(), &out.initial),
                    "cover": cover_to_json(action.space(), &out.cover),
                }),
            })
        }
        Command::P33 {
            input,
            collection,
            k,
            n,
            delta,
        } => {
            let (space, action) = load_metric(input, caps)?;
            let u = parse_cover(&read(collection)?, &space)?;
            let out = proposition_33(&action, &u, *k, *n, *delta, caps.m_cap)?;
            let grades: Vec<Value> = out
                .grades
                .iter()
                .map(|g| {
                    Value::Array(
                        g.iter()
                            .map(|e| crate::io::set_to_json(action.space(), &e.label, &e.set))
                            .collect(),
                    )
                })
                .collect();
            Ok(Outcome::Report {
                passed: out.passed(),
                body: json!({
                    "params": to_value(&out.params),
                    "properties": to_value(&out.properties),
                    "prefix_counts": out.prefix_counts,
                    "stages": to_value(&out.stages),
                    "grades": grades,
                }),
            })
        }
        Command::P32 {
            input,
            collection,
            alpha,
            n,
        } => {
            let (space, action) = load_metric(input, caps)?;
            let u = parse_cover(&read(collection)?, &space)?;
            let alpha = parse_alpha(&read(alpha)?, action.space(), &u)?;
            let out = proposition_32_partial(&action, &u, &alpha, *n, caps.m_cap)?;
            Ok(Outcome::Report {
                passed: out.report.certified(),
                body: json!({
                    "summary": to_value(&out.report),
                    "vf": cover_to_json(action.space(), &out.vf),
                    "beta": cover_to_json(action.space(), &out.beta),
                }),
            })
        }
        Command::Fuzz {
            certifier,
            count,
            save_failures,
        } => {
            let (passed, body, failures) = fuzz(*certifier, *count, config.seed);
            if let Some(dir) = save_failures {
                std::fs::create_dir_all(dir).map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?;
                for (index, instance) in failures {
                    write(&dir.join(format!("failure-{index}.json")), &render(&instance))?;
                }
            }
            Ok(Outcome::Report { passed, body })
        }
        Command::ExportDot {
            complex,
            subdivide,
            space,
            cover,
        } => {
            if let Some(path) = complex {
                let k = parse_complex(&read(path)?)?;
                let text = if *subdivide {
                    barycentric_subdivision(&k)?.to_dot("subdivision")
                } else {
                    k.to_dot("complex")
                };
                return Ok(Outcome::Text(text));
            }
            match (space, cover) {
                (Some(space), Some(cover)) => {
                    let space = parse_space(&read(space)?)?;
                    let cover = parse_cover(&read(cover)?, &space)?;
                    Ok(Outcome::Text(nerve(&cover)?.to_dot("nerve")))
                }
                _ => Err(Error::Invalid("export-dot needs --complex or --space with --cover".into())),
            }
        }
    }
}

fn refine_report<S: Refinable>(
    action: &Action<S>,
    cover: &Cover,
    dim: usize,
    rule: SelectionRule,
    certify: bool,
) -> Result<(bool, Value, Value)> {
    let out = equivariant_refine_with(cover, action, dim, rule)?;
    let space = action.space();
    let mut passed = out.certificate.passed();
    let mut body = json!({
        "selection": to_value(&rule),
        "quotient_points": out.plan.quotient.space.len(),
        "quotient_refinement": cover_to_json(&out.plan.quotient.space, &out.plan.refinement),
        "certificate": to_value(&out.certificate),
    });
    if certify {
        let injective: Vec<String> = (0..space.len())
            .filter(|&z| !out.pi_z_injection_check(z))
            .map(|z| space.point_ids()[z].clone())
            .collect();
        let dominated: Vec<String> = (0..space.len())
            .filter(|&z| !out.multiplicity_dominated(z))
            .map(|z| space.point_ids()[z].clone())
            .collect();
        passed &= injective.is_empty() && dominated.is_empty();
        body["injection_failures"] = json!(injective);
        body["multiplicity_failures"] = json!(dominated);
    }
    let written = cover_to_json(space, &out.cover);
    body["cover"] = written.clone();
    Ok((passed, body, written))
}

/// Outcome of one fuzz instance: whether it passed, a description, and the instance itself.
type Trial = (bool, String, Value);

fn trial(certifier: Certifier, seed: u64, index: u64) -> Trial {
    let mut rng = instance_rng(seed, index);
    match certifier {
        Certifier::RefinePoset => {
            let inst = random_poset_instance(&mut rng, 12);
            let instance = json!({
                "space": poset_to_json(inst.action.space()),
                "group": group_to_json(inst.action.group()),
                "cover": cover_to_json(inst.action.space(), &inst.cover),
            });
            let n = inst.action.space().len();
            let ok = refine_passes(&inst.action, &inst.cover, n);
            (ok, format!("{:?} on {} points", inst.kind, n), instance)
        }
        Certifier::RefineMetric => {
            let inst = random_metric_instance(&mut rng, 12);
            let instance = json!({
                "space": metric_to_json(inst.action.space()),
                "group": group_to_json(inst.action.group()),
                "cover": cover_to_json(inst.action.space(), &inst.cover),
            });
            let n = inst.action.space().len();
            let ok = refine_passes(&inst.action, &inst.cover, n);
            (ok, format!("{:?} on Z{}", inst.kind, n), instance)
        }
        Certifier::P33 => {
            let inst = random_graded_instance(&mut rng);
            let instance = json!({
                "space": metric_to_json(inst.action.space()),
                "group": group_to_json(inst.action.group()),
                "collection": cover_to_json(inst.action.space(), &inst.collection),
                "k": inst.k,
                "n": inst.n,
                "delta": format_rational(&inst.delta),
            });
            let ok = proposition_33(&inst.action, &inst.collection, inst.k, inst.n, inst.delta, DEFAULT_M_CAP)
                .is_ok_and(|r| r.passed());
            (ok, inst.describe(), instance)
        }
        Certifier::CanonicalCover => {
            let k = random_complex(&mut rng, 6);
            let ok = canonical_cover_check(&k).is_ok_and(|r| r.passed());
            (ok, format!("f-vector {:?}", k.f_vector()), complex_to_json(&k))
        }
        Certifier::Pullback => {
            let n = if index.is_multiple_of(2) { 6 } else { 12 };
            let space = FiniteMetricSpace::cycle(n, Rational::from_integer(1)).expect("cycle");
            let cover = random_ball_cover(&mut rng, &space);
            let ok = pull_back_canonical(&space, &cover).is_ok_and(|pb| pb.check(&cover).passed());
            let instance = json!({ "space": metric_to_json(&space), "cover": cover_to_json(&space, &cover) });
            (ok, format!("{} sets on Z{n}", cover.len()), instance)
        }
    }
}

/// Runs `refine` with every checker, including the per-point injection.
pub fn refine_passes<S: Refinable>(action: &Action<S>, cover: &Cover, n: usize) -> bool {
    match equivariant_refine_with(cover, action, n, SelectionRule::First) {
        Ok(out) => {
            out.certificate.passed()
                && (0..action.space().len()).all(|z| out.pi_z_injection_check(z) && out.multiplicity_dominated(z))
        }
        Err(_) => false,
    }
}

/// Runs `count` seeded instances in parallel; results are assembled in index order.
pub fn fuzz(certifier: Certifier, count: usize, seed: u64) -> (bool, Value, Vec<(usize, Value)>) {
    let trials: Vec<Trial> = (0..count as u64)
        .into_par_iter()
        .map(|i| trial(certifier, seed, i))
        .collect();
    let passed = trials.iter().filter(|t| t.0).count();
    let failed: Vec<Value> = trials
        .iter()
        .enumerate()
        .filter(|(_, t)| !t.0)
        .map(|(i, t)| json!({ "index": i, "instance": t.1 }))
        .collect();
    let failures = trials
        .into_iter()
        .enumerate()
        .filter(|(_, t)| !t.0)
        .map(|(i, t)| {
            let instance = json!({ "certifier": to_value(&certifier), "seed": seed, "index": i, "instance": t.2 });
            (i, instance)
        })
        .collect();
    let body = json!({
        "certifier": to_value(&certifier),
        "seed": seed,
        "count": count,
        "passed": passed,
        "pass_rate": format!("{passed}/{count}"),
        "failures": failed,
    });
    (passed == count, body, failures)
}
