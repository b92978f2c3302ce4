//! Command-line front end: ring and ideal parsing, command dispatch, and
//! deterministic JSON/DOT emission.
//!
//! Exit codes: 0 success (mathematical "no"/"unknown" answers are still
//! success and are distinguished in the JSON), 1 IO failure, 2 parse or
//! validation error, 3 resource cap exceeded.

use std::sync::Arc;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use fsplit_core::{
    cartier_contraction, cartier_core, core_map_atlas, core_map_property_checks, f_pure_locus,
    is_f_pure, is_f_pure_along, is_strongly_f_regular, pair_core, splitting_prime, CartierPair,
    CoreReport, Error, FrobeniusLevel, Ideal, PolyRing, PresentedRing, RingHandle,
    SimplicialComplex, TermOrder, DEFAULT_DEGREE_CAP,
};

/// A failed invocation: the process exit code and a diagnostic for stderr.
#[derive(Debug)]
pub struct CliFailure {
    pub code: i32,
    pub message: String,
}

impl CliFailure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        CliFailure {
            code,
            message: message.into(),
        }
    }
}

fn engine_failure(e: Error) -> CliFailure {
    let code = match e {
        Error::DegreeCapExceeded { .. } | Error::VariableBoundExceeded { .. } => 3,
        Error::Internal(_) => 1,
        _ => 2,
    };
    CliFailure::new(code, format!("error: {e}"))
}

#[derive(Parser)]
#[command(
    name = "fsplit",
    about = "Exact Frobenius-splitting calculator for quotients of F_p[x_1..x_n]",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct RingArgs {
    /// Ring description, e.g. "p=2; vars=x,y; I=x*y" (I optional)
    #[arg(long)]
    ring: String,
    /// Total-degree cap (overrides FSPLIT_DEGREE_CAP and the default 512)
    #[arg(long)]
    degree_cap: Option<u64>,
}

#[derive(clap::Args)]
struct LevelArgs {
    /// Largest Frobenius level to compute
    #[arg(long, default_value_t = 4)]
    emax: u32,
    /// Consecutive equal partial intersections required to stop
    #[arg(long, default_value_t = 2)]
    window: u32,
}

#[derive(Subcommand)]
enum Command {
    /// Cartier core of an ideal with certification
    Core {
        #[command(flatten)]
        ring: RingArgs,
        /// Target ideal generators, comma-separated
        #[arg(long)]
        ideal: String,
        #[command(flatten)]
        levels: LevelArgs,
    },
    /// Single level-e contraction of an ideal
    Contraction {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        ideal: String,
        /// Frobenius level e >= 1
        #[arg(short = 'e', long = "level")]
        level: u32,
    },
    /// Global F-purity via the level-one Fedder test
    Fpure {
        #[command(flatten)]
        ring: RingArgs,
    },
    /// Defining ideal of the non-F-pure closed locus
    FpureLocus {
        #[command(flatten)]
        ring: RingArgs,
    },
    /// Splitting test along an element at the irrelevant maximal ideal
    SplitAlong {
        #[command(flatten)]
        ring: RingArgs,
        /// The element c to split along
        #[arg(short = 'c', long = "element")]
        element: String,
        #[arg(long, default_value_t = 4)]
        emax: u32,
    },
    /// Cartier core of the irrelevant maximal ideal
    SplittingPrime {
        #[command(flatten)]
        ring: RingArgs,
        #[command(flatten)]
        levels: LevelArgs,
    },
    /// Strong F-regularity classification (yes / no / unknown)
    Sfr {
        #[command(flatten)]
        ring: RingArgs,
        #[command(flatten)]
        levels: LevelArgs,
    },
    /// Cartier core for the pair (R, a^t)
    PairCore {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        ideal: String,
        /// Pair ideal generators, comma-separated
        #[arg(short = 'a', long = "pair-ideal")]
        pair_ideal: String,
        /// Formal exponent t as a positive rational, e.g. "1" or "2/3"
        #[arg(short = 't', long = "exponent")]
        exponent: String,
        #[command(flatten)]
        levels: LevelArgs,
    },
    /// Core-map atlas of a Stanley-Reisner ring from a facet file
    SrAtlas {
        /// Facet file: one facet per line, vertices comma-separated
        #[arg(long)]
        facets: std::path::PathBuf,
        /// Prime characteristic
        #[arg(long, default_value_t = 2)]
        p: u64,
        #[command(flatten)]
        levels: LevelArgs,
        /// Also write the graph in DOT format to this path
        #[arg(long)]
        dot: Option<std::path::PathBuf>,
        #[arg(long)]
        degree_cap: Option<u64>,
    },
    /// Property suite over the monomial-prime poset, reported per property
    CheckProps {
        #[command(flatten)]
        ring: RingArgs,
        #[command(flatten)]
        levels: LevelArgs,
    },
}

#[derive(Serialize)]
struct RingDesc {
    p: u64,
    vars: Vec<String>,
    ideal: Vec<String>,
}

#[derive(Serialize)]
struct Output {
    ring: RingDesc,
    result: Value,
    certification: String,
    levels_computed: u32,
    warnings: Vec<String>,
}

fn resolve_cap(flag: Option<u64>) -> Result<u64, CliFailure> {
    if let Some(cap) = flag {
        return Ok(cap);
    }
    match std::env::var("FSPLIT_DEGREE_CAP") {
        Ok(text) => text
            .parse()
            .map_err(|_| CliFailure::new(2, format!("error: bad FSPLIT_DEGREE_CAP `{text}`"))),
        Err(_) => Ok(DEFAULT_DEGREE_CAP),
    }
}

fn parse_ring_desc(desc: &str, cap: u64) -> Result<Arc<PresentedRing>, CliFailure> {
    let mut p: Option<u64> = None;
    let mut vars: Option<Vec<String>> = None;
    let mut ideal_text: Option<String> = None;
    for part in desc.split(';') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let Some((key, value)) = part.split_once('=') else {
            return Err(CliFailure::new(
                2,
                format!("error: expected key=value in ring description, got `{part}`"),
            ));
        };
        match key.trim() {
            "p" => {
                p = Some(value.trim().parse().map_err(|_| {
                    CliFailure::new(2, format!("error: bad characteristic `{}`", value.trim()))
                })?)
            }
            "vars" => {
                vars = Some(
                    value
                        .split(',')
                        .map(|v| v.trim().to_string())
                        .filter(|v| !v.is_empty())
                        .collect(),
                )
            }
            "I" => ideal_text = Some(value.trim().to_string()),
            other => {
                return Err(CliFailure::new(
                    2,
                    format!("error: unknown ring description key `{other}`"),
                ))
            }
        }
    }
    let p = p.ok_or_else(|| CliFailure::new(2, "error: ring description needs p=<prime>"))?;
    let vars =
        vars.ok_or_else(|| CliFailure::new(2, "error: ring description needs vars=<names>"))?;
    let refs: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
    let ring = PolyRing::new(p, &refs, TermOrder::GrevLex, cap).map_err(engine_failure)?;
    let gens = match ideal_text {
        None => Vec::new(),
        Some(text) if text.is_empty() || text == "0" => Vec::new(),
        Some(text) => parse_generators(&ring, &text)?,
    };
    PresentedRing::new(&ring, gens).map_err(engine_failure)
}

fn parse_generators(
    ring: &Arc<PolyRing>,
    text: &str,
) -> Result<Vec<fsplit_core::Polynomial>, CliFailure> {
    text.split(',')
        .map(|s| s.trim())
        .filter(|s| !s.is_empty())
        .map(|s| ring.parse(s).map_err(engine_failure))
        .collect()
}

fn parse_ideal_arg(pr: &PresentedRing, text: &str) -> Result<Ideal, CliFailure> {
    let gens = if text.trim().is_empty() || text.trim() == "0" {
        Vec::new()
    } else {
        parse_generators(pr.ambient(), text)?
    };
    Ideal::new(pr.ambient(), gens).map_err(engine_failure)
}

fn parse_rational(text: &str) -> Result<(u64, u64), CliFailure> {
    let bad = || CliFailure::new(2, format!("error: bad rational `{text}`"));
    match text.split_once('/') {
        None => {
            let n = text.trim().parse().map_err(|_| bad())?;
            Ok((n, 1))
        }
        Some((num, den)) => {
            let n = num.trim().parse().map_err(|_| bad())?;
            let d = den.trim().parse().map_err(|_| bad())?;
            Ok((n, d))
        }
    }
}

fn printed(ideal: &Ideal) -> Result<Vec<String>, CliFailure> {
    ideal.printed_basis().map_err(engine_failure)
}

fn ring_desc(pr: &PresentedRing) -> Result<RingDesc, CliFailure> {
    Ok(RingDesc {
        p: pr.prime(),
        vars: pr.ambient().variables().to_vec(),
        ideal: printed(pr.defining_ideal())?,
    })
}

fn radical_flag(core: &Ideal) -> Value {
    match core.monomial_generators() {
        Some(mons) => json!(mons.iter().all(|m| m.is_squarefree())),
        None => Value::Null,
    }
}

fn report_result(report: &CoreReport) -> Result<Value, CliFailure> {
    let contractions: Result<Vec<Value>, CliFailure> = report
        .contractions
        .iter()
        .map(|(e, a)| Ok(json!({"e": e, "ideal": printed(a)?})))
        .collect();
    Ok(json!({
        "core": printed(&report.core)?,
        "contractions": contractions?,
        "stabilized_at": report.stabilized_at,
        "f_pure": report.f_pure,
        "radical": radical_flag(&report.core),
    }))
}

fn emit(output: &Output) -> Result<String, CliFailure> {
    serde_json::to_string_pretty(output)
        .map_err(|e| CliFailure::new(1, format!("error: JSON emission failed: {e}")))
}

fn core_like_output(pr: &PresentedRing, report: &CoreReport) -> Result<String, CliFailure> {
    emit(&Output {
        ring: ring_desc(pr)?,
        result: report_result(report)?,
        certification: report.certification.to_string(),
        levels_computed: report.levels_computed(),
        warnings: report.warnings.clone(),
    })
}

fn atlas_label(label: &str) -> String {
    if label.is_empty() {
        "0".to_string()
    } else {
        label.to_string()
    }
}

fn dot_graph(atlas: &fsplit_core::AtlasGraph) -> String {
    let mut lines = vec!["digraph core_map {".to_string()];
    let mut nodes: Vec<(String, bool)> = atlas
        .nodes
        .iter()
        .map(|n| (atlas_label(&n.prime.label()), n.fixed))
        .collect();
    nodes.sort();
    for (label, fixed) in nodes {
        if fixed {
            lines.push(format!("    \"{label}\" [shape=doublecircle];"));
        } else {
            lines.push(format!("    \"{label}\";"));
        }
    }
    let mut edges: Vec<String> = atlas
        .nodes
        .iter()
        .map(|n| {
            format!(
                "    \"{}\" -> \"{}\";",
                atlas_label(&n.prime.label()),
                atlas_label(&n.core.label())
            )
        })
        .collect();
    edges.sort();
    lines.extend(edges);
    lines.push("}".to_string());
    lines.join("\n") + "\n"
}

/// Runs one invocation and returns the JSON for stdout.
pub fn run<I, S>(args: I) -> Result<String, CliFailure>
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(|e| {
        // clap already formats help/version nicely; keep its exit semantics
        let code = if e.use_stderr() { 2 } else { 0 };
        CliFailure::new(code, e.to_string())
    })?;

    match cli.command {
        Command::Core {
            ring,
            ideal,
            levels,
        } => {
            let pr = parse_ring_desc(&ring.ring, resolve_cap(ring.degree_cap)?)?;
            let j = parse_ideal_arg(&pr, &ideal)?;
            let report =
                cartier_core(&pr, &j, levels.emax, levels.window).map_err(engine_failure)?;
            core_like_output(&pr, &report)
        }
        Command::Contraction { ring, ideal, level } => {
            let pr = parse_ring_desc(&ring.ring, resolve_cap(ring.degree_cap)?)?;
            let j = parse_ideal_arg(&pr, &ideal)?;
            let lvl = FrobeniusLevel::new(level).map_err(engine_failure)?;
            let a = cartier_contraction(&pr, &j, lvl).map_err(engine_failure)?;
            emit(&Output {
                ring: ring_desc(&pr)?,
                result: json!({"contraction": printed(&a)?, "e": level}),
                certification: "exact".into(),
                levels_computed: level,
                warnings: vec![],
            })
        }
        Command::Fpure { ring } => {
            let pr = parse_ring_desc(&ring.ring, resolve_cap(ring.degree_cap)?)?;
            let pure = is_f_pure(&pr).map_err(engine_failure)?;
            emit(&Output {
                ring: ring_desc(&pr)?,
                result: json!({"f_pure": pure}),
                certification: "exact".into(),
                levels_computed: 1,
                warnings: vec![],
            })
        }
        Command::FpureLocus { ring } => {
            let pr = parse_ring_desc(&ring.ring, resolve_cap(ring.degree_cap)?)?;
            let locus = f_pure_locus(&pr).map_err(engine_failure)?;
            emit(&Output {
                ring: ring_desc(&pr)?,
                result: json!({"locus": printed(&locus)?}),
                certification: "exact".into(),
                levels_computed: 1,
                warnings: vec![],
            })
        }
        Command::SplitAlong {
            ring,
            element,
            emax,
        } => {
            let pr = parse_ring_desc(&ring.ring, resolve_cap(ring.degree_cap)?)?;
            let c = pr.parse(&element).map_err(engine_failure)?;
            let split = is_f_pure_along(&pr, &c, emax).map_err(engine_failure)?;
            let warnings = if split {
                vec![]
            } else {
                vec![format!(
                    "negative answer is qualified: levels up to {emax} checked"
                )]
            };
            emit(&Output {
                ring: ring_desc(&pr)?,
                result: json!({"element": element, "f_pure_along": split}),
                certification: if split {
                    "exact".into()
                } else {
                    format!("up_to_{emax}")
                },
                levels_computed: emax,
                warnings,
            })
        }
        Command::SplittingPrime { ring, levels } => {
            let pr = parse_ring_desc(&ring.ring, resolve_cap(ring.degree_cap)?)?;
            let report =
                splitting_prime(&pr, levels.emax, levels.window).map_err(engine_failure)?;
            core_like_output(&pr, &report)
        }
        Command::Sfr { ring, levels } => {
            let pr = parse_ring_desc(&ring.ring, resolve_cap(ring.degree_cap)?)?;
            let (verdict, report) =
                is_strongly_f_regular(&pr, levels.emax, levels.window).map_err(engine_failure)?;
            emit(&Output {
                ring: ring_desc(&pr)?,
                result: json!({
                    "splitting_prime": printed(&report.core)?,
                    "strongly_f_regular": verdict.to_string(),
                }),
                certification: report.certification.to_string(),
                levels_computed: report.levels_computed(),
                warnings: report.warnings.clone(),
            })
        }
        Command::PairCore {
            ring,
            ideal,
            pair_ideal,
            exponent,
            levels,
        } => {
            let pr = parse_ring_desc(&ring.ring, resolve_cap(ring.degree_cap)?)?;
            let j = parse_ideal_arg(&pr, &ideal)?;
            let a = parse_ideal_arg(&pr, &pair_ideal)?;
            let (num, den) = parse_rational(&exponent)?;
            let pair = CartierPair::new(&pr, a, num, den).map_err(engine_failure)?;
            let report =
                pair_core(&pr, &j, &pair, levels.emax, levels.window).map_err(engine_failure)?;
            core_like_output(&pr, &report)
        }
        Command::SrAtlas {
            facets,
            p,
            levels,
            dot,
            degree_cap,
        } => {
            let text = std::fs::read_to_string(&facets).map_err(|e| {
                CliFailure::new(1, format!("error: cannot read {}: {e}", facets.display()))
            })?;
            let complex = parse_facet_file(&text)?;
            let cap = resolve_cap(degree_cap)?;
            let pr = complex.presented_ring(p, cap).map_err(engine_failure)?;
            let atlas = core_map_atlas(&pr, levels.emax, levels.window).map_err(engine_failure)?;
            if let Some(path) = dot {
                std::fs::write(&path, dot_graph(&atlas)).map_err(|e| {
                    CliFailure::new(1, format!("error: cannot write {}: {e}", path.display()))
                })?;
            }
            let nodes: Vec<Value> = atlas
                .nodes
                .iter()
                .map(|n| {
                    json!({
                        "core": atlas_label(&n.core.label()),
                        "fixed": n.fixed,
                        "prime": atlas_label(&n.prime.label()),
                    })
                })
                .collect();
            let image: Vec<String> = atlas
                .image
                .iter()
                .map(|p| atlas_label(&p.label()))
                .collect();
            let minimal: Vec<String> = atlas
                .minimal_primes
                .iter()
                .map(|p| atlas_label(&p.label()))
                .collect();
            emit(&Output {
                ring: ring_desc(&pr)?,
                result: json!({
                    "image": image,
                    "image_size": image.len(),
                    "minimal_primes": minimal,
                    "nodes": nodes,
                }),
                certification: "closed_form_exact".into(),
                levels_computed: levels.emax,
                warnings: vec![],
            })
        }
        Command::CheckProps { ring, levels } => {
            let pr = parse_ring_desc(&ring.ring, resolve_cap(ring.degree_cap)?)?;
            let checks = core_map_property_checks(&pr, levels.emax, levels.window)
                .map_err(engine_failure)?;
            let all_pass = checks.iter().all(|c| c.pass);
            let properties: Vec<Value> = checks
                .iter()
                .map(|c| json!({"detail": c.detail, "name": c.name, "pass": c.pass}))
                .collect();
            emit(&Output {
                ring: ring_desc(&pr)?,
                result: json!({"all_pass": all_pass, "properties": properties}),
                certification: "exact".into(),
                levels_computed: levels.emax,
                warnings: vec![],
            })
        }
    }
}

fn parse_facet_file(text: &str) -> Result<SimplicialComplex, CliFailure> {
    let mut facets: Vec<Vec<&str>> = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let facet: Vec<&str> = line
            .split(',')
            .map(|v| v.trim())
            .filter(|v| !v.is_empty())
            .collect();
        if facet.is_empty() {
            continue;
        }
        facets.push(facet);
    }
    if facets.is_empty() {
        return Err(CliFailure::new(2, "error: facet file declares no facets"));
    }
    SimplicialComplex::from_named_facets(&facets, &[]).map_err(engine_failure)
}
