//! The `pq` command-line harness: runs computations and verifiers and emits
//! canonical JSON reports.

pub mod cache;
pub mod config;
pub mod suite;

use std::time::Instant;

use pq_core::catalog::{build, listing, resolve_annotation, CatalogGroup};
use pq_core::complex::{homology, order_complex};
use pq_core::lie::{run_verifier, Instance, Verdict, VerificationReport, VERIFIERS};
use pq_core::poset::{
    all_p_subgroups_poset, bouc_poset, core_reduce, euler_chain_count, euler_mobius, quillen_poset,
    PosetKind, SubgroupPoset,
};
use pq_core::Limits;
use serde::Serialize;
use serde_json::{json, Value};

pub use cache::Cache;
pub use config::{Command, RunConfig};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] pq_core::Error),
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// The rendered report and the process exit code.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub json: String,
    pub exit_code: i32,
}

/// The top-level report. Keys serialize in this (sorted) order.
#[derive(Serialize)]
struct Envelope<'a> {
    config: &'a RunConfig,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
    result: Value,
    timing_ms: u64,
    tool_version: &'static str,
    verdict: &'static str,
}

/// Serializes with object keys sorted, so equal values give equal bytes.
pub fn canonical_json<T: Serialize>(value: &T) -> String {
    // serde_json's map is ordered, so going through `Value` sorts every key.
    let v = serde_json::to_value(value).expect("report values serialize");
    serde_json::to_string(&v).expect("values serialize")
}

pub(crate) struct Computed {
    pub(crate) result: Value,
    pub(crate) verdict: Verdict,
}

/// Runs one configured command. Input and capacity errors become exit code
/// 2 with an `error` field; theorem-check failures exit with 1.
pub fn run(config: &RunConfig) -> Outcome {
    let start = Instant::now();
    let outcome = config.validate().and_then(|()| dispatch(config));
    let timing_ms = if config.no_timing { 0 } else { start.elapsed().as_millis() as u64 };
    let (result, verdict, error, exit_code) = match outcome {
        Ok(c) => {
            let (v, code) = match c.verdict {
                Verdict::Pass => ("pass", 0),
                Verdict::Skipped => ("skipped", 0),
                Verdict::Fail => ("fail", 1),
            };
            (c.result, v, None, code)
        }
        Err(e) => (Value::Null, "error", Some(e.to_string()), 2),
    };
    let env = Envelope { config, error, result, timing_ms, tool_version: TOOL_VERSION, verdict };
    Outcome { json: canonical_json(&env), exit_code }
}

fn dispatch(config: &RunConfig) -> Result<Computed, CliError> {
    let pass = |result| Ok(Computed { result, verdict: Verdict::Pass });
    match config.command {
        Command::List => pass(json!({ "catalog": listing(), "verifiers": VERIFIERS })),
        Command::Group => pass(group_summary(&build(config.group(), &config.limits)?)),
        Command::Poset | Command::Complex | Command::Homology => pass(cached(config)?),
        Command::Verify => {
            let inst = instance(config)?;
            let report = run_verifier(config.verifier.as_deref().unwrap_or_default(), &inst)?;
            Ok(Computed { verdict: report.verdict, result: report_value(report, config.no_timing) })
        }
        Command::Suite => suite::run_suite(config),
    }
}

pub(crate) fn report_value(mut report: VerificationReport, no_timing: bool) -> Value {
    if no_timing {
        report.timing_ms = 0;
    }
    serde_json::to_value(&report).expect("reports serialize")
}

/// Builds the verifier instance, resolving `--H` and `--Gdf`.
pub fn instance(config: &RunConfig) -> Result<Instance, CliError> {
    let g = build(config.group(), &config.limits)?;
    let mut inst = Instance::new(g.clone(), config.p.unwrap_or(2), config.limits);
    inst.r = config.r;
    if let Some(h) = &config.h {
        inst.h = Some(resolve_annotation(&g, h, &config.limits)?);
    }
    if let Some(gdf) = &config.gdf {
        inst.gdf = Some(resolve_annotation(&g, gdf, &config.limits)?.group);
    }
    Ok(inst)
}

fn group_summary(g: &CatalogGroup) -> Value {
    let designated: Vec<Value> = g
        .designated
        .iter()
        .map(|t| json!({ "name": t.name, "order": t.group.order(), "tags": t.tags.names() }))
        .collect();
    json!({
        "spec": g.spec.canonical(),
        "order": g.group.order(),
        "degree": g.degree(),
        "tags": g.tags.names(),
        "designated": designated,
        "gdf_order": g.gdf.as_ref().map(|h| h.order()),
    })
}

fn build_poset(g: &CatalogGroup, p: u64, kind: PosetKind, limits: &Limits) -> Result<SubgroupPoset, CliError> {
    Ok(match kind {
        PosetKind::Quillen => quillen_poset(&g.group, p, limits)?,
        PosetKind::Brown => all_p_subgroups_poset(&g.group, p, limits)?,
        PosetKind::Bouc => bouc_poset(&g.group, p, limits)?,
    })
}

/// Cache key: canonical spec, operation, prime, poset kind and caps.
pub fn cache_key(config: &RunConfig) -> Result<String, CliError> {
    let spec = pq_core::catalog::GroupSpec::parse(config.group())?.canonical();
    let l = &config.limits;
    let kind = serde_json::to_string(&config.kind()).expect("kind serializes");
    let caps = format!("{},{},{}", l.elements, l.poset, l.simplices);
    let op = serde_json::to_string(&config.command).expect("command serializes");
    Ok(Cache::key(&[TOOL_VERSION, &spec, &op, &config.p.unwrap_or(0).to_string(), &kind, &caps]))
}

/// Poset, complex and homology summaries go through the cache.
fn cached(config: &RunConfig) -> Result<Value, CliError> {
    let cache = Cache::new(Cache::default_dir(config.cache_dir.as_deref()));
    let key = cache_key(config)?;
    let (payload, _) = cache.get_or_put(&key, || compute_object(config).map(|v| canonical_json(&v)))?;
    Ok(serde_json::from_str(&payload).expect("cache payloads are validated JSON"))
}

fn compute_object(config: &RunConfig) -> Result<Value, CliError> {
    let lim = &config.limits;
    let g = build(config.group(), lim)?;
    let p = config.p.unwrap_or(2);
    pq_core::group::check_prime(p)?;
    let x = build_poset(&g, p, config.kind(), lim)?;
    Ok(match config.command {
        Command::Poset => json!({
            "kind": config.kind(),
            "members": x.len(),
            "relations": x.poset.relation_count(),
            "height": x.poset.height(),
            "components": x.poset.component_count(),
            "chi_mobius": euler_mobius(&x.poset),
            "chi_chain": euler_chain_count(&x.poset),
            "chi_orbit": x.euler_orbit_formula()?,
            "core_size": core_reduce(&x.poset).0.len(),
        }),
        Command::Complex => {
            let k = order_complex(&x.poset, lim)?;
            json!({ "kind": config.kind(), "dim": k.dim(), "face_counts": k.face_counts(), "euler": k.euler() })
        }
        _ => {
            let k = order_complex(&x.poset, lim)?;
            serde_json::to_value(homology(&k, lim)?).expect("profiles serialize")
        }
    })
}
