//! The fixed verification suite.

use pq_core::catalog::build;
use pq_core::lie::{run_verifier, Instance, Verdict};
use serde_json::{json, Value};

use crate::{report_value, CliError, Computed, RunConfig};

/// `(verifier, group, p, r, slow)`.
pub const JOBS: &[(&str, &str, u64, Option<u64>, bool)] = &[
    ("euler", "Alt(6)", 3, None, false),
    ("euler", "PSL(2,9)", 5, None, false),
    ("euler", "Sym(6)", 5, None, false),
    ("euler", "PGL(2,9)", 5, None, false),
    ("euler", "PGammaL(2,9):sub(M10)", 5, None, false),
    ("euler", "PGammaL(2,9)", 5, None, false),
    ("bouc-euler", "PSL(2,9)", 2, None, false),
    ("bouc-euler", "Sym(6)", 2, None, false),
    ("bouc-euler", "PGL(2,9)", 2, None, false),
    ("bouc-euler", "PGammaL(2,9):sub(M10)", 2, None, false),
    ("bouc-euler", "PGammaL(2,9)", 2, None, false),
    ("solomon-tits", "PSL(2,9)", 3, None, false),
    ("solomon-tits", "PSL(3,2)", 2, None, false),
    ("solomon-tits", "PSL(3,3)", 3, None, false),
    ("solomon-tits", "Sym(6)", 2, None, false),
    ("field-case", "PSigmaL(2,4)", 2, None, false),
    ("spherical-bp", "PSigmaL(2,4)", 2, None, false),
    ("field-case", "PSigmaL(2,9)", 3, None, false),
    ("no-field-case", "PSL(3,2):graph", 2, None, false),
    ("euler-prediction", "Sym(5)", 2, None, false),
    ("euler-prediction", "PSigmaL(2,9)", 3, None, false),
    ("euler-prediction", "PSL(3,2):graph", 2, None, false),
    ("cross-characteristic", "Sym(6)", 3, Some(2), false),
    ("cross-characteristic", "Sym(6)", 5, Some(2), false),
    ("cross-characteristic", "PSL(3,2)", 3, Some(2), false),
    ("mixed-poset", "Sym(5)", 2, None, false),
    ("mixed-poset", "Sym(6)", 2, None, false),
    ("mixed-poset", "PSigmaL(2,4)", 2, None, false),
    ("cohen-macaulay", "PSL(3,2)", 2, None, false),
    ("cohen-macaulay", "PSL(2,9)", 3, None, false),
    ("field-case", "PSigmaL(2,16)", 2, None, true),
    ("euler", "PSigmaL(2,16)", 2, None, true),
    ("main", "PSL(3,4):frob(1):graph", 2, None, true),
    ("euler-prediction", "PSL(3,4):frob(1):graph", 2, None, true),
];

pub(crate) fn run_suite(config: &RunConfig) -> Result<Computed, CliError> {
    let mut reports: Vec<Value> = Vec::new();
    let mut verdict = Verdict::Pass;
    for &(id, spec, p, r, slow) in JOBS {
        if slow && !config.slow {
            continue;
        }
        let g = build(spec, &config.limits)?;
        let mut inst = Instance::new(g, p, config.limits);
        inst.r = r;
        let report = run_verifier(id, &inst)?;
        if report.verdict == Verdict::Fail {
            verdict = Verdict::Fail;
        }
        reports.push(report_value(report, config.no_timing));
    }
    Ok(Computed { result: json!({ "reports": reports }), verdict })
}
