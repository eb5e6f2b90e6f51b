//! Concrete groups: symmetric and alternating groups, classical groups over
//! small fields acting on projective geometry, and their extensions by
//! field and graph automorphisms.

mod build;
pub mod field;
pub mod geometry;
mod spec;

pub use build::{
    build_group, family_order, named_subgroup, resolve_annotation, CatalogGroup, CatalogTags,
    LieTag, TaggedSubgroup, MAX_DEGREE,
};
pub use field::{Field, FieldElement};
pub use spec::{Base, Ext, GroupSpec, MatrixFamily};

use serde::Serialize;

use crate::{Limits, Result};

/// Parses and builds in one step.
pub fn build(text: &str, limits: &Limits) -> Result<CatalogGroup> {
    build_group(&GroupSpec::parse(text)?, limits)
}

/// Where a reference number comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Paper,
    DerivedOracle,
}

#[derive(Clone, Debug, Serialize)]
pub struct Golden {
    pub quantity: &'static str,
    pub p: u64,
    pub value: i64,
    pub provenance: Provenance,
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub spec: &'static str,
    pub tags: Vec<&'static str>,
    pub golden: Vec<Golden>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub refusal: Option<&'static str>,
}

fn g(quantity: &'static str, p: u64, value: i64, provenance: Provenance) -> Golden {
    Golden { quantity, p, value, provenance }
}

/// The catalog listing with known reference values.
pub fn listing() -> Vec<CatalogEntry> {
    use Provenance::*;
    let alt6_family = |spec: &'static str, tags: Vec<&'static str>, b2: i64| CatalogEntry {
        spec,
        tags,
        golden: vec![g("chi(A_p)", 5, 35, Paper), g("chi(B_p)", 2, b2, Paper)],
        refusal: None,
    };
    let mut out = vec![
        CatalogEntry {
            spec: "Alt(6)",
            tags: vec!["A1(9)"],
            golden: vec![g("chi(A_p)", 3, 9, Paper), g("chi(A_p)", 5, 35, Paper), g("chi(B_p)", 2, -16, Paper)],
            refusal: None,
        },
        alt6_family("PSL(2,9)", vec!["A1(9)"], -16),
        alt6_family("Sym(6)", vec!["C2(2)"], -16),
        alt6_family("PGL(2,9)", vec![], -160),
        alt6_family("PGammaL(2,9):sub(M10)", vec![], -16),
        alt6_family("PGammaL(2,9)", vec![], -160),
        CatalogEntry {
            spec: "PSigmaL(2,4)",
            tags: vec![],
            golden: vec![g("rank H_1(A_p)", 2, 16, Paper), g("chi(A_p)", 2, -16, DerivedOracle)],
            refusal: None,
        },
        CatalogEntry {
            spec: "PSigmaL(2,16)",
            tags: vec![],
            golden: vec![g("rank H_1(A_p)", 2, 256, Paper)],
            refusal: None,
        },
        CatalogEntry {
            spec: "PSL(3,2)",
            tags: vec!["A2(2)", "A1(7)"],
            golden: vec![g("rank H_1(B_p)", 2, 8, DerivedOracle), g("chi(A_p)", 2, -8, DerivedOracle)],
            refusal: None,
        },
        CatalogEntry {
            spec: "PSL(3,3)",
            tags: vec!["A2(3)"],
            golden: vec![g("rank H_1(B_p)", 3, 27, DerivedOracle)],
            refusal: None,
        },
        CatalogEntry {
            spec: "PSL(3,2):graph",
            tags: vec![],
            golden: vec![g("chi(A_p)", 2, -64, DerivedOracle)],
            refusal: None,
        },
        CatalogEntry { spec: "PSL(3,4):frob(1):graph", tags: vec![], golden: vec![], refusal: None },
        CatalogEntry {
            spec: "2F4(2)",
            tags: vec!["^2F4(2)"],
            golden: vec![g("rank H_3(A_p)", 2, 4096, Paper)],
            refusal: Some("beyond element cap (order 35942400 in a permutation action of degree 1755); 2^12 spheres predicted"),
        },
    ];
    out.sort_by_key(|e| e.spec);
    out
}
