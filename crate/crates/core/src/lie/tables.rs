//! Reference rows for centralisers of order-p automorphisms. Only the rank
//! columns are used computationally; the family names are for display.

use serde::Serialize;

/// How the centraliser rank follows from the rank `r` of `H`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RankRule {
    /// `[(r + 1) / 2]`, i.e. `[n/2]` for `A_{n-1}`.
    HalfOfN,
    MinusOne,
    /// The centraliser has the same rank as `H`.
    Same,
    Fixed(usize),
}

impl RankRule {
    pub fn apply(self, r: usize) -> usize {
        match self {
            RankRule::HalfOfN => r.div_ceil(2),
            RankRule::MinusOne => r.saturating_sub(1),
            RankRule::Same => r,
            RankRule::Fixed(k) => k,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    /// 2: field automorphisms of twisted groups; 3: graph and graph-field.
    pub table: u8,
    pub p: u64,
    /// Untwisted family letter plus twist, e.g. `"A"`, `"2A"`, `"D"`.
    pub family: &'static str,
    pub h: &'static str,
    pub kind: &'static str,
    pub centralizer: &'static str,
    pub rank: RankRule,
}

const fn row(
    table: u8,
    p: u64,
    family: &'static str,
    h: &'static str,
    kind: &'static str,
    centralizer: &'static str,
    rank: RankRule,
) -> TableRow {
    TableRow { table, p, family, h, kind, centralizer, rank }
}

pub const ROWS: &[TableRow] = &[
    row(2, 2, "2A", "2A_{n-1}(q)", "field", "B_{[n/2]}(q)", RankRule::Same),
    row(2, 2, "2D", "2D_n(q)", "field", "B_{n-1}(q)", RankRule::Same),
    row(2, 2, "2E", "2E_6(q)", "field", "F_4(q)", RankRule::Same),
    row(2, 3, "3D", "3D_4(q)", "field", "G_2(q)", RankRule::Same),
    row(3, 2, "B", "B_2(2^(2a+1))", "graph", "2B_2(2^(2a+1))", RankRule::Fixed(1)),
    row(3, 2, "F", "F_4(2^(2a+1))", "graph", "2F_4(2^(2a+1))", RankRule::Fixed(2)),
    row(3, 2, "A", "A_{n-1}(2^a), n>=3", "graph", "B_{[n/2]}(2^a)", RankRule::HalfOfN),
    row(3, 2, "A", "A_{n-1}(2^(2a)), n>=3", "graph-field", "2A_{n-1}(2^a)", RankRule::HalfOfN),
    row(3, 2, "D", "D_n(2^a), n>=4", "graph", "B_{n-1}(2^a)", RankRule::MinusOne),
    row(3, 2, "D", "D_n(2^(2a)), n>=4", "graph-field", "2D_n(2^a)", RankRule::MinusOne),
    row(3, 3, "D", "D_4(3^a)", "graph", "G_2(3^a)", RankRule::Fixed(2)),
    row(3, 3, "D", "D_4(3^(3a))", "graph-field", "3D_4(3^a)", RankRule::Fixed(2)),
    row(3, 2, "E", "E_6(2^a)", "graph", "F_4(2^a)", RankRule::Fixed(4)),
    row(3, 2, "E", "E_6(2^(2a))", "graph-field", "2E_6(2^a)", RankRule::Fixed(4)),
];

/// Rows for characteristic `p` and family (e.g. `"A"`, `"2A"`, `"D"`),
/// optionally restricted to one automorphism kind.
pub fn table_reference(p: u64, family: &str, kind: Option<&str>) -> Vec<&'static TableRow> {
    ROWS.iter()
        .filter(|r| r.p == p && r.family == family && kind.is_none_or(|k| r.kind == k))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookups() {
        let a = table_reference(2, "A", Some("graph"));
        assert_eq!(a.len(), 1);
        assert_eq!(a[0].centralizer, "B_{[n/2]}(2^a)");
        // A_2: H has rank 2, the centraliser rank 1.
        assert_eq!(a[0].rank.apply(2), 1);
        assert_eq!(a[0].rank.apply(3), 2);
        assert_eq!(table_reference(3, "D", Some("graph"))[0].centralizer, "G_2(3^a)");
        assert_eq!(table_reference(2, "2A", None)[0].centralizer, "B_{[n/2]}(q)");
        assert!(table_reference(5, "A", None).is_empty());
    }
}
