//! SCNL_p detection, Lie rank, the field/graph/centraliser classification of
//! outer elementary abelian subgroups, and theorem verifiers.

mod report;
mod tables;
mod verify;

pub use report::{Quantity, Verdict, VerificationReport};
pub use tables::{table_reference, RankRule, TableRow, ROWS};
pub use verify::{euler_prediction, run_verifier, Instance, VERIFIERS};

use serde::Serialize;

use crate::catalog::{CatalogGroup, LieTag, TaggedSubgroup};
use crate::complex::{homology, order_complex, SimplicialComplex};
use crate::group::{
    centralizer, check_prime, conjugate, is_normal, is_self_centralising, normalizes, p_core,
    p_part, subgroup_conjugacy_orbits, GroupHandle,
};
use crate::poset::{bouc_poset, f_sets, fixed_point_subposet, SubgroupPoset};
use crate::{Error, Limits, Result};

/// Element count of the longest chain in `B_p(k)`, checked against `tag`
/// when it is a characteristic-`p` tag.
pub fn lie_rank(k: &GroupHandle, p: u64, tag: Option<&LieTag>, limits: &Limits) -> Result<usize> {
    check_prime(p)?;
    let n = bouc_poset(k, p, limits)?.poset.height();
    match tag {
        Some(t) if t.characteristic == p && t.lie_rank != n => {
            Err(Error::TagMismatch { computed: n, tagged: t.lie_rank })
        }
        _ => Ok(n),
    }
}

/// The unique tagged normal self-centralising subgroup of Lie type in
/// characteristic `p`, among the catalog's candidates.
pub fn find_scnl(g: &CatalogGroup, p: u64) -> Result<TaggedSubgroup> {
    check_prime(p)?;
    let mut found: Vec<TaggedSubgroup> = g
        .candidates()
        .into_iter()
        .filter(|c| c.tags.for_characteristic(p).is_some())
        .filter(|c| is_normal(&g.group, &c.group) && is_self_centralising(&g.group, &c.group))
        .collect();
    found.dedup_by(|a, b| a.group == b.group);
    match found.len() {
        0 => Err(Error::NoTaggedCandidate { p }),
        1 => Ok(found.pop().unwrap()),
        _ => Err(Error::MultipleCandidates { p }),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Bucket {
    F,
    G,
    C,
}

/// One `G`-class of order-p members of `F_G(H)`.
#[derive(Clone, Debug, Serialize)]
pub struct FClass {
    #[serde(skip)]
    pub representative: GroupHandle,
    pub generator: String,
    pub orbit_size: usize,
    pub normalizer_order: usize,
    pub centralizer_order: usize,
    pub centralizer_p_part: u64,
    pub bucket: Bucket,
    /// Chain length of `B_p(C_H(E))`, for buckets f and g.
    pub m_e: Option<usize>,
    /// For bucket g: `m_e` if `E` commutes with some member of `F_f`, else `m_e - 1`.
    pub m_e_star: Option<usize>,
    pub commutes_with_ff: Option<bool>,
    /// The `G_df` form of the commuting test.
    pub gdf_outer_element: Option<bool>,
    /// Centraliser rank expected from the reference tables, when a row applies.
    pub table_rank: Option<usize>,
    /// For bucket c: whether `B_p(H)^E` is acyclic.
    pub fixed_acyclic: Option<bool>,
}

/// A class of `F_G(H)` of rank at least two, kept out of the buckets.
#[derive(Clone, Debug, Serialize)]
pub struct HigherRankClass {
    #[serde(skip)]
    pub representative: GroupHandle,
    pub generators: Vec<String>,
    pub orbit_size: usize,
    pub rank: usize,
    pub centralizer_p_core_trivial: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct FClassification {
    pub p: u64,
    pub lie_rank: usize,
    pub h_order: usize,
    pub h_p_part: u64,
    pub classes: Vec<FClass>,
    pub higher_rank: Vec<HigherRankClass>,
    /// Failed spot checks and disagreements between the two commuting tests.
    pub notes: Vec<String>,
}

impl FClassification {
    pub fn bucket(&self, b: Bucket) -> impl Iterator<Item = &FClass> {
        self.classes.iter().filter(move |c| c.bucket == b)
    }

    pub fn has(&self, b: Bucket) -> bool {
        self.bucket(b).next().is_some()
    }

    /// `sum over F_f/G of [G:N_G(E)] |C_H(E)|_p - |H|_p`.
    pub fn field_kernel_rank(&self) -> i64 {
        self.bucket(Bucket::F).map(|c| c.orbit_size as i64 * c.centralizer_p_part as i64).sum::<i64>()
            - self.h_p_part as i64
    }
}

fn log_p(mut n: usize, p: u64) -> usize {
    let mut r = 0;
    while n > 1 {
        n /= p as usize;
        r += 1;
    }
    r
}

fn family_key(tag: &LieTag) -> String {
    if tag.twist > 1 {
        format!("{}{}", tag.twist, tag.family)
    } else {
        tag.family.clone()
    }
}

/// `(bucket, m_E)` by the rank criterion.
fn bucket_of(h: &GroupHandle, e: &GroupHandle, p: u64, n: usize, limits: &Limits) -> Result<(Bucket, Option<usize>)> {
    let c = centralizer(h, e);
    if !p_core(&c, p).is_trivial() {
        return Ok((Bucket::C, None));
    }
    let m = bouc_poset(&c, p, limits)?.poset.height();
    Ok((if m == n { Bucket::F } else { Bucket::G }, Some(m)))
}

/// Classifies the `G`-classes of `F_G(H)`. `H` must be normal in `G`.
pub fn classify_f(
    g: &GroupHandle,
    h: &GroupHandle,
    p: u64,
    tag: Option<&LieTag>,
    gdf: Option<&GroupHandle>,
    limits: &Limits,
) -> Result<FClassification> {
    let n = lie_rank(h, p, tag, limits)?;
    let (f, _) = f_sets(g, h, p, limits)?;
    let orbits = subgroup_conjugacy_orbits(g, &f.members)?;
    let amb = g.ambient();
    let b_h = bouc_poset(h, p, limits)?;
    let table = tag.map(|t| tables::table_reference(p, &family_key(t), None)).unwrap_or_default();
    let mut out = FClassification {
        p,
        lie_rank: n,
        h_order: h.order(),
        h_p_part: p_part(h.order() as u64, p),
        classes: Vec::new(),
        higher_rank: Vec::new(),
        notes: Vec::new(),
    };
    let mut ff_members: Vec<&GroupHandle> = Vec::new();
    for orbit in &orbits {
        let e = &f.members[orbit.representative];
        let rank = log_p(e.order(), p);
        if rank > 1 {
            out.higher_rank.push(HigherRankClass {
                representative: e.clone(),
                generators: e.generators().iter().map(|&x| amb.permutation(x).to_string()).collect(),
                orbit_size: orbit.size(),
                rank,
                centralizer_p_core_trivial: p_core(&centralizer(h, e), p).is_trivial(),
            });
            continue;
        }
        let c = centralizer(h, e);
        let (bucket, m_e) = bucket_of(h, e, p, n, limits)?;
        // Spot check: a conjugate lands in the same bucket.
        if let Some(&x) = g.generators().iter().find(|&&x| !normalizes(e, x)) {
            if bucket_of(h, &conjugate(e, x), p, n, limits)? != (bucket, m_e) {
                out.notes.push(format!("bucket of {} is not conjugation invariant", amb.permutation(e.generators()[0])));
            }
        }
        if bucket == Bucket::F {
            ff_members.extend(orbit.members.iter().map(|&i| &f.members[i]));
        }
        let table_rank = match bucket {
            Bucket::G => table.iter().find(|r| r.table == 3).map(|r| r.rank.apply(n)),
            Bucket::F => table.iter().find(|r| r.table == 2).map(|r| r.rank.apply(n)),
            Bucket::C => None,
        };
        let fixed_acyclic = if bucket == Bucket::C {
            let fixed = fixed_point_subposet(&b_h, e);
            Some(homology(&order_complex(&fixed.poset, limits)?, limits)?.is_acyclic())
        } else {
            None
        };
        out.classes.push(FClass {
            representative: e.clone(),
            generator: amb.permutation(e.generators()[0]).to_string(),
            orbit_size: orbit.size(),
            normalizer_order: g.order() / orbit.size(),
            centralizer_order: c.order(),
            centralizer_p_part: p_part(c.order() as u64, p),
            bucket,
            m_e,
            m_e_star: None,
            commutes_with_ff: None,
            gdf_outer_element: None,
            table_rank,
            fixed_acyclic,
        });
    }
    for class in out.classes.iter_mut().filter(|c| c.bucket == Bucket::G) {
        let x = class.representative.generators()[0];
        let commutes = ff_members.iter().any(|m| m.generators().iter().all(|&y| amb.commute(x, y)));
        class.commutes_with_ff = Some(commutes);
        let m = class.m_e.unwrap();
        class.m_e_star = Some(if commutes { m } else { m.saturating_sub(1) });
        if let Some(gdf) = gdf {
            let cg = centralizer(gdf, &class.representative);
            let outer = cg.elements().iter().any(|&y| !h.contains(y) && amb.elem_order(y) as u64 == p);
            class.gdf_outer_element = Some(outer);
            if outer != commutes {
                out.notes.push(format!("commuting tests disagree for {}", class.generator));
            }
        }
        if let Some(t) = class.table_rank {
            if t != m {
                out.notes.push(format!("class of {} has rank {m}, tables give {t}", class.generator));
            }
        }
    }
    Ok(out)
}

/// An order complex whose vertices are labelled by subgroups, with the
/// extension operation "cone off the simplices fixed by E".
#[derive(Clone, Debug)]
pub struct LabeledComplex {
    pub labels: Vec<GroupHandle>,
    pub complex: SimplicialComplex,
}

impl LabeledComplex {
    pub fn from_poset(x: &SubgroupPoset, limits: &Limits) -> Result<LabeledComplex> {
        Ok(LabeledComplex { labels: x.members.clone(), complex: order_complex(&x.poset, limits)? })
    }

    /// One new vertex per member of `new`, joined to the full subcomplex of
    /// vertices whose labels it normalizes.
    pub fn extend(&self, new: &[&GroupHandle], limits: &Limits) -> Result<LabeledComplex> {
        let fixed: Vec<Vec<u32>> = new
            .iter()
            .map(|e| {
                (0..self.labels.len() as u32)
                    .filter(|&v| e.generators().iter().all(|&y| normalizes(&self.labels[v as usize], y)))
                    .collect()
            })
            .collect();
        let complex = self.complex.extend(&fixed);
        if complex.total() > limits.simplices {
            return Err(Error::MatrixTooLarge { cap: limits.simplices });
        }
        let mut labels = self.labels.clone();
        labels.extend(new.iter().map(|&e| e.clone()));
        Ok(LabeledComplex { labels, complex })
    }
}

/// All members of the classes in bucket `b`.
pub fn bucket_members(g: &GroupHandle, cls: &FClassification, b: Bucket) -> Vec<GroupHandle> {
    let mut out = Vec::new();
    for class in cls.bucket(b) {
        let mut orbit = vec![class.representative.clone()];
        let mut i = 0;
        while i < orbit.len() {
            let m = orbit[i].clone();
            i += 1;
            for &x in g.generators() {
                let c = conjugate(&m, x);
                if !orbit.contains(&c) {
                    orbit.push(c);
                }
            }
        }
        out.extend(orbit);
    }
    out
}
