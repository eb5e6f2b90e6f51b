use num_integer::Integer;
use serde::Serialize;

use super::field::Field;
use super::geometry::{gl_extra, sl_generators, sp_generators, ActionMode, Geometry};
use super::spec::{Base, Ext, GroupSpec, MatrixFamily};
use crate::group::{enumerate, GroupHandle, Permutation};
use crate::{Error, Limits, Result};

pub const MAX_DEGREE: usize = 4000;

/// A Lie-type tag `^d X_r(q)` asserted by the catalog.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LieTag {
    pub family: String,
    pub index: usize,
    pub twist: u32,
    pub q: u64,
    pub lie_rank: usize,
    pub characteristic: u64,
}

impl LieTag {
    fn untwisted(family: &str, index: usize, q: u64) -> LieTag {
        let characteristic = super::field::prime_power(q).expect("prime power").0;
        LieTag { family: family.into(), index, twist: 1, q, lie_rank: index, characteristic }
    }

    pub fn name(&self) -> String {
        let twist = if self.twist > 1 { format!("^{}", self.twist) } else { String::new() };
        format!("{twist}{}{}({})", self.family, self.index, self.q)
    }
}

/// Lie-type tags of a group, at most one per characteristic.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CatalogTags {
    pub lie: Vec<LieTag>,
}

impl CatalogTags {
    pub fn for_characteristic(&self, p: u64) -> Option<&LieTag> {
        self.lie.iter().find(|t| t.characteristic == p)
    }

    pub fn names(&self) -> Vec<String> {
        self.lie.iter().map(LieTag::name).collect()
    }
}

/// A subgroup carrying its own tags, e.g. the designated `H`.
#[derive(Clone, Debug)]
pub struct TaggedSubgroup {
    pub name: String,
    pub group: GroupHandle,
    pub tags: CatalogTags,
}

/// A constructed catalog group with its designated subgroups.
#[derive(Clone, Debug)]
pub struct CatalogGroup {
    pub spec: GroupSpec,
    pub group: GroupHandle,
    pub tags: CatalogTags,
    /// Tagged candidates for the SCNL subgroup (the group itself excluded).
    pub designated: Vec<TaggedSubgroup>,
    /// Preimage of inner-diagonal and field automorphisms, when known.
    pub gdf: Option<GroupHandle>,
    pub frobenius_witness: Option<u32>,
    geometry: Option<GeometryInfo>,
}

#[derive(Clone, Debug)]
struct GeometryInfo {
    n: usize,
    q: u64,
    mode: ActionMode,
}

impl CatalogGroup {
    /// Every tagged candidate, the group itself first when tagged.
    pub fn candidates(&self) -> Vec<TaggedSubgroup> {
        let mut out = Vec::new();
        if !self.tags.lie.is_empty() {
            out.push(TaggedSubgroup { name: self.spec.canonical(), group: self.group.clone(), tags: self.tags.clone() });
        }
        out.extend(self.designated.iter().cloned());
        out
    }

    /// The designated base subgroup `H` (the group itself if none).
    pub fn base_subgroup(&self) -> &GroupHandle {
        self.designated.first().map_or(&self.group, |t| &t.group)
    }

    pub fn degree(&self) -> usize {
        self.group.ambient().degree()
    }

    /// Adds or replaces the designated subgroup.
    pub fn designate(&mut self, sub: TaggedSubgroup) {
        self.designated.retain(|t| t.group != sub.group);
        self.designated.insert(0, sub);
    }
}

fn psl_order(n: usize, q: u64) -> u128 {
    sl_order(n, q) / (n as u128).gcd(&(q as u128 - 1))
}

fn sl_order(n: usize, q: u64) -> u128 {
    let q = q as u128;
    let mut o = q.pow((n * (n - 1) / 2) as u32);
    for i in 2..=n as u32 {
        o *= q.pow(i) - 1;
    }
    o
}

/// Closed-form orders of the catalog families (reference data for tests).
pub fn family_order(family: MatrixFamily, n: usize, q: u64) -> u128 {
    let a = super::field::prime_power(q).map_or(1, |x| x.1) as u128;
    match family {
        MatrixFamily::SL => sl_order(n, q),
        MatrixFamily::PSL => psl_order(n, q),
        MatrixFamily::PGL => sl_order(n, q),
        MatrixFamily::PSigmaL => psl_order(n, q) * a,
        MatrixFamily::PGammaL => sl_order(n, q) * a,
        MatrixFamily::Sp => {
            let m = (n / 2) as u32;
            let qq = q as u128;
            let mut o = qq.pow(m * m);
            for i in 1..=m {
                o *= qq.pow(2 * i) - 1;
            }
            o / (2u128).gcd(&(qq - 1))
        }
    }
}

fn psl_tags(n: usize, q: u64) -> CatalogTags {
    let mut lie = vec![LieTag::untwisted("A", n - 1, q)];
    match (n, q) {
        (2, 4) => lie.push(LieTag::untwisted("A", 1, 5)),
        (2, 5) => lie.push(LieTag::untwisted("A", 1, 4)),
        (3, 2) => lie.push(LieTag::untwisted("A", 1, 7)),
        (2, 7) => lie.push(LieTag::untwisted("A", 2, 2)),
        _ => {}
    }
    CatalogTags { lie }
}

fn alt_tags(n: usize) -> CatalogTags {
    match n {
        4 => psl_tags(2, 3),
        5 => psl_tags(2, 4),
        6 => psl_tags(2, 9),
        8 => psl_tags(4, 2),
        _ => CatalogTags::default(),
    }
}

fn sym_tags(n: usize) -> CatalogTags {
    match n {
        3 => psl_tags(2, 2),
        6 => CatalogTags { lie: vec![LieTag::untwisted("C", 2, 2)] },
        _ => CatalogTags::default(),
    }
}

fn sp_tags(n: usize, q: u64) -> CatalogTags {
    if n == 2 {
        psl_tags(2, q)
    } else {
        CatalogTags { lie: vec![LieTag::untwisted("C", n / 2, q)] }
    }
}

fn cycle(points: impl Iterator<Item = usize>, degree: usize) -> Permutation {
    let c: Vec<usize> = points.collect();
    Permutation::from_cycles(degree, &[c]).expect("valid cycle")
}

/// Generators for one build, before enumeration.
struct Plan {
    gens: Vec<Permutation>,
    h_gens: Option<Vec<Permutation>>,
    gdf_gens: Vec<Permutation>,
    h_tags: CatalogTags,
    tags: CatalogTags,
    graph: bool,
    witness: Option<Permutation>,
    geometry: Option<(Geometry, MatrixFamily, u64)>,
    /// Alt(n) in Sym(n) for the cases where the symmetric group is not the
    /// field/diagonal closure (Sym(8) contains the graph automorphism of PSL(4,2)).
    gdf_is_h: bool,
}

fn projective_degree(n: usize, q: u64, mode: ActionMode) -> Option<usize> {
    let total = (q as u128).checked_pow(n as u32)? - 1;
    let d = match mode {
        ActionMode::Vectors => total,
        ActionMode::Points => total / (q as u128 - 1),
        ActionMode::Doubled => 2 * total / (q as u128 - 1),
    };
    usize::try_from(d).ok()
}

fn plan_base(spec: &GroupSpec, force_doubled: bool) -> Result<Plan> {
    let unsupported = || Error::UnsupportedSpec(spec.canonical());
    let mut plan = Plan {
        gens: Vec::new(),
        h_gens: None,
        gdf_gens: Vec::new(),
        h_tags: CatalogTags::default(),
        tags: CatalogTags::default(),
        graph: false,
        witness: None,
        geometry: None,
        gdf_is_h: false,
    };
    match &spec.base {
        &Base::Sym(n) | &Base::Alt(n) | &Base::Cyc(n) | &Base::Dih(n) if n > MAX_DEGREE => {
            return Err(Error::ActionTooLarge { degree: n })
        }
        &Base::Sym(n) => {
            if n < 1 {
                return Err(unsupported());
            }
            if n >= 2 {
                plan.gens = vec![cycle(0..2, n), cycle(0..n, n)];
            } else {
                plan.gens = vec![Permutation::identity(1)];
            }
            plan.tags = sym_tags(n);
            if n >= 4 {
                plan.h_gens = Some((2..n).map(|i| cycle([0, 1, i].into_iter(), n)).collect());
                plan.h_tags = alt_tags(n);
                plan.gdf_is_h = n == 8;
            }
        }
        &Base::Alt(n) => {
            if n < 1 {
                return Err(unsupported());
            }
            plan.gens = if n >= 3 {
                (2..n).map(|i| cycle([0, 1, i].into_iter(), n)).collect()
            } else {
                vec![Permutation::identity(n)]
            };
            plan.tags = alt_tags(n);
        }
        &Base::Cyc(n) => {
            if n < 1 {
                return Err(unsupported());
            }
            plan.gens = vec![if n >= 2 { cycle(0..n, n) } else { Permutation::identity(1) }];
        }
        &Base::Dih(n) => {
            if n < 3 {
                return Err(unsupported());
            }
            let refl = Permutation::from_images((0..n).map(|i| (n - i) % n).collect())?;
            plan.gens = vec![cycle(0..n, n), refl];
        }
        Base::Perm(gens) => {
            let degree = gens.iter().flatten().flatten().copied().max().unwrap_or(1);
            if degree > MAX_DEGREE {
                return Err(Error::ActionTooLarge { degree });
            }
            for cycles in gens {
                let zero: Vec<Vec<usize>> =
                    cycles.iter().map(|c| c.iter().map(|x| x - 1).collect()).collect();
                plan.gens.push(Permutation::from_cycles(degree, &zero)?);
            }
        }
        &Base::Matrix { family, n, q } => {
            let field = Field::new(q)?;
            let doubled = spec.has_graph() || force_doubled;
            let mode = match family {
                MatrixFamily::SL if doubled => return Err(Error::ActionNotDoubled),
                MatrixFamily::Sp if doubled => return Err(Error::ActionNotDoubled),
                MatrixFamily::SL => ActionMode::Vectors,
                _ if doubled => ActionMode::Doubled,
                _ => ActionMode::Points,
            };
            if n < 2 || (family == MatrixFamily::Sp && n % 2 == 1) {
                return Err(unsupported());
            }
            if doubled && n < 3 {
                return Err(Error::ActionNotDoubled);
            }
            let degree = projective_degree(n, q, mode).unwrap_or(usize::MAX);
            if degree > MAX_DEGREE {
                return Err(Error::ActionTooLarge { degree });
            }
            let geo = Geometry::new(field.clone(), n, mode);
            let act = |ms: Vec<super::geometry::Matrix>| -> Vec<Permutation> {
                ms.iter().map(|m| geo.matrix_action(m)).collect()
            };
            let sl = act(sl_generators(&field, n));
            let gl = geo.matrix_action(&gl_extra(&field, n));
            let frob = geo.frobenius_action(1);
            let coprime = (n as u64).gcd(&(q - 1)) == 1;
            let mut base = match family {
                MatrixFamily::SL | MatrixFamily::PSL => sl.clone(),
                MatrixFamily::Sp => act(sp_generators(&field, n)),
                MatrixFamily::PGL => sl.iter().cloned().chain([gl.clone()]).collect(),
                MatrixFamily::PSigmaL => sl.iter().cloned().chain([frob.clone()]).collect(),
                MatrixFamily::PGammaL => sl.iter().cloned().chain([gl.clone(), frob.clone()]).collect(),
            };
            if base.is_empty() {
                base.push(Permutation::identity(geo.degree()));
            }
            plan.tags = match family {
                MatrixFamily::Sp => sp_tags(n, q),
                MatrixFamily::SL if coprime => psl_tags(n, q),
                MatrixFamily::SL => CatalogTags { lie: vec![LieTag::untwisted("A", n - 1, q)] },
                MatrixFamily::PSL => psl_tags(n, q),
                _ => CatalogTags::default(),
            };
            if matches!(family, MatrixFamily::PGL | MatrixFamily::PSigmaL | MatrixFamily::PGammaL) {
                plan.h_gens = Some(sl);
                plan.h_tags = psl_tags(n, q);
            }
            if matches!(family, MatrixFamily::PSigmaL | MatrixFamily::PGammaL) {
                plan.witness = Some(frob);
            }
            plan.gens = base;
            plan.geometry = Some((geo, family, q));
        }
    }
    if matches!(spec.base, Base::Matrix { .. }) && plan.h_gens.is_none() && !spec.exts.is_empty() {
        plan.h_gens = Some(plan.gens.clone());
        plan.h_tags = plan.tags.clone();
    }
    plan.gdf_gens = plan.gens.clone();
    Ok(plan)
}

/// Generators of the named index-2 subgroups of PΓL(2,9).
fn named_generators(plan: &Plan, name: &str) -> Result<Vec<Permutation>> {
    let unknown = || Error::UnknownName(name.to_string());
    let Some((geo, MatrixFamily::PGammaL, 9)) = &plan.geometry else {
        return Err(unknown());
    };
    if geo.n != 2 {
        return Err(unknown());
    }
    let f = &geo.field;
    let sl: Vec<Permutation> = sl_generators(f, 2).iter().map(|m| geo.matrix_action(m)).collect();
    let delta = geo.matrix_action(&gl_extra(f, 2));
    let phi = geo.frobenius_action(1);
    let extra = match name {
        "PGL29" => delta,
        "S6" => phi,
        "M10" => delta.then(&phi),
        _ => return Err(unknown()),
    };
    Ok(sl.into_iter().chain([extra]).collect())
}

/// Builds a catalog group from its spec.
pub fn build_group(spec: &GroupSpec, limits: &Limits) -> Result<CatalogGroup> {
    build_with_mode(spec, false, limits)
}

pub(crate) fn build_with_mode(spec: &GroupSpec, force_doubled: bool, limits: &Limits) -> Result<CatalogGroup> {
    let mut plan = plan_base(spec, force_doubled)?;
    let mut exts_seen = 0;
    for ext in &spec.exts {
        match ext {
            Ext::Frob(k) => {
                let Some((geo, _, _)) = &plan.geometry else {
                    return Err(Error::NotAMatrixGroup);
                };
                let a = geo.field.degree();
                if *k == 0 || a % k != 0 {
                    return Err(Error::UnsupportedSpec(format!("frob({k}) over a field of degree {a}")));
                }
                let w = geo.frobenius_action(*k);
                plan.gens.push(w.clone());
                plan.gdf_gens.push(w.clone());
                plan.witness = Some(w);
            }
            Ext::Graph => {
                let Some((geo, family, _)) = &plan.geometry else {
                    return Err(Error::ActionNotDoubled);
                };
                if *family == MatrixFamily::Sp {
                    return Err(Error::ActionNotDoubled);
                }
                let g = geo.graph_action().ok_or(Error::ActionNotDoubled)?;
                plan.gens.push(g);
                plan.graph = true;
            }
            Ext::Sub(name) => {
                if exts_seen != 0 {
                    return Err(Error::UnknownName(name.clone()));
                }
                let gens = named_generators(&plan, name)?;
                if name != "S6" {
                    plan.witness = None;
                }
                plan.gens = gens.clone();
                plan.gdf_gens = gens;
            }
        }
        exts_seen += 1;
    }

    let group = enumerate(&plan.gens, limits.elements)?;
    let amb = group.ambient().clone();
    let to_idx = |ps: &[Permutation]| -> Vec<u32> {
        ps.iter().map(|p| amb.index_of(p.images()).expect("generator lies in the group")).collect()
    };
    let mut designated = Vec::new();
    let mut tags = plan.tags.clone();
    if let Some(h_gens) = &plan.h_gens {
        let h = GroupHandle::generated_by(&amb, &to_idx(h_gens));
        if h == group {
            for t in &plan.h_tags.lie {
                if tags.for_characteristic(t.characteristic).is_none() {
                    tags.lie.push(t.clone());
                }
            }
        } else {
            // A proper extension is not itself of Lie type.
            if !spec.exts.is_empty() {
                tags = CatalogTags::default();
            }
            let name = match &spec.base {
                Base::Sym(n) => format!("Alt({n})"),
                Base::Matrix { n, q, .. } => format!("PSL({n},{q})"),
                _ => "H".into(),
            };
            designated.push(TaggedSubgroup { name, group: h, tags: plan.h_tags.clone() });
        }
    }
    let gdf = if plan.gdf_is_h {
        designated.first().map(|t| t.group.clone())
    } else if plan.graph {
        Some(GroupHandle::generated_by(&amb, &to_idx(&plan.gdf_gens)))
    } else {
        Some(group.clone())
    };
    let frobenius_witness = plan.witness.as_ref().and_then(|w| amb.index_of(w.images()));
    let geometry = plan.geometry.as_ref().map(|(g, _, q)| GeometryInfo { n: g.n, q: *q, mode: g.mode });
    Ok(CatalogGroup { spec: spec.clone(), group, tags, designated, gdf, frobenius_witness, geometry })
}

/// The named subgroup `M10`, `PGL29` or `S6` of PΓL(2,9), or `H`/`Gdf`.
pub fn named_subgroup(g: &CatalogGroup, name: &str) -> Result<GroupHandle> {
    match name {
        "H" | "base" => return Ok(g.base_subgroup().clone()),
        "Gdf" => return g.gdf.clone().ok_or(Error::GdfMissing),
        _ => {}
    }
    if g.spec.exts.is_empty() {
        let plan = plan_base(&g.spec, false)?;
        let gens = named_generators(&plan, name)?;
        let amb = g.group.ambient();
        let idx: Vec<u32> = gens.iter().map(|p| amb.index_of(p.images()).unwrap()).collect();
        return Ok(GroupHandle::generated_by(amb, &idx));
    }
    Err(Error::UnknownName(name.to_string()))
}

/// Resolves an `--H`/`--Gdf` annotation: a named construction, or a spec
/// whose permutations (in the same action) generate a subgroup of `g`.
pub fn resolve_annotation(g: &CatalogGroup, text: &str, limits: &Limits) -> Result<TaggedSubgroup> {
    if let Ok(h) = named_subgroup(g, text.trim()) {
        let tags = g
            .designated
            .iter()
            .find(|t| t.group == h)
            .map(|t| t.tags.clone())
            .unwrap_or_else(|| if h == g.group { g.tags.clone() } else { CatalogTags::default() });
        return Ok(TaggedSubgroup { name: text.trim().to_string(), group: h, tags });
    }
    let spec = GroupSpec::parse(text)?;
    let doubled = g.geometry.as_ref().is_some_and(|geo| geo.mode == ActionMode::Doubled)
        && matches!(&spec.base, Base::Matrix { n, q, .. }
            if g.geometry.as_ref().is_some_and(|geo| geo.n == *n && geo.q == *q));
    let sub = build_with_mode(&spec, doubled, limits)?;
    if sub.degree() != g.degree() {
        return Err(Error::UnsupportedSpec(format!("{text} acts on {} points, not {}", sub.degree(), g.degree())));
    }
    let amb = g.group.ambient();
    let idx: Option<Vec<u32>> = sub
        .group
        .generators()
        .iter()
        .map(|&x| amb.index_of(sub.group.ambient().images(x)))
        .collect();
    let idx = idx.ok_or_else(|| Error::UnsupportedSpec(format!("{text} is not a subgroup")))?;
    Ok(TaggedSubgroup { name: spec.canonical(), group: GroupHandle::generated_by(amb, &idx), tags: sub.tags })
}
