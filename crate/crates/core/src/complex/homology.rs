//! Reduced integral homology, sphericity, Cohen-Macaulay and
//! Mayer-Vietoris bookkeeping.

use std::collections::BTreeMap;

use num_traits::ToPrimitive;
use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use super::snf::{smith, Column};
use super::SimplicialComplex;
use crate::{Error, Limits, Result};

#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct DegreeHomology {
    pub rank: u64,
    /// Invariant factors greater than one, each dividing the next.
    pub torsion: Vec<u64>,
}

/// Reduced integral homology. Only degrees with nonzero homology are
/// stored, so equal homology means equal profiles.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct HomologyProfile {
    pub degrees: BTreeMap<i64, DegreeHomology>,
    pub euler: i64,
}

impl HomologyProfile {
    pub fn rank(&self, d: i64) -> u64 {
        self.degrees.get(&d).map_or(0, |h| h.rank)
    }

    pub fn torsion(&self, d: i64) -> &[u64] {
        self.degrees.get(&d).map_or(&[], |h| &h.torsion)
    }

    /// Degrees with nonzero rational homology.
    pub fn rational_degrees(&self) -> Vec<i64> {
        self.degrees.iter().filter(|(_, h)| h.rank > 0).map(|(&d, _)| d).collect()
    }

    pub fn is_acyclic(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn has_torsion(&self) -> bool {
        self.degrees.values().any(|h| !h.torsion.is_empty())
    }

    /// Same ranks in every degree, ignoring torsion.
    pub fn same_betti(&self, other: &HomologyProfile) -> bool {
        self.rational_degrees() == other.rational_degrees()
            && self.rational_degrees().iter().all(|&d| self.rank(d) == other.rank(d))
    }
}

/// Boundary columns of the `d`-simplices into the `(d-1)`-simplices; for
/// `d = 0` the single row is the augmentation.
fn boundary(k: &SimplicialComplex, d: usize) -> Vec<Column<i64>> {
    k.simplices(d)
        .map(|s| {
            if d == 0 {
                return vec![(0, 1)];
            }
            let mut col: Column<i64> = (0..s.len())
                .map(|i| {
                    let face: Vec<u32> =
                        s.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, &v)| v).collect();
                    let row = k.index_of(&face).expect("complex is closed under faces");
                    (row as u32, if i % 2 == 0 { 1 } else { -1 })
                })
                .collect();
            col.sort_unstable_by_key(|e| e.0);
            col
        })
        .collect()
}

/// Panics unless `lower ∘ upper = 0`.
fn assert_square_zero(lower: &[Column<i64>], upper: &[Column<i64>]) {
    let mut acc: FxHashMap<u32, i64> = FxHashMap::default();
    for col in upper {
        acc.clear();
        for &(r, v) in col {
            for &(r2, w) in &lower[r as usize] {
                *acc.entry(r2).or_default() += v * w;
            }
        }
        assert!(acc.values().all(|&x| x == 0), "boundary of a boundary is nonzero");
    }
}

/// Reduced integral homology via Smith normal form.
pub fn homology(k: &SimplicialComplex, limits: &Limits) -> Result<HomologyProfile> {
    if k.total() > limits.simplices {
        return Err(Error::MatrixTooLarge { cap: limits.simplices });
    }
    let top = k.dim();
    // ranks[d] = rank of the boundary out of degree d, for d = 0..=top.
    let mut ranks = Vec::new();
    let mut torsion_below = Vec::new();
    let mut prev: Option<Vec<Column<i64>>> = None;
    for d in 0..=top.max(-1) as usize {
        if top < 0 {
            break;
        }
        let b = boundary(k, d);
        if let Some(lower) = &prev {
            assert_square_zero(lower, &b);
        }
        let nrows = if d == 0 { 1 } else { k.count(d - 1) };
        let s = smith(nrows, &b);
        ranks.push(s.rank);
        let tors: Result<Vec<u64>> = s.torsion.iter().map(|t| t.to_u64().ok_or(Error::TorsionOverflow)).collect();
        torsion_below.push(tors?);
        prev = Some(b);
    }
    let mut degrees = BTreeMap::new();
    let mut euler = 0i64;
    for d in -1..=top as i64 {
        let c = if d < 0 { 1 } else { k.count(d as usize) };
        let out = if d < 0 { 0 } else { ranks[d as usize] };
        let inn = ranks.get((d + 1) as usize).copied().unwrap_or(0);
        let rank = (c - out - inn) as u64;
        // Torsion of degree d comes from the boundary out of degree d + 1.
        let torsion = torsion_below.get((d + 1) as usize).cloned().unwrap_or_default();
        euler += if d.rem_euclid(2) == 0 { rank as i64 } else { -(rank as i64) };
        if rank > 0 || !torsion.is_empty() {
            degrees.insert(d, DegreeHomology { rank, torsion });
        }
    }
    assert_eq!(euler, k.euler(), "Betti numbers disagree with face counts");
    Ok(HomologyProfile { degrees, euler })
}

/// Whether `k` has dimension `d` and free reduced homology concentrated in
/// degree `d`.
pub fn is_homology_spherical(k: &SimplicialComplex, d: i64, limits: &Limits) -> Result<bool> {
    if k.dim() as i64 != d {
        return Ok(false);
    }
    let h = homology(k, limits)?;
    Ok(h.degrees.iter().all(|(&e, dh)| e == d && dh.torsion.is_empty()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CmReport {
    pub holds: bool,
    /// First simplex whose link fails, `[]` standing for the empty simplex.
    pub witness: Option<Vec<u32>>,
    pub links_checked: usize,
}

/// Homology-level Cohen-Macaulay test: every link, including that of the
/// empty simplex, is homology-spherical of dimension `dim K - |σ|`.
pub fn is_cohen_macaulay(k: &SimplicialComplex, limits: &Limits) -> Result<CmReport> {
    let n = k.dim() as i64;
    let mut checked = 0;
    let sigmas = std::iter::once(Vec::new()).chain(k.all_simplices().map(<[u32]>::to_vec));
    for sigma in sigmas {
        checked += 1;
        let link = k.link(&sigma);
        if !is_homology_spherical(&link, n - sigma.len() as i64, limits)? {
            return Ok(CmReport { holds: false, witness: Some(sigma), links_checked: checked });
        }
    }
    Ok(CmReport { holds: true, witness: None, links_checked: checked })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MvMode {
    /// Link homology and `L` homology live in disjoint degrees, so the
    /// connecting maps vanish and ranks add up exactly.
    Identity,
    /// Only the Euler identity and rank inequalities are available.
    Inequality,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MvReport {
    pub mode: MvMode,
    /// Per degree `m`: `(rank_m K, rank_m L, sum_v rank_{m-1} Lk(v))`.
    pub ranks: BTreeMap<i64, (u64, u64, u64)>,
    pub euler_identity: bool,
    pub holds: bool,
}

/// Compares `K` with the full subcomplex `L` on `l_vertices`, assuming the
/// remaining vertices span no edge. In identity mode the check is
/// `rank_m K = rank_m L + sum_v rank_{m-1} Lk_L(v)`; otherwise it is the
/// Euler identity plus `rank_m K <= rank_m L + sum_v rank_{m-1} Lk_L(v)`.
pub fn mv_rank_identity_check(
    k: &SimplicialComplex,
    l_vertices: &[u32],
    limits: &Limits,
) -> Result<MvReport> {
    let l = k.full_subcomplex(l_vertices);
    let mut in_l = vec![false; k.vertex_count()];
    for &v in l_vertices {
        in_l[v as usize] = true;
    }
    let outside: Vec<u32> = k.vertices().into_iter().filter(|&v| !in_l[v as usize]).collect();
    if k.simplices(1).any(|e| !in_l[e[0] as usize] && !in_l[e[1] as usize]) {
        return Err(Error::UnsupportedSpec("vertices outside L must span no edge".into()));
    }
    let hk = homology(k, limits)?;
    let hl = homology(&l, limits)?;
    let mut link_sum: BTreeMap<i64, u64> = BTreeMap::new();
    let mut link_euler = 0i64;
    let mut disjoint = true;
    let l_degrees = hl.rational_degrees();
    for &v in &outside {
        let lk = k.link(&[v]);
        let h = homology(&lk, limits)?;
        link_euler += h.euler;
        for d in h.rational_degrees() {
            if l_degrees.contains(&d) {
                disjoint = false;
            }
            *link_sum.entry(d + 1).or_default() += h.rank(d);
        }
    }
    let mode = if disjoint { MvMode::Identity } else { MvMode::Inequality };
    let mut ranks = BTreeMap::new();
    let mut holds = true;
    let degs: std::collections::BTreeSet<i64> =
        hk.rational_degrees().into_iter().chain(l_degrees).chain(link_sum.keys().copied()).collect();
    for m in degs {
        let (a, b, c) = (hk.rank(m), hl.rank(m), link_sum.get(&m).copied().unwrap_or(0));
        holds &= match mode {
            MvMode::Identity => a == b + c,
            MvMode::Inequality => a <= b + c,
        };
        ranks.insert(m, (a, b, c));
    }
    let euler_identity = hk.euler == hl.euler - link_euler;
    Ok(MvReport { mode, ranks, euler_identity, holds: holds && euler_identity })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::order_complex;
    use crate::poset::Poset;
    use proptest::prelude::*;

    fn lim() -> Limits {
        Limits::default()
    }

    fn cx(n: usize, facets: &[&[u32]]) -> SimplicialComplex {
        let f: Vec<Vec<u32>> = facets.iter().map(|s| s.to_vec()).collect();
        SimplicialComplex::from_facets(n, &f, &lim()).unwrap()
    }

    fn rp2() -> SimplicialComplex {
        let tri = [
            [1, 2, 4], [1, 2, 6], [1, 3, 5], [1, 3, 6], [1, 4, 5],
            [2, 3, 4], [2, 3, 5], [2, 5, 6], [3, 4, 6], [4, 5, 6],
        ];
        let f: Vec<Vec<u32>> = tri.iter().map(|t| t.iter().map(|&v| v - 1).collect()).collect();
        SimplicialComplex::from_facets(6, &f, &lim()).unwrap()
    }

    fn profile(entries: &[(i64, u64, &[u64])], euler: i64) -> HomologyProfile {
        HomologyProfile {
            degrees: entries
                .iter()
                .map(|&(d, rank, t)| (d, DegreeHomology { rank, torsion: t.to_vec() }))
                .collect(),
            euler,
        }
    }

    #[test]
    fn basic_profiles() {
        assert_eq!(homology(&SimplicialComplex::empty(0), &lim()).unwrap(), profile(&[(-1, 1, &[])], -1));
        let t = cx(3, &[&[0, 1], &[1, 2], &[0, 2]]);
        assert_eq!(homology(&t, &lim()).unwrap(), profile(&[(1, 1, &[])], -1));
        assert_eq!(homology(&cx(3, &[&[0, 1, 2]]), &lim()).unwrap(), profile(&[], 0));
        let two = cx(2, &[&[0], &[1]]);
        assert_eq!(homology(&two, &lim()).unwrap(), profile(&[(0, 1, &[])], 1));
    }

    #[test]
    fn projective_plane_has_two_torsion() {
        let k = rp2();
        assert_eq!(k.face_counts(), vec![6, 15, 10]);
        assert_eq!(homology(&k, &lim()).unwrap(), profile(&[(1, 0, &[2])], 0));
    }

    #[test]
    fn joins_of_spheres() {
        let s0 = cx(2, &[&[0], &[1]]);
        let s1 = cx(3, &[&[0, 1], &[1, 2], &[0, 2]]);
        assert_eq!(homology(&s0.join(&s0), &lim()).unwrap(), profile(&[(1, 1, &[])], -1));
        assert_eq!(homology(&s0.join(&s1), &lim()).unwrap(), profile(&[(2, 1, &[])], 1));
        let point = cx(1, &[&[0]]);
        assert!(homology(&point.join(&s1), &lim()).unwrap().is_acyclic());
        let spheres = [s0.clone(), s1.clone(), s0.join(&s1)];
        for (a, x) in spheres.iter().enumerate() {
            for (b, y) in spheres.iter().enumerate() {
                let dim = [0, 1, 2];
                let h = homology(&x.join(y), &lim()).unwrap();
                let d = dim[a] + dim[b] + 1;
                assert_eq!(h, profile(&[(d, 1, &[])], if d % 2 == 0 { 1 } else { -1 }));
            }
        }
    }

    #[test]
    fn sphericity() {
        let t = cx(3, &[&[0, 1], &[1, 2], &[0, 2]]);
        assert!(is_homology_spherical(&t, 1, &lim()).unwrap());
        assert!(is_homology_spherical(&cx(2, &[&[0], &[1]]), 0, &lim()).unwrap());
        // A circle plus a separate point.
        let mixed = cx(4, &[&[0, 1], &[1, 2], &[0, 2], &[3]]);
        for d in -1..4 {
            assert!(!is_homology_spherical(&mixed, d, &lim()).unwrap());
        }
        assert!(!is_homology_spherical(&rp2(), 2, &lim()).unwrap());
    }

    #[test]
    fn cohen_macaulay() {
        let bowtie = cx(5, &[&[0, 1, 2], &[0, 3, 4]]);
        let r = is_cohen_macaulay(&bowtie, &lim()).unwrap();
        assert!(!r.holds);
        assert_eq!(r.witness, Some(vec![0]));
        assert!(is_cohen_macaulay(&cx(3, &[&[0, 1, 2]]), &lim()).unwrap().holds);
        assert!(!is_cohen_macaulay(&rp2(), &lim()).unwrap().holds);
    }

    #[test]
    fn mayer_vietoris() {
        // Hollow triangle plus a cone point over two of its vertices.
        let k = cx(4, &[&[0, 1], &[1, 2], &[0, 2], &[3, 0], &[3, 1]]);
        let r = mv_rank_identity_check(&k, &[0, 1, 2], &lim()).unwrap();
        assert_eq!(r.mode, MvMode::Identity);
        assert!(r.holds);
        assert_eq!(r.ranks[&1], (2, 1, 1));
        // No outside vertices.
        let r = mv_rank_identity_check(&k, &[0, 1, 2, 3], &lim()).unwrap();
        assert!(r.holds && r.mode == MvMode::Identity);
        // Cone over the circle.
        let cone = cx(4, &[&[0, 1, 3], &[1, 2, 3], &[0, 2, 3]]);
        let r = mv_rank_identity_check(&cone, &[0, 1, 2], &lim()).unwrap();
        assert_eq!(r.mode, MvMode::Inequality);
        assert!(r.holds);
        assert_eq!(r.ranks[&1], (0, 1, 0));
    }

    #[test]
    fn overflowing_cap_is_an_error() {
        let tight = Limits { simplices: 3, ..lim() };
        assert!(matches!(homology(&rp2(), &tight), Err(Error::MatrixTooLarge { .. })));
    }

    fn arb_complex() -> impl Strategy<Value = SimplicialComplex> {
        prop::collection::vec(prop::collection::btree_set(0u32..7, 1..5), 1..8).prop_map(|facets| {
            let f: Vec<Vec<u32>> = facets.into_iter().map(|s| s.into_iter().collect()).collect();
            SimplicialComplex::from_facets(7, &f, &Limits::default()).unwrap()
        })
    }

    proptest! {
        #[test]
        fn relabel_invariance(k in arb_complex(), seed in any::<u64>()) {
            let mut perm: Vec<usize> = (0..7).collect();
            let mut s = seed | 1;
            for i in (1..7).rev() {
                s ^= s << 13; s ^= s >> 7; s ^= s << 17;
                perm.swap(i, (s % (i as u64 + 1)) as usize);
            }
            prop_assert_eq!(homology(&k.relabel(&perm), &lim()).unwrap(), homology(&k, &lim()).unwrap());
        }

        #[test]
        fn extension_link_is_fixed_subcomplex(k in arb_complex(), w in prop::collection::vec(0u32..7, 0..7)) {
            let ext = k.extend(std::slice::from_ref(&w));
            prop_assert_eq!(ext.link(&[7]).face_counts(), k.full_subcomplex(&w).face_counts());
            let mut lk = ext.link(&[7]);
            lk = SimplicialComplex::from_facets(7, &lk.all_simplices().map(<[u32]>::to_vec).collect::<Vec<_>>(), &lim()).unwrap();
            prop_assert_eq!(lk, k.full_subcomplex(&w));
        }

        #[test]
        fn order_complex_euler_matches_mobius(bits in prop::collection::vec(any::<bool>(), 36)) {
            let p = Poset::from_relation(6, |a, b| a < b && bits[a * 6 + b]);
            let k = order_complex(&p, &lim()).unwrap();
            let h = homology(&k, &lim()).unwrap();
            prop_assert_eq!(h.euler, crate::poset::euler_mobius(&p));
            let (core, _) = crate::poset::core_reduce(&p);
            let hc = homology(&order_complex(&core, &lim()).unwrap(), &lim()).unwrap();
            prop_assert_eq!(hc, h);
        }
    }
}
