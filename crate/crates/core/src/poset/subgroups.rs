//! Posets of p-subgroups under inclusion, and the mixed poset.

use fixedbitset::FixedBitSet;
use rustc_hash::{FxHashMap, FxHashSet};
use serde::{Deserialize, Serialize};

use super::{euler_chain_count, Poset};
use crate::group::ops::{extend_by, p_core_equals};
use crate::group::{
    check_prime, conjugates, normalizer, normalizes, order_p_elements, p_core,
    subgroup_conjugacy_orbits, sylow_subgroup, GroupHandle,
};
use crate::{Error, Limits, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PosetKind {
    /// Non-trivial elementary abelian p-subgroups.
    Quillen,
    /// All non-trivial p-subgroups.
    Brown,
    /// Non-trivial radical p-subgroups.
    Bouc,
}

/// A poset of subgroups of `group` ordered by inclusion, with `group`
/// acting by conjugation.
#[derive(Clone, Debug)]
pub struct SubgroupPoset {
    pub group: GroupHandle,
    pub members: Vec<GroupHandle>,
    pub poset: Poset,
}

impl SubgroupPoset {
    /// Sorts and deduplicates `members` and computes inclusions.
    pub fn from_members(group: &GroupHandle, mut members: Vec<GroupHandle>) -> SubgroupPoset {
        members.sort();
        members.dedup();
        let poset = inclusion_poset(&members);
        SubgroupPoset { group: group.clone(), members, poset }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn index_of(&self, s: &GroupHandle) -> Option<usize> {
        self.members.binary_search(s).ok()
    }

    /// The members in `keep`, in the same order.
    pub fn restrict(&self, keep: &[usize]) -> SubgroupPoset {
        SubgroupPoset {
            group: self.group.clone(),
            members: keep.iter().map(|&k| self.members[k].clone()).collect(),
            poset: self.poset.induced(keep),
        }
    }

    /// `-1 - sum over orbits of |orbit| * chi(X_{<x})`, acting by `acting`.
    pub fn euler_orbit_formula_under(&self, acting: &GroupHandle) -> Result<i64> {
        let orbits = subgroup_conjugacy_orbits(acting, &self.members)?;
        let mut total = -1i64;
        for orbit in orbits {
            let below: Vec<usize> =
                self.poset.down(orbit.representative).iter().map(|&y| y as usize).collect();
            total -= orbit.size() as i64 * euler_chain_count(&self.poset.induced(&below));
        }
        Ok(total)
    }

    pub fn euler_orbit_formula(&self) -> Result<i64> {
        self.euler_orbit_formula_under(&self.group)
    }
}

/// Strict inclusion poset of distinct non-trivial subgroups.
fn inclusion_poset(members: &[GroupHandle]) -> Poset {
    let mut containing: FxHashMap<u32, Vec<u32>> = FxHashMap::default();
    for (i, m) in members.iter().enumerate() {
        for &x in &m.elements()[1..] {
            containing.entry(x).or_default().push(i as u32);
        }
    }
    let mut down = vec![Vec::new(); members.len()];
    for (a, m) in members.iter().enumerate() {
        let Some(&g0) = m.generators().first() else { continue };
        for &b in &containing[&g0] {
            let big = &members[b as usize];
            if big.order() > m.order() && m.is_subgroup_of(big) {
                down[b as usize].push(a as u32);
            }
        }
    }
    Poset::from_down_sets(down)
}

fn check_cap(n: usize, limits: &Limits) -> Result<()> {
    if n > limits.poset {
        Err(Error::PosetCapExceeded { cap: limits.poset })
    } else {
        Ok(())
    }
}

/// Non-trivial elementary abelian `p`-subgroups of `g` all of whose
/// non-identity elements satisfy `allowed`. The property must be inherited
/// by subgroups, so members are built rank by rank.
pub fn elementary_abelian_subgroups(
    g: &GroupHandle,
    p: u64,
    allowed: impl Fn(u32) -> bool,
    limits: &Limits,
) -> Result<Vec<GroupHandle>> {
    check_prime(p)?;
    let amb = g.ambient();
    let xs: Vec<u32> = order_p_elements(g, p).into_iter().filter(|&x| allowed(x)).collect();
    let pos: FxHashMap<u32, usize> = xs.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let commuting: Vec<FixedBitSet> = xs
        .iter()
        .map(|&x| {
            let mut b = FixedBitSet::with_capacity(xs.len());
            for (j, &y) in xs.iter().enumerate() {
                if amb.commute(x, y) {
                    b.insert(j);
                }
            }
            b
        })
        .collect();

    let mut out: Vec<GroupHandle> = Vec::new();
    let mut seen: FxHashSet<GroupHandle> = FxHashSet::default();
    let mut level: Vec<GroupHandle> = Vec::new();
    for &x in &xs {
        let e = GroupHandle::generated_by(amb, &[x]);
        if seen.insert(e.clone()) {
            level.push(e);
        }
    }
    while !level.is_empty() {
        check_cap(out.len() + level.len(), limits)?;
        let mut next = Vec::new();
        for e in &level {
            let mut cand = commuting[pos[&e.generators()[0]]].clone();
            for &y in &e.generators()[1..] {
                cand.intersect_with(&commuting[pos[&y]]);
            }
            for &y in &e.elements()[1..] {
                cand.set(pos[&y], false);
            }
            let mut done = FixedBitSet::with_capacity(xs.len());
            for j in cand.ones() {
                if done[j] {
                    continue;
                }
                let bigger = extend_by(e, xs[j], p);
                let mut ok = true;
                for &z in bigger.elements() {
                    match pos.get(&z) {
                        Some(&k) => done.insert(k),
                        None if z == 0 => {}
                        None => ok = false,
                    }
                }
                if ok && seen.insert(bigger.clone()) {
                    next.push(bigger);
                }
            }
        }
        out.append(&mut level);
        level = next;
    }
    Ok(out)
}

/// `A_p(G)`.
pub fn quillen_poset(g: &GroupHandle, p: u64, limits: &Limits) -> Result<SubgroupPoset> {
    let members = elementary_abelian_subgroups(g, p, |_| true, limits)?;
    Ok(SubgroupPoset::from_members(g, members))
}

/// All non-trivial `p`-subgroups, grown by adjoining roots inside normalizers.
fn p_subgroups(g: &GroupHandle, p: u64, limits: &Limits) -> Result<Vec<GroupHandle>> {
    check_prime(p)?;
    let amb = g.ambient();
    // y^p -> y over the non-trivial p-elements.
    let mut roots: FxHashMap<u32, Vec<u32>> = FxHashMap::default();
    for &y in &g.elements()[1..] {
        if amb.is_p_element(y, p) {
            roots.entry(amb.pow(y, p)).or_default().push(y);
        }
    }
    let mut seen: FxHashSet<GroupHandle> = FxHashSet::default();
    let mut level: Vec<GroupHandle> = Vec::new();
    for &x in roots.get(&0).map(Vec::as_slice).unwrap_or(&[]) {
        let c = GroupHandle::generated_by(amb, &[x]);
        if seen.insert(c.clone()) {
            level.push(c);
        }
    }
    level.sort();
    let mut out = Vec::new();
    while !level.is_empty() {
        check_cap(out.len() + level.len(), limits)?;
        let mut next = Vec::new();
        for s in &level {
            let mut done: FxHashSet<u32> = FxHashSet::default();
            for &z in s.elements() {
                for &y in roots.get(&z).map(Vec::as_slice).unwrap_or(&[]) {
                    if s.contains(y) || done.contains(&y) || !normalizes(s, y) {
                        continue;
                    }
                    let bigger = extend_by(s, y, p);
                    done.extend(bigger.elements().iter().copied());
                    if seen.insert(bigger.clone()) {
                        next.push(bigger);
                    }
                }
            }
        }
        out.append(&mut level);
        level = next;
    }
    Ok(out)
}

/// `S_p(G)`.
pub fn all_p_subgroups_poset(g: &GroupHandle, p: u64, limits: &Limits) -> Result<SubgroupPoset> {
    let members = p_subgroups(g, p, limits)?;
    Ok(SubgroupPoset::from_members(g, members))
}

/// Non-trivial radical `p`-subgroups: `O_p(N_G(R)) = R`.
///
/// Candidates are the subgroups of one Sylow subgroup up to conjugacy in
/// that Sylow; survivors are then spread over their `G`-classes.
pub fn radical_subgroups(g: &GroupHandle, p: u64, limits: &Limits) -> Result<Vec<GroupHandle>> {
    check_prime(p)?;
    let s = sylow_subgroup(g, p);
    if s.is_trivial() {
        return Ok(Vec::new());
    }
    let subs = p_subgroups(&s, p, limits)?;
    let reps: Vec<usize> =
        subgroup_conjugacy_orbits(&s, &subs)?.into_iter().map(|o| o.representative).collect();
    let mut out: Vec<GroupHandle> = Vec::new();
    for r in reps {
        let r = &subs[r];
        let n = normalizer(g, r);
        if p_core_equals(&n, p, r) {
            out.extend(conjugates(g, r));
            check_cap(out.len(), limits)?;
        }
    }
    Ok(out)
}

/// `B_p(G)`.
pub fn bouc_poset(g: &GroupHandle, p: u64, limits: &Limits) -> Result<SubgroupPoset> {
    let members = radical_subgroups(g, p, limits)?;
    Ok(SubgroupPoset::from_members(g, members))
}

/// `F = {E in A_p(G) : E ∩ H = 1}` and `F' = {E in F : O_p(C_H(E)) = 1}`,
/// both as inclusion posets under `G`.
pub fn f_sets(
    g: &GroupHandle,
    h: &GroupHandle,
    p: u64,
    limits: &Limits,
) -> Result<(SubgroupPoset, SubgroupPoset)> {
    let members = elementary_abelian_subgroups(g, p, |x| !h.contains(x), limits)?;
    let f = SubgroupPoset::from_members(g, members);
    let keep: Vec<usize> = (0..f.len())
        .filter(|&i| p_core(&crate::group::centralizer(h, &f.members[i]), p).is_trivial())
        .collect();
    let f_prime = f.restrict(&keep);
    Ok((f, f_prime))
}

/// `B_p(H) ∪ F_K(H)` with `E < R` iff `C_R(E) ≠ 1`.
#[derive(Clone, Debug)]
pub struct MixedPoset {
    pub members: Vec<GroupHandle>,
    /// Whether each member lies in the F-part.
    pub is_f: Vec<bool>,
    pub poset: Poset,
    pub group: GroupHandle,
}

impl MixedPoset {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn f_count(&self) -> usize {
        self.is_f.iter().filter(|&&b| b).count()
    }
}

/// The mixed poset for `H ⊴ K`. B-members come first, each part sorted.
pub fn mixed_poset(h: &GroupHandle, k: &GroupHandle, p: u64, limits: &Limits) -> Result<MixedPoset> {
    let b = bouc_poset(h, p, limits)?;
    let f = elementary_abelian_subgroups(k, p, |x| !h.contains(x), limits)?;
    let f = SubgroupPoset::from_members(k, f);
    check_cap(b.len() + f.len(), limits)?;
    let nb = b.len();
    let amb = h.ambient();
    let mut down: Vec<Vec<u32>> = (0..nb).map(|i| b.poset.down(i).to_vec()).collect();
    down.extend((0..f.len()).map(|i| f.poset.down(i).iter().map(|&y| y + nb as u32).collect()));
    for (r, rm) in b.members.iter().enumerate() {
        for (e, em) in f.members.iter().enumerate() {
            let gens = em.generators();
            if rm.elements()[1..].iter().any(|&x| gens.iter().all(|&y| amb.commute(x, y))) {
                down[r].push((nb + e) as u32);
            }
        }
    }
    let mut members = b.members;
    members.extend(f.members);
    let mut is_f = vec![false; nb];
    is_f.resize(members.len(), true);
    Ok(MixedPoset { members, is_f, poset: Poset::from_down_sets(down), group: k.clone() })
}

/// Members normalized by every generator of `q`.
pub fn fixed_point_subposet(x: &SubgroupPoset, q: &GroupHandle) -> SubgroupPoset {
    let keep: Vec<usize> = (0..x.len())
        .filter(|&i| q.generators().iter().all(|&y| normalizes(&x.members[i], y)))
        .collect();
    x.restrict(&keep)
}

#[cfg(test)]
mod tests {
    use super::super::{core_reduce, euler_mobius};
    use super::*;
    use crate::group::testing::*;
    use crate::group::{centralizer, enumerate, subgroup};

    fn lim() -> Limits {
        Limits::default()
    }

    /// Every subgroup of a small group, by closing all pairs and then all
    /// pairs with a third element; enough for groups of order at most 120.
    fn brute_subgroups(g: &GroupHandle) -> Vec<GroupHandle> {
        let amb = g.ambient();
        let mut set: FxHashSet<GroupHandle> = FxHashSet::default();
        let els = g.elements();
        for &a in els {
            for &b in els {
                if a <= b {
                    set.insert(GroupHandle::generated_by(amb, &[a, b]));
                }
            }
        }
        let pairs: Vec<GroupHandle> = set.iter().cloned().collect();
        for s in pairs {
            for &c in els {
                if !s.contains(c) {
                    let mut gens = s.generators().to_vec();
                    gens.push(c);
                    set.insert(GroupHandle::generated_by(amb, &gens));
                }
            }
        }
        set.into_iter().collect()
    }

    fn is_p_group(s: &GroupHandle, p: u64) -> bool {
        let mut n = s.order() as u64;
        while n.is_multiple_of(p) {
            n /= p;
        }
        n == 1
    }

    #[test]
    fn quillen_examples() {
        let s3 = sym(3);
        assert_eq!(quillen_poset(&s3, 3, &lim()).unwrap().len(), 1);
        let a5 = alt(5);
        let x = quillen_poset(&a5, 2, &lim()).unwrap();
        assert_eq!(x.len(), 20);
        assert_eq!(x.members.iter().filter(|m| m.order() == 4).count(), 5);
        assert_eq!(x.poset.component_count(), 5);
        assert_eq!(euler_mobius(&x.poset), 4);
    }

    #[test]
    fn quillen_matches_brute_force() {
        for (g, p) in [(sym(4), 2), (sym(5), 2), (sym(5), 3), (alt(5), 5)] {
            let brute = brute_subgroups(&g)
                .into_iter()
                .filter(|s| !s.is_trivial() && crate::group::is_elementary_abelian(s, p))
                .count();
            assert_eq!(quillen_poset(&g, p, &lim()).unwrap().len(), brute);
        }
    }

    #[test]
    fn brown_examples() {
        let c4 = enumerate(&[cyc(&[0, 1, 2, 3], 4)], 100).unwrap();
        assert_eq!(all_p_subgroups_poset(&c4, 2, &lim()).unwrap().len(), 2);
        let s4 = sym(4);
        let x = all_p_subgroups_poset(&s4, 2, &lim()).unwrap();
        assert_eq!(x.len(), 19);
        let brute = brute_subgroups(&s4).into_iter().filter(|s| !s.is_trivial() && is_p_group(s, 2)).count();
        assert_eq!(brute, 19);
        let s5 = sym(5);
        let brute = brute_subgroups(&s5).into_iter().filter(|s| !s.is_trivial() && is_p_group(s, 2)).count();
        assert_eq!(all_p_subgroups_poset(&s5, 2, &lim()).unwrap().len(), brute);
    }

    #[test]
    fn bouc_examples() {
        let s4 = sym(4);
        let b = bouc_poset(&s4, 2, &lim()).unwrap();
        assert_eq!(b.len(), 4);
        assert_eq!(b.members.iter().filter(|m| m.order() == 8).count(), 3);
        // Radical test straight over S_2.
        let all = all_p_subgroups_poset(&s4, 2, &lim()).unwrap();
        let direct = all.members.iter().filter(|r| p_core(&normalizer(&s4, r), 2) == **r).count();
        assert_eq!(direct, 4);
        let c3 = enumerate(&[cyc(&[0, 1, 2], 3)], 10).unwrap();
        assert_eq!(bouc_poset(&c3, 3, &lim()).unwrap().len(), 1);
        let s6 = sym(6);
        let b = bouc_poset(&s6, 2, &lim()).unwrap();
        assert_eq!(b.poset.height(), 2);
        assert_eq!(euler_mobius(&b.poset), -16);
        assert_eq!(b.euler_orbit_formula().unwrap(), -16);
    }

    #[test]
    fn radical_matches_direct_test_on_sym5() {
        let s5 = sym(5);
        for p in [2, 3] {
            let all = all_p_subgroups_poset(&s5, p, &lim()).unwrap();
            let direct: Vec<GroupHandle> =
                all.members.iter().filter(|r| p_core(&normalizer(&s5, r), p) == **r).cloned().collect();
            assert_eq!(bouc_poset(&s5, p, &lim()).unwrap().members, SubgroupPoset::from_members(&s5, direct).members);
        }
    }

    #[test]
    fn euler_three_ways_agree() {
        for (g, p) in [(sym(4), 2), (sym(5), 2), (alt(6), 3), (alt(5), 2)] {
            for x in [
                quillen_poset(&g, p, &lim()).unwrap(),
                all_p_subgroups_poset(&g, p, &lim()).unwrap(),
                bouc_poset(&g, p, &lim()).unwrap(),
            ] {
                let m = euler_mobius(&x.poset);
                assert_eq!(m, euler_chain_count(&x.poset));
                assert_eq!(m, x.euler_orbit_formula().unwrap());
                let (core, _) = core_reduce(&x.poset);
                assert_eq!(euler_mobius(&core), m);
            }
        }
    }

    #[test]
    fn alt6_values() {
        let a6 = alt(6);
        assert_eq!(euler_mobius(&quillen_poset(&a6, 3, &lim()).unwrap().poset), 9);
        let a5 = quillen_poset(&a6, 5, &lim()).unwrap();
        assert_eq!((a5.len(), euler_mobius(&a5.poset)), (36, 35));
    }

    #[test]
    fn f_sets_examples() {
        let s5 = sym(5);
        let a5 = subgroup(&s5, &[cyc(&[0, 1, 2], 5), cyc(&[0, 1, 2, 3, 4], 5)]).unwrap();
        assert_eq!(a5.order(), 60);
        let (f, fp) = f_sets(&s5, &a5, 2, &lim()).unwrap();
        assert_eq!((f.len(), fp.len()), (10, 10));
        assert!(f.members.iter().all(|m| m.order() == 2));
        let (f, _) = f_sets(&s5, &s5, 2, &lim()).unwrap();
        assert!(f.is_empty());

        let s6 = sym(6);
        let a6 = subgroup(&s6, &(2..6).map(|i| cyc(&[0, 1, i], 6)).collect::<Vec<_>>()).unwrap();
        let (f, fp) = f_sets(&s6, &a6, 2, &lim()).unwrap();
        // Odd involutions: 15 transpositions and 15 triple transpositions.
        assert_eq!(f.len(), 30);
        let direct = f
            .members
            .iter()
            .filter(|e| p_core(&centralizer(&a6, e), 2).is_trivial())
            .count();
        assert_eq!(fp.len(), direct);
    }

    #[test]
    fn mixed_poset_examples() {
        let s5 = sym(5);
        let a5 = subgroup(&s5, &[cyc(&[0, 1, 2], 5), cyc(&[0, 1, 2, 3, 4], 5)]).unwrap();
        let m = mixed_poset(&a5, &s5, 2, &lim()).unwrap();
        assert_eq!((m.len(), m.f_count()), (15, 10));
        for r in 0..5 {
            for e in 5..15 {
                let direct = !centralizer(&m.members[r], &m.members[e]).is_trivial();
                assert_eq!(m.poset.less(e, r), direct);
                assert!(!m.poset.less(r, e));
            }
        }
        // Same Euler characteristic as A_2(Sym(5)).
        let a = quillen_poset(&s5, 2, &lim()).unwrap();
        assert_eq!(euler_mobius(&m.poset), euler_mobius(&a.poset));
        let plain = mixed_poset(&a5, &a5, 2, &lim()).unwrap();
        assert_eq!(plain.len(), 5);
    }

    #[test]
    fn fixed_points() {
        let s5 = sym(5);
        let a5 = subgroup(&s5, &[cyc(&[0, 1, 2], 5), cyc(&[0, 1, 2, 3, 4], 5)]).unwrap();
        let b = bouc_poset(&a5, 2, &lim()).unwrap();
        let t = subgroup(&s5, &[cyc(&[0, 1], 5)]).unwrap();
        // (12) normalizes the Klein groups whose fixed point is 3, 4 or 5; the
        // count agrees with B_2 of the centralizer, a copy of Sym(3).
        let fixed = fixed_point_subposet(&b, &t);
        assert_eq!(fixed.len(), 3);
        let c = bouc_poset(&centralizer(&a5, &t), 2, &lim()).unwrap();
        assert_eq!(euler_mobius(&fixed.poset), euler_mobius(&c.poset));
        let triv = GroupHandle::trivial(s5.ambient());
        assert_eq!(fixed_point_subposet(&b, &triv).len(), 5);

        let s6 = sym(6);
        let a3 = quillen_poset(&s6, 3, &lim()).unwrap();
        let q = sylow_subgroup(&s6, 2);
        let fixed = fixed_point_subposet(&a3, &q);
        assert!(fixed.is_empty());
        assert_eq!(euler_mobius(&fixed.poset), -1);
    }

    #[test]
    fn cap_is_enforced() {
        let tight = Limits { poset: 10, ..Limits::default() };
        assert_eq!(
            quillen_poset(&alt(5), 2, &tight).unwrap_err(),
            Error::PosetCapExceeded { cap: 10 }
        );
    }
}
