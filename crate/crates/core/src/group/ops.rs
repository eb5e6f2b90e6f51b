//! Subgroup operators on enumerated groups.

use std::collections::VecDeque;

use rustc_hash::{FxHashMap, FxHashSet};
use serde::Serialize;

use super::handle::{closure, greedy_generators};
use super::GroupHandle;
use crate::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

pub fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// Largest power of `p` dividing `n`.
pub fn p_part(mut n: u64, p: u64) -> u64 {
    let mut acc = 1;
    while n > 0 && n.is_multiple_of(p) {
        n /= p;
        acc *= p;
    }
    acc
}

pub fn centralizer_of_element(g: &GroupHandle, x: u32) -> GroupHandle {
    let amb = g.ambient();
    let elems = g.elements().iter().copied().filter(|&y| amb.commute(x, y)).collect();
    GroupHandle::from_elements(amb, elems)
}

/// `C_G(S)`.
pub fn centralizer(g: &GroupHandle, s: &GroupHandle) -> GroupHandle {
    let amb = g.ambient();
    let gens = s.generators();
    let elems = g
        .elements()
        .iter()
        .copied()
        .filter(|&y| gens.iter().all(|&x| amb.commute(x, y)))
        .collect();
    GroupHandle::from_elements(amb, elems)
}

pub fn center(g: &GroupHandle) -> GroupHandle {
    centralizer(g, g)
}

/// Whether `x` maps `s` onto itself under conjugation.
pub fn normalizes(s: &GroupHandle, x: u32) -> bool {
    let amb = s.ambient();
    s.generators().iter().all(|&t| s.contains(amb.conj(t, x)))
}

/// `N_G(S)`.
pub fn normalizer(g: &GroupHandle, s: &GroupHandle) -> GroupHandle {
    if s.is_trivial() {
        return g.clone();
    }
    let elems = g.elements().iter().copied().filter(|&y| normalizes(s, y)).collect();
    GroupHandle::from_elements(g.ambient(), elems)
}

pub fn is_normal(g: &GroupHandle, s: &GroupHandle) -> bool {
    s.is_subgroup_of(g) && g.generators().iter().all(|&x| normalizes(s, x))
}

/// `S^x = x^-1 S x`.
pub fn conjugate(s: &GroupHandle, x: u32) -> GroupHandle {
    let amb = s.ambient();
    let elems = s.elements().iter().map(|&t| amb.conj(t, x)).collect();
    let gens = s.generators().iter().map(|&t| amb.conj(t, x)).collect();
    GroupHandle::from_elements_and_generators(amb, elems, gens)
}

pub fn intersection(a: &GroupHandle, b: &GroupHandle) -> GroupHandle {
    let elems = sorted_intersection(a.elements(), b.elements());
    GroupHandle::from_elements(a.ambient(), elems)
}

pub(crate) fn sorted_intersection(a: &[u32], b: &[u32]) -> Vec<u32> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// `<A, B>`.
pub fn join(a: &GroupHandle, b: &GroupHandle) -> GroupHandle {
    let gens: Vec<u32> = a.generators().iter().chain(b.generators()).copied().collect();
    GroupHandle::generated_by(a.ambient(), &gens)
}

/// Extends the `p`-group `s` by an element `y` normalizing it with `y^p in s`.
/// The result is `s ∪ s·y ∪ .. ∪ s·y^(p-1)`.
pub(crate) fn extend_by(s: &GroupHandle, y: u32, p: u64) -> GroupHandle {
    let amb = s.ambient();
    let mut elems = s.elements().to_vec();
    let mut yk = y;
    for _ in 1..p {
        elems.extend(s.elements().iter().map(|&t| amb.mul(t, yk)));
        yk = amb.mul(yk, y);
    }
    let mut gens = s.generators().to_vec();
    gens.push(y);
    GroupHandle::from_elements_and_generators(amb, elems, gens)
}

/// A Sylow `p`-subgroup grown from the first `p`-element of `g`, extending
/// within normalizers. Trivial when `p` does not divide `|G|`.
pub fn sylow_subgroup(g: &GroupHandle, p: u64) -> GroupHandle {
    let amb = g.ambient();
    let target = p_part(g.order() as u64, p) as usize;
    let Some(&first) = g.elements().iter().find(|&&x| amb.is_p_element(x, p)) else {
        return GroupHandle::trivial(amb);
    };
    let mut s = GroupHandle::generated_by(amb, &[first]);
    while s.order() < target {
        let n = normalizer(g, &s);
        let y = n
            .elements()
            .iter()
            .copied()
            .find(|&y| !s.contains(y) && amb.is_p_element(y, p) && s.contains(amb.pow(y, p)))
            .expect("a p-subgroup below Sylow order grows inside its normalizer");
        s = extend_by(&s, y, p);
    }
    s
}

/// All distinct conjugates of `s` under `g`, in discovery order.
pub fn conjugates(g: &GroupHandle, s: &GroupHandle) -> Vec<GroupHandle> {
    let mut seen: FxHashSet<Vec<u32>> = FxHashSet::default();
    seen.insert(s.elements().to_vec());
    let mut out = vec![s.clone()];
    let mut i = 0;
    while i < out.len() {
        let t = out[i].clone();
        i += 1;
        for &x in g.generators() {
            let c = conjugate(&t, x);
            if seen.insert(c.elements().to_vec()) {
                out.push(c);
            }
        }
    }
    out
}

/// Intersects the conjugates of the Sylow subgroup, stopping once the running
/// intersection has at most `floor` elements.
fn sylow_core(g: &GroupHandle, p: u64, floor: usize) -> Vec<u32> {
    let s = sylow_subgroup(g, p);
    let mut core = s.elements().to_vec();
    if core.len() <= floor {
        return core;
    }
    let mut seen: FxHashSet<Vec<u32>> = FxHashSet::default();
    seen.insert(core.clone());
    let mut queue = VecDeque::from([s]);
    while let Some(t) = queue.pop_front() {
        for &x in g.generators() {
            let c = conjugate(&t, x);
            if seen.insert(c.elements().to_vec()) {
                core = sorted_intersection(&core, c.elements());
                if core.len() <= floor {
                    return core;
                }
                queue.push_back(c);
            }
        }
    }
    core
}

/// `O_p(G)`: the intersection of all Sylow `p`-subgroups.
pub fn p_core(g: &GroupHandle, p: u64) -> GroupHandle {
    GroupHandle::from_elements(g.ambient(), sylow_core(g, p, 1))
}

/// Whether `O_p(G) = R` for a normal `p`-subgroup `R` of `G`.
pub(crate) fn p_core_equals(g: &GroupHandle, p: u64, r: &GroupHandle) -> bool {
    sylow_core(g, p, r.order()).len() == r.order()
}

/// `O^{p'}(G)`: generated by the `p`-elements.
pub fn o_p_prime_residual(g: &GroupHandle, p: u64) -> GroupHandle {
    let amb = g.ambient();
    let gens = greedy_generators(amb, g.elements(), |x| amb.is_p_element(x, p));
    GroupHandle::generated_by(amb, &gens)
}

/// `Ω₁(G)`: generated by the elements of order `p`.
pub fn omega1(g: &GroupHandle, p: u64) -> GroupHandle {
    let amb = g.ambient();
    let gens = greedy_generators(amb, g.elements(), |x| amb.elem_order(x) as u64 == p);
    GroupHandle::generated_by(amb, &gens)
}

pub fn is_self_centralising(g: &GroupHandle, h: &GroupHandle) -> bool {
    centralizer(g, h).is_subgroup_of(h)
}

/// Whether `g` is elementary abelian of exponent `p` (and non-trivial).
pub fn is_elementary_abelian(g: &GroupHandle, p: u64) -> bool {
    let amb = g.ambient();
    !g.is_trivial()
        && g.elements().iter().all(|&x| x == 0 || amb.elem_order(x) as u64 == p)
        && g.generators().iter().all(|&x| g.generators().iter().all(|&y| amb.commute(x, y)))
}

/// One `G`-conjugacy orbit of a [`SubgroupSet`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubgroupOrbit {
    /// Index of the lexicographically least member.
    pub representative: usize,
    pub members: Vec<usize>,
}

impl SubgroupOrbit {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// A family of subgroups of one ambient group, canonically sorted.
#[derive(Clone, Debug, Default)]
pub struct SubgroupSet {
    pub members: Vec<GroupHandle>,
}

impl SubgroupSet {
    pub fn new(mut members: Vec<GroupHandle>) -> Self {
        members.sort();
        members.dedup();
        SubgroupSet { members }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn orbits(&self, g: &GroupHandle) -> Result<Vec<SubgroupOrbit>> {
        subgroup_conjugacy_orbits(g, &self.members)
    }
}

/// Partitions `members` into `G`-conjugacy orbits. Orbits are listed by their
/// representative, the least member in element-set order.
pub fn subgroup_conjugacy_orbits(
    g: &GroupHandle,
    members: &[GroupHandle],
) -> Result<Vec<SubgroupOrbit>> {
    let index: FxHashMap<&[u32], usize> =
        members.iter().enumerate().map(|(i, m)| (m.elements(), i)).collect();
    let mut orbit_of = vec![usize::MAX; members.len()];
    let mut orbits = Vec::new();
    for start in 0..members.len() {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        orbit_of[start] = id;
        let mut list = vec![start];
        let mut i = 0;
        while i < list.len() {
            let m = &members[list[i]];
            i += 1;
            for &x in g.generators() {
                let c = conjugate(m, x);
                let &j = index.get(c.elements()).ok_or(Error::NotInvariant)?;
                if orbit_of[j] == usize::MAX {
                    orbit_of[j] = id;
                    list.push(j);
                }
            }
        }
        let representative = *list.iter().min_by_key(|&&k| &members[k]).unwrap();
        list.sort_by(|&a, &b| members[a].cmp(&members[b]));
        orbits.push(SubgroupOrbit { representative, members: list });
    }
    orbits.sort_by(|a, b| members[a.representative].cmp(&members[b.representative]));
    Ok(orbits)
}

/// Elements of `g` whose order is exactly `p`.
pub fn order_p_elements(g: &GroupHandle, p: u64) -> Vec<u32> {
    let amb = g.ambient();
    g.elements().iter().copied().filter(|&x| amb.elem_order(x) as u64 == p).collect()
}

/// Sorted closure of the given generators; exposed for cross-checks.
pub fn element_closure(g: &GroupHandle, gens: &[u32]) -> Vec<u32> {
    closure(g.ambient(), gens)
}
