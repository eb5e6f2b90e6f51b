//! Finite posets, their Euler characteristics, and the p-subgroup posets.

mod subgroups;

pub use subgroups::{
    all_p_subgroups_poset, bouc_poset, elementary_abelian_subgroups, f_sets, fixed_point_subposet,
    mixed_poset, quillen_poset, radical_subgroups, MixedPoset, PosetKind, SubgroupPoset,
};

/// A finite poset stored as transitively closed strict down- and up-sets,
/// each sorted.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poset {
    down: Vec<Vec<u32>>,
    up: Vec<Vec<u32>>,
}

impl Poset {
    /// Builds from strict down-sets that are already transitively closed.
    pub fn from_down_sets(mut down: Vec<Vec<u32>>) -> Poset {
        let n = down.len();
        let mut up = vec![Vec::new(); n];
        for (x, d) in down.iter_mut().enumerate() {
            d.sort_unstable();
            d.dedup();
            for &y in d.iter() {
                up[y as usize].push(x as u32);
            }
        }
        let poset = Poset { down, up };
        debug_assert!(poset.is_valid());
        poset
    }

    /// Builds from a strict order predicate, closing it transitively.
    pub fn from_relation(n: usize, less: impl Fn(usize, usize) -> bool) -> Poset {
        let mut reach = vec![vec![false; n]; n];
        for (a, row) in reach.iter_mut().enumerate() {
            for (b, cell) in row.iter_mut().enumerate() {
                *cell = a != b && less(a, b);
            }
        }
        for k in 0..n {
            for a in 0..n {
                if reach[a][k] {
                    for b in 0..n {
                        if reach[k][b] {
                            reach[a][b] = true;
                        }
                    }
                }
            }
        }
        let down = (0..n).map(|b| (0..n).filter(|&a| reach[a][b]).map(|a| a as u32).collect()).collect();
        Poset::from_down_sets(down)
    }

    pub fn antichain(n: usize) -> Poset {
        Poset::from_down_sets(vec![Vec::new(); n])
    }

    /// `0 < 1 < .. < n-1`.
    pub fn chain(n: usize) -> Poset {
        Poset::from_down_sets((0..n).map(|k| (0..k as u32).collect()).collect())
    }

    pub fn len(&self) -> usize {
        self.down.len()
    }

    pub fn is_empty(&self) -> bool {
        self.down.is_empty()
    }

    /// Strict elements below `x`.
    pub fn down(&self, x: usize) -> &[u32] {
        &self.down[x]
    }

    /// Strict elements above `x`.
    pub fn up(&self, x: usize) -> &[u32] {
        &self.up[x]
    }

    pub fn less(&self, a: usize, b: usize) -> bool {
        self.down[b].binary_search(&(a as u32)).is_ok()
    }

    pub fn relation_count(&self) -> usize {
        self.down.iter().map(Vec::len).sum()
    }

    fn is_valid(&self) -> bool {
        (0..self.len()).all(|x| {
            !self.less(x, x)
                && self.down[x].iter().all(|&y| self.down[y as usize].iter().all(|&z| self.less(z as usize, x)))
        })
    }

    /// The subposet on `keep`, relabelled by position in `keep`.
    pub fn induced(&self, keep: &[usize]) -> Poset {
        let mut pos = vec![u32::MAX; self.len()];
        for (i, &k) in keep.iter().enumerate() {
            pos[k] = i as u32;
        }
        let down = keep
            .iter()
            .map(|&k| {
                self.down[k].iter().map(|&y| pos[y as usize]).filter(|&y| y != u32::MAX).collect()
            })
            .collect();
        Poset::from_down_sets(down)
    }

    /// The same poset with element `x` renamed `perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> Poset {
        let mut down = vec![Vec::new(); self.len()];
        for x in 0..self.len() {
            down[perm[x]] = self.down[x].iter().map(|&y| perm[y as usize] as u32).collect();
        }
        Poset::from_down_sets(down)
    }

    /// Elements sorted so that every element follows everything below it.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&x| (self.down[x].len(), x));
        order
    }

    /// Maximal number of elements in a chain.
    pub fn height(&self) -> usize {
        let mut h = vec![0usize; self.len()];
        for x in self.linear_extension() {
            h[x] = 1 + self.down[x].iter().map(|&y| h[y as usize]).max().unwrap_or(0);
        }
        h.into_iter().max().unwrap_or(0)
    }

    /// Elements covered by `x`.
    pub fn covers(&self, x: usize) -> Vec<u32> {
        let d = &self.down[x];
        d.iter()
            .copied()
            .filter(|&y| !d.iter().any(|&z| self.less(y as usize, z as usize)))
            .collect()
    }

    /// Connected components of the comparability graph.
    pub fn component_count(&self) -> usize {
        let n = self.len();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let mut stack = vec![s];
            comp[s] = count;
            while let Some(x) = stack.pop() {
                for &y in self.down[x].iter().chain(&self.up[x]) {
                    if comp[y as usize] == usize::MAX {
                        comp[y as usize] = count;
                        stack.push(y as usize);
                    }
                }
            }
            count += 1;
        }
        count
    }
}

/// Reduced Euler characteristic of the order complex via the Möbius
/// recursion `m(x) = -1 - sum_{y<x} m(y)`, `chi = -1 - sum_x m(x)`.
pub fn euler_mobius(x: &Poset) -> i64 {
    let mut m = vec![0i64; x.len()];
    let mut total = -1i64;
    for v in x.linear_extension() {
        let s: i64 = x.down(v).iter().map(|&y| m[y as usize]).sum();
        m[v] = -1 - s;
        total -= m[v];
    }
    total
}

/// Number of chains with `k+1` elements, for each `k`.
pub fn chain_counts(x: &Poset) -> Vec<u128> {
    let h = x.height();
    let mut ends: Vec<Vec<u128>> = vec![Vec::new(); x.len()];
    let mut totals = vec![0u128; h];
    for v in x.linear_extension() {
        let mut c = vec![0u128; h];
        c[0] = 1;
        for &y in x.down(v) {
            for (k, &n) in ends[y as usize].iter().enumerate() {
                if n > 0 {
                    c[k + 1] += n;
                }
            }
        }
        while c.last() == Some(&0) {
            c.pop();
        }
        for (k, &n) in c.iter().enumerate() {
            totals[k] += n;
        }
        ends[v] = c;
    }
    totals
}

/// Reduced Euler characteristic as the alternating sum of chain counts.
pub fn euler_chain_count(x: &Poset) -> i64 {
    chain_counts(x).iter().enumerate().fold(-1i64, |acc, (k, &n)| {
        if k % 2 == 0 {
            acc + n as i64
        } else {
            acc - n as i64
        }
    })
}

/// Removes beat points until none remain. Returns the core and the indices
/// of the surviving elements.
pub fn core_reduce(x: &Poset) -> (Poset, Vec<usize>) {
    let n = x.len();
    let mut alive = vec![true; n];
    let mut up_cnt: Vec<usize> = (0..n).map(|v| x.up(v).len()).collect();
    let mut down_cnt: Vec<usize> = (0..n).map(|v| x.down(v).len()).collect();
    let mut changed = true;
    while changed {
        changed = false;
        for v in 0..n {
            if !alive[v] {
                continue;
            }
            // An up beat point: the strict up-set has a minimum y, i.e. some
            // live y > v sees everything else above v.
            let up_beat = up_cnt[v] > 0
                && x.up(v).iter().any(|&y| alive[y as usize] && up_cnt[y as usize] + 1 == up_cnt[v]);
            let down_beat = !up_beat
                && down_cnt[v] > 0
                && x.down(v).iter().any(|&y| alive[y as usize] && down_cnt[y as usize] + 1 == down_cnt[v]);
            if up_beat || down_beat {
                alive[v] = false;
                for &y in x.down(v) {
                    up_cnt[y as usize] -= 1;
                }
                for &y in x.up(v) {
                    down_cnt[y as usize] -= 1;
                }
                changed = true;
            }
        }
    }
    let keep: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    (x.induced(&keep), keep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn euler_of_small_posets() {
        assert_eq!(euler_mobius(&Poset::antichain(0)), -1);
        assert_eq!(euler_mobius(&Poset::antichain(1)), 0);
        assert_eq!(euler_mobius(&Poset::antichain(3)), 2);
        assert_eq!(euler_mobius(&Poset::chain(4)), 0);
        // Face poset of a hollow triangle: a circle.
        let circle = Poset::from_relation(6, |a, b| b >= 3 && a < 3 && (a + b) % 3 != 2);
        assert_eq!(circle.height(), 2);
        assert_eq!(euler_mobius(&circle), -1);
        assert_eq!(euler_chain_count(&circle), -1);
    }

    #[test]
    fn core_of_cone_and_antichain() {
        let (core, _) = core_reduce(&Poset::chain(3));
        assert_eq!(core.len(), 1);
        let (core, kept) = core_reduce(&Poset::antichain(4));
        assert_eq!((core.len(), kept), (4, vec![0, 1, 2, 3]));
    }

    #[test]
    fn transitive_closure() {
        let p = Poset::from_relation(3, |a, b| b == a + 1);
        assert!(p.less(0, 2));
        assert_eq!(p.covers(2), vec![1]);
        assert_eq!(p.component_count(), 1);
    }

    fn arb_poset() -> impl Strategy<Value = Poset> {
        (1usize..9).prop_flat_map(|n| {
            prop::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
                // Orient edges upward by index to stay acyclic.
                Poset::from_relation(n, |a, b| a < b && bits[a * n + b])
            })
        })
    }

    proptest! {
        #[test]
        fn mobius_matches_chain_count(p in arb_poset()) {
            prop_assert_eq!(euler_mobius(&p), euler_chain_count(&p));
        }

        #[test]
        fn core_preserves_euler(p in arb_poset()) {
            let (core, _) = core_reduce(&p);
            prop_assert_eq!(euler_mobius(&core), euler_mobius(&p));
        }

        #[test]
        fn relabel_preserves_euler(p in arb_poset(), seed in any::<u64>()) {
            let n = p.len();
            let mut perm: Vec<usize> = (0..n).collect();
            let mut s = seed | 1;
            for i in (1..n).rev() {
                s ^= s << 13; s ^= s >> 7; s ^= s << 17;
                perm.swap(i, (s % (i as u64 + 1)) as usize);
            }
            prop_assert_eq!(euler_mobius(&p.relabel(&perm)), euler_mobius(&p));
        }
    }
}
