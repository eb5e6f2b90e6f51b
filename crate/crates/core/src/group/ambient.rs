use std::hash::BuildHasher;
use std::sync::Arc;

use hashbrown::HashTable;
use num_integer::Integer;
use rustc_hash::FxBuildHasher;

use super::Permutation;
use crate::{Error, Result};

/// A fully enumerated permutation group. Elements are indexed `0..order` in
/// lexicographic order of their image arrays, so index 0 is the identity.
pub struct PermGroup {
    degree: usize,
    data: Vec<u16>,
    table: HashTable<u32>,
    inverse: Vec<u32>,
    orders: Vec<u32>,
    generators: Vec<u32>,
}

fn slice_hash(s: &[u16]) -> u64 {
    FxBuildHasher.hash_one(s)
}

/// Runs `f` on a scratch buffer of length `n` without touching the heap for
/// small degrees.
fn with_buf<R>(n: usize, f: impl FnOnce(&mut [u16]) -> R) -> R {
    if n <= 128 {
        let mut a = [0u16; 128];
        f(&mut a[..n])
    } else {
        let mut v = vec![0u16; n];
        f(&mut v)
    }
}

impl PermGroup {
    /// Enumerates the group generated by `gens`, failing once more than `cap`
    /// elements have been found.
    pub fn generate(gens: &[Permutation], cap: usize) -> Result<Arc<PermGroup>> {
        let degree = gens.first().map_or(0, |g| g.degree());
        if gens.iter().any(|g| g.degree() != degree) {
            return Err(Error::InvalidPermutation("generators of different degrees".into()));
        }
        let mut data: Vec<u16> = Permutation::identity(degree).images().to_vec();
        let mut table: HashTable<u32> = HashTable::new();
        table.insert_unique(slice_hash(&data), 0, |_| 0);
        let gen_imgs: Vec<&[u16]> = gens.iter().map(|g| g.images()).collect();
        let mut buf = vec![0u16; degree];
        let mut next = 0usize;
        let mut count = 1usize;
        while next < count {
            for g in &gen_imgs {
                let x = &data[next * degree..(next + 1) * degree];
                for i in 0..degree {
                    buf[i] = g[x[i] as usize];
                }
                let h = slice_hash(&buf);
                let found = table
                    .find(h, |&k| data[k as usize * degree..(k as usize + 1) * degree] == buf[..])
                    .is_some();
                if !found {
                    if count >= cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    data.extend_from_slice(&buf);
                    let d = &data;
                    table.insert_unique(h, count as u32, |&k| {
                        slice_hash(&d[k as usize * degree..(k as usize + 1) * degree])
                    });
                    count += 1;
                }
            }
            next += 1;
        }

        // Canonical lexicographic order.
        let mut idx: Vec<u32> = (0..count as u32).collect();
        let chunk = |k: u32| &data[k as usize * degree..(k as usize + 1) * degree];
        idx.sort_unstable_by(|&a, &b| chunk(a).cmp(chunk(b)));
        let mut sorted = Vec::with_capacity(data.len());
        for &k in &idx {
            sorted.extend_from_slice(chunk(k));
        }
        let mut group = PermGroup {
            degree,
            data: sorted,
            table: HashTable::with_capacity(count),
            inverse: Vec::new(),
            orders: Vec::new(),
            generators: Vec::new(),
        };
        for k in 0..count {
            let h = slice_hash(group.images(k as u32));
            let d = &group.data;
            group.table.insert_unique(h, k as u32, |&j| {
                slice_hash(&d[j as usize * degree..(j as usize + 1) * degree])
            });
        }
        group.inverse = (0..count as u32)
            .map(|k| {
                let inv = Permutation::from_raw(group.images(k).to_vec()).inverse();
                group.index_of(inv.images()).expect("group closed under inverses")
            })
            .collect();
        group.orders = (0..count as u32)
            .map(|k| Permutation::from_raw(group.images(k).to_vec()).order() as u32)
            .collect();
        let mut gen_idx: Vec<u32> = gens
            .iter()
            .map(|g| group.index_of(g.images()).expect("generator in group"))
            .filter(|&k| k != 0)
            .collect();
        gen_idx.sort_unstable();
        gen_idx.dedup();
        group.generators = group.shrink_generators(gen_idx);
        Ok(Arc::new(group))
    }

    /// Tries to replace a long generating list by two or three elements drawn
    /// from a fixed pseudo-random sequence; keeps the original list otherwise.
    fn shrink_generators(&self, gens: Vec<u32>) -> Vec<u32> {
        let n = self.order() as u64;
        if gens.len() <= 2 || n < 64 {
            return gens;
        }
        let mut state = 0x9e37_79b9_7f4a_7c15u64;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % n) as u32
        };
        for size in [2usize, 3] {
            for _ in 0..24 {
                let mut cand: Vec<u32> = (0..size).map(|_| next()).collect();
                cand.sort_unstable();
                cand.dedup();
                if cand.len() < size.min(gens.len()) || cand.contains(&0) {
                    continue;
                }
                if self.closure_size(&cand) == self.order() {
                    return cand;
                }
            }
        }
        gens
    }

    fn closure_size(&self, gens: &[u32]) -> usize {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut queue = vec![0u32];
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            i += 1;
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    queue.push(y);
                }
            }
        }
        queue.len()
    }

    pub fn order(&self) -> usize {
        self.orders.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn images(&self, k: u32) -> &[u16] {
        let k = k as usize;
        &self.data[k * self.degree..(k + 1) * self.degree]
    }

    pub fn permutation(&self, k: u32) -> Permutation {
        Permutation::from_raw(self.images(k).to_vec())
    }

    pub fn index_of(&self, images: &[u16]) -> Option<u32> {
        if images.len() != self.degree {
            return None;
        }
        self.table.find(slice_hash(images), |&k| self.images(k) == images).copied()
    }

    /// Index of `a` followed by `b`.
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        with_buf(self.degree, |buf| {
            let (x, y) = (self.images(a), self.images(b));
            for i in 0..buf.len() {
                buf[i] = y[x[i] as usize];
            }
            self.index_of(buf).expect("group closed under products")
        })
    }

    pub fn inv(&self, a: u32) -> u32 {
        self.inverse[a as usize]
    }

    /// `g^-1 x g`.
    pub fn conj(&self, x: u32, g: u32) -> u32 {
        with_buf(self.degree, |buf| {
            let (xi, gi, ginv) = (self.images(x), self.images(g), self.images(self.inv(g)));
            for i in 0..buf.len() {
                buf[i] = gi[xi[ginv[i] as usize] as usize];
            }
            self.index_of(buf).expect("group closed under conjugation")
        })
    }

    pub fn elem_order(&self, a: u32) -> u32 {
        self.orders[a as usize]
    }

    pub fn pow(&self, a: u32, k: u64) -> u32 {
        let k = k % self.elem_order(a) as u64;
        let mut acc = 0u32;
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn commute(&self, a: u32, b: u32) -> bool {
        let (x, y) = (self.images(a), self.images(b));
        (0..self.degree).all(|i| y[x[i] as usize] == x[y[i] as usize])
    }

    /// True when the element order is a positive power of `p`.
    pub fn is_p_element(&self, a: u32, p: u64) -> bool {
        let mut o = self.elem_order(a) as u64;
        if o == 1 {
            return false;
        }
        while o.is_multiple_of(p) {
            o /= p;
        }
        o == 1
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> u64 {
        self.orders.iter().fold(1u64, |acc, &o| acc.lcm(&(o as u64)))
    }
}

impl std::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "PermGroup(order={}, degree={})", self.order(), self.degree)
    }
}
