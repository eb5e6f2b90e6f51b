//! Abstract simplicial complexes and their reduced integral homology.

mod homology;
mod snf;

pub use homology::{
    homology, is_cohen_macaulay, is_homology_spherical, mv_rank_identity_check, CmReport,
    DegreeHomology, HomologyProfile, MvMode, MvReport,
};
pub use snf::{smith, Column, SmithForm};

use rustc_hash::FxHashSet;

use crate::poset::Poset;
use crate::{Error, Limits, Result};

/// A simplicial complex on vertex labels `0..vertex_count`. Simplices of
/// each dimension are stored flat and sorted lexicographically; a label
/// need not be a vertex.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SimplicialComplex {
    vertex_count: usize,
    faces: Vec<Vec<u32>>,
}

impl SimplicialComplex {
    /// The void complex on `n` labels.
    pub fn empty(n: usize) -> SimplicialComplex {
        SimplicialComplex { vertex_count: n, faces: Vec::new() }
    }

    /// The downward closure of `facets`.
    pub fn from_facets(n: usize, facets: &[Vec<u32>], limits: &Limits) -> Result<SimplicialComplex> {
        let mut sets: Vec<FxHashSet<Vec<u32>>> = Vec::new();
        let mut total = 0usize;
        for f in facets {
            let mut f = f.clone();
            f.sort_unstable();
            f.dedup();
            assert!(f.iter().all(|&v| (v as usize) < n), "vertex label out of range");
            let k = f.len();
            assert!(k < 32, "facet too large");
            for mask in 1u32..(1 << k) {
                let s: Vec<u32> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| f[i]).collect();
                let d = s.len() - 1;
                if sets.len() <= d {
                    sets.resize_with(d + 1, FxHashSet::default);
                }
                if sets[d].insert(s) {
                    total += 1;
                    if total > limits.simplices {
                        return Err(Error::MatrixTooLarge { cap: limits.simplices });
                    }
                }
            }
        }
        Ok(Self::from_sets(n, sets))
    }

    fn from_sets(n: usize, sets: Vec<FxHashSet<Vec<u32>>>) -> SimplicialComplex {
        let faces = sets
            .into_iter()
            .map(|set| {
                let mut v: Vec<Vec<u32>> = set.into_iter().collect();
                v.sort_unstable();
                v.concat()
            })
            .collect();
        let mut k = SimplicialComplex { vertex_count: n, faces };
        k.trim();
        k
    }

    /// Builds from a family already closed under faces.
    fn from_closed(n: usize, simplices: impl IntoIterator<Item = Vec<u32>>) -> SimplicialComplex {
        let mut sets: Vec<FxHashSet<Vec<u32>>> = Vec::new();
        for s in simplices {
            let d = s.len() - 1;
            if sets.len() <= d {
                sets.resize_with(d + 1, FxHashSet::default);
            }
            sets[d].insert(s);
        }
        let k = Self::from_sets(n, sets);
        debug_assert!(k.is_closed());
        k
    }

    fn trim(&mut self) {
        while self.faces.last().is_some_and(Vec::is_empty) {
            self.faces.pop();
        }
    }

    fn is_closed(&self) -> bool {
        (1..self.faces.len()).all(|d| {
            self.simplices(d).all(|s| (0..s.len()).all(|i| {
                let f: Vec<u32> = s.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, &v)| v).collect();
                self.index_of(&f).is_some()
            }))
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Dimension, `-1` for the void complex.
    pub fn dim(&self) -> isize {
        self.faces.len() as isize - 1
    }

    /// Number of `d`-simplices.
    pub fn count(&self, d: usize) -> usize {
        self.faces.get(d).map_or(0, |f| f.len() / (d + 1))
    }

    pub fn face_counts(&self) -> Vec<usize> {
        (0..self.faces.len()).map(|d| self.count(d)).collect()
    }

    pub fn total(&self) -> usize {
        self.face_counts().iter().sum()
    }

    /// The `d`-simplices in lexicographic order.
    pub fn simplices(&self, d: usize) -> impl Iterator<Item = &[u32]> {
        self.faces.get(d).map(|f| f.as_slice()).unwrap_or(&[]).chunks_exact(d + 1)
    }

    pub fn all_simplices(&self) -> impl Iterator<Item = &[u32]> {
        (0..self.faces.len()).flat_map(move |d| self.simplices(d))
    }

    /// Vertices actually present.
    pub fn vertices(&self) -> Vec<u32> {
        self.faces.first().cloned().unwrap_or_default()
    }

    /// Position of a sorted simplex among those of its dimension.
    pub fn index_of(&self, s: &[u32]) -> Option<usize> {
        if s.is_empty() {
            return None;
        }
        let d = s.len() - 1;
        let flat = self.faces.get(d)?;
        let n = flat.len() / (d + 1);
        let chunk = |i: usize| &flat[i * (d + 1)..(i + 1) * (d + 1)];
        let (mut lo, mut hi) = (0, n);
        while lo < hi {
            let mid = (lo + hi) / 2;
            match chunk(mid).cmp(s) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return Some(mid),
            }
        }
        None
    }

    pub fn contains(&self, s: &[u32]) -> bool {
        s.is_empty() || self.index_of(s).is_some()
    }

    /// Reduced Euler characteristic from face counts.
    pub fn euler(&self) -> i64 {
        self.face_counts().iter().enumerate().fold(-1, |acc, (d, &c)| {
            if d % 2 == 0 {
                acc + c as i64
            } else {
                acc - c as i64
            }
        })
    }

    /// Vertex `v` renamed `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> SimplicialComplex {
        Self::from_closed(
            self.vertex_count,
            self.all_simplices().map(|s| {
                let mut t: Vec<u32> = s.iter().map(|&v| perm[v as usize] as u32).collect();
                t.sort_unstable();
                t
            }),
        )
    }

    /// `Lk(σ) = {τ : τ ∪ σ ∈ K, τ ∩ σ = ∅}`; the whole complex for `σ = ∅`.
    pub fn link(&self, sigma: &[u32]) -> SimplicialComplex {
        let out = self
            .all_simplices()
            .filter(|s| s.len() > sigma.len() && sigma.iter().all(|v| s.binary_search(v).is_ok()))
            .map(|s| s.iter().copied().filter(|v| sigma.binary_search(v).is_err()).collect::<Vec<u32>>());
        Self::from_closed(self.vertex_count, out)
    }

    /// Simplices `τ` with `τ ∪ σ ∈ K`.
    pub fn star(&self, sigma: &[u32]) -> SimplicialComplex {
        let out = self
            .all_simplices()
            .filter(|s| {
                let mut u: Vec<u32> = s.iter().chain(sigma).copied().collect();
                u.sort_unstable();
                u.dedup();
                self.contains(&u)
            })
            .map(<[u32]>::to_vec);
        Self::from_closed(self.vertex_count, out)
    }

    /// Simplices all of whose vertices lie in `w`.
    pub fn full_subcomplex(&self, w: &[u32]) -> SimplicialComplex {
        let mut keep = vec![false; self.vertex_count];
        for &v in w {
            keep[v as usize] = true;
        }
        Self::from_closed(
            self.vertex_count,
            self.all_simplices().filter(|s| s.iter().all(|&v| keep[v as usize])).map(<[u32]>::to_vec),
        )
    }

    /// The simplices of `self` that are not in `l`.
    pub fn complement(&self, l: &SimplicialComplex) -> Vec<Vec<u32>> {
        self.all_simplices().filter(|s| !l.contains(s)).map(<[u32]>::to_vec).collect()
    }

    /// `K1 * K2`; labels of `other` are shifted past those of `self`.
    pub fn join(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let off = self.vertex_count as u32;
        let mut out: Vec<Vec<u32>> = self.all_simplices().map(<[u32]>::to_vec).collect();
        let right: Vec<Vec<u32>> =
            other.all_simplices().map(|t| t.iter().map(|&v| v + off).collect()).collect();
        for s in self.all_simplices() {
            for t in &right {
                out.push(s.iter().chain(t).copied().collect());
            }
        }
        out.extend(right);
        Self::from_closed(self.vertex_count + other.vertex_count, out)
    }

    /// Adds one vertex per entry of `fixed`, coned over the full subcomplex
    /// on that vertex set. The new vertices get labels `n, n+1, ..`.
    pub fn extend(&self, fixed: &[Vec<u32>]) -> SimplicialComplex {
        let n = self.vertex_count;
        let mut out: Vec<Vec<u32>> = self.all_simplices().map(<[u32]>::to_vec).collect();
        for (i, w) in fixed.iter().enumerate() {
            let apex = (n + i) as u32;
            out.push(vec![apex]);
            for s in self.full_subcomplex(w).all_simplices() {
                let mut t = s.to_vec();
                t.push(apex);
                out.push(t);
            }
        }
        Self::from_closed(n + fixed.len(), out)
    }
}

/// Chains of `x` as simplices.
pub fn order_complex(x: &Poset, limits: &Limits) -> Result<SimplicialComplex> {
    let mut sets: Vec<FxHashSet<Vec<u32>>> = Vec::new();
    let mut total = 0usize;
    let mut stack: Vec<Vec<u32>> = (0..x.len() as u32).map(|v| vec![v]).collect();
    while let Some(chain) = stack.pop() {
        total += 1;
        if total > limits.simplices {
            return Err(Error::MatrixTooLarge { cap: limits.simplices });
        }
        let top = *chain.last().unwrap() as usize;
        for &y in x.up(top) {
            let mut c = chain.clone();
            c.push(y);
            stack.push(c);
        }
        let d = chain.len() - 1;
        if sets.len() <= d {
            sets.resize_with(d + 1, FxHashSet::default);
        }
        let mut s = chain;
        s.sort_unstable();
        sets[d].insert(s);
    }
    Ok(SimplicialComplex::from_sets(x.len(), sets))
}
