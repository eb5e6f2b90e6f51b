//! Smith normal form of sparse integer matrices.
//!
//! Unit pivots are eliminated sparsely with checked `i64` arithmetic; on
//! overflow the elimination restarts over `BigInt`. Whatever survives is
//! reduced densely over `BigInt`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A sparse column: `(row, value)` pairs sorted by row, no zeros.
pub type Column<T> = Vec<(u32, T)>;

/// Rank and the invariant factors greater than one, in divisibility order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

trait Coef: Clone {
    fn vanishes(&self) -> bool;
    fn is_unit(&self) -> bool;
    /// `a - f * b`, or `None` on overflow.
    fn mul_sub(a: &Self, f: &Self, b: &Self) -> Option<Self>;
    /// `a * b`, or `None` on overflow.
    fn mul(a: &Self, b: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    fn into_big(self) -> BigInt;
}

impl Coef for i64 {
    fn vanishes(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn mul_sub(a: &i64, f: &i64, b: &i64) -> Option<i64> {
        a.checked_sub(f.checked_mul(*b)?)
    }
    fn mul(a: &i64, b: &i64) -> Option<i64> {
        a.checked_mul(*b)
    }
    fn neg(&self) -> Option<i64> {
        self.checked_neg()
    }
    fn into_big(self) -> BigInt {
        BigInt::from(self)
    }
}

impl Coef for BigInt {
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
    fn mul_sub(a: &BigInt, f: &BigInt, b: &BigInt) -> Option<BigInt> {
        Some(a - f * b)
    }
    fn mul(a: &BigInt, b: &BigInt) -> Option<BigInt> {
        Some(a * b)
    }
    fn neg(&self) -> Option<BigInt> {
        Some(-self)
    }
    fn into_big(self) -> BigInt {
        self
    }
}

/// `a - f * b` on sparse columns.
fn axpy<T: Coef>(a: &Column<T>, f: &T, b: &Column<T>) -> Option<Column<T>> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ra = a.get(i).map_or(u32::MAX, |e| e.0);
        let rb = b.get(j).map_or(u32::MAX, |e| e.0);
        if ra < rb {
            out.push(a[i].clone());
            i += 1;
        } else if rb < ra {
            let v = T::mul(f, &b[j].1)?.neg()?;
            out.push((rb, v));
            j += 1;
        } else {
            let v = T::mul_sub(&a[i].1, f, &b[j].1)?;
            if !v.vanishes() {
                out.push((ra, v));
            }
            i += 1;
            j += 1;
        }
    }
    Some(out)
}

/// Eliminates unit pivots. Returns the number of pivots and the columns
/// that survive, or `None` on overflow.
fn eliminate_units<T: Coef>(nrows: usize, mut cols: Vec<Column<T>>) -> Option<(usize, Vec<Column<T>>)> {
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); nrows];
    for (c, col) in cols.iter().enumerate() {
        for (r, _) in col {
            rows[*r as usize].push(c as u32);
        }
    }
    let mut alive = vec![true; cols.len()];
    let mut order: Vec<usize> = (0..cols.len()).collect();
    order.sort_by_key(|&c| cols[c].len());
    let mut rank = 0;
    let mut progress = true;
    while progress {
        progress = false;
        for &c in &order {
            if !alive[c] || cols[c].is_empty() {
                continue;
            }
            // Unit entry whose row is shortest, to limit fill-in.
            let Some((r, u)) = cols[c]
                .iter()
                .filter(|e| e.1.is_unit())
                .min_by_key(|e| rows[e.0 as usize].len())
                .cloned()
            else {
                continue;
            };
            let pivot = std::mem::take(&mut cols[c]);
            alive[c] = false;
            let users = std::mem::take(&mut rows[r as usize]);
            for j in users {
                let j = j as usize;
                if !alive[j] {
                    continue;
                }
                let Ok(k) = cols[j].binary_search_by_key(&r, |e| e.0) else { continue };
                // u is its own inverse.
                let f = T::mul(&cols[j][k].1, &u)?;
                let updated = axpy(&cols[j], &f, &pivot)?;
                for (row, _) in &updated {
                    if *row != r && cols[j].binary_search_by_key(row, |e| e.0).is_err() {
                        rows[*row as usize].push(j as u32);
                    }
                }
                cols[j] = updated;
            }
            rank += 1;
            progress = true;
        }
    }
    let rest = cols.into_iter().zip(alive).filter(|(c, a)| *a && !c.is_empty()).map(|(c, _)| c).collect();
    Some((rank, rest))
}

/// Diagonal entries (nonzero, unnormalized) of a dense SNF reduction.
fn dense_diagonal(mut m: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let nr = m.len();
    let nc = if nr == 0 { 0 } else { m[0].len() };
    let mut diag = Vec::new();
    let mut t = 0;
    while t < nr.min(nc) {
        // Smallest nonzero entry of the remaining block.
        let mut best: Option<(usize, usize)> = None;
        for i in t..nr {
            for j in t..nc {
                if !m[i][j].is_zero() && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        m.swap(t, bi);
        for row in m.iter_mut() {
            row.swap(t, bj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..nr {
                if !m[i][t].is_zero() {
                    let q = m[i][t].div_floor(&m[t][t]);
                    for j in t..nc {
                        let v = &q * &m[t][j];
                        m[i][j] -= v;
                    }
                    if !m[i][t].is_zero() {
                        clean = false;
                    }
                }
            }
            for j in t + 1..nc {
                if !m[t][j].is_zero() {
                    let q = m[t][j].div_floor(&m[t][t]);
                    for row in m.iter_mut().skip(t) {
                        let v = &q * &row[t];
                        row[j] -= v;
                    }
                    if !m[t][j].is_zero() {
                        clean = false;
                    }
                }
            }
            if clean {
                break;
            }
            // Move the smallest remainder in row or column t to the pivot.
            let mut bi = t;
            let mut bj = t;
            for i in t + 1..nr {
                if !m[i][t].is_zero() && m[i][t].abs() < m[bi][bj].abs() {
                    (bi, bj) = (i, t);
                }
            }
            for j in t + 1..nc {
                if !m[t][j].is_zero() && m[t][j].abs() < m[bi][bj].abs() {
                    (bi, bj) = (t, j);
                }
            }
            m.swap(t, bi);
            for row in m.iter_mut() {
                row.swap(t, bj);
            }
        }
        diag.push(m[t][t].abs());
        t += 1;
    }
    diag
}

/// Turns nonzero diagonal entries into a divisibility chain.
fn normalize_chain(mut d: Vec<BigInt>) -> Vec<BigInt> {
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            let g = d[i].gcd(&d[j]);
            let l = d[i].lcm(&d[j]);
            d[i] = g;
            d[j] = l;
        }
    }
    d
}

fn finish(nrows: usize, rank: usize, rest: Vec<Column<BigInt>>) -> SmithForm {
    let mut row_ids: Vec<u32> = rest.iter().flat_map(|c| c.iter().map(|e| e.0)).collect();
    row_ids.sort_unstable();
    row_ids.dedup();
    debug_assert!(row_ids.len() <= nrows);
    let mut dense = vec![vec![BigInt::zero(); rest.len()]; row_ids.len()];
    for (j, col) in rest.into_iter().enumerate() {
        for (r, v) in col {
            let i = row_ids.binary_search(&r).unwrap();
            dense[i][j] = v;
        }
    }
    let diag = normalize_chain(dense_diagonal(dense));
    let rank = rank + diag.len();
    let torsion = diag.into_iter().filter(|v| !v.is_one()).collect();
    SmithForm { rank, torsion }
}

/// Smith normal form of a sparse `nrows`-row matrix given by columns.
pub fn smith(nrows: usize, cols: &[Column<i64>]) -> SmithForm {
    if let Some((rank, rest)) = eliminate_units(nrows, cols.to_vec()) {
        let rest = rest
            .into_iter()
            .map(|c| c.into_iter().map(|(r, v)| (r, v.into_big())).collect())
            .collect();
        return finish(nrows, rank, rest);
    }
    let big: Vec<Column<BigInt>> =
        cols.iter().map(|c| c.iter().map(|&(r, v)| (r, BigInt::from(v))).collect()).collect();
    let (rank, rest) = eliminate_units(nrows, big).expect("BigInt arithmetic does not overflow");
    finish(nrows, rank, rest)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sparse(m: &[Vec<i64>]) -> (usize, Vec<Column<i64>>) {
        let nr = m.len();
        let nc = if nr == 0 { 0 } else { m[0].len() };
        let cols = (0..nc)
            .map(|j| (0..nr).filter(|&i| m[i][j] != 0).map(|i| (i as u32, m[i][j])).collect())
            .collect();
        (nr, cols)
    }

    fn det(mut a: Vec<Vec<BigInt>>) -> BigInt {
        // Cofactor expansion; fine for the tiny minors used here.
        let n = a.len();
        if n == 0 {
            return BigInt::one();
        }
        let mut total = BigInt::zero();
        for j in 0..n {
            if a[0][j].is_zero() {
                continue;
            }
            let minor: Vec<Vec<BigInt>> =
                a[1..].iter().map(|r| r.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, v)| v.clone()).collect()).collect();
            let term = &a[0][j] * det(minor);
            if j % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        a.clear();
        total
    }

    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        (0u32..1 << n).filter(|s| s.count_ones() as usize == k).map(|s| (0..n).filter(|i| s >> i & 1 == 1).collect()).collect()
    }

    /// Invariant factors from determinantal divisors `d_k = gcd of k-minors`.
    fn oracle(m: &[Vec<i64>]) -> SmithForm {
        let nr = m.len();
        let nc = m[0].len();
        let mut prev = BigInt::one();
        let mut factors = Vec::new();
        for k in 1..=nr.min(nc) {
            let mut g = BigInt::zero();
            for rs in subsets(nr, k) {
                for cs in subsets(nc, k) {
                    let minor = rs.iter().map(|&i| cs.iter().map(|&j| BigInt::from(m[i][j])).collect()).collect();
                    g = g.gcd(&det(minor));
                }
            }
            if g.is_zero() {
                break;
            }
            factors.push(&g / &prev);
            prev = g;
        }
        SmithForm { rank: factors.len(), torsion: factors.into_iter().filter(|v| !v.is_one()).collect() }
    }

    #[test]
    fn known_forms() {
        let (nr, cols) = sparse(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        let s = smith(nr, &cols);
        assert_eq!(s.rank, 3);
        assert_eq!(s.torsion, vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]);
        let (nr, cols) = sparse(&[vec![0, 0], vec![0, 0]]);
        assert_eq!(smith(nr, &cols), SmithForm { rank: 0, torsion: vec![] });
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        let big = i64::MAX / 2;
        let (nr, cols) = sparse(&[vec![1, big], vec![big, 3]]);
        // det = 3 - big^2, which does not fit in i64.
        let s = smith(nr, &cols);
        let d = BigInt::from(3) - BigInt::from(big) * BigInt::from(big);
        assert_eq!(s, SmithForm { rank: 2, torsion: vec![d.abs()] });
    }

    proptest! {
        #[test]
        fn matches_determinantal_divisors(
            m in (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
                prop::collection::vec(prop::collection::vec(-4i64..5, c), r)
            })
        ) {
            let (nr, cols) = sparse(&m);
            prop_assert_eq!(smith(nr, &cols), oracle(&m));
        }
    }
}
