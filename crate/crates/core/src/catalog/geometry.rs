//! Matrices over small fields and their permutation actions.

use std::sync::Arc;

use rustc_hash::FxHashMap;

use super::field::{Field, FieldElement};
use crate::group::Permutation;

/// Row-major square matrix; vectors are rows acted on from the right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub n: usize,
    pub entries: Vec<FieldElement>,
}

impl Matrix {
    pub fn identity(f: &Field, n: usize) -> Matrix {
        let mut entries = vec![f.zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = f.one();
        }
        Matrix { n, entries }
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FieldElement) {
        self.entries[i * self.n + j] = v;
    }

    /// `I + a E_ij`.
    pub fn elementary(f: &Field, n: usize, i: usize, j: usize, a: FieldElement) -> Matrix {
        let mut m = Matrix::identity(f, n);
        m.set(i, j, f.add(m.get(i, j), a));
        m
    }

    pub fn diagonal(f: &Field, diag: &[FieldElement]) -> Matrix {
        let mut m = Matrix::identity(f, diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m.set(i, i, d);
        }
        m
    }

    pub fn transpose(&self) -> Matrix {
        let n = self.n;
        let mut t = self.clone();
        for i in 0..n {
            for j in 0..n {
                t.set(i, j, self.get(j, i));
            }
        }
        t
    }

    /// Inverse by Gauss-Jordan; `None` when singular.
    pub fn inverse(&self, f: &Field) -> Option<Matrix> {
        let n = self.n;
        let mut a = self.clone();
        let mut inv = Matrix::identity(f, n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| a.get(r, col) != f.zero())?;
            for j in 0..n {
                let (x, y) = (a.get(col, j), a.get(pivot, j));
                a.set(col, j, y);
                a.set(pivot, j, x);
                let (x, y) = (inv.get(col, j), inv.get(pivot, j));
                inv.set(col, j, y);
                inv.set(pivot, j, x);
            }
            let s = f.inv(a.get(col, col));
            for j in 0..n {
                a.set(col, j, f.mul(s, a.get(col, j)));
                inv.set(col, j, f.mul(s, inv.get(col, j)));
            }
            for r in 0..n {
                let c = a.get(r, col);
                if r != col && c != f.zero() {
                    for j in 0..n {
                        a.set(r, j, f.sub(a.get(r, j), f.mul(c, a.get(col, j))));
                        inv.set(r, j, f.sub(inv.get(r, j), f.mul(c, inv.get(col, j))));
                    }
                }
            }
        }
        Some(inv)
    }

    pub fn row_times(&self, f: &Field, v: &[FieldElement]) -> Vec<FieldElement> {
        (0..self.n)
            .map(|j| (0..self.n).fold(f.zero(), |acc, i| f.add(acc, f.mul(v[i], self.get(i, j)))))
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ActionMode {
    /// All nonzero vectors; faithful for linear groups.
    Vectors,
    /// Projective points.
    Points,
    /// Projective points followed by hyperplanes (as dual points).
    Doubled,
}

/// The point set a matrix group acts on.
pub struct Geometry {
    pub field: Arc<Field>,
    pub n: usize,
    pub mode: ActionMode,
    points: Vec<Vec<FieldElement>>,
    index: FxHashMap<Vec<FieldElement>, u32>,
}

impl Geometry {
    pub fn new(field: Arc<Field>, n: usize, mode: ActionMode) -> Geometry {
        let points = nonzero_vectors(&field, n, mode != ActionMode::Vectors);
        let index = points.iter().enumerate().map(|(i, v)| (v.clone(), i as u32)).collect();
        Geometry { field, n, mode, points, index }
    }

    /// Number of projective points (or vectors).
    pub fn point_count(&self) -> usize {
        self.points.len()
    }

    pub fn degree(&self) -> usize {
        match self.mode {
            ActionMode::Doubled => 2 * self.points.len(),
            _ => self.points.len(),
        }
    }

    fn normalize(&self, mut v: Vec<FieldElement>) -> Vec<FieldElement> {
        if self.mode == ActionMode::Vectors {
            return v;
        }
        let f = &self.field;
        if let Some(&lead) = v.iter().find(|x| x.0 != 0) {
            let s = f.inv(lead);
            for x in v.iter_mut() {
                *x = f.mul(s, *x);
            }
        }
        v
    }

    fn locate(&self, v: Vec<FieldElement>) -> usize {
        self.index[&self.normalize(v)] as usize
    }

    /// The permutation induced by an invertible matrix.
    pub fn matrix_action(&self, m: &Matrix) -> Permutation {
        let f = &self.field;
        let mut images: Vec<usize> = self.points.iter().map(|v| self.locate(m.row_times(f, v))).collect();
        if self.mode == ActionMode::Doubled {
            let dual = m.inverse(f).expect("invertible").transpose();
            let off = self.points.len();
            images.extend(self.points.iter().map(|w| off + self.locate(dual.row_times(f, w))));
        }
        Permutation::from_images(images).expect("matrix acts bijectively")
    }

    /// Entrywise `x -> x^(p^j)` on points (and hyperplanes).
    pub fn frobenius_action(&self, j: u32) -> Permutation {
        let f = &self.field;
        let one_half: Vec<usize> = self
            .points
            .iter()
            .map(|v| self.locate(v.iter().map(|&x| f.frobenius(x, j)).collect()))
            .collect();
        let mut images = one_half.clone();
        if self.mode == ActionMode::Doubled {
            let off = self.points.len();
            images.extend(one_half.iter().map(|&i| i + off));
        }
        Permutation::from_images(images).expect("frobenius acts bijectively")
    }

    /// The duality swapping each point with the hyperplane of the same
    /// coordinates; it conjugates `A` to its inverse transpose.
    pub fn graph_action(&self) -> Option<Permutation> {
        if self.mode != ActionMode::Doubled {
            return None;
        }
        let n = self.points.len();
        let images = (0..2 * n).map(|i| if i < n { i + n } else { i - n }).collect();
        Some(Permutation::from_images(images).unwrap())
    }
}

/// Nonzero vectors of length `n`, or only those whose first nonzero
/// coordinate is 1 when `projective`.
fn nonzero_vectors(f: &Field, n: usize, projective: bool) -> Vec<Vec<FieldElement>> {
    let q = f.order();
    let mut out = Vec::new();
    for code in 1..q.pow(n as u32) {
        let v: Vec<FieldElement> =
            (0..n).map(|i| FieldElement(((code / q.pow((n - 1 - i) as u32)) % q) as u8)).collect();
        if !projective || v.iter().find(|x| x.0 != 0) == Some(&f.one()) {
            out.push(v);
        }
    }
    out
}

/// Transvections `I + a E_ij` with `a` running over an additive basis.
pub fn sl_generators(f: &Field, n: usize) -> Vec<Matrix> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                for a in f.basis() {
                    out.push(Matrix::elementary(f, n, i, j, a));
                }
            }
        }
    }
    out
}

/// `diag(z, 1, .., 1)` with `z` primitive; together with SL it generates GL.
pub fn gl_extra(f: &Field, n: usize) -> Matrix {
    let mut d = vec![f.one(); n];
    d[0] = f.primitive();
    Matrix::diagonal(f, &d)
}

/// Symplectic transvections `x -> x + a B(x,v) v` for the standard form with
/// Gram matrix `[[0, I], [-I, 0]]`; `v` runs over projective points.
pub fn sp_generators(f: &Field, n: usize) -> Vec<Matrix> {
    let m = n / 2;
    let mut out = Vec::new();
    for v in &nonzero_vectors(f, n, true) {
        // J v^T
        let jv: Vec<FieldElement> =
            (0..n).map(|r| if r < m { v[r + m] } else { f.neg(v[r - m]) }).collect();
        for a in f.basis() {
            let mut t = Matrix::identity(f, n);
            for r in 0..n {
                for c in 0..n {
                    let add = f.mul(a, f.mul(jv[r], v[c]));
                    t.set(r, c, f.add(t.get(r, c), add));
                }
            }
            out.push(t);
        }
    }
    out
}
