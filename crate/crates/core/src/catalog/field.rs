//! Small finite fields GF(p^k), q <= 81, by full operation tables.

use std::sync::Arc;

use crate::group::is_prime;
use crate::{Error, Result};

/// Fixed monic irreducible moduli, low coefficient first, leading 1 omitted.
const MODULI: &[(u64, u32, &[u8])] = &[
    (2, 2, &[1, 1]),
    (2, 3, &[1, 1, 0]),
    (2, 4, &[1, 1, 0, 0]),
    (2, 5, &[1, 0, 1, 0, 0]),
    (2, 6, &[1, 1, 0, 1, 1, 0]),
    (3, 2, &[2, 2]),
    (3, 3, &[1, 2, 0]),
    (3, 4, &[2, 0, 0, 2]),
    (5, 2, &[2, 4]),
    (7, 2, &[3, 6]),
];

pub const MAX_Q: u64 = 81;

/// An element of a [`Field`], encoded as `sum c_i p^i` for the coefficient
/// vector `(c_0, .., c_{k-1})` of its polynomial representative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(pub u8);

#[derive(Debug)]
pub struct Field {
    p: u64,
    k: u32,
    q: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
    frob: Vec<u8>,
    primitive: u8,
}

/// Splits `q` as `p^k`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let (mut r, mut k) = (q, 0);
    while r % p == 0 {
        r /= p;
        k += 1;
    }
    (r == 1 && is_prime(p)).then_some((p, k))
}

impl Field {
    pub fn new(q: u64) -> Result<Arc<Field>> {
        let (p, k) = prime_power(q)
            .filter(|_| q <= MAX_Q)
            .ok_or_else(|| Error::UnsupportedSpec(format!("field of order {q}")))?;
        let modulus: Vec<u8> = if k == 1 {
            vec![0]
        } else {
            MODULI
                .iter()
                .find(|m| m.0 == p && m.1 == k)
                .map(|m| m.2.to_vec())
                .ok_or_else(|| Error::UnsupportedSpec(format!("field of order {q}")))?
        };
        let q = q as usize;
        let coeffs = |e: usize| -> Vec<u64> {
            (0..k).map(|i| (e as u64 / p.pow(i)) % p).collect()
        };
        let encode = |c: &[u64]| -> u8 {
            c.iter().rev().fold(0u64, |acc, &x| acc * p + x) as u8
        };
        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for a in 0..q {
            let ca = coeffs(a);
            for b in 0..q {
                let cb = coeffs(b);
                let s: Vec<u64> = ca.iter().zip(&cb).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = encode(&s);
                // Schoolbook product, then reduce by the modulus.
                let mut prod = vec![0u64; 2 * k as usize];
                for (i, x) in ca.iter().enumerate() {
                    for (j, y) in cb.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                if k == 1 {
                    prod.truncate(1);
                } else {
                    for d in (k as usize..prod.len()).rev() {
                        let c = prod[d];
                        if c != 0 {
                            prod[d] = 0;
                            for (i, &m) in modulus.iter().enumerate() {
                                let off = d - k as usize + i;
                                prod[off] = (prod[off] + (p - c) * m as u64) % p;
                            }
                        }
                    }
                    prod.truncate(k as usize);
                }
                mul[a * q + b] = encode(&prod);
            }
        }
        let neg = (0..q)
            .map(|a| (0..q).find(|&b| add[a * q + b] == 0).unwrap() as u8)
            .collect();
        let mut inv = vec![0u8; q];
        for a in 1..q {
            inv[a] = (1..q)
                .find(|&b| mul[a * q + b] == 1)
                .ok_or_else(|| Error::UnsupportedSpec(format!("modulus for GF({q}) is reducible")))?
                as u8;
        }
        let pow = |a: usize, e: u64| -> u8 {
            let mut acc = 1u8;
            for _ in 0..e {
                acc = mul[acc as usize * q + a];
            }
            acc
        };
        let frob = (0..q).map(|a| pow(a, p)).collect();
        let primitive = (2..q)
            .chain(std::iter::once(1))
            .find(|&a| {
                let mut x = a as u8;
                let mut ord = 1;
                while x != 1 {
                    x = mul[x as usize * q + a];
                    ord += 1;
                }
                ord == q - 1
            })
            .unwrap() as u8;
        Ok(Arc::new(Field { p, k, q, add, mul, neg, inv, frob, primitive }))
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q as u8).map(FieldElement)
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    /// A generator of the multiplicative group.
    pub fn primitive(&self) -> FieldElement {
        FieldElement(self.primitive)
    }

    /// `x^i` for `i < k`: an additive basis over the prime field.
    pub fn basis(&self) -> Vec<FieldElement> {
        (0..self.k).map(|i| FieldElement(self.p.pow(i) as u8)).collect()
    }

    pub fn coefficients(&self, a: FieldElement) -> Vec<u64> {
        (0..self.k).map(|i| (a.0 as u64 / self.p.pow(i)) % self.p).collect()
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.add[a.0 as usize * self.q + b.0 as usize])
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.mul[a.0 as usize * self.q + b.0 as usize])
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement(self.neg[a.0 as usize])
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, a: FieldElement) -> FieldElement {
        assert!(a.0 != 0, "zero has no inverse");
        FieldElement(self.inv[a.0 as usize])
    }

    /// `a^(p^j)`.
    pub fn frobenius(&self, a: FieldElement, j: u32) -> FieldElement {
        (0..j).fold(a, |x, _| FieldElement(self.frob[x.0 as usize]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const ORDERS: &[u64] = &[2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64, 81];

    #[test]
    fn field_axioms() {
        for &q in ORDERS {
            let f = Field::new(q).unwrap();
            for a in f.elements() {
                if a.0 != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), f.one(), "GF({q})");
                }
                assert_eq!(f.add(a, f.neg(a)), f.zero());
                for b in f.elements() {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in f.elements().step_by(3) {
                        let lhs = f.mul(a, f.add(b, c));
                        assert_eq!(lhs, f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_fixes_prime_field() {
        for &q in ORDERS {
            let f = Field::new(q).unwrap();
            let fixed = f.elements().filter(|&a| f.frobenius(a, 1) == a).count() as u64;
            assert_eq!(fixed, f.characteristic());
            for a in f.elements() {
                assert_eq!(f.frobenius(a, f.degree()), a);
                for b in f.elements() {
                    assert_eq!(f.frobenius(f.mul(a, b), 1), f.mul(f.frobenius(a, 1), f.frobenius(b, 1)));
                }
            }
        }
    }

    #[test]
    fn rejects_unsupported_orders() {
        assert!(Field::new(6).is_err());
        assert!(Field::new(128).is_err());
        assert!(Field::new(83).is_err());
    }

    #[test]
    fn primitive_element_has_full_order() {
        let f = Field::new(16).unwrap();
        let g = f.primitive();
        let mut x = g;
        let mut n = 1;
        while x != f.one() {
            x = f.mul(x, g);
            n += 1;
        }
        assert_eq!(n, 15);
    }
}
