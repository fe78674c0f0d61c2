//! Polynomials over a small finite field, as coefficient vectors of field
//! indices (lowest degree first, no trailing zeros).

use crate::error::{Error, Result};
use crate::field::FieldTables;

pub type Poly = Vec<u8>;

#[derive(Clone, Debug)]
pub struct PolyRing {
    f: FieldTables,
}

fn trim(mut p: Poly) -> Poly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

impl PolyRing {
    pub fn new(f: FieldTables) -> Self {
        PolyRing { f }
    }

    pub fn field(&self) -> &FieldTables {
        &self.f
    }

    pub fn constant(&self, c: u8) -> Poly {
        trim(vec![c])
    }

    pub fn monomial(&self, k: u32) -> Poly {
        let mut p = vec![0; k as usize];
        p.push(1);
        p
    }

    pub fn add(&self, a: &[u8], b: &[u8]) -> Poly {
        let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
        let mut out = long.to_vec();
        for (o, s) in out.iter_mut().zip(short) {
            *o = self.f.add(*o, *s);
        }
        trim(out)
    }

    pub fn sub(&self, a: &[u8], b: &[u8]) -> Poly {
        let mut out = a.to_vec();
        if out.len() < b.len() {
            out.resize(b.len(), 0);
        }
        for (o, s) in out.iter_mut().zip(b) {
            *o = self.f.sub(*o, *s);
        }
        trim(out)
    }

    pub fn mul(&self, a: &[u8], b: &[u8]) -> Poly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u8; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] = self.f.add(out[i + j], self.f.mul(*x, *y));
            }
        }
        trim(out)
    }

    /// `a · b mod t^n`.
    pub fn mul_trunc(&self, a: &[u8], b: &[u8], n: u32) -> Poly {
        let n = n as usize;
        let a = &a[..a.len().min(n)];
        let b = &b[..b.len().min(n)];
        truncate(self.mul(a, b), n as u32)
    }

    pub fn scale(&self, c: u8, a: &[u8]) -> Poly {
        trim(a.iter().map(|x| self.f.mul(c, *x)).collect())
    }

    /// Inverse of a unit `u` (nonzero constant term) modulo `t^n`.
    pub fn series_inverse(&self, u: &[u8], n: u32) -> Poly {
        let n = n as usize;
        let c0 = self.f.inv(u[0]);
        let mut out = vec![0u8; n];
        for k in 0..n {
            // out_k = c0 · (δ_{k0} − Σ_{i=1..k} u_i out_{k−i})
            let mut acc = if k == 0 { 1 } else { 0 };
            for i in 1..=k.min(u.len().saturating_sub(1)) {
                acc = self.f.sub(acc, self.f.mul(u[i], out[k - i]));
            }
            out[k] = self.f.mul(c0, acc);
        }
        trim(out)
    }
}

pub fn valuation(a: &[u8]) -> Option<u32> {
    a.iter().position(|c| *c != 0).map(|v| v as u32)
}

pub fn truncate(mut a: Poly, n: u32) -> Poly {
    a.truncate(n as usize);
    trim(a)
}

/// Multiplication by `t^k`.
pub fn shift(a: &[u8], k: u32) -> Poly {
    if a.iter().all(|c| *c == 0) {
        return Vec::new();
    }
    let mut out = vec![0u8; k as usize];
    out.extend_from_slice(a);
    out
}

/// The part of `a` of degree `≥ k`, divided by `t^k`.
pub fn high(a: &[u8], k: u32) -> Poly {
    a.get(k as usize..).map(|s| s.to_vec()).unwrap_or_default()
}

/// Exact division by `t^k`.
pub fn unshift(a: &[u8], k: u32) -> Result<Poly> {
    let k = k as usize;
    if a.iter().take(k).any(|c| *c != 0) {
        return Err(Error::PrecisionInsufficient(format!("polynomial not divisible by t^{k}")));
    }
    Ok(a.get(k..).map(|s| s.to_vec()).unwrap_or_default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FiniteField;

    fn ring(p: u64, k: usize) -> PolyRing {
        PolyRing::new(FieldTables::new(&FiniteField::new(p, k).unwrap()).unwrap())
    }

    #[test]
    fn arithmetic() {
        let r = ring(3, 1);
        let a = vec![1, 2];
        let b = vec![2, 1];
        assert_eq!(r.add(&a, &b), Vec::<u8>::new());
        assert_eq!(r.mul(&a, &b), vec![2, 2, 2]);
        assert_eq!(r.sub(&a, &a), Vec::<u8>::new());
        assert_eq!(shift(&a, 2), vec![0, 0, 1, 2]);
        assert_eq!(high(&[1, 2, 0, 1], 2), vec![0, 1]);
        assert_eq!(valuation(&[0, 0, 2]), Some(2));
        assert!(unshift(&[1, 1], 1).is_err());
    }

    #[test]
    fn series_inverse() {
        for (p, k) in [(2, 1), (2, 3), (5, 1), (3, 2)] {
            let r = ring(p, k);
            let q = r.field().order() as u8;
            let u: Poly = vec![q - 1, 1, q - 1, 0, 1];
            let inv = r.series_inverse(&u, 6);
            assert_eq!(r.mul_trunc(&u, &inv, 6), vec![1]);
        }
    }
}
