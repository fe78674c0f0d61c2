//! Finite fields `F_{p^k} = F_p[x]/(f)`.
//!
//! The modulus `f` is the smallest monic irreducible polynomial of degree `k`
//! when polynomials are ordered by their base-`p` index
//! `c_0 + c_1 p + … + c_{k-1} p^{k-1}` (equivalently: lexicographically on
//! coefficients from degree `k−1` down to `0`). Examples: `F_4` uses
//! `x²+x+1`, `F_8` uses `x³+x+1`, `F_9` uses `x²+1`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// If `q = p^e` for a prime `p`, returns `(p, e)`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut e = 0;
    let mut r = q;
    while r.is_multiple_of(p) {
        r /= p;
        e += 1;
    }
    (r == 1).then_some((p, e))
}

/// Coefficients of a field element in the power basis `1, x, …, x^{k-1}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FieldElement(Vec<u64>);

impl FieldElement {
    pub fn coeffs(&self) -> &[u64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| *c == 0)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 if *c == 1 => "x".to_string(),
                1 => format!("{c}x"),
                _ if *c == 1 => format!("x^{i}"),
                _ => format!("{c}x^{i}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteField {
    p: u64,
    k: usize,
    /// Monic, low degree first, length `k + 1`.
    modulus: Vec<u64>,
}

impl FiniteField {
    pub fn new(p: u64, k: usize) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k == 0 {
            return Err(Error::InvalidFieldElement("extension degree must be ≥ 1".into()));
        }
        let count =
            p.checked_pow(k as u32).ok_or_else(|| Error::InvalidFieldElement(format!("F_{p}^{k} is too large")))?;
        for idx in 0..count {
            let mut m = digits(idx, p, k);
            m.push(1);
            if is_irreducible(&m, p) {
                return Ok(FiniteField { p, k, modulus: m });
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    pub fn prime(p: u64) -> Result<Self> {
        FiniteField::new(p, 1)
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn order(&self) -> u64 {
        self.p.pow(self.k as u32)
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(vec![0; self.k])
    }

    pub fn one(&self) -> FieldElement {
        self.from_int(1)
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, x: i64) -> FieldElement {
        let mut v = vec![0; self.k];
        v[0] = x.rem_euclid(self.p as i64) as u64;
        FieldElement(v)
    }

    /// Element with the given power-basis coefficients (low degree first);
    /// missing high coefficients are zero.
    pub fn element(&self, coeffs: &[i64]) -> Result<FieldElement> {
        if coeffs.len() > self.k {
            return Err(Error::InvalidFieldElement(format!(
                "{} coefficients for a degree-{} field",
                coeffs.len(),
                self.k
            )));
        }
        let mut v = vec![0; self.k];
        for (slot, c) in v.iter_mut().zip(coeffs) {
            *slot = c.rem_euclid(self.p as i64) as u64;
        }
        Ok(FieldElement(v))
    }

    /// Element number `idx` in base-`p` enumeration order.
    pub fn from_index(&self, idx: u64) -> FieldElement {
        FieldElement(digits(idx, self.p, self.k))
    }

    pub fn index(&self, a: &FieldElement) -> u64 {
        a.0.iter().rev().fold(0, |acc, c| acc * self.p + c)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.order()).map(|i| self.from_index(i))
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        FieldElement(a.0.iter().zip(&b.0).map(|(x, y)| (x + y) % self.p).collect())
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        FieldElement(a.0.iter().map(|x| (self.p - x) % self.p).collect())
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let p = self.p;
        let k = self.k;
        let mut prod = vec![0u64; 2 * k];
        for (i, x) in a.0.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in b.0.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        for d in (k..2 * k).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            // x^d = x^{d-k} x^k and x^k ≡ −(m_0 + … + m_{k-1} x^{k-1})
            for (j, m) in self.modulus[..k].iter().enumerate() {
                prod[d - k + j] = (prod[d - k + j] + c * (p - m)) % p;
            }
            prod[d] = 0;
        }
        prod.truncate(k);
        FieldElement(prod)
    }

    pub fn pow(&self, a: &FieldElement, mut e: u64) -> FieldElement {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Integer power; negative exponents need a nonzero base.
    pub fn pow_signed(&self, a: &FieldElement, e: i64) -> Result<FieldElement> {
        if e >= 0 {
            Ok(self.pow(a, e as u64))
        } else {
            Ok(self.pow(&self.inv(a)?, e.unsigned_abs()))
        }
    }

    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::InvalidFieldElement("zero has no inverse".into()));
        }
        Ok(self.pow(a, self.order() - 2))
    }
}

fn digits(mut idx: u64, p: u64, k: usize) -> Vec<u64> {
    let mut v = Vec::with_capacity(k);
    for _ in 0..k {
        v.push(idx % p);
        idx /= p;
    }
    v
}

fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead_inv = mod_inv(b[db], p);
    while r.len() > db {
        let c = (r[r.len() - 1] * lead_inv) % p;
        let shift = r.len() - 1 - db;
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] = (r[shift + j] + c * (p - bj)) % p;
        }
        r.pop();
    }
    r
}

fn mod_inv(a: u64, p: u64) -> u64 {
    let mut acc = 1;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
fn is_irreducible(f: &[u64], p: u64) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        for idx in 0..p.pow(d as u32) {
            let mut g = digits(idx, p, d);
            g.push(1);
            if poly_rem(f, &g, p).iter().all(|c| *c == 0) {
                return false;
            }
        }
    }
    true
}

/// Addition and multiplication tables of a small field; elements are indices
/// `0..q` in the base-`p` enumeration (`0` is zero, `1` is one).
#[derive(Clone, Debug)]
pub struct FieldTables {
    q: usize,
    p: u64,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

impl FieldTables {
    pub fn new(field: &FiniteField) -> Result<Self> {
        let q = field.order() as usize;
        if q > 256 {
            return Err(Error::CapsExceeded(format!("table field of order {q}")));
        }
        let elems: Vec<FieldElement> = field.elements().collect();
        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for i in 0..q {
            for j in 0..q {
                add[i * q + j] = field.index(&field.add(&elems[i], &elems[j])) as u8;
                mul[i * q + j] = field.index(&field.mul(&elems[i], &elems[j])) as u8;
            }
        }
        let neg = (0..q).map(|i| field.index(&field.neg(&elems[i])) as u8).collect();
        let inv = (0..q).map(|i| if i == 0 { 0 } else { field.index(&field.inv(&elems[i]).unwrap()) as u8 }).collect();
        Ok(FieldTables { q, p: field.characteristic(), add, mul, neg, inv })
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn inv(&self, a: u8) -> u8 {
        self.inv[a as usize]
    }
}
