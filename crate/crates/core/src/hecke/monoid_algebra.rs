use std::collections::BTreeMap;
use std::sync::Arc;

use super::{reduce, Basis, HeckeElement};
use crate::error::{Error, Result};
use crate::field::is_prime;
use crate::root_datum::{Coweight, Levi, RootDatum};

/// Which cone the exponents of a monoid-algebra element live in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonoidConstraint {
    /// `X_*(T)_-`
    Antidominant,
    /// `X_*(T)_{-/L}`: antidominant for the simple roots of `L` only.
    LeviAntidominant(Levi),
}

/// Element of `F_p[X_*(T)_-]` (or `F_p[X_*(T)_{-/L}]`): a finitely supported
/// combination of monomials `e^ν`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidAlgebraElement {
    datum: Arc<RootDatum>,
    p: u64,
    constraint: MonoidConstraint,
    coeffs: BTreeMap<Coweight, u64>,
}

impl MonoidAlgebraElement {
    pub fn from_terms(
        datum: Arc<RootDatum>,
        p: u64,
        constraint: MonoidConstraint,
        terms: impl IntoIterator<Item = (Coweight, i64)>,
    ) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let mut x = MonoidAlgebraElement { datum, p, constraint, coeffs: BTreeMap::new() };
        for (nu, c) in terms {
            x.datum.check(&nu)?;
            if !x.admits(&nu) {
                return Err(Error::NotAntidominant(nu.0));
            }
            x.add_term(nu, reduce(c, p));
        }
        Ok(x)
    }

    fn admits(&self, nu: &Coweight) -> bool {
        match &self.constraint {
            MonoidConstraint::Antidominant => self.datum.is_antidominant(nu),
            MonoidConstraint::LeviAntidominant(l) => self.datum.is_antidominant_levi(l, nu),
        }
    }

    fn add_term(&mut self, nu: Coweight, c: u64) {
        let p = self.p;
        let v = (self.coeffs.get(&nu).copied().unwrap_or(0) + c) % p;
        if v == 0 {
            self.coeffs.remove(&nu);
        } else {
            self.coeffs.insert(nu, v);
        }
    }

    pub fn datum(&self) -> &Arc<RootDatum> {
        &self.datum
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn constraint(&self) -> &MonoidConstraint {
        &self.constraint
    }

    pub fn coeff(&self, nu: &Coweight) -> u64 {
        self.coeffs.get(nu).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Coweight, u64)> {
        self.coeffs.iter().map(|(k, v)| (k, *v))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if *self.datum != *other.datum || self.p != other.p || self.constraint != other.constraint {
            return Err(Error::Mismatch("monoid-algebra operands differ".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (nu, c) in &other.coeffs {
            out.add_term(nu.clone(), *c);
        }
        Ok(out)
    }

    /// `e^a · e^b = e^{a+b}`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = MonoidAlgebraElement { coeffs: BTreeMap::new(), ..self.clone() };
        for (a, x) in &self.coeffs {
            for (b, y) in &other.coeffs {
                out.add_term(a.add(b), x * y % self.p);
            }
        }
        Ok(out)
    }
}

impl HeckeElement {
    /// `[λ] ↦ e^{w_0 λ}`; defined on `H_G`.
    pub fn to_monoid_algebra(&self) -> Result<MonoidAlgebraElement> {
        if self.levi != self.datum.full_levi() {
            return Err(Error::Mismatch("monoid-algebra image is defined on H_G".into()));
        }
        let w0 = self.datum.longest_element();
        let ic = self.to_ic_basis()?;
        let mut out = MonoidAlgebraElement {
            datum: Arc::clone(&self.datum),
            p: self.p,
            constraint: MonoidConstraint::Antidominant,
            coeffs: BTreeMap::new(),
        };
        for (lambda, c) in ic.terms() {
            out.add_term(w0.apply(lambda)?, c);
        }
        Ok(out)
    }

    /// `e^ν ↦ [w_0 ν]`, returned in the std basis.
    pub fn from_monoid_algebra(x: &MonoidAlgebraElement) -> Result<HeckeElement> {
        if x.constraint != MonoidConstraint::Antidominant {
            return Err(Error::Mismatch("expected an element of F_p[X_*(T)_-]".into()));
        }
        let w0 = x.datum.longest_element();
        let terms = x.coeffs.iter().map(|(nu, c)| Ok((w0.apply(nu)?, *c as i64))).collect::<Result<Vec<_>>>()?;
        let full = x.datum.full_levi();
        HeckeElement::from_terms(Arc::clone(&x.datum), full, x.p, Basis::Ic, terms)?.to_std_basis()
    }
}
