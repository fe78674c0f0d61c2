//! The mod-`p` spherical Hecke algebra `H_L` of a standard Levi `L`, in the
//! basis of double-coset indicators `𝟙_λ` ("std") and the basis
//! `[λ] = Σ_{μ ≤_L λ} 𝟙_μ` ("ic").
//!
//! On the ic basis convolution is addition of coweights, the Satake
//! transform to a smaller Levi `L ⊆ M` is `[λ]_M ↦ [w_0^L w_0^M λ]_L`, and
//! `[λ]_G ↦ e^{w_0 λ}` identifies `H_G` with the monoid algebra of the
//! antidominant cocharacters. Elements are stored in whichever basis their tag
//! says; the std basis is the canonical one.

mod json;
mod monoid_algebra;
mod semisimple;

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::is_prime;
use crate::root_datum::{Coweight, Levi, RootDatum};

pub use json::{HeckeJson, TermJson};
pub use monoid_algebra::{MonoidAlgebraElement, MonoidConstraint};
pub use semisimple::{graded_product, semisimple_fiber, GradedDimension, SemisimpleObject};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    #[default]
    Std,
    Ic,
}

impl std::str::FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "std" => Ok(Basis::Std),
            "ic" => Ok(Basis::Ic),
            other => Err(Error::Mismatch(format!("unknown basis {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeElement {
    datum: Arc<RootDatum>,
    levi: Levi,
    p: u64,
    basis: Basis,
    coeffs: BTreeMap<Coweight, u64>,
}

fn reduce(c: i64, p: u64) -> u64 {
    c.rem_euclid(p as i64) as u64
}

impl HeckeElement {
    pub fn zero(datum: Arc<RootDatum>, levi: Levi, p: u64, basis: Basis) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        levi.validate(&datum)?;
        Ok(HeckeElement { datum, levi, p, basis, coeffs: BTreeMap::new() })
    }

    pub fn from_terms(
        datum: Arc<RootDatum>,
        levi: Levi,
        p: u64,
        basis: Basis,
        terms: impl IntoIterator<Item = (Coweight, i64)>,
    ) -> Result<Self> {
        let mut f = HeckeElement::zero(datum, levi, p, basis)?;
        for (mu, c) in terms {
            f.datum.check(&mu)?;
            if !f.datum.is_dominant_levi(&f.levi, &mu) {
                return Err(Error::NotDominant(mu.0));
            }
            f.add_term(mu, reduce(c, p));
        }
        Ok(f)
    }

    /// `𝟙_λ` or `[λ]` for the given basis.
    pub fn basis_element(datum: Arc<RootDatum>, levi: Levi, p: u64, basis: Basis, lambda: Coweight) -> Result<Self> {
        HeckeElement::from_terms(datum, levi, p, basis, [(lambda, 1)])
    }

    /// The unit `𝟙_0 = [0]`.
    pub fn unit(datum: Arc<RootDatum>, levi: Levi, p: u64) -> Result<Self> {
        let n = datum.rank();
        HeckeElement::basis_element(datum, levi, p, Basis::Std, Coweight::zero(n))
    }

    fn add_term(&mut self, mu: Coweight, c: u64) {
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(mu) {
            Entry::Occupied(mut e) => {
                let v = (*e.get() + c) % self.p;
                if v == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
            Entry::Vacant(e) => {
                if !c.is_multiple_of(self.p) {
                    e.insert(c % self.p);
                }
            }
        }
    }

    fn empty_like(&self, levi: Levi, basis: Basis) -> HeckeElement {
        HeckeElement { datum: Arc::clone(&self.datum), levi, p: self.p, basis, coeffs: BTreeMap::new() }
    }

    pub fn datum(&self) -> &Arc<RootDatum> {
        &self.datum
    }

    pub fn levi(&self) -> &Levi {
        &self.levi
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, mu: &Coweight) -> u64 {
        self.coeffs.get(mu).copied().unwrap_or(0)
    }

    /// Nonzero terms in lexicographic order of coweights.
    pub fn terms(&self) -> impl Iterator<Item = (&Coweight, u64)> {
        self.coeffs.iter().map(|(k, v)| (k, *v))
    }

    pub fn support(&self) -> Vec<Coweight> {
        self.coeffs.keys().cloned().collect()
    }

    fn check_compatible(&self, other: &HeckeElement) -> Result<()> {
        if *self.datum != *other.datum {
            return Err(Error::Mismatch(format!("groups {} and {}", self.datum.name(), other.datum.name())));
        }
        if self.levi != other.levi {
            return Err(Error::Mismatch(format!("Levis {:?} and {:?}", self.levi.one_based(), other.levi.one_based())));
        }
        if self.p != other.p {
            return Err(Error::Mismatch(format!("p = {} and p = {}", self.p, other.p)));
        }
        Ok(())
    }

    pub fn add(&self, other: &HeckeElement) -> Result<HeckeElement> {
        self.check_compatible(other)?;
        let other = other.in_basis(self.basis)?;
        let mut out = self.clone();
        for (mu, c) in other.coeffs {
            out.add_term(mu, c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: i64) -> HeckeElement {
        let c = reduce(c, self.p);
        let mut out = self.empty_like(self.levi.clone(), self.basis);
        for (mu, v) in &self.coeffs {
            out.add_term(mu.clone(), v * c % self.p);
        }
        out
    }

    pub fn sub(&self, other: &HeckeElement) -> Result<HeckeElement> {
        self.add(&other.scale(-1))
    }

    pub fn in_basis(&self, basis: Basis) -> Result<HeckeElement> {
        match basis {
            Basis::Std => self.to_std_basis(),
            Basis::Ic => self.to_ic_basis(),
        }
    }

    /// Expands `[λ] = Σ_{μ ∈ interval(λ)} 𝟙_μ`.
    pub fn to_std_basis(&self) -> Result<HeckeElement> {
        if self.basis == Basis::Std {
            return Ok(self.clone());
        }
        let mut cache = IntervalCache::new(&self.datum, &self.levi);
        let mut out = self.empty_like(self.levi.clone(), Basis::Std);
        for (lambda, c) in &self.coeffs {
            for mu in cache.get(lambda)? {
                out.add_term(mu.clone(), *c);
            }
        }
        Ok(out)
    }

    /// Inverts the unitriangular basis change by peeling off maximal terms:
    /// the term of largest `2ρ_L` (ties broken lexicographically) cannot lie
    /// strictly below any other term.
    pub fn to_ic_basis(&self) -> Result<HeckeElement> {
        if self.basis == Basis::Ic {
            return Ok(self.clone());
        }
        let datum = Arc::clone(&self.datum);
        let levi = self.levi.clone();
        let mut cache = IntervalCache::new(&datum, &levi);
        let height = |mu: &Coweight| datum.two_rho_levi(&levi, mu);
        let mut rest = self.coeffs.clone();
        let mut out = self.empty_like(self.levi.clone(), Basis::Ic);
        while let Some(lambda) = rest.keys().max_by_key(|mu| (height(mu), (*mu).clone())).cloned() {
            let c = rest[&lambda];
            out.add_term(lambda.clone(), c);
            for mu in cache.get(&lambda)? {
                let slot = rest.entry(mu.clone()).or_insert(0);
                *slot = (*slot + self.p - c) % self.p;
                if *slot == 0 {
                    rest.remove(mu);
                }
            }
            debug_assert!(!rest.contains_key(&lambda));
        }
        Ok(out)
    }

    /// Convolution, returned in the std basis.
    pub fn convolve(&self, other: &HeckeElement) -> Result<HeckeElement> {
        self.convolve_in(other, Basis::Std)
    }

    /// Convolution via `[λ] * [μ] = [λ + μ]`.
    pub fn convolve_in(&self, other: &HeckeElement, basis: Basis) -> Result<HeckeElement> {
        self.check_compatible(other)?;
        let a = self.to_ic_basis()?;
        let b = other.to_ic_basis()?;
        let mut out = self.empty_like(self.levi.clone(), Basis::Ic);
        for (lambda, x) in &a.coeffs {
            for (mu, y) in &b.coeffs {
                out.add_term(lambda.add(mu), x * y % self.p);
            }
        }
        out.in_basis(basis)
    }

    /// The Satake transform `H_M → H_L` for a standard Levi `L ⊆ M`, where `M`
    /// is this element's Levi: `[λ]_M ↦ [w_0^L w_0^M λ]_L`.
    pub fn satake_transform(&self, target: &Levi, basis: Basis) -> Result<HeckeElement> {
        target.validate(&self.datum)?;
        if !target.is_subset(&self.levi) {
            return Err(Error::InvalidLevi(format!(
                "{:?} is not contained in {:?}",
                target.one_based(),
                self.levi.one_based()
            )));
        }
        let w_m = self.datum.longest_element_levi(&self.levi);
        let w_l = self.datum.longest_element_levi(target);
        let ic = self.to_ic_basis()?;
        let mut out = self.empty_like(target.clone(), Basis::Ic);
        for (lambda, c) in &ic.coeffs {
            let image = w_l.apply(&w_m.apply(lambda)?)?;
            // the image lies in w_0^L (M-antidominant cone)
            if !self.datum.is_antidominant_levi(&self.levi, &w_l.apply(&image)?)
                || !self.datum.is_dominant_levi(target, &image)
            {
                return Err(Error::InvalidDatum(format!("Satake image {image} outside w_0^L X_*(T)_-")));
            }
            out.add_term(image, *c);
        }
        out.in_basis(basis)
    }
}

/// Memoized dominance intervals for one `(datum, Levi)`.
struct IntervalCache<'a> {
    datum: &'a RootDatum,
    levi: &'a Levi,
    cache: HashMap<Coweight, Vec<Coweight>>,
}

impl<'a> IntervalCache<'a> {
    fn new(datum: &'a RootDatum, levi: &'a Levi) -> Self {
        IntervalCache { datum, levi, cache: HashMap::new() }
    }

    fn get(&mut self, lambda: &Coweight) -> Result<&Vec<Coweight>> {
        if !self.cache.contains_key(lambda) {
            let v = self.datum.dominant_interval_levi(self.levi, lambda)?;
            self.cache.insert(lambda.clone(), v);
        }
        Ok(&self.cache[lambda])
    }
}
