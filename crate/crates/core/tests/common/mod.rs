#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::Arc;

use modp_satake::field::{FieldElement, FiniteField};
use modp_satake::hecke::{Basis, HeckeElement};
use modp_satake::root_datum::{Coweight, Levi, RootDatum};
use modp_satake::satake_params::{perp_basis, SatakeParameter};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn group(name: &str) -> Arc<RootDatum> {
    Arc::new(RootDatum::builtin(name).unwrap())
}

pub fn cw(v: &[i64]) -> Coweight {
    Coweight(v.to_vec())
}

/// Uniform over the `L`-dominant points of `[-bound, bound]^n`.
pub fn random_dominant_levi(datum: &RootDatum, levi: &Levi, rng: &mut ChaCha8Rng, bound: i64) -> Coweight {
    loop {
        let c = Coweight((0..datum.rank()).map(|_| rng.gen_range(-bound..=bound)).collect());
        if datum.is_dominant_levi(levi, &c) {
            return c;
        }
    }
}

pub fn random_dominant(datum: &RootDatum, rng: &mut ChaCha8Rng, bound: i64) -> Coweight {
    random_dominant_levi(datum, &datum.full_levi(), rng, bound)
}

/// A random element of `H_L` in the std basis with up to `terms` terms.
pub fn random_element(
    datum: &Arc<RootDatum>,
    levi: &Levi,
    p: u64,
    rng: &mut ChaCha8Rng,
    bound: i64,
    terms: usize,
) -> HeckeElement {
    let k = rng.gen_range(1..=terms);
    let t: Vec<(Coweight, i64)> =
        (0..k).map(|_| (random_dominant_levi(datum, levi, rng, bound), rng.gen_range(1..p as i64))).collect();
    HeckeElement::from_terms(Arc::clone(datum), levi.clone(), p, Basis::Std, t).unwrap()
}

pub fn random_nonzero(field: &FiniteField, rng: &mut ChaCha8Rng) -> FieldElement {
    field.from_index(rng.gen_range(1..field.order()))
}

pub fn random_levi(datum: &RootDatum, rng: &mut ChaCha8Rng) -> Levi {
    let all = datum.levis();
    all[rng.gen_range(0..all.len())].clone()
}

pub fn random_parameter(datum: &Arc<RootDatum>, field: &Arc<FiniteField>, rng: &mut ChaCha8Rng) -> SatakeParameter {
    let levi = random_levi(datum, rng);
    let n = perp_basis(datum, &levi).len();
    let values = (0..n).map(|_| random_nonzero(field, rng)).collect();
    SatakeParameter::new(Arc::clone(datum), Arc::clone(field), levi, values).unwrap()
}

/// Raw generator values of a parameter, as a classify input.
pub fn raw_values(
    chi: &SatakeParameter,
    monoid: &modp_satake::satake_params::AntidominantMonoid,
) -> BTreeMap<Coweight, FieldElement> {
    chi.generator_values(monoid).unwrap().into_iter().collect()
}
