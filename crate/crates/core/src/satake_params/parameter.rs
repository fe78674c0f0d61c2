use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FiniteField};
use crate::hecke::HeckeElement;
use crate::intmat;
use crate::root_datum::{Coweight, Levi, RootDatum};

use super::monoid::AntidominantMonoid;
use super::strata::perp_basis;

/// Default degree bound for the relation-consistency check in [`classify`].
pub const DEFAULT_RELATION_BOUND: u64 = 6;

/// A point of `Spec F_p[X_*(T)_-]` with values in a finite field, in
/// stratified form: the stratum `Δ_L` on which it vanishes, and a character of
/// the lattice `Δ_L^⊥` given by its (nonzero) values on the canonical basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SatakeParameter {
    datum: Arc<RootDatum>,
    field: Arc<FiniteField>,
    stratum: Levi,
    basis: Vec<Coweight>,
    character: Vec<FieldElement>,
}

impl SatakeParameter {
    /// `character[i]` is the value on the `i`-th vector of
    /// [`perp_basis`]`(datum, stratum)`.
    pub fn new(
        datum: Arc<RootDatum>,
        field: Arc<FiniteField>,
        stratum: Levi,
        character: Vec<FieldElement>,
    ) -> Result<Self> {
        stratum.validate(&datum)?;
        let basis = perp_basis(&datum, &stratum);
        if basis.len() != character.len() {
            return Err(Error::DimensionMismatch { expected: basis.len(), got: character.len() });
        }
        for v in &character {
            if v.coeffs().len() != field.degree() || v.coeffs().iter().any(|c| *c >= field.characteristic()) {
                return Err(Error::InvalidFieldElement(format!("{v} is not an element of F_{}", field.order())));
            }
            if v.is_zero() {
                return Err(Error::InvalidFieldElement("character values must be nonzero".into()));
            }
        }
        Ok(SatakeParameter { datum, field, stratum, basis, character })
    }

    /// The parameter sending every `e^λ` to `1`.
    pub fn unit(datum: Arc<RootDatum>, field: Arc<FiniteField>) -> Self {
        let basis = perp_basis(&datum, &Levi::torus());
        let character = vec![field.one(); basis.len()];
        SatakeParameter { datum, field, stratum: Levi::torus(), basis, character }
    }

    pub fn datum(&self) -> &Arc<RootDatum> {
        &self.datum
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }

    pub fn stratum(&self) -> &Levi {
        &self.stratum
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Coweight] {
        &self.basis
    }

    pub fn character(&self) -> &[FieldElement] {
        &self.character
    }

    /// Value of the character on `λ ∈ Δ_L^⊥`.
    pub fn character_on(&self, lambda: &Coweight) -> Result<FieldElement> {
        let coords = intmat::solve_integer(&self.basis.iter().map(|b| b.0.clone()).collect::<Vec<_>>(), &lambda.0)
            .ok_or_else(|| Error::Mismatch(format!("{lambda} is not orthogonal to the stratum")))?;
        let mut acc = self.field.one();
        for (v, c) in self.character.iter().zip(coords) {
            acc = self.field.mul(&acc, &self.field.pow_signed(v, c)?);
        }
        Ok(acc)
    }

    /// `χ(e^λ)` for antidominant `λ`: zero unless `λ ∈ Δ_L^⊥`.
    pub fn evaluate(&self, lambda: &Coweight) -> Result<FieldElement> {
        self.datum.check(lambda)?;
        if !self.datum.is_antidominant(lambda) {
            return Err(Error::NotAntidominant(lambda.0.clone()));
        }
        if self.stratum.iter().any(|i| self.datum.pair_simple(i, lambda) != 0) {
            return Ok(self.field.zero());
        }
        self.character_on(lambda)
    }

    /// Values on the monoid generators, in generator order.
    pub fn generator_values(&self, monoid: &AntidominantMonoid) -> Result<Vec<(Coweight, FieldElement)>> {
        monoid.generators().iter().map(|g| Ok((g.clone(), self.evaluate(g)?))).collect()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if *self.datum != *other.datum || *self.field != *other.field {
            return Err(Error::Mismatch("parameters over different groups or fields".into()));
        }
        Ok(())
    }

    /// Pointwise product; the stratum of the product is `Δ_{L1} ∪ Δ_{L2}`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let stratum = self.stratum.union(&other.stratum);
        let basis = perp_basis(&self.datum, &stratum);
        let character = basis
            .iter()
            .map(|b| Ok(self.field.mul(&self.character_on(b)?, &other.character_on(b)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(SatakeParameter {
            datum: Arc::clone(&self.datum),
            field: Arc::clone(&self.field),
            stratum,
            basis,
            character,
        })
    }

    pub fn is_unit(&self) -> bool {
        self.stratum.is_empty()
    }

    pub fn is_supersingular(&self) -> bool {
        self.stratum == self.datum.full_levi()
    }

    /// Membership in the open chart `Spec F_p[X_*(T)_{-/L}]`.
    pub fn in_chart(&self, levi: &Levi) -> bool {
        self.stratum.is_subset(levi)
    }

    /// Inverse in the monoid of parameters; exists iff the parameter is a unit.
    pub fn inverse(&self) -> Option<Self> {
        if !self.is_unit() {
            return None;
        }
        let character = self.character.iter().map(|v| self.field.inv(v)).collect::<Result<Vec<_>>>().ok()?;
        Some(SatakeParameter { character, ..self.clone() })
    }

    /// The character of `H_G` attached to the parameter: `f ↦ χ(image of f in
    /// F_p[X_*(T)_-])`.
    pub fn hecke_character(&self, f: &HeckeElement) -> Result<FieldElement> {
        if **f.datum() != *self.datum {
            return Err(Error::Mismatch("Hecke element and parameter are over different groups".into()));
        }
        if f.p() != self.field.characteristic() {
            return Err(Error::Mismatch(format!(
                "Hecke element is mod {} but the parameter lives in characteristic {}",
                f.p(),
                self.field.characteristic()
            )));
        }
        let x = f.to_monoid_algebra()?;
        let mut acc = self.field.zero();
        for (nu, c) in x.terms() {
            let term = self.field.mul(&self.field.from_int(c as i64), &self.evaluate(nu)?);
            acc = self.field.add(&acc, &term);
        }
        Ok(acc)
    }
}

/// Reads a parameter off raw generator values.
///
/// Consistency with every relation of degree `≤ relation_bound` is checked;
/// the stratum is where the `λ_α` vanish; the zero pattern on generators must
/// match the stratum exactly.
pub fn classify(
    monoid: &AntidominantMonoid,
    field: Arc<FiniteField>,
    raw: &BTreeMap<Coweight, FieldElement>,
    relation_bound: u64,
) -> Result<SatakeParameter> {
    let datum = Arc::clone(monoid.datum());
    let gens = monoid.generators();
    for key in raw.keys() {
        if !gens.contains(key) {
            return Err(Error::Mismatch(format!("{key} is not a monoid generator")));
        }
    }
    let values: Vec<FieldElement> = gens
        .iter()
        .map(|g| {
            let v = raw.get(g).ok_or_else(|| Error::MissingGenerator(g.0.clone()))?;
            field.element(&v.coeffs().iter().map(|c| *c as i64).collect::<Vec<_>>())
        })
        .collect::<Result<_>>()?;
    let product =
        |exps: &[u64]| values.iter().zip(exps).fold(field.one(), |acc, (v, e)| field.mul(&acc, &field.pow(v, *e)));

    // units must go to units, whatever the stratum
    for (g, v) in gens.iter().zip(&values) {
        if v.is_zero() && (0..datum.semisimple_rank()).all(|i| datum.pair_simple(i, g) == 0) {
            return Err(Error::ZeroPattern(format!("unit generator {g} has value 0")));
        }
    }

    for rel in monoid.relations(relation_bound) {
        if product(&rel.left) != product(&rel.right) {
            let side = |e: &[u64]| {
                let terms: Vec<String> = gens
                    .iter()
                    .zip(e)
                    .filter(|(_, c)| **c > 0)
                    .map(|(g, c)| if *c == 1 { g.to_string() } else { format!("{c}·{g}") })
                    .collect();
                if terms.is_empty() {
                    "0".to_string()
                } else {
                    terms.join(" + ")
                }
            };
            return Err(Error::RelationViolated(format!("{} = {}", side(&rel.left), side(&rel.right))));
        }
    }

    let eval = |lambda: &Coweight| -> Result<FieldElement> { Ok(product(&monoid.factor(lambda)?)) };

    let lambdas = monoid.lambda_alpha();
    let mut stratum_idx = Vec::new();
    for (i, la) in lambdas.iter().enumerate() {
        if eval(la)?.is_zero() {
            stratum_idx.push(i);
        }
    }
    let stratum = Levi::from_indices(stratum_idx);

    for (g, v) in gens.iter().zip(&values) {
        let orthogonal = stratum.iter().all(|i| datum.pair_simple(i, g) == 0);
        if v.is_zero() == orthogonal {
            return Err(Error::ZeroPattern(format!(
                "generator {g} has value {v} but {} to the stratum",
                if orthogonal { "is orthogonal" } else { "is not orthogonal" }
            )));
        }
    }

    // s pairs strictly negatively with every simple root outside the stratum,
    // so b + N·s is antidominant for N large.
    let mut s = Coweight::zero(datum.rank());
    for (i, la) in lambdas.iter().enumerate() {
        if !stratum.contains(i) {
            s = s.add(la);
        }
    }
    let chi_s = eval(&s)?;
    let basis = perp_basis(&datum, &stratum);
    let mut character = Vec::with_capacity(basis.len());
    for b in &basis {
        let mut n = 0i64;
        for i in 0..datum.semisimple_rank() {
            if stratum.contains(i) {
                continue;
            }
            let over = datum.pair_simple(i, b);
            let step = -datum.pair_simple(i, &s);
            if over > 0 {
                n = n.max((over + step - 1) / step);
            }
        }
        let shifted = b.add(&s.scale(n));
        let v = field.mul(&eval(&shifted)?, &field.pow_signed(&chi_s, -n)?);
        character.push(v);
    }
    SatakeParameter::new(datum, field, stratum, character)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cw(v: &[i64]) -> Coweight {
        Coweight(v.to_vec())
    }

    fn setup(name: &str, p: u64, k: usize) -> (AntidominantMonoid, Arc<FiniteField>) {
        let m = AntidominantMonoid::new(Arc::new(RootDatum::builtin(name).unwrap())).unwrap();
        (m, Arc::new(FiniteField::new(p, k).unwrap()))
    }

    fn raw(f: &FiniteField, pairs: &[(&[i64], i64)]) -> BTreeMap<Coweight, FieldElement> {
        pairs.iter().map(|(g, v)| (cw(g), f.from_int(*v))).collect()
    }

    #[test]
    fn gl2_supersingular() {
        let (m, f) = setup("GL2", 5, 1);
        let chi = classify(&m, Arc::clone(&f), &raw(&f, &[(&[0, 1], 0), (&[1, 1], 2), (&[-1, -1], 3)]), 6).unwrap();
        assert!(chi.is_supersingular());
        assert!(!chi.is_unit());
        assert_eq!(chi.basis(), &[cw(&[1, 1])]);
        assert_eq!(chi.character(), &[f.from_int(2)]);
        assert_eq!(chi.evaluate(&cw(&[2, 2])).unwrap(), f.from_int(4));
        assert_eq!(chi.evaluate(&cw(&[0, 1])).unwrap(), f.zero());
        assert_eq!(chi.evaluate(&cw(&[0, 0])).unwrap(), f.one());
        assert!(chi.inverse().is_none());
    }

    #[test]
    fn gl2_ordinary() {
        let (m, f) = setup("GL2", 5, 1);
        let chi = classify(&m, Arc::clone(&f), &raw(&f, &[(&[0, 1], 3), (&[1, 1], 2), (&[-1, -1], 3)]), 6).unwrap();
        assert!(chi.is_unit());
        assert_eq!(chi.rank(), 2);
        assert_eq!(chi.evaluate(&cw(&[0, 1])).unwrap(), f.from_int(3));
        assert_eq!(chi.evaluate(&cw(&[-3, 2])).unwrap(), f.from_int(3 * 3 * 3 * 3 * 3 * 3 * 3 * 3));
        let inv = chi.inverse().unwrap();
        assert_eq!(chi.multiply(&inv).unwrap(), SatakeParameter::unit(Arc::clone(m.datum()), f));
    }

    #[test]
    fn classify_errors() {
        let (m, f) = setup("GL2", 5, 1);
        let unit_zero = raw(&f, &[(&[0, 1], 1), (&[1, 1], 0), (&[-1, -1], 0)]);
        assert!(matches!(classify(&m, Arc::clone(&f), &unit_zero, 6), Err(Error::ZeroPattern(_))));
        let bad = raw(&f, &[(&[0, 1], 1), (&[1, 1], 2), (&[-1, -1], 2)]);
        assert!(matches!(classify(&m, Arc::clone(&f), &bad, 6), Err(Error::RelationViolated(_))));
        let missing = raw(&f, &[(&[0, 1], 1), (&[1, 1], 2)]);
        assert!(matches!(classify(&m, Arc::clone(&f), &missing, 6), Err(Error::MissingGenerator(_))));
    }

    #[test]
    fn sl3_zero_pattern_and_relation() {
        let (m, f) = setup("SL3", 7, 1);
        let gens = m.generators().to_vec();
        // x³ = yz must hold
        let vals = |x: i64, y: i64, z: i64| -> BTreeMap<Coweight, FieldElement> {
            [(gens[0].clone(), f.from_int(x)), (gens[1].clone(), f.from_int(y)), (gens[2].clone(), f.from_int(z))]
                .into_iter()
                .collect()
        };
        assert!(matches!(classify(&m, Arc::clone(&f), &vals(1, 2, 3), 6), Err(Error::RelationViolated(_))));
        let chi = classify(&m, Arc::clone(&f), &vals(2, 4, 2), 6).unwrap();
        assert!(chi.is_unit());
        let ss = classify(&m, Arc::clone(&f), &vals(0, 0, 0), 6).unwrap();
        assert!(ss.is_supersingular());
        assert_eq!(ss.rank(), 0);
        // x = 0 forces y·z = 0, and then exactly one stratum root survives
        let half = classify(&m, Arc::clone(&f), &vals(0, 3, 0), 6).unwrap();
        assert_eq!(half.stratum().len(), 1);
        assert_eq!(half.rank(), 1);
    }

    #[test]
    fn gl3_product_stratum_is_union() {
        let (m, f) = setup("GL3", 3, 2);
        let g = Arc::clone(m.datum());
        let x = f.from_index(5);
        let a =
            SatakeParameter::new(Arc::clone(&g), Arc::clone(&f), Levi::from_indices([0]), vec![x.clone(); 2]).unwrap();
        let b =
            SatakeParameter::new(Arc::clone(&g), Arc::clone(&f), Levi::from_indices([1]), vec![f.one(), x]).unwrap();
        let ab = a.multiply(&b).unwrap();
        assert!(ab.is_supersingular());
        for gen in m.generators() {
            let lhs = ab.evaluate(gen).unwrap();
            let rhs = f.mul(&a.evaluate(gen).unwrap(), &b.evaluate(gen).unwrap());
            assert_eq!(lhs, rhs);
        }
        assert_eq!(SatakeParameter::unit(Arc::clone(&g), Arc::clone(&f)).multiply(&a).unwrap(), a);
    }

    #[test]
    fn torus_parameters_are_units() {
        let (m, f) = setup("GL1", 2, 3);
        let chi =
            SatakeParameter::new(Arc::clone(m.datum()), Arc::clone(&f), Levi::torus(), vec![f.from_index(3)]).unwrap();
        assert!(chi.is_unit());
        assert!(chi.is_supersingular());
        assert!(chi.inverse().is_some());
    }

    #[test]
    fn round_trip() {
        let (m, f) = setup("Sp4", 3, 1);
        let g = Arc::clone(m.datum());
        for levi in g.levis() {
            let n = perp_basis(&g, &levi).len();
            let chi = SatakeParameter::new(Arc::clone(&g), Arc::clone(&f), levi, vec![f.from_int(2); n]).unwrap();
            let raw: BTreeMap<_, _> = chi.generator_values(&m).unwrap().into_iter().collect();
            assert_eq!(classify(&m, Arc::clone(&f), &raw, DEFAULT_RELATION_BOUND).unwrap(), chi);
        }
    }

    #[test]
    fn hecke_character_of_unit() {
        let (m, f) = setup("GL2", 3, 1);
        let g = Arc::clone(m.datum());
        let one = HeckeElement::unit(Arc::clone(&g), g.full_levi(), 3).unwrap();
        assert_eq!(SatakeParameter::unit(g, f.clone()).hecke_character(&one).unwrap(), f.one());
    }
}
