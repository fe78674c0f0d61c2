use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::monoid::AntidominantMonoid;
use super::parameter::{classify, SatakeParameter};
use crate::error::{Error, Result};
use crate::field::{FieldElement, FiniteField};
use crate::root_datum::{Coweight, Levi};

/// A field value on the wire: a bare integer, or power-basis coefficients
/// (lowest degree first).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ValueJson {
    Int(i64),
    Poly(Vec<i64>),
}

impl ValueJson {
    pub fn to_element(&self, field: &FiniteField) -> Result<FieldElement> {
        match self {
            ValueJson::Int(x) => Ok(field.from_int(*x)),
            ValueJson::Poly(c) => field.element(c),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorValue {
    pub generator: Coweight,
    pub value: ValueJson,
}

/// Raw parameter input: `{"group", "p", "k", "values": [{"generator", "value"}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParameterInput {
    pub group: String,
    pub p: u64,
    #[serde(default = "one")]
    pub k: usize,
    pub values: Vec<GeneratorValue>,
}

fn one() -> usize {
    1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterValue {
    pub basis: Coweight,
    pub value: FieldElement,
}

/// Stratified output: the input fields plus stratum, rank and the character
/// on the canonical basis of `Δ_L^⊥`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParameterOutput {
    pub group: String,
    pub p: u64,
    pub k: usize,
    pub modulus: Vec<u64>,
    pub stratum: Levi,
    pub rank: usize,
    pub unit: bool,
    pub supersingular: bool,
    pub character: Vec<CharacterValue>,
    pub values: Vec<GeneratorValue>,
}

impl ParameterInput {
    pub fn classify(&self, monoid: &AntidominantMonoid, relation_bound: u64) -> Result<SatakeParameter> {
        if self.group != monoid.datum().name() {
            return Err(Error::Mismatch(format!(
                "parameter is for {} but the group is {}",
                self.group,
                monoid.datum().name()
            )));
        }
        let field = Arc::new(FiniteField::new(self.p, self.k)?);
        let mut raw = BTreeMap::new();
        for gv in &self.values {
            monoid.datum().check(&gv.generator)?;
            raw.insert(gv.generator.clone(), gv.value.to_element(&field)?);
        }
        classify(monoid, field, &raw, relation_bound)
    }
}

impl SatakeParameter {
    pub fn to_json(&self, monoid: &AntidominantMonoid) -> Result<ParameterOutput> {
        let field = self.field();
        let as_json = |v: &FieldElement| ValueJson::Poly(v.coeffs().iter().map(|c| *c as i64).collect());
        Ok(ParameterOutput {
            group: self.datum().name().to_string(),
            p: field.characteristic(),
            k: field.degree(),
            modulus: field.modulus().to_vec(),
            stratum: self.stratum().clone(),
            rank: self.rank(),
            unit: self.is_unit(),
            supersingular: self.is_supersingular(),
            character: self
                .basis()
                .iter()
                .zip(self.character())
                .map(|(b, v)| CharacterValue { basis: b.clone(), value: v.clone() })
                .collect(),
            values: self
                .generator_values(monoid)?
                .into_iter()
                .map(|(g, v)| GeneratorValue { generator: g, value: as_json(&v) })
                .collect(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_datum::RootDatum;

    #[test]
    fn parse_and_emit() {
        let m = AntidominantMonoid::new(Arc::new(RootDatum::builtin("GL2").unwrap())).unwrap();
        let input: ParameterInput = serde_json::from_str(
            r#"{"group":"GL2","p":5,"values":[
                {"generator":[0,1],"value":0},
                {"generator":[1,1],"value":[2]},
                {"generator":[-1,-1],"value":3}]}"#,
        )
        .unwrap();
        let chi = input.classify(&m, 6).unwrap();
        let out = chi.to_json(&m).unwrap();
        assert_eq!(out.stratum.one_based(), vec![1]);
        assert_eq!(out.rank, 1);
        assert!(out.supersingular);
        let text = serde_json::to_string(&out).unwrap();
        assert!(text.contains(r#""stratum":[1],"rank":1"#), "{text}");
        assert!(text.contains(r#""character":[{"basis":[1,1],"value":[2]}]"#), "{text}");
    }
}
