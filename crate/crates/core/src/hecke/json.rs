use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{Basis, HeckeElement};
use crate::error::{Error, Result};
use crate::root_datum::{Coweight, Levi, RootDatum};

/// Wire form of a Hecke element:
/// `{"group", "levi": [1-based indices], "p", "basis", "terms": [{"coweight", "coeff"}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeckeJson {
    pub group: String,
    pub levi: Levi,
    pub p: u64,
    pub basis: Basis,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coweight: Coweight,
    pub coeff: i64,
}

impl HeckeElement {
    pub fn to_json(&self) -> HeckeJson {
        HeckeJson {
            group: self.datum.name().to_string(),
            levi: self.levi.clone(),
            p: self.p,
            basis: self.basis,
            terms: self.terms().map(|(mu, c)| TermJson { coweight: mu.clone(), coeff: c as i64 }).collect(),
        }
    }

    /// Rebuilds an element; `datum` must carry the group name recorded in the
    /// JSON.
    pub fn from_json(json: &HeckeJson, datum: Arc<RootDatum>) -> Result<Self> {
        if json.group != datum.name() {
            return Err(Error::Mismatch(format!("element is over {} but the group is {}", json.group, datum.name())));
        }
        HeckeElement::from_terms(
            datum,
            json.levi.clone(),
            json.p,
            json.basis,
            json.terms.iter().map(|t| (t.coweight.clone(), t.coeff)),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wire_format() {
        let g = Arc::new(RootDatum::builtin("GL2").unwrap());
        let f = HeckeElement::from_terms(
            Arc::clone(&g),
            g.full_levi(),
            3,
            Basis::Std,
            [(Coweight(vec![1, -1]), 2), (Coweight(vec![0, 0]), 1)],
        )
        .unwrap();
        let text = serde_json::to_string(&f.to_json()).unwrap();
        assert_eq!(
            text,
            r#"{"group":"GL2","levi":[1],"p":3,"basis":"std","terms":[{"coweight":[0,0],"coeff":1},{"coweight":[1,-1],"coeff":2}]}"#
        );
        let back: HeckeJson = serde_json::from_str(&text).unwrap();
        assert_eq!(HeckeElement::from_json(&back, Arc::clone(&g)).unwrap(), f);

        let other = Arc::new(RootDatum::builtin("GL3").unwrap());
        assert!(HeckeElement::from_json(&back, other).is_err());
    }
}
