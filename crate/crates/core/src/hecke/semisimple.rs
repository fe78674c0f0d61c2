use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::root_datum::{Coweight, RootDatum};

/// Graded dimension vector: antidominant degree ↦ dimension.
pub type GradedDimension = BTreeMap<Coweight, u64>;

/// A semisimple object `⊕ IC_λ^{m_λ}`, recorded by its multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemisimpleObject {
    datum: Arc<RootDatum>,
    multiplicities: BTreeMap<Coweight, u64>,
}

impl SemisimpleObject {
    pub fn new(datum: Arc<RootDatum>, terms: impl IntoIterator<Item = (Coweight, u64)>) -> Result<Self> {
        let mut obj = SemisimpleObject { datum, multiplicities: BTreeMap::new() };
        for (lambda, m) in terms {
            obj.datum.check(&lambda)?;
            if !obj.datum.is_dominant(&lambda) {
                return Err(Error::NotDominant(lambda.0));
            }
            if m > 0 {
                *obj.multiplicities.entry(lambda).or_insert(0) += m;
            }
        }
        Ok(obj)
    }

    pub fn empty(datum: Arc<RootDatum>) -> Self {
        SemisimpleObject { datum, multiplicities: BTreeMap::new() }
    }

    pub fn multiplicities(&self) -> &BTreeMap<Coweight, u64> {
        &self.multiplicities
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if *self.datum != *other.datum {
            return Err(Error::Mismatch("objects over different groups".into()));
        }
        let mut out = self.clone();
        for (lambda, m) in &other.multiplicities {
            *out.multiplicities.entry(lambda.clone()).or_insert(0) += m;
        }
        Ok(out)
    }

    /// Convolution, using `IC_λ * IC_μ = IC_{λ+μ}`.
    pub fn convolve(&self, other: &Self) -> Result<Self> {
        if *self.datum != *other.datum {
            return Err(Error::Mismatch("objects over different groups".into()));
        }
        let mut out = SemisimpleObject::empty(Arc::clone(&self.datum));
        for (a, m) in &self.multiplicities {
            for (b, n) in &other.multiplicities {
                *out.multiplicities.entry(a.add(b)).or_insert(0) += m * n;
            }
        }
        Ok(out)
    }
}

/// `IC_λ ↦` one dimension in degree `w_0 λ`, extended additively.
pub fn semisimple_fiber(obj: &SemisimpleObject) -> Result<GradedDimension> {
    let w0 = obj.datum.longest_element();
    let mut out = GradedDimension::new();
    for (lambda, m) in &obj.multiplicities {
        *out.entry(w0.apply(lambda)?).or_insert(0) += m;
    }
    Ok(out)
}

/// Tensor product of graded vector spaces.
pub fn graded_product(a: &GradedDimension, b: &GradedDimension) -> GradedDimension {
    let mut out = GradedDimension::new();
    for (x, m) in a {
        for (y, n) in b {
            *out.entry(x.add(y)).or_insert(0) += m * n;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cw(v: &[i64]) -> Coweight {
        Coweight(v.to_vec())
    }

    #[test]
    fn fiber_examples() {
        let g = Arc::new(RootDatum::builtin("GL2").unwrap());
        let ic10 = SemisimpleObject::new(Arc::clone(&g), [(cw(&[1, 0]), 1)]).unwrap();
        assert_eq!(semisimple_fiber(&ic10).unwrap(), GradedDimension::from([(cw(&[0, 1]), 1)]));
        assert!(semisimple_fiber(&SemisimpleObject::empty(Arc::clone(&g))).unwrap().is_empty());
        let twice = ic10.direct_sum(&ic10).unwrap();
        assert_eq!(semisimple_fiber(&twice).unwrap(), GradedDimension::from([(cw(&[0, 1]), 2)]));
    }

    #[test]
    fn fiber_is_monoidal() {
        let g = Arc::new(RootDatum::builtin("GL3").unwrap());
        let a = SemisimpleObject::new(Arc::clone(&g), [(cw(&[1, 0, 0]), 2), (cw(&[2, 1, 1]), 1)]).unwrap();
        let b = SemisimpleObject::new(Arc::clone(&g), [(cw(&[1, 1, 0]), 1), (cw(&[0, 0, 0]), 3)]).unwrap();
        let lhs = semisimple_fiber(&a.convolve(&b).unwrap()).unwrap();
        let rhs = graded_product(&semisimple_fiber(&a).unwrap(), &semisimple_fiber(&b).unwrap());
        assert_eq!(lhs, rhs);
        assert!(lhs.keys().all(|k| g.is_antidominant(k)));
    }
}
