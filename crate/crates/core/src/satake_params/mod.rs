//! The antidominant monoid `X_*(T)_-`, the space of Satake parameters
//! `Spec F_p[X_*(T)_-]` and its stratification by the vanishing loci of the
//! simple-root directions.

mod json;
mod monoid;
mod parameter;
mod strata;

pub use json::{CharacterValue, GeneratorValue, ParameterInput, ParameterOutput, ValueJson};
pub use monoid::{binomial_relations, AntidominantMonoid, BinomialRelation, CosetClass, CosetDecomposition};
pub use parameter::{classify, SatakeParameter, DEFAULT_RELATION_BOUND};
pub use strata::{perp_basis, strata, Stratification, Stratum};
