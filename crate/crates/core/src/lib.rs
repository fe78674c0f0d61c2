//! Combinatorics of the mod-`p` Satake transform.

pub mod cli;
pub mod error;
pub mod field;
pub mod hecke;
pub mod intmat;
pub mod mv_oracle;
pub mod root_datum;
pub mod satake_params;

pub use error::{Error, Result};
