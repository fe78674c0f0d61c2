use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{Family, RootDatum};
use crate::error::{Error, Result};

/// JSON group description: either explicit coordinates or a built-in family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Custom { name: String, cochar_rank: usize, simple_roots: Vec<Vec<i64>>, simple_coroots: Vec<Vec<i64>> },
    Standard { family: Family, rank: usize },
}

impl GroupSpec {
    pub fn build(&self) -> Result<RootDatum> {
        match self {
            GroupSpec::Custom { name, cochar_rank, simple_roots, simple_coroots } => {
                RootDatum::new(name.clone(), *cochar_rank, simple_roots.clone(), simple_coroots.clone())
            }
            GroupSpec::Standard { family, rank } => RootDatum::standard(*family, *rank),
        }
    }
}

impl RootDatum {
    /// The description of this datum in the explicit-coordinate form.
    pub fn to_spec(&self) -> GroupSpec {
        GroupSpec::Custom {
            name: self.name().to_string(),
            cochar_rank: self.rank(),
            simple_roots: self.simple_roots().to_vec(),
            simple_coroots: self.simple_coroots().to_vec(),
        }
    }
}

/// Resolves a group source: a built-in name (`GL3`), inline JSON, or a path
/// to a JSON file.
pub fn parse_group(source: &str) -> Result<RootDatum> {
    let trimmed = source.trim();
    if trimmed.starts_with('{') {
        let spec: GroupSpec = serde_json::from_str(trimmed).map_err(|e| Error::InvalidGroupJson(e.to_string()))?;
        return spec.build();
    }
    if let Ok(d) = RootDatum::builtin(trimmed) {
        return Ok(d);
    }
    let path = Path::new(trimmed);
    if path.exists() {
        let text =
            std::fs::read_to_string(path).map_err(|e| Error::InvalidGroupJson(format!("{}: {e}", path.display())))?;
        let spec: GroupSpec = serde_json::from_str(&text).map_err(|e| Error::InvalidGroupJson(e.to_string()))?;
        return spec.build();
    }
    Err(Error::UnsupportedGroup(trimmed.to_string()))
}
