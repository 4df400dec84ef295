use mfmoduli::rootsys::{DynkinSpec, RootSystem, WeightVec};
use serde::Deserialize;

use crate::Failure;

/// A problem file. Only `dynkin` is required; each command reads the fields
/// it needs and refuses input that lacks them.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub dynkin: DynkinInput,
    #[serde(default)]
    pub generators: Option<Vec<WeightVec>>,
    #[serde(default)]
    pub sigma: Option<Vec<i64>>,
    #[serde(default)]
    pub sigma_bar: Option<Vec<Vec<i64>>>,
    /// `tables` (default) or `extraspecial`; `chevalley` only.
    #[serde(default)]
    pub convention: Option<String>,
}

/// Either `"B3+T1"` or `{"components":[{"type":"B","rank":3}],"torus_rank":1}`.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum DynkinInput {
    Name(String),
    Spec(DynkinSpec),
}

impl ProblemFile {
    pub fn parse(bytes: &[u8]) -> Result<Self, Failure> {
        serde_json::from_slice(bytes).map_err(|e| Failure::Malformed(format!("invalid problem file: {e}")))
    }

    pub fn root_system(&self) -> Result<RootSystem, Failure> {
        let spec = match &self.dynkin {
            DynkinInput::Name(s) => s.parse().map_err(|e| Failure::Malformed(format!("{e}")))?,
            DynkinInput::Spec(s) => s.clone(),
        };
        RootSystem::build(&spec).map_err(|e| Failure::Malformed(e.to_string()))
    }

    pub fn generators(&self, rs: &RootSystem) -> Result<&[WeightVec], Failure> {
        let gens = self
            .generators
            .as_deref()
            .ok_or_else(|| Failure::Malformed("missing field `generators`".into()))?;
        for (i, g) in gens.iter().enumerate() {
            if g.len() != rs.dim() {
                return Err(Failure::Malformed(format!(
                    "generator {i} has {} entries, expected {}",
                    g.len(),
                    rs.dim()
                )));
            }
        }
        Ok(gens)
    }

    pub fn sigma(&self) -> Result<&[i64], Failure> {
        self.sigma
            .as_deref()
            .ok_or_else(|| Failure::Malformed("missing field `sigma`".into()))
    }

    pub fn sigma_bar(&self) -> Result<&[Vec<i64>], Failure> {
        self.sigma_bar
            .as_deref()
            .ok_or_else(|| Failure::Malformed("missing field `sigma_bar`".into()))
    }
}
