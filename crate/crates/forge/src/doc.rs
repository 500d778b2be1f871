//! The wire format: JSON documents with scalars written as strings.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::InputError;

/// Row-major matrix of scalar strings.
pub type RawMatrix = Vec<Vec<String>>;
pub type RawVector = Vec<String>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum FieldSpec {
    Q,
    Fp { p: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub dim: usize,
    /// `dim × dim²`, column `i·dim + j` is `e_i e_j`.
    pub mul: RawMatrix,
    pub unit: RawVector,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoalgebraSpec {
    pub dim: usize,
    /// `dim² × dim`.
    pub comul: RawMatrix,
    pub counit: RawVector,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntwiningSpec {
    pub algebra: String,
    pub coalgebra: String,
    /// `a·c × c·a`.
    pub psi: RawMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum CoringSpec {
    Trivial {
        algebra: String,
    },
    Coalgebra {
        coalgebra: String,
    },
    Entwining {
        entwining: String,
    },
    Sweedler {
        base: String,
        algebra: String,
        /// `dim algebra × dim base`.
        map: RawMatrix,
    },
    General {
        algebra: String,
        dim: usize,
        /// `dim × a·dim`.
        left: RawMatrix,
        /// `dim × dim·a`.
        right: RawMatrix,
        /// Coproduct representative in `C ⊗_k C`, `dim² × dim`.
        comul: RawMatrix,
        /// `a × dim`.
        counit: RawMatrix,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SideSpec {
    Left,
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum ComoduleSpec {
    Regular {
        coring: String,
        side: SideSpec,
    },
    Zero {
        coring: String,
        side: SideSpec,
    },
    /// `A` with coaction `a ↦ ga` (right) or `a ↦ ag` (left).
    Grouplike {
        coring: String,
        grouplike: String,
        side: SideSpec,
    },
    General {
        coring: String,
        side: SideSpec,
        dim: usize,
        /// `dim × dim·a` (right) or `dim × a·dim` (left).
        action: RawMatrix,
        /// Coaction representative in `M ⊗_k C` (right) or `C ⊗_k M` (left).
        coaction: RawMatrix,
    },
}

impl ComoduleSpec {
    pub fn coring(&self) -> &str {
        match self {
            ComoduleSpec::Regular { coring, .. }
            | ComoduleSpec::Zero { coring, .. }
            | ComoduleSpec::Grouplike { coring, .. }
            | ComoduleSpec::General { coring, .. } => coring,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismSpec {
    pub source: String,
    pub target: String,
    pub alpha: RawMatrix,
    pub gamma: RawMatrix,
}

/// A declared group-like element of a coalgebra or of a coring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GrouplikeSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coalgebra: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coring: Option<String>,
    pub element: RawVector,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub field: FieldSpec,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub algebras: BTreeMap<String, AlgebraSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub coalgebras: BTreeMap<String, CoalgebraSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub entwinings: BTreeMap<String, EntwiningSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub corings: BTreeMap<String, CoringSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub comodules: BTreeMap<String, ComoduleSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub morphisms: BTreeMap<String, MorphismSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub grouplikes: BTreeMap<String, GrouplikeSpec>,
    /// Commands run by `report`; empty means all.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<String>,
}

impl Document {
    /// Parses JSON, reporting the path of the first offending entry.
    pub fn parse(text: &str) -> Result<Self, InputError> {
        let de = &mut serde_json::Deserializer::from_str(text);
        serde_path_to_error::deserialize(de).map_err(|e| {
            let path = e.path().to_string();
            InputError::Syntax { path, message: e.into_inner().to_string() }
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents serialize");
        s.push('\n');
        s
    }
}
