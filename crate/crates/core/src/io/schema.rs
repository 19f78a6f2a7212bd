//! Serde mirror of the input file. Everything here is unvalidated.

use serde::{Deserialize, Serialize};

use crate::structures::ModuleClass;

use super::TaskSpec;

/// `[c, coeff]`
pub(crate) type Term = (usize, String);
/// `[b, c, coeff]`
pub(crate) type PairTerm = (usize, usize, String);

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct RawField {
    #[serde(rename = "type")]
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct RawBialgebra {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    /// A catalog entry instead of explicit tables.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub catalog: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mult: Option<Vec<Vec<Vec<Term>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<Term>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comult: Option<Vec<Vec<PairTerm>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counit: Option<Vec<Term>>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct RawModule {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class: Option<ModuleClass>,
    /// `trivial`, `regular`, `regular-bimodule`, `free:<k>`,
    /// `free-bimodule:<k>` or `catalog:<label>`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub builtin: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    /// `[a][u]`, left action.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<Vec<Vec<Vec<Term>>>>,
    /// `[a][u]`, `m_u·e_a`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right_action: Option<Vec<Vec<Vec<Term>>>>,
    /// `[u]` of `[u₀, a, coeff]`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coaction: Option<Vec<Vec<PairTerm>>>,
    /// `[u]` of `[a, u₀, coeff]`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left_coaction: Option<Vec<Vec<PairTerm>>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct RawDocument {
    pub field: RawField,
    pub bialgebra: RawBialgebra,
    #[serde(default)]
    pub modules: Vec<RawModule>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub task: Option<TaskSpec>,
}
