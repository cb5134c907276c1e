use thiserror::Error;

use crate::rootsys::{Root, SystemType};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("rank {rank} is below the minimum {min} for type {system}")]
    RankTooSmall {
        system: SystemType,
        rank: usize,
        min: usize,
    },
    #[error("root {root} is not a positive root of {context}")]
    NotPositive { root: Root, context: String },
    #[error("root {0} is not allowed for type {1}")]
    RootNotInSystem(Root, SystemType),
    #[error("invalid root: {0}")]
    InvalidRoot(String),
    #[error("invalid order: {0}")]
    InvalidOrder(String),
    #[error("index {0} is not covered by the order")]
    IndexNotCovered(u32),
    #[error("invalid window: {0}")]
    InvalidWindow(String),
    #[error("variable {0} lies outside the algebra")]
    VariableOutsideAlgebra(Root),
    #[error("bracket residue outside the root-vector span: {0}")]
    RealizationResidue(String),
    #[error("symmetrization degree {degree} exceeds the cap {cap}")]
    DegreeCap { degree: usize, cap: usize },
    #[error("invalid minor specification: {0}")]
    InvalidMinor(String),
    #[error("invalid upper-right pair: {0}")]
    InvalidPair(String),
    #[error("root {0} is not in the cascade")]
    NotInCascade(Root),
    #[error("no generator formula for cascade root {0}")]
    NoFormula(Root),
    #[error("invalid linear form: {0}")]
    InvalidLinearForm(String),
    #[error("unsupported linear form family: {0}")]
    UnsupportedFamily(String),
    #[error("invalid rational: {0}")]
    InvalidRational(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::RankTooSmall { .. } => "rank_too_small",
            Error::NotPositive { .. } => "not_positive",
            Error::RootNotInSystem(..) => "root_not_in_system",
            Error::InvalidRoot(_) => "invalid_root",
            Error::InvalidOrder(_) => "invalid_order",
            Error::IndexNotCovered(_) => "index_not_covered",
            Error::InvalidWindow(_) => "invalid_window",
            Error::VariableOutsideAlgebra(_) => "variable_outside_algebra",
            Error::RealizationResidue(_) => "realization_residue",
            Error::DegreeCap { .. } => "degree_cap",
            Error::InvalidMinor(_) => "invalid_minor",
            Error::InvalidPair(_) => "invalid_pair",
            Error::NotInCascade(_) => "not_in_cascade",
            Error::NoFormula(_) => "no_formula",
            Error::InvalidLinearForm(_) => "invalid_linear_form",
            Error::UnsupportedFamily(_) => "unsupported_family",
            Error::InvalidRational(_) => "invalid_rational",
            Error::Parse(_) => "parse",
        }
    }

    /// Errors that signal a broken internal invariant rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::RealizationResidue(_))
    }
}
