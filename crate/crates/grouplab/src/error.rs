//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("order budget exceeded: {got} > {budget}")]
    OrderBudgetExceeded { got: usize, budget: usize },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("not a homomorphism: f({a}*{b}) != f({a})*f({b})")]
    NotAHomomorphism { a: usize, b: usize },
    #[error("source/target mismatch")]
    SourceTargetMismatch,
    #[error("search budget exceeded after {0} nodes")]
    SearchBudgetExceeded(u64),
    #[error("not a decomposition: {0}")]
    NotADecomposition(String),
    #[error("uniqueness violation: {0}")]
    UniquenessViolation(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("no automorphic summand found")]
    NoAutomorphicSummand,
    #[error("internal contradiction: {0}")]
    InternalContradiction(String),
    #[error("ambient groups are not isomorphic")]
    NotIsomorphicAmbient,
    #[error("cancellation failure: {0}")]
    CancellationFailure(String),
    #[error("exponents must form a divisibility chain: {0} does not divide {1}")]
    DivisibilityViolated(usize, usize),
    #[error("no coherent decomposition chain found within budget")]
    NoCoherentChain,
    #[error("containment violated: {0}")]
    ContainmentViolated(String),
    #[error("unknown group name: {0}")]
    UnknownName(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Stable machine-readable name, used in CLI error payloads.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NotAGroup(_) => "NotAGroup",
            Error::NotAPermutation(_) => "NotAPermutation",
            Error::OrderBudgetExceeded { .. } => "OrderBudgetExceeded",
            Error::NotNormal => "NotNormal",
            Error::NotAHomomorphism { .. } => "NotAHomomorphism",
            Error::SourceTargetMismatch => "SourceTargetMismatch",
            Error::SearchBudgetExceeded(_) => "SearchBudgetExceeded",
            Error::NotADecomposition(_) => "NotADecomposition",
            Error::UniquenessViolation(_) => "UniquenessViolation",
            Error::PreconditionViolated(_) => "PreconditionViolated",
            Error::NoAutomorphicSummand => "NoAutomorphicSummand",
            Error::InternalContradiction(_) => "InternalContradiction",
            Error::NotIsomorphicAmbient => "NotIsomorphicAmbient",
            Error::CancellationFailure(_) => "CancellationFailure",
            Error::DivisibilityViolated(_, _) => "DivisibilityViolated",
            Error::NoCoherentChain => "NoCoherentChain",
            Error::ContainmentViolated(_) => "ContainmentViolated",
            Error::UnknownName(_) => "UnknownName",
            Error::BadParams(_) => "BadParams",
            Error::Io(_) => "Io",
            Error::Json(_) => "Json",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
