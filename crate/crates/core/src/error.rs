use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("closure exceeded cap of {0} elements")]
    CapExceeded(usize),
    #[error("parent group too large to enumerate and no candidate list given")]
    ParentTooLarge,
    #[error("subgroup is not central")]
    NotCentral,
    #[error("group of order {0} exceeds oracle scale")]
    ScaleExceeded(usize),
    #[error("no suitable prime below 2^31")]
    PrimeSearchFailed,
    #[error("inertia quotient is not cyclic and no extension was supplied")]
    ExtensionHypothesisFails,
    #[error("invalid parameters: {0}")]
    ParamsInvalid(String),
    #[error("subgroup {0} unavailable: {1}")]
    SpecUnavailable(String, String),
    #[error("missing catalog row {0}")]
    MissingRow(String),
    #[error("interpolation samples are inconsistent at x = {0}")]
    OverdeterminedMismatch(String),
    #[error("duplicate abscissa {0}")]
    DuplicateAbscissa(String),
    #[error("unsupported cyclotomic index {0}")]
    UnsupportedIndex(u32),
    #[error("schema violation at {0}: {1}")]
    SchemaViolation(String, String),
}

pub type Result<T> = std::result::Result<T, Error>;
