use thiserror::Error;

/// Reasons a `(n, d, alpha)` triple is rejected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("n must be at least 3 (got {0})")]
    TooFewVariables(usize),
    #[error("alpha has {got} entries but n = {n}")]
    AlphaLength { n: usize, got: usize },
    #[error("degree d must be at least 1")]
    ZeroDegree,
    #[error("alpha must be non-decreasing")]
    AlphaNotSorted,
    #[error("alpha entries must satisfy 1 <= alpha_i <= d = {d} (offending entry {value})")]
    AlphaOutOfRange { d: u32, value: u32 },
    #[error("d = {d} must be strictly smaller than |alpha| = {sum}")]
    DegreeTooLarge { d: u32, sum: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid configuration: {0}")]
    Config(#[from] ConfigError),
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("degenerate configuration: {0}")]
    Degenerate(String),
    /// A structural theorem failed to hold on a computed instance. This always
    /// indicates a bug in the enumeration or ordering code.
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
