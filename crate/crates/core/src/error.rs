use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("pole of {function} at s = {at}")]
    Pole { function: &'static str, at: String },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("character index {index} out of range for modulus {modulus} (group order {order})")]
    CharacterIndex { modulus: u64, index: u64, order: u64 },

    #[error("character mod {modulus} is not primitive (conductor {conductor})")]
    NonPrimitive { modulus: u64, conductor: u64 },

    #[error("operation requires a nontrivial character")]
    TrivialCharacter,

    #[error("unsupported L-function family: {0}")]
    UnsupportedFamily(String),

    #[error("outside the convergence region: {0}")]
    ConvergenceRegion(String),

    #[error("evaluation failure: {0}")]
    Evaluation(String),

    #[error("zero scan found {found} zeros in ({from}, {to}] but the argument principle gives {expected}")]
    Completeness {
        from: f64,
        to: f64,
        found: usize,
        expected: usize,
    },

    #[error("suspected multiple zero near t = {0}")]
    MultiplicitySuspected(f64),

    #[error("unsupported zero cache format: {0}")]
    FormatVersion(String),

    #[error("corrupted zero cache row {line}: {reason}")]
    CorruptRow { line: usize, reason: String },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("x = {x} beyond sieve limit {limit}")]
    BeyondSieve { x: f64, limit: u64 },

    #[error("x = {0} is a prime-power jump point")]
    JumpPoint(f64),

    #[error("zero set is empty")]
    EmptyZeroSet,

    #[error("height {requested} exceeds certified height {certified}")]
    HeightExceeded { requested: f64, certified: f64 },

    #[error("zero statistics need at least {needed} zeros, got {found}")]
    InsufficientZeros { found: usize, needed: usize },

    #[error("degenerate flank: zero variance around {0}")]
    DegenerateFlank(f64),

    #[error("Euler factor lists are indexed by different primes")]
    MismatchedPrimes,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("usage: {0}")]
    Usage(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
