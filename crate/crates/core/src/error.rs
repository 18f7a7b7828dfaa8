use thiserror::Error;

/// Errors reported by ring construction, ideal arithmetic, and the
/// verification layer.
#[derive(Debug, Error)]
pub enum Error {
    #[error("ring order {order} exceeds the configured cap of {cap}")]
    OrderCapExceeded { order: u64, cap: u64 },

    #[error("ideal lattice exceeds the configured cap of {cap} ideals")]
    IdealLatticeTooLarge { cap: usize },

    #[error("invalid ring construction: {0}")]
    InvalidConstruction(String),

    #[error("ring axiom violated: {0}")]
    AxiomViolation(String),

    #[error("operands belong to different rings")]
    RingMismatch,

    #[error("element set is not an ideal: {0}")]
    NotAnIdeal(String),

    #[error("expected a proper ideal")]
    ImproperIdeal,

    #[error("ideal is not prime")]
    NotPrime,

    #[error("ideal is not pure")]
    NotPure,

    #[error("map is not a ring homomorphism: {0}")]
    HomViolation(String),

    #[error("unknown check id: {0}")]
    UnknownCheckId(String),

    #[error("unsupported on the symbolic integer backend: {0}")]
    UnsupportedBackend(String),

    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
