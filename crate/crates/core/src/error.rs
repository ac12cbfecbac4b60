use thiserror::Error;

/// Errors raised by the multifunction calculus.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex universe must contain at least one vertex")]
    EmptyUniverse,

    #[error("universe mismatch: {left} vertices vs {right} vertices")]
    UniverseMismatch { left: usize, right: usize },

    #[error("vertex {vertex} is outside a universe of {size} vertices")]
    VertexOutOfRange { vertex: usize, size: usize },

    #[error("{0} requires a nonempty argument")]
    EmptyArgument(&'static str),

    #[error("walk predicates need a nonempty word")]
    EmptyWord,

    #[error("{what}: requested {requested} exceeds the enumeration cap {cap}")]
    CapExceeded {
        what: &'static str,
        requested: usize,
        cap: usize,
    },

    #[error("closure modulus must be nonzero")]
    ZeroModulus,

    #[error("multifunction is not undirected")]
    NotUndirected,

    #[error("graph does not match its declared kind: {0}")]
    KindViolation(String),

    #[error("selection has no choice for the pair {{{0}, {1}}}")]
    IncompleteSelection(usize, usize),

    #[error("selection picks {chosen} for the pair {{{u}, {v}}}")]
    InvalidSelection { u: usize, v: usize, chosen: usize },

    #[error("precondition violated: {0}")]
    Precondition(&'static str),

    #[error("set family is empty")]
    EmptyFamily,

    #[error("{0} is outside the domain of the prime multifunction")]
    Domain(i64),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("prime window bound must be at least 2, got {0}")]
    WindowTooSmall(u64),

    #[error("cannot decide set description {0:?}")]
    UndecidableDescription(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
