use thiserror::Error;

/// Which group axiom a Cayley table violated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    Range,
    Identity,
    Latin,
    Inverse,
    Associativity,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("not a group: {axiom:?} fails at witness ({a}, {b}, {c})")]
    NotAGroup { axiom: Axiom, a: usize, b: usize, c: usize },
    #[error("group order {order} exceeds the configured bound {bound}")]
    OrderBoundExceeded { order: usize, bound: usize },
    #[error("subgroup is not normal: {0}")]
    NotNormal(String),
    #[error("not an action by automorphisms: {0}")]
    NotAnAction(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("objects belong to different groups")]
    GroupMismatch,
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("no catalog for groups of order {0}")]
    UnsupportedOrder(usize),
    #[error("complete classification is only available for e <= 3 (got {0})")]
    UnsupportedE(u64),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
