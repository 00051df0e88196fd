use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("n = {n} exceeds the enumeration limit {limit}")]
    LimitExceeded { n: usize, limit: usize },

    #[error("divisor series is not a unit (constant term {constant})")]
    NonUnitDivisor { constant: String },

    #[error("inexact division: {0}")]
    InexactDivision(String),

    #[error("division by (1 - s v) left a nonzero remainder")]
    KernelRemainder,

    #[error("quotient has v-degree {found}, expected at most {bound}")]
    DegreeBound { found: usize, bound: usize },

    #[error("coefficient of x^{x_power} v^{v_power} beyond the degree bound is nonzero")]
    NonzeroTail { x_power: usize, v_power: usize },

    #[error("identity violated: {0}")]
    IdentityViolated(String),
}

impl Error {
    /// True for errors caused by the caller's input rather than by a failed identity.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::InvalidPermutation(_) | Error::InvalidArgument(_) | Error::LimitExceeded { .. }
        )
    }
}
