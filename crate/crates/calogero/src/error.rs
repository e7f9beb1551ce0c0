use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("divisor is not invertible: {0}")]
    NotInvertible(String),

    #[error("value not exactly representable: {0}")]
    NotRepresentable(String),

    #[error("non-generic parameters: {0}")]
    NonGeneric(String),

    #[error("nonzero remainder in exact division")]
    NonzeroRemainder,

    #[error("polynomial is not symmetric")]
    Asymmetric,

    #[error("polynomial is not even")]
    NotEven,

    #[error("singular evaluation point: {0}")]
    SingularPoint(String),

    #[error("quadrature did not converge: {0}")]
    Quadrature(String),

    #[error("internal assertion failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
