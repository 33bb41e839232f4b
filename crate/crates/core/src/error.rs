use thiserror::Error;

/// Errors raised by the algebra, representation and verification layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgebraError {
    #[error("complex power of zero base is undefined")]
    ZeroBase,
    #[error("colour must be a nonzero complex number")]
    ZeroColour,
    #[error("deformation parameter {name} must be nonzero")]
    ZeroParameter { name: &'static str },
    #[error("singular deformation point: |q^{exponent} - 1| = {distance:.3e} is below the guard {guard}")]
    Singular {
        exponent: String,
        distance: f64,
        guard: f64,
    },
    #[error("home mismatch: {left} vs {right}")]
    HomeMismatch { left: String, right: String },
    #[error("tensor order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("operation requires tensor order {expected}, got {actual}")]
    WrongOrder { expected: usize, actual: usize },
    #[error("matrix is not in factorised homogeneous form: {0}")]
    NotFactorised(String),
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
