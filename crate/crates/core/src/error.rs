use thiserror::Error;

/// Errors raised by the curve analysis pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("polynomial of degree {degree} exceeds the factorization degree cap {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },

    #[error("element is not invertible modulo {modulus} (modulus is reducible)")]
    NonInvertible { modulus: String },

    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("parametrization is not proper (tracing index {0})")]
    NotProper(usize),

    #[error("polynomial is not divisible by t - s")]
    NotDivisible,

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("theta must be nonzero with P(theta) a simple point other than the limit point")]
    InvalidTheta,

    #[error("factor {factor} with exponent {exponent} admits no consistent fibre attribution")]
    AttributionFailure { factor: String, exponent: usize },

    #[error("no admissible coordinate change found within the search bound {bound}")]
    SearchExhausted { bound: usize },

    #[error("implicitization resultant vanishes identically")]
    DegenerateResultant,

    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Input parse failures, annotated with a 1-based position.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{line}:{column}: unexpected variable `{found}`, only `t` is allowed")]
    WrongVariable {
        line: usize,
        column: usize,
        found: String,
    },

    #[error("{line}:{column}: empty component")]
    EmptyComponent { line: usize, column: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
