use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands belong to different coefficient fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("modulus {0} is not prime")]
    NonPrimeModulus(u64),
    #[error("exponent vector length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("operands live in different polynomial rings")]
    RingMismatch,
    #[error("division by the zero polynomial")]
    ZeroDivisorPolynomial,
    #[error("the zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("polynomial is not a member of the ideal")]
    NotAMember,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("invalid monomial order: {0}")]
    InvalidOrder(String),
    #[error("characteristic {characteristic} is too small for a squarefree computation of degree {degree}")]
    UnsupportedCharacteristic { characteristic: u64, degree: usize },
    #[error("radical strategy `{strategy}` failed: {reason}")]
    StrategyFailed { strategy: String, reason: String },
    #[error("the test ideal is zero in the ring and holds no usable denominator")]
    EmptyIdeal,
    #[error("denominator is a zero divisor")]
    NotNonZeroDivisor,
    #[error("structure constants could not be lifted: {0}")]
    LiftFailed(String),
    #[error("iteration limit {limit} exceeded on component {component}")]
    IterationLimitExceeded {
        limit: usize,
        component: usize,
        trace: Vec<String>,
    },
    #[error("verification failed at check ({check}): {detail}")]
    VerificationFailed { check: char, detail: String },
    #[error("syntax error at {line}:{column}: expected {expected}")]
    Syntax {
        line: usize,
        column: usize,
        expected: String,
    },
    #[error("unknown variable `{name}` at {line}:{column}")]
    UndeclaredVariable {
        name: String,
        line: usize,
        column: usize,
    },
}
