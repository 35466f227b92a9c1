use thiserror::Error;

/// Errors raised across the library.
///
/// `NotApplicable` outcomes of the certifier are values, not errors; see
/// [`crate::certify::Outcome`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    CompositeModulus(String),
    #[error("invalid field descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different fields")]
    MixedFields,
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("{0} is not a prime")]
    NotPrime(String),
    #[error("input polynomial is constant")]
    ConstantInput,
    #[error("polynomial is constant in Y")]
    ConstantInY,
    #[error("polynomial is constant in the last variable")]
    ConstantInLastVariable,
    #[error("variable index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("input is the zero polynomial")]
    ZeroInput,
    #[error("operation requires {expected}")]
    WrongField { expected: &'static str },
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("{divisor} does not divide {target}")]
    NotADivisor { divisor: String, target: String },
    #[error("p*q does not reproduce the leading coefficient a_m")]
    FactorizationMismatch,
    #[error("p is not irreducible over the coefficient field")]
    PNotIrreducible,
    #[error("missing evidence: {0}")]
    MissingEvidence(String),
    #[error("omega values must be supplied when r > 2")]
    MissingOmega,
    #[error("syntax error at {line}:{column}: expected {expected}")]
    Syntax {
        line: usize,
        column: usize,
        expected: String,
    },
    #[error("unknown variable `{name}` at {line}:{column}")]
    UnknownVariable {
        name: String,
        line: usize,
        column: usize,
    },
    #[error("polynomial arity mismatch: {0}")]
    MixedArity(String),
}

pub type Result<T> = std::result::Result<T, Error>;
