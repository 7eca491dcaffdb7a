use thiserror::Error;

/// Errors produced by the exact-arithmetic engine.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("modulus {0} exceeds the supported range (max 2^31 - 1)")]
    ModulusTooLarge(u64),

    #[error("undefined gcd")]
    UndefinedGcd,

    #[error("singular curve: {0}")]
    SingularCurve(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("not R_+-primary")]
    NotPrimary,

    #[error("formula out of range: {0}")]
    FormulaOutOfRange(String),

    #[error("step 1 failed: {0}")]
    Step1Failed(String),

    #[error("not a syzygy")]
    NotASyzygy,

    #[error("theorem hypotheses not met: {0}")]
    HypothesesNotMet(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}
