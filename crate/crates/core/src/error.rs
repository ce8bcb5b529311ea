use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("polynomials belong to different rings")]
    RingMismatch,
    #[error("Groebner basis was computed for a different monomial order")]
    OrderMismatch,
    #[error("budget exhausted during {stage}: more than {limit} S-pair reductions")]
    BudgetExhausted { stage: String, limit: u64 },
    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,
    #[error("point not on variety: generator {index} evaluates to {value}")]
    PointNotOnVariety { index: usize, value: String },
    #[error("point is singular: Jacobian rank {rank}, expected {expected}")]
    SingularPoint { rank: usize, expected: usize },
    #[error("codimension {c} out of range 1..={max}")]
    CodimensionOutOfRange { c: usize, max: usize },
    #[error("polynomial is not univariate")]
    NotUnivariate,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("degree {degree} exceeds the allowed maximum {max}")]
    DegreeTooHigh { degree: u32, max: u32 },
    #[error("Veronese lift has {size} coordinates, limit is {max}")]
    LiftTooLarge { size: usize, max: usize },
    #[error("matrix rank {found} differs from the required rank {expected}")]
    RankMismatch { found: usize, expected: usize },
    #[error("random slice failed after {attempts} attempts: {reason}")]
    UnluckySlice { attempts: usize, reason: String },
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
