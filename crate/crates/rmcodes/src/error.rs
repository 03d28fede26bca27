use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported field degree {0} (expected 2 <= m <= 16)")]
    UnsupportedDegree(u32),
    #[error("subfield degree {s} does not divide extension degree {m}")]
    NotASubfieldDegree { m: u32, s: u32 },
    #[error("element {mask:#x} does not lie in the subfield GF(2^{s})")]
    NotInSubfield { mask: u32, s: u32 },
    #[error("element mask {mask:#x} out of range for GF(2^{m})")]
    ElementOutOfRange { mask: u32, m: u32 },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix does not have full row rank")]
    RankDeficient,

    #[error("parameter m = {0} out of range for this construction")]
    OutOfRangeM(u32),
    #[error("invalid sub-code spec: {0}")]
    InvalidSubcodeSpec(String),
    #[error("code does not contain the first order Reed-Muller code R(1,{0})")]
    DoesNotContainRm1(u32),
    #[error("coset representative is not a quadratic Boolean function")]
    NotQuadratic,
    #[error("operation requires an even m, got m = {0}")]
    OddVariableCount(u32),
    #[error("matrix is not symplectic (symmetric with zero diagonal)")]
    NotSymplectic,

    #[error("polynomial is not an idempotent of the ring")]
    NotIdempotent,
    #[error("index {i} out of range for the formula (valid range 1..={max})")]
    CosetIndexOutOfRange { i: u32, max: u32 },

    #[error("enumeration budget exceeded: dimension {k} > budget {budget} bits")]
    BudgetExceeded { k: usize, budget: usize },
    #[error("operation undefined for the zero code")]
    ZeroCode,
    #[error("puncture position {pos} out of range for length {n}")]
    BadPuncturePosition { pos: usize, n: usize },

    #[error("bound out of its validity region: {0}")]
    BoundOutOfRegion(String),

    #[error("malformed code file: {0}")]
    MalformedCodeFile(String),
}

pub type Result<T> = std::result::Result<T, Error>;
