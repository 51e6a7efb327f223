use thiserror::Error;

/// Errors raised anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet mismatch: q={left} vs q={right}")]
    AlphabetMismatch { left: u32, right: u32 },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("symbol {symbol} is outside the alphabet 0..{q}")]
    SymbolOutOfRange { symbol: u32, q: u32 },

    #[error("composition has weight {actual}, expected {expected}")]
    WeightMismatch { expected: u64, actual: u64 },

    #[error("minimum distance is undefined for a code with {0} member(s)")]
    UndefinedDistance(usize),

    #[error("code contains a repeated member at row {0}")]
    DuplicateMember(usize),

    #[error("metric {metric} is not defined on {kind} codes")]
    IncompatibleMetric {
        metric: &'static str,
        kind: &'static str,
    },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("inverse of zero")]
    ZeroInverse,

    #[error("operands belong to different fields")]
    FieldMismatch,

    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("polynomial is not a unit in the residue ring")]
    NonUnit,

    #[error("polynomial degree {degree} exceeds the bound {bound}")]
    DegreeTooHigh { degree: usize, bound: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{what} = {value} exceeds the cap {cap}")]
    ScaleCap {
        what: &'static str,
        value: u128,
        cap: u128,
    },

    #[error("search exceeded the time budget of {0} s")]
    Timeout(u64),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("i/o: {0}")]
    Io(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// True for refusals caused by desk-scale caps rather than bad input.
    pub fn is_scale_cap(&self) -> bool {
        matches!(self, Error::ScaleCap { .. } | Error::Timeout(_))
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
