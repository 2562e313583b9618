use num_bigint::BigInt;

/// Errors reported by the exact-arithmetic toolkit.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division requires a monic nonzero divisor")]
    NonMonicDivisor,
    #[error("polynomial must be monic")]
    NotMonic,
    #[error("polynomial must be nonzero")]
    ZeroPolynomial,
    #[error("polynomial must be nonconstant")]
    ConstantPolynomial,
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("modulus must be irreducible over F_{p}: {modulus}")]
    ReducibleModulus { p: u64, modulus: String },
    #[error("coefficients belong to different fields")]
    FieldMismatch,
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("cannot verify that {0} is squarefree: |{0}| exceeds the trial-division bound {1}")]
    SquarefreeUnverifiable(BigInt, u64),
    #[error("{0} is not squarefree")]
    NotSquarefree(BigInt),
    #[error("no finite points: polygon is undefined")]
    EmptyPolygon,
    #[error("{phi} does not divide the input modulo {p}")]
    PhiDoesNotDivide { phi: String, p: u64 },
    #[error("side ({x0},{y0})-({x1},{y1}) is not a side of the principal polygon")]
    NotASide { x0: i64, y0: i64, x1: i64, y1: i64 },
    #[error("not {p}-regular: residual polynomial of {phi} on side ({x0},{y0})-({x1},{y1}) is not squarefree")]
    Irregular {
        p: u64,
        phi: String,
        x0: i64,
        y0: i64,
        x1: i64,
        y1: i64,
    },
    #[error("expansion does not reconstruct the base polynomial")]
    BadExpansion,
    #[error("unsupported parameters: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
