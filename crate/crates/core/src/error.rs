use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different coefficient fields")]
    FieldMismatch,
    #[error("operands belong to different polynomial rings")]
    RingMismatch,
    #[error("modulus {0} is not a prime below 2^31")]
    InvalidModulus(u64),
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("polynomial is constant")]
    ConstantPolynomial,
    #[error("exponent exceeds the 16-bit limit")]
    ExponentOverflow,
    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,
    #[error("ideal is the whole ring")]
    UnitIdeal,
    #[error("quotient dimension {0} exceeds the configured cap {1}")]
    DimensionCap(usize, usize),
    #[error("unsupported coefficient field: {0}")]
    UnsupportedField(String),
    #[error("duplicate point in point set")]
    DuplicatePoint,
    #[error("point has {got} coordinates, ring has {expected} variables")]
    PointArity { expected: usize, got: usize },
    #[error("polynomial degree {0} exceeds the factorization cap of {1}")]
    DegreeCapExceeded(usize, usize),
    #[error("no primitive element found after {0} attempts")]
    PrimitiveElementNotFound(usize),
    #[error("ideal is not maximal")]
    NotMaximal,
    #[error("ideal is not primary to the given maximal ideal")]
    NotPrimary,
    #[error("generator {0} does not lie in the ideal of the regular sequence")]
    NotInIdeal(usize),
    #[error("characteristic {char} divides the multiplicity {mu}")]
    CharacteristicObstruction { char: u64, mu: usize },
    #[error("term ordering is not degree compatible")]
    NotDegreeCompatible,
    #[error("invalid order ideal: {0}")]
    InvalidOrderIdeal(String),
    #[error("order ideal does not give a degree filtered border basis")]
    NotDegreeFiltered,
    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
