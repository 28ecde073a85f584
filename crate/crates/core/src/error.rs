use thiserror::Error;

/// Errors raised by the exact and numeric kernels.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
    #[error("denominator vanishes at z = 0; no power-series expansion at the origin")]
    NoSeriesAtOrigin,
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix dimensions do not match: {0}")]
    Shape(String),
    #[error("order must be >= 2, got {0}")]
    InvalidOrder(i64),
    #[error("order {order} outside the supported range {min}..={max}")]
    OrderOutOfRange {
        order: usize,
        min: usize,
        max: usize,
    },
    #[error("invalid recurrence: {0}")]
    InvalidRecurrence(String),
    #[error("generating function is improper (numerator degree >= denominator degree)")]
    Improper,
    #[error("denominator must be a non-constant polynomial")]
    ConstantDenominator,
    #[error("no pole at z = 1")]
    PoleAbsent,
    #[error("pole at z = 1 has order >= 2")]
    MultiplePole,
    #[error("denominators differ")]
    DenominatorMismatch,
    #[error("basis numerator is not a monomial m*z")]
    NonMonomialBasis,
    #[error("target numerator is not a polynomial multiple of the basis numerator")]
    NotInBasis,
    #[error("hadamard product failed verification at n = {n}")]
    HadamardMismatch { n: usize },
    #[error("identity fails at n = {n}: lhs = {lhs}, rhs = {rhs}")]
    Discrepancy { n: i64, lhs: String, rhs: String },
    #[error("argument |x| = {abs_x} outside the convergence radius {radius}")]
    OutsideRadius { abs_x: f64, radius: f64 },
    #[error("series did not converge within {0} terms")]
    TermCap(usize),
    #[error("non-finite value in numeric evaluation")]
    NonFinite,
    #[error("near-singular linear system (pivot magnitude {0:e})")]
    SingularSystem(f64),
    #[error("roots are not pairwise distinct (separation {0:e})")]
    DuplicateRoots(f64),
    #[error("imaginary residue {im:e} exceeds threshold for real value {re}")]
    ImaginaryResidue { re: f64, im: f64 },
    #[error("sequence is not annihilated by the k-bonacci denominator of order {0}")]
    UnsupportedSequence(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
