use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("multiplication table is not square or has out-of-range entries")]
    MalformedTable,
    #[error("multiplication is not associative at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("index 0 is not a two-sided identity")]
    NoIdentity,
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("row or column {0} is not a permutation")]
    NotAPermutationRow(usize),
    #[error("size limit exceeded: {what} = {size} > {limit}")]
    SizeLimitExceeded { what: &'static str, size: usize, limit: usize },
    #[error("F is not normal in H")]
    NotNormal,
    #[error("not a subgroup")]
    NotASubgroup,
    #[error("root order {order} is not divisible by {denominator}")]
    IncompatibleOrder { order: u64, denominator: u64 },
    #[error("cochain degree {0} is too high")]
    DegreeTooHigh(usize),
    #[error("degree {0} is not supported here")]
    DegreeUnsupported(usize),
    #[error("cochain is not a cocycle")]
    NotACocycle,
    #[error("not a coboundary")]
    NotACoboundary,
    #[error("cocycle values do not have denominators dividing {0}")]
    OrderMismatch(u64),
    #[error("characters belong to different (G, alpha) contexts")]
    MismatchedContext,
    #[error("scalar product is not rational")]
    NonRationalResult,
    #[error("not a character: {0}")]
    NotACharacter(String),
    #[error("quotient cochain is not a 3-cocycle")]
    QuotientNotCocycle,
    #[error("integer overflow in exact elimination")]
    Overflow,
    #[error("solution group is infinite")]
    InfiniteQuotient,
    #[error("invalid input: {0}")]
    Parse(String),
    #[error("invalid datum: {0}")]
    InvalidDatum(String),
}

pub type Result<T> = std::result::Result<T, Error>;
