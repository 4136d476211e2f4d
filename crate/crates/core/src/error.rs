use thiserror::Error;

/// Errors raised by constructions. Verification failures are never errors;
/// they are reported as [`crate::verify::Violation`]s.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("not a permutation of 1..={degree}: {images:?}")]
    NotAPermutation { degree: usize, images: Vec<usize> },

    #[error("malformed action: {0}")]
    MalformedAction(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("pointed map does not fix the basepoint")]
    BasepointNotPreserved,

    #[error("image {image} out of range for target of size {target}")]
    ImageOutOfRange { image: usize, target: usize },

    #[error("hom-set of size {base}^{exponent} exceeds the enumeration limit")]
    HomTooLarge { base: usize, exponent: usize },

    #[error("{size} elements exceed the enumeration limit {limit}")]
    EnumerationLimit { size: usize, limit: usize },

    #[error("degree {degree} exceeds the truncation bound {bound}")]
    BoundExceeded { degree: usize, bound: usize },

    #[error("simplicial degree {degree} exceeds the dimension cap {cap}")]
    CapExceeded { degree: usize, cap: usize },

    #[error("invalid simplicial operator index {index} at degree {degree}")]
    InvalidOperator { index: usize, degree: usize },

    #[error("simplicial identity fails: {0}")]
    SimplicialIdentity(String),

    #[error("object of size {0} is not in the base category")]
    UnknownObject(usize),

    #[error("no suite named {0:?}")]
    UnknownSuite(String),

    #[error("ring object is not commutative")]
    NotCommutative,

    #[error("verification precondition failed: {0}")]
    Unverified(String),
}

pub type Result<T> = std::result::Result<T, Error>;
