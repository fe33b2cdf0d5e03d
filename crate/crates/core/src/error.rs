use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NegcatError {
    #[error("({0},{1}) is not an admissible diagonal")]
    NotAdmissible(usize, usize),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("object is not in the required subcategory: {0}")]
    NotInSubcategory(String),
    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, NegcatError>;
