use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ForgeError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("incompatible structures: {0}")]
    Mismatch(String),
    #[error("precondition not met: {0}")]
    Precondition(String),
    #[error("module is not finitely generated projective: {0}")]
    NotProjective(String),
}

pub type Result<T> = std::result::Result<T, ForgeError>;
