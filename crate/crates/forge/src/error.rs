use thiserror::Error;

/// Problems with the input; all map to exit code 2.
#[derive(Debug, Error)]
pub enum InputError {
    #[error("syntax error at {path}: {message}")]
    Syntax { path: String, message: String },
    #[error("invalid entry at {path}: {message}")]
    Invalid { path: String, message: String },
    #[error("unknown name {name:?} at {path}")]
    UnknownName { path: String, name: String },
    #[error("unsupported field: {0}")]
    UnsupportedField(String),
    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),
    #[error("unknown command {0:?}")]
    UnknownCommand(String),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
}

impl InputError {
    pub fn invalid(path: impl Into<String>, message: impl Into<String>) -> Self {
        InputError::Invalid { path: path.into(), message: message.into() }
    }
}
