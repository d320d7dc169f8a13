use std::fmt;

use serde::Serialize;

/// Which resource cap stopped a Gröbner computation.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "cap", rename_all = "snake_case")]
pub enum Cap {
    Timeout { seconds: f64 },
    Terms { limit: usize },
    Degree { limit: u32 },
}

impl fmt::Display for Cap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cap::Timeout { seconds } => write!(f, "timeout after {seconds}s"),
            Cap::Terms { limit } => write!(f, "term count exceeded {limit}"),
            Cap::Degree { limit } => write!(f, "intermediate degree exceeded {limit}"),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("parameter error: {0}")]
    Parameter(String),

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("aborted: {0}")]
    Aborted(Cap),

    #[error("oracle mismatch: {0}")]
    OracleMismatch(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn param(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    pub fn parse(offset: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: msg.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
