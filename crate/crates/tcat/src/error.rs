use thiserror::Error;

use crate::validate::ValidationReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid structure:\n{0}")]
    Invalid(ValidationReport),

    #[error("parse error at {line}:{col}: expected {expected}, found `{found}`")]
    Parse {
        line: usize,
        col: usize,
        expected: String,
        found: String,
    },

    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },

    #[error("{what}: boundaries do not match ({detail})")]
    Mismatch { what: &'static str, detail: String },

    #[error("mapping is not total: missing image for {kind} `{name}`")]
    NotTotal { kind: &'static str, name: String },

    #[error("enumeration budget {budget} exceeded while listing {what}")]
    Budget { what: &'static str, budget: usize },

    #[error("path bound {bound} exceeded by {what}")]
    Bound { what: String, bound: usize },

    #[error("dimension bound {have} too small: {need_what} needs at least {need}")]
    Dimension {
        have: usize,
        need: usize,
        need_what: &'static str,
    },

    #[error("missing witness: {0}")]
    MissingWitness(String),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// CLI exit code per interface contract: 2 usage/parse, 3 budget/bound.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::Unknown { .. } | Error::NotTotal { .. } => 2,
            Error::Budget { .. } | Error::Bound { .. } | Error::Dimension { .. } => 3,
            _ => 1,
        }
    }
}
