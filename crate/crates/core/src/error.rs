use thiserror::Error;

/// Failure to parse a textual scalar, polynomial, series or fixture value.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error: {msg}")]
pub struct ParseError {
    pub msg: String,
}

impl ParseError {
    pub fn new(msg: impl Into<String>) -> Self {
        ParseError { msg: msg.into() }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("structural error: {0}")]
    Structural(String),

    #[error("no closed form within the denominator ansatz; raw series: {series}")]
    NoClosedForm { series: String },

    #[error("insufficient orders in {var}: have {have}, need {need}")]
    InsufficientOrders { var: String, have: u32, need: u32 },

    #[error("pole of order {order} along 1-{var}")]
    HigherOrderPole { var: String, order: u32 },

    #[error("factor {factor} vanishes at {var}=1")]
    NonIsolatedPole { var: String, factor: String },

    #[error("presentation error in degree {degree}: {msg}")]
    Presentation { degree: usize, msg: String },

    #[error("product of {left} and {right} escapes V+W")]
    NotClosed { left: String, right: String },

    #[error("pole at evaluation point in product of {left} and {right}")]
    EvaluationPole { left: String, right: String },

    #[error("induced pairing is degenerate")]
    DegeneratePairing,

    #[error("unsupported fan: {0}")]
    UnsupportedFan(String),

    #[error("construction failure: {0}")]
    ConstructionFailure(String),

    #[error("insufficient truncation: {0}")]
    InsufficientTruncation(String),

    #[error("theorem violation: {0}")]
    TheoremViolation(String),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn structural(msg: impl Into<String>) -> Error {
    Error::Structural(msg.into())
}
