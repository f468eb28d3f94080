use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("zero input: {0}")]
    ZeroInput(String),
    #[error("pole at q = {0}")]
    Pole(String),
    #[error("negative power evaluated at q = 0")]
    ZeroBase,
    #[error("division by zero")]
    DivisionByZero,
    #[error("malformed value: {0}")]
    Malformed(String),

    #[error("unsupported rank: {0}")]
    UnsupportedRank(String),
    #[error("class functions belong to different groups")]
    GroupMismatch,
    #[error("fusion map undefined: {0}")]
    FusionUndefined(String),
    #[error("not implemented: {0}")]
    Unimplemented(String),

    #[error("rank bound exceeded: {0}")]
    RankBound(String),
    #[error("divisibility violated: {0}")]
    Divisibility(String),
    #[error("parse error at {path}: {message}")]
    Parse { path: String, message: String },
    #[error("descriptor invariant violated at {path}: {message}")]
    Invariant { path: String, message: String },
    #[error("no appendix record for {0}")]
    UncoveredType(String),

    #[error("singular diagonal block at {0}")]
    SingularBlock(String),
    #[error("entry is not a Laurent polynomial: {0}")]
    NonPolynomial(String),

    #[error("pair is not standard: {0}")]
    NonStandard(String),
    #[error("bad composition: {0}")]
    BadComposition(String),

    #[error("Y-table required: {0}")]
    MissingYTable(String),
    #[error("unsupported group: {0}")]
    UnsupportedGroup(String),

    #[error("enumeration size bound exceeded: {0}")]
    SizeBound(String),
    #[error("cache I/O: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            path: path.into(),
            message: message.into(),
        }
    }

    pub(crate) fn invariant(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Invariant {
            path: path.into(),
            message: message.into(),
        }
    }
}
