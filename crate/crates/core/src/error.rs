use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition `{0}`: {1}")]
    Partition(String, &'static str),

    #[error("cannot parse expansion `{input}`: {reason}")]
    Expansion { input: String, reason: String },

    #[error("cannot parse e-product `{0}`")]
    EProduct(String),

    #[error("cannot parse polynomial `{0}`")]
    Polynomial(String),

    #[error("monomial oracle needs at least {needed} variables, got {given}")]
    TooFewVariables { needed: u64, given: u32 },

    #[error("oracle peel failed at {shape}: {reason}")]
    OraclePeel { shape: String, reason: String },

    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("coefficient {index} of {what} is not an integer")]
    NotIntegral { what: String, index: usize },

    #[error("alpha({n},{r},k) changes sign more than once in k")]
    NoSingleSignChange { n: u32, r: u32 },

    #[error("bad input: {0}")]
    Input(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
