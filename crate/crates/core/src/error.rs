use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("group order {order} exceeds the configured maximum of {max}")]
    Size { order: usize, max: usize },

    #[error("invalid parameters: {0}")]
    Parameter(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("table entry out of range at ({row}, {col}): {value} is not below {order}")]
    Closure { row: usize, col: usize, value: usize, order: usize },

    #[error("Latin square violated: {line} {index} repeats element {value}")]
    LatinSquare { line: &'static str, index: usize, value: usize },

    #[error("associativity violated: ({a}*{b})*{c} != {a}*({b}*{c})")]
    Associativity { a: usize, b: usize, c: usize },

    #[error("no identity element found in table")]
    NoIdentity,

    #[error("element index {index} out of range for group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("operation is undefined on the trivial group: {0}")]
    TrivialGroup(&'static str),

    #[error("operation requires an abelian group")]
    NonAbelian,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("io error on {path}: {message}")]
    Io { path: String, message: String },
}
