use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed structure: {0}")]
    Shape(String),

    #[error("carrier size {size} exceeds the {what} cap of {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("order {order} is outside the enumeration range 1..={max}")]
    OrderOutOfRange { order: usize, max: usize },

    #[error("invalid shard {0}: expected INDEX/TOTAL with INDEX < TOTAL")]
    InvalidShard(String),

    #[error("generated ideals are only defined for a nonempty generating set")]
    EmptyGenerator,

    #[error("element index {index} is out of range for a carrier of size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("unknown element `{0}`")]
    UnknownElement(String),

    #[error("structure violates its axioms:\n  {}", .0.join("\n  "))]
    Invalid(Vec<String>),

    #[error("{path}: parse error at line {line}, column {column}: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{path}: field `{field}`: {message}")]
    Schema {
        path: PathBuf,
        field: &'static str,
        message: String,
    },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{0}")]
    Unsupported(String),
}
