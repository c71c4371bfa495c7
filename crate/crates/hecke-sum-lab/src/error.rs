use thiserror::Error;

/// Unified error type for the whole crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A prime needed by a table fill has no coefficient in the source.
    #[error("no coefficient for prime {0}")]
    MissingPrimeCoefficient(u64),

    /// Series inversion of a local Euler factor left an imaginary residue
    /// larger than the realification tolerance.
    #[error("non-real majorant coefficient at p={p}, degree {degree}: |im| = {imag:.3e}")]
    NonRealCoefficient { p: u64, degree: usize, imag: f64 },

    /// Requested table size exceeds the supported range.
    #[error("capacity exceeded: requested {requested}, limit {limit}")]
    CapacityExceeded { requested: u64, limit: u64 },

    /// Index outside the built table.
    #[error("argument {value} out of range (table holds up to {limit})")]
    OutOfRange { value: u64, limit: u64 },

    /// Argument outside the mathematical domain of a formula.
    #[error("domain error: {0}")]
    Domain(String),

    /// A prime-power tail estimate failed to converge.
    #[error("divergent tail for weight {0}")]
    DivergentTail(String),

    /// Malformed coefficient file.
    #[error("coefficient file {path}, line {line}: {msg}")]
    CoefficientFile {
        path: String,
        line: usize,
        msg: String,
    },

    /// Malformed config file or unknown key.
    #[error("config {path}, line {line}: {msg}")]
    Config {
        path: String,
        line: usize,
        msg: String,
    },

    /// Invalid command-line usage not caught by the parser.
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// Process exit code mandated for this error when it escapes the CLI.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Usage(_) | Error::Config { .. } | Error::Domain(_) => 2,
            _ => 1,
        }
    }
}
