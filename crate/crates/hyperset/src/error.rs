use thiserror::Error;

/// Crate-wide error type.
#[derive(Error, Debug)]
pub enum Error {
    /// Operand shapes do not conform for the named tensor op.
    #[error("shape mismatch in `{op}`: lhs {lhs_rows}x{lhs_cols}, rhs {rhs_rows}x{rhs_cols}")]
    ShapeMismatch {
        op: &'static str,
        lhs_rows: usize,
        lhs_cols: usize,
        rhs_rows: usize,
        rhs_cols: usize,
    },

    /// An API was called in a way its contract forbids.
    #[error("usage error: {0}")]
    Usage(String),

    /// A configuration value violates a stated invariant.
    #[error("configuration error: {0}")]
    Config(String),

    /// Too few edge slots for the number of positive target edges.
    #[error("capacity error: {need} positive edges but only {have} slots (k_max misconfigured?)")]
    Capacity { need: usize, have: usize },

    /// Geometric input failed a general-position check; the caller should resample.
    #[error("degenerate input: {0}")]
    Degenerate(String),

    /// Resampling on degeneracy gave up after too many attempts.
    #[error("degeneracy exhaustion: {attempts} consecutive degenerate samples for {task}")]
    DegeneracyExhausted { task: String, attempts: usize },

    /// An internal invariant another module promised to uphold was violated.
    #[error("contract violation: {0}")]
    Contract(String),

    /// Malformed input file (dataset, config, or checkpoint).
    #[error("parse error at {source_name}:{line}: {msg}")]
    Parse {
        source_name: String,
        line: usize,
        msg: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code for the CLI: 1 usage/config, 2 data/degeneracy, 3 internal.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Usage(_) | Error::Config(_) | Error::Capacity { .. } | Error::Parse { .. } => 1,
            Error::Degenerate(_) | Error::DegeneracyExhausted { .. } | Error::Io(_) => 2,
            Error::ShapeMismatch { .. } | Error::Contract(_) => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
