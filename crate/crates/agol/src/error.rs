use num_bigint::BigInt;
use thiserror::Error;

/// Errors reported by the library.
///
/// `Parse` signals malformed input text, everything else a semantic failure
/// on well-formed input. `Internal` marks a broken invariant and is never
/// expected to surface; it is kept as an error (rather than a panic) so the
/// command-line tool can report it cleanly.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field mismatch: operands live in Q(\u{221a}{left}) and Q(\u{221a}{right})")]
    FieldMismatch { left: BigInt, right: BigInt },

    #[error("division by zero")]
    DivisionByZero,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("matrix is not hyperbolic: |trace| = |{trace}| \u{2264} 2")]
    NotHyperbolic { trace: BigInt },

    #[error("track does not admit a {side} splitting: {detail}")]
    NotSplittable { side: char, detail: String },

    #[error("ambiguous split: x = y and extended splittings are not enabled")]
    AmbiguousSplit,

    #[error("braid `{word}` is not pseudo-Anosov ({class})")]
    NotPseudoAnosov { word: String, class: String },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }

    /// Exit code the CLI maps this error to: 2 for parse errors, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } => 2,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
