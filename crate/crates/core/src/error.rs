use alloc::string::String;

/// Errors raised by the core operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation (`a_0`, `l < 2`, ...).
    #[error("domain error: {0}")]
    Domain(String),
    /// Evaluation hit a pole. `order` is the multiplicity gap of the offending factor.
    #[error("pole of order {order} at {point}")]
    Pole { point: String, order: u32 },
    /// Inner and outer shapes are incompatible, or shapes of a pair differ.
    #[error("shape error: {0}")]
    Shape(String),
    /// Index outside `1..=n` or similar.
    #[error("index {index} out of range {range}")]
    Index { index: i64, range: String },
    /// Two operands live in algebras of different rank.
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    /// A computation exceeded the practical size cap.
    #[error("size guard exceeded: {0}")]
    SizeGuard(String),
    /// An internal consistency check failed.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub(crate) fn invariant(msg: impl Into<String>) -> Error {
    Error::Invariant(msg.into())
}
