use thiserror::Error;

/// Errors raised by the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A caller broke an operation's precondition (wrong tuple size, mixed
    /// parameters, odd dimension where an even one is required, ...).
    #[error("contract violation: {0}")]
    Contract(String),
    /// Data that should be internally consistent is not. Either the input was
    /// invalid in a way that only shows up late, or there is a bug.
    #[error("data integrity error: {0}")]
    Integrity(String),
    /// A desk-scale guard was exceeded.
    #[error("resource guard exceeded: {what} (limit {limit})")]
    Resource { what: &'static str, limit: u64 },
    /// Malformed serialized input.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

macro_rules! contract {
    ($($arg:tt)*) => { $crate::error::Error::Contract(format!($($arg)*)) };
}

macro_rules! integrity {
    ($($arg:tt)*) => { $crate::error::Error::Integrity(format!($($arg)*)) };
}

pub(crate) use contract;
pub(crate) use integrity;
