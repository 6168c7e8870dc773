//! Crate-wide error type.

use alloc::string::String;

/// Errors produced by configuration validation and the simulation pipeline.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// An argument violates a documented precondition (shape, sign, count).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// A configuration value is inconsistent or out of its admissible range.
    #[error("configuration error: {0}")]
    Config(String),
    /// Array dimensions do not line up.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    /// A non-finite value surfaced where the pipeline requires finite numbers.
    #[error("numerical abort: {0}")]
    Numerical(String),
}

pub type Result<T> = core::result::Result<T, Error>;

macro_rules! invalid_arg {
    ($($t:tt)*) => {
        $crate::error::Error::InvalidArgument(alloc::format!($($t)*))
    };
}

macro_rules! config_err {
    ($($t:tt)*) => {
        $crate::error::Error::Config(alloc::format!($($t)*))
    };
}

macro_rules! shape_err {
    ($($t:tt)*) => {
        $crate::error::Error::ShapeMismatch(alloc::format!($($t)*))
    };
}

pub(crate) use {config_err, invalid_arg, shape_err};
