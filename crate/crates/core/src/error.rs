use alloc::string::String;
use core::fmt;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed input: mismatched lengths, out-of-range coordinates,
    /// unparsable text.
    Input(String),
    /// Structurally valid arguments that violate an operation's
    /// preconditions (wrong order, not an automorphism, unsupported prime).
    Domain(String),
    /// A standing hypothesis of the requested decomposition does not hold
    /// for this instance, so the operation declines it.
    HypothesisNotMet(String),
    /// The minimum distance of the zero code is undefined.
    UndefinedDistance,
    /// An exhaustive enumeration over `2^dimension` codewords exceeds the
    /// configured cap.
    Capacity { dimension: usize, cap: usize },
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn hypothesis(msg: impl Into<String>) -> Self {
        Error::HypothesisNotMet(msg.into())
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Input(msg) => write!(f, "invalid input: {msg}"),
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::HypothesisNotMet(msg) => write!(f, "hypothesis not met: {msg}"),
            Error::UndefinedDistance => {
                write!(f, "minimum distance of the zero code is undefined")
            }
            Error::Capacity { dimension, cap } => write!(
                f,
                "enumeration over 2^{dimension} codewords exceeds the cap 2^{cap}"
            ),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
