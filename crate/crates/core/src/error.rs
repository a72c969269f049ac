use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument violates a documented precondition.
    InvalidArgument(String),
    /// A graph would exceed the subset-enumeration cap.
    Capacity { order: usize, cap: usize },
    /// Graph-spec or edge-list text could not be parsed.
    Parse { position: usize, message: String },
    /// The point handed to the equilibrium classifier is not an equilibrium.
    NotEquilibrium { residual: String },
    /// A graph fails a structural requirement of a construction.
    Precondition(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn parse(position: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: msg.into(),
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidArgument(m) => write!(f, "invalid argument: {m}"),
            Error::Capacity { order, cap } => {
                write!(f, "graph order {order} exceeds the enumeration cap of {cap} vertices")
            }
            Error::Parse { position, message } => {
                write!(f, "parse error at position {position}: {message}")
            }
            Error::NotEquilibrium { residual } => {
                write!(f, "point is not an equilibrium (residual {residual})")
            }
            Error::Precondition(m) => write!(f, "precondition failed: {m}"),
        }
    }
}

impl core::error::Error for Error {}
