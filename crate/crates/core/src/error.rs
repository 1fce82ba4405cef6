use alloc::string::String;
use core::fmt;

/// Errors raised by the combinatorial and operator layers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The rank of the cyclic quiver must be at least 2.
    InvalidRank(u32),
    /// `smile` was asked to glue raiz whose residues do not fit.
    CompositionUndefined(String),
    /// `frown` was asked to remove something that is not a terminal segment.
    NotTerminalSegment(String),
    /// Two gradings that were required to agree do not.
    DimensionMismatch(String),
    /// A representation whose arrows are not nilpotent.
    NotNilpotent,
    /// Matrix shapes that do not fit the declared dimension vector.
    Shape(String),
    /// A simple fiber of the empty partition was requested.
    EmptyPartition,
    /// `dim_step_fiber` with `t > s`.
    StepOutOfRange { s: i64, t: i64 },
    /// An enumeration would exceed the configured size guard.
    TooLarge(String),
    /// Text that could not be parsed.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidRank(n) => write!(f, "rank n = {n} is invalid, need n >= 2"),
            Error::CompositionUndefined(m) => write!(f, "composition undefined: {m}"),
            Error::NotTerminalSegment(m) => write!(f, "not a terminal segment: {m}"),
            Error::DimensionMismatch(m) => write!(f, "dimension mismatch: {m}"),
            Error::NotNilpotent => write!(f, "representation is not nilpotent"),
            Error::Shape(m) => write!(f, "bad matrix shape: {m}"),
            Error::EmptyPartition => write!(f, "the empty partition has no simple fiber"),
            Error::StepOutOfRange { s, t } => write!(f, "step index t = {t} exceeds s = {s}"),
            Error::TooLarge(m) => write!(f, "enumeration too large: {m}"),
            Error::Parse(m) => write!(f, "parse error: {m}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T, E = Error> = core::result::Result<T, E>;
