use alloc::vec::Vec;
use core::fmt;

use crate::signfn::SymmetryKind;

/// Errors raised by the orchard library.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An element lies outside the ground set `[1, n]`.
    ElementOutOfRange { element: u32, n: u32 },
    /// A sequence that must consist of distinct elements repeats one.
    RepeatedElement(u32),
    /// A subset code is not strictly increasing.
    NotIncreasing,
    /// A subset has the wrong number of elements.
    WrongSize { expected: usize, found: usize },
    /// `k` exceeds `n` where a `k`-subset of `[1, n]` is required.
    SubsetTooLarge { n: u32, k: u32 },
    /// A colex rank is not below `C(n, k)`.
    RankOutOfRange { rank: u64, n: u32, k: u32 },
    /// The number of subsets does not fit in 64 bits.
    TooLarge { n: u32, k: u32 },
    /// Arity outside `[1, n]`, or outside an operation's domain.
    ArityOutOfRange { arity: u32, n: u32 },
    /// A stored sign value other than `-1` or `+1`.
    InvalidSign(i64),
    /// Sign sequence has the wrong length for `(n, arity)`.
    LengthMismatch { expected: u64, found: usize },
    /// Two sign functions differ in ground set or arity.
    ShapeMismatch,
    /// The operation is only defined for the other symmetry kind.
    KindMismatch { expected: SymmetryKind },
    /// Separation counts need `n >= d + 2`.
    Unsupported { n: u32, d: u32 },
    /// A tournament matrix violates skew-symmetry or has bad entries.
    InvalidTournament { row: u32, col: u32 },
    /// Point or coordinate count does not match the dimension.
    DimensionMismatch { expected: usize, found: usize },
    /// `n > d` fails for a point configuration.
    TooFewPoints { n: usize, dim: usize },
    /// A `(d + 1)`-subset of points spans a lower dimensional flat.
    Degenerate { subset: Vec<u32> },
    /// A statement that holds for every generic function was violated.
    Inconsistent(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ElementOutOfRange { element, n } => {
                write!(f, "element {element} is outside the ground set [1, {n}]")
            }
            Error::RepeatedElement(x) => write!(f, "element {x} is repeated"),
            Error::NotIncreasing => write!(f, "subset is not strictly increasing"),
            Error::WrongSize { expected, found } => {
                write!(f, "expected {expected} elements, found {found}")
            }
            Error::SubsetTooLarge { n, k } => write!(f, "no {k}-subsets of a {n}-element set"),
            Error::RankOutOfRange { rank, n, k } => {
                write!(f, "rank {rank} out of range for {k}-subsets of [1, {n}]")
            }
            Error::TooLarge { n, k } => write!(f, "C({n}, {k}) does not fit in 64 bits"),
            Error::ArityOutOfRange { arity, n } => {
                write!(f, "arity {arity} is not allowed on a {n}-element set")
            }
            Error::InvalidSign(v) => write!(f, "sign value {v} is not -1 or 1"),
            Error::LengthMismatch { expected, found } => {
                write!(f, "expected {expected} signs, found {found}")
            }
            Error::ShapeMismatch => write!(f, "sign functions differ in n or arity"),
            Error::KindMismatch { expected } => {
                write!(f, "operation requires a {expected} function")
            }
            Error::Unsupported { n, d } => write!(
                f,
                "orchard relation undefined for n = {n}, d = {d} (needs n >= d + 2)"
            ),
            Error::InvalidTournament { row, col } => {
                write!(f, "invalid tournament entry at ({row}, {col})")
            }
            Error::DimensionMismatch { expected, found } => {
                write!(f, "expected dimension {expected}, found {found}")
            }
            Error::TooFewPoints { n, dim } => {
                write!(f, "{n} points do not exceed the dimension {dim}")
            }
            Error::Degenerate { subset } => {
                write!(f, "degenerate point subset {{")?;
                for (i, x) in subset.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, "}}")
            }
            Error::Inconsistent(what) => write!(f, "internal consistency check failed: {what}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
