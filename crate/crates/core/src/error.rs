use std::fmt;

use thiserror::Error;

use crate::signed_sets::SignedSubset;

/// What went wrong while reading one textual set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    /// `0` is not an element of the signed ground set.
    ZeroElement,
    /// `|value| > n`.
    OutOfRange {
        value: i64,
        n: u8,
    },
    /// The same element written twice on one line.
    DuplicateElement(i8),
    /// Anything that is not a signed decimal integer or the `{}` literal.
    MalformedToken(String),
    /// Tokens must be separated by exactly one space.
    BadSeparator,
    EmptyLine,
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::ZeroElement => write!(f, "zero is not a signed element"),
            ParseErrorKind::OutOfRange { value, n } => {
                write!(f, "element {value} is outside E±{n}")
            }
            ParseErrorKind::DuplicateElement(e) => write!(f, "duplicate element {e}"),
            ParseErrorKind::MalformedToken(t) => write!(f, "malformed token {t:?}"),
            ParseErrorKind::BadSeparator => {
                write!(f, "elements must be separated by single spaces")
            }
            ParseErrorKind::EmptyLine => write!(f, "empty set must be written as {{}}"),
        }
    }
}

/// A set-level parse failure; `column` is the 1-based byte offset of the offending token.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("column {column}: {kind}")]
pub struct ParseError {
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("ground size must satisfy 1 <= n <= 16, got {0}")]
    InvalidGroundSize(i64),

    #[error("element {value} is not in E±{n}")]
    ElementOutOfRange { value: i64, n: u8 },

    #[error("line {line}: {source}")]
    Parse {
        line: usize,
        #[source]
        source: ParseError,
    },

    #[error("line {line}: duplicate set {} (first seen on line {first_line})", .set.braced())]
    DuplicateSet {
        line: usize,
        first_line: usize,
        set: SignedSubset,
    },

    #[error("ordering top row has length {found}, expected {expected}")]
    OrderingLength { expected: usize, found: usize },

    #[error("invalid ordering: {0}")]
    InvalidOrdering(String),

    #[error("ordering repeats magnitude {0}")]
    RepeatedMagnitude(u8),

    #[error("family is empty")]
    EmptyFamily,

    #[error("inadmissible set {}", .0.braced())]
    InadmissibleSet(SignedSubset),

    #[error("family repeats the set {}", .0.braced())]
    RepeatedMember(SignedSubset),

    #[error("members have unequal cardinalities ({first} and {other})")]
    UnequalCardinality { first: usize, other: usize },

    #[error("family is not subset-closed: {} is present but {} is not", .set.braced(), .missing.braced())]
    NotSubsetClosed {
        set: SignedSubset,
        missing: SignedSubset,
    },

    #[error("set {} is not a member of the family", .0.braced())]
    NotAMember(SignedSubset),

    #[error("sets have different cardinalities ({left} and {right})")]
    CardinalityMismatch { left: usize, right: usize },

    #[error("threshold {k} is outside 0..={max}")]
    ThresholdOutOfRange { k: usize, max: usize },

    #[error("rank {k} exceeds ground size {n}")]
    RankTooLarge { n: u8, k: usize },

    #[error("sweep over n = {n}, k = {k} exceeds the exhaustive budget")]
    BudgetExceeded { n: u8, k: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
