use std::fmt;

/// Errors reported by fallible constructors and queries.
///
/// Structural misuse inside a fixed context (mixing elements from different
/// contexts, out-of-range variable ids) panics instead; those are programmer
/// errors, not data errors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Modulus is not an odd prime > 2.
    BadModulus(u64),
    /// Context with no variables at all.
    EmptyContext,
    /// Inverse of zero requested.
    ZeroInverse,
    /// Multinomial parts do not sum to the stated total.
    SumMismatch { total: u64, parts_sum: u64 },
    /// Exponent sequence was required to be sorted descending.
    Unsorted(Vec<u64>),
    /// Vector/row length does not match the expected dimension.
    LengthMismatch { expected: usize, got: usize },
    /// Leading term of the zero element requested.
    ZeroElement,
    /// Family spec string or parameters rejected.
    BadFamily(String),
    /// A constructed element failed its postcondition (supersymmetry oracle
    /// or declared leading term).
    PostconditionFailed(String),
    /// Variable set passed to a slice was invalid.
    BadSlice(String),
    /// Generator passed to the spanning checker was not homogeneous.
    NotHomogeneous,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::BadModulus(p) => write!(f, "modulus {p} is not an odd prime > 2"),
            Error::EmptyContext => write!(f, "context needs at least one variable"),
            Error::ZeroInverse => write!(f, "inverse of zero"),
            Error::SumMismatch { total, parts_sum } => {
                write!(f, "multinomial parts sum to {parts_sum}, expected {total}")
            }
            Error::Unsorted(v) => write!(f, "exponents {v:?} are not sorted descending"),
            Error::LengthMismatch { expected, got } => {
                write!(f, "length mismatch: expected {expected}, got {got}")
            }
            Error::ZeroElement => write!(f, "zero element has no leading term"),
            Error::BadFamily(s) => write!(f, "bad family spec: {s}"),
            Error::PostconditionFailed(s) => write!(f, "postcondition failed: {s}"),
            Error::BadSlice(s) => write!(f, "bad slice: {s}"),
            Error::NotHomogeneous => write!(f, "element is not homogeneous"),
        }
    }
}

impl std::error::Error for Error {}
