//! Crate-wide error type. All fallible operations return `Result<_, AlgError>`;
//! invalid user input never panics.

use alloc::string::String;
use core::fmt;

/// Error raised by any operation in this crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgError {
    /// Two polynomials (or elements) live over different variable lists.
    VarMismatch,
    /// Two algebra elements were built from different Cartan data.
    CartanMismatch,
    /// Exact division failed: the divisor does not divide the dividend.
    NotDivisible,
    /// Division by zero (polynomial or scalar).
    DivisionByZero,
    /// A scalar specialization hit a pole (negative power of zero).
    PoleAtZero,
    /// An index (simple reflection, variable, basis vector) is out of range.
    IndexOutOfRange,
    /// The matrix fails a Cartan-matrix requirement; the message says which.
    InvalidCartan(String),
    /// A weight expected to be a partition is not weakly decreasing.
    NotAPartition,
    /// The input exceeds an explicit size guard.
    SizeGuard(String),
    /// The finite field order is not supported.
    UnsupportedFieldOrder(u64),
    /// A structural precondition failed; the message says which.
    Invalid(String),
    /// Text input could not be parsed; the message says where.
    Parse(String),
}

impl fmt::Display for AlgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgError::VarMismatch => write!(f, "variable lists do not match"),
            AlgError::CartanMismatch => write!(f, "Cartan data do not match"),
            AlgError::NotDivisible => write!(f, "exact division failed: not divisible"),
            AlgError::DivisionByZero => write!(f, "division by zero"),
            AlgError::PoleAtZero => write!(f, "specialization hits a negative power of zero"),
            AlgError::IndexOutOfRange => write!(f, "index out of range"),
            AlgError::InvalidCartan(m) => write!(f, "invalid Cartan matrix: {m}"),
            AlgError::NotAPartition => write!(f, "not a partition: parts must be weakly decreasing and positive"),
            AlgError::SizeGuard(m) => write!(f, "size guard exceeded: {m}"),
            AlgError::UnsupportedFieldOrder(q) => write!(f, "unsupported field order {q}"),
            AlgError::Invalid(m) => write!(f, "{m}"),
            AlgError::Parse(m) => write!(f, "parse error: {m}"),
        }
    }
}
