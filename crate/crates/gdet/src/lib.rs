//! Exact integer group determinants for cyclic, dihedral and dicyclic groups.
//!
//! The group determinant of a finite group `G` of order `N` assigns a variable
//! to every group element and takes the determinant of the `N x N` matrix whose
//! `(i, j)` entry is the variable at `g_i * g_j^{-1}`. This crate evaluates that
//! determinant exactly at integer points for three families:
//!
//! * cyclic `Z_n` (circulant determinants),
//! * dihedral `D_{2n}`,
//! * dicyclic `Q_{4n} = <x, y : x^{2n} = 1, y^2 = x^n, xy = yx^{-1}>`,
//!
//! and builds the surrounding machinery: exact resultant-based evaluation with
//! per-cyclotomic-divisor components, explicit elements realizing notable
//! determinant values, executable divisibility laws and membership classifiers
//! for the characterized value sets, minimal-determinant reports, and
//! exhaustive box searches over bounded coefficient vectors.
//!
//! All arithmetic is exact. Floating point never feeds a reported result.
//!
//! Entry points:
//!
//! * [`groupring::RingElement`] — a group-ring element `f(x) + y g(x)`.
//! * [`detengine::det_exact`] / [`detengine::det_factored`] — the determinant
//!   and its per-divisor factor components.
//! * [`detengine::det_matrix_oracle`] — the independent full-matrix route.
//! * [`witnesses`] — constructors for explicit elements with known values.
//! * [`laws`] — divisibility laws, residue laws, set classifiers, and the
//!   minimal non-trivial determinant formula.
//! * [`search`] — exhaustive and budgeted coefficient-box searches.
//! * [`cli`] — the `gdet` command-line front end.
//!
//! Runnable walkthroughs live in `examples/`; `cargo run --example determinant`
//! is a good place to start.

use num_bigint::BigInt;
use std::fmt;

pub mod arith;
pub mod cli;
pub mod detengine;
pub mod groupring;
pub mod intpoly;
pub mod laws;
pub mod linalg;
pub mod search;
pub mod selftest;
pub mod witnesses;

pub use groupring::{GroupFamily, GroupSpec, GroupWord, RingElement};
pub use intpoly::{CyclicPoly, IntPoly};

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two cyclic polynomials with different moduli were combined.
    ModulusMismatch { left: usize, right: usize },
    /// Two ring elements from different groups were combined.
    GroupMismatch { left: String, right: String },
    /// The operation needs a dihedral or dicyclic element; for a cyclic
    /// element the measure polynomial is the element itself.
    CyclicHasNoMeasurePoly,
    /// A stated precondition does not hold for the given arguments.
    Precondition(String),
    /// An argument is structurally invalid (zero modulus, missing parameter, ...).
    InvalidArgument(String),
    /// A constructed element failed its claimed-value verification.
    WitnessMismatch { claimed: BigInt, computed: BigInt },
    /// Zero was passed where only non-zero determinant values make sense.
    ZeroValue,
    /// The value is too large for a factorization-based classifier.
    ValueTooLarge(String),
    /// Element text could not be parsed; `offset` is a byte position.
    Parse { offset: usize, message: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ModulusMismatch { left, right } => {
                write!(f, "modulus mismatch: {left} vs {right}")
            }
            Error::GroupMismatch { left, right } => {
                write!(f, "group mismatch: {left} vs {right}")
            }
            Error::CyclicHasNoMeasurePoly => {
                write!(f, "cyclic elements have no separate measure polynomial")
            }
            Error::Precondition(s) => write!(f, "precondition violated: {s}"),
            Error::InvalidArgument(s) => write!(f, "invalid argument: {s}"),
            Error::WitnessMismatch { claimed, computed } => {
                write!(f, "witness mismatch: claimed {claimed}, computed {computed}")
            }
            Error::ZeroValue => write!(f, "value 0 is excluded (always attainable)"),
            Error::ValueTooLarge(s) => write!(f, "value too large: {s}"),
            Error::Parse { offset, message } => {
                write!(f, "parse error at offset {offset}: {message}")
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
