//! Exact-arithmetic construction of the simple Lie algebras E6 and E7 from the
//! root lattice, their realization by first-order differential operators on
//! `C[x_1..x_27]`, and the induced functor from E6-modules to E7-modules with a
//! formal central charge.
//!
//! Everything is exact: coefficients are arbitrary-precision rationals, charge
//! dependence is tracked as degree-<=1 polynomials in a formal parameter, and
//! every identity the crate claims is checked by explicit sweeps over basis
//! elements rather than by symbolic hand-waving.
//!
//! Layout mirrors the mathematical layers:
//! * [`roots`] — the E7 root lattice, bilinear form, cocycle, root enumeration;
//! * [`lie`] — the abstract Chevalley-basis Lie algebra with bracket and form;
//! * [`poly`], [`weyl`] — sparse polynomials and normal-ordered differential
//!   operators in 27 variables;
//! * [`rep27`] — the action of the degree-zero subalgebra on the polynomial ring;
//! * [`quadrics`] — the 27 invariant quadrics, the cubic invariant, and the
//!   module structure on their span;
//! * [`e7ops`] — the operators P_1..P_27 extending the action to all of E7;
//! * [`modfunctor`] — concrete E6-modules, the charge-twisted embedding into
//!   differential operators with coefficients in the current algebra, Casimir
//!   machinery and the irreducibility certificate numbers;
//! * [`fixtures`], [`emit`], [`report`], [`context`] — transcription data,
//!   text/JSON formats, verification reports, and the shared build context.

pub mod context;
pub mod e7ops;
pub mod emit;
pub mod fixtures;
pub mod lie;
pub mod linalg;
pub mod modfunctor;
pub mod poly;
pub mod quadrics;
pub mod rep27;
pub mod report;
pub mod roots;
pub mod weyl;

use num::BigRational;

/// Exact rational scalar used throughout.
pub type Q = BigRational;

/// `Q` from an integer.
pub fn qi(n: i64) -> Q {
    Q::from_integer(n.into())
}

/// `Q` from a fraction.
pub fn qr(p: i64, q: i64) -> Q {
    Q::new(p.into(), q.into())
}

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("usage error: {0}")]
    Usage(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error("verification failure: {0}")]
    Verification(String),
    #[error("fixture parse error at {file}:{line}: {msg}")]
    FixtureParse {
        file: String,
        line: usize,
        msg: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn usage(msg: impl Into<String>) -> Error {
    Error::Usage(msg.into())
}

pub(crate) fn internal(msg: impl Into<String>) -> Error {
    Error::Internal(msg.into())
}
