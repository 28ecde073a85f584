//! Exact toolkit for C-finite sequences given by rational generating functions.
//!
//! The crate is layered bottom-up:
//!
//! - [`exactalg`]: rationals, dense polynomials, reduced rational functions,
//!   series expansion, exact characteristic polynomials.
//! - [`cfinite`]: recurrence/generating-function dual view, shifts and partial sums.
//! - [`hadamard`]: coefficientwise products of rational generating functions
//!   via Kronecker products of companion matrices.
//! - [`identity`]: sum-of-squares identities for k-bonacci numbers.
//! - [`binet`]: numeric roots of `1 - 2z + z^(h+1)` from generalized binomial
//!   series and the resulting Binet-type closed forms.

pub mod binet;
pub mod cfinite;
pub mod error;
pub mod exactalg;
pub mod hadamard;
pub mod identity;

pub use cfinite::CFiniteSequence;
pub use error::{Error, Result};
pub use exactalg::{BigRational, Polynomial, RationalFunction, RationalMatrix};
pub use hadamard::HadamardResult;
pub use identity::{IdentityReport, TermwiseCheck};
