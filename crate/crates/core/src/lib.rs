#![no_std]

//! Exact realizations of the type `A_n` crystal `B(λ)`.
//!
//! Three independent constructions live here and are checked against each
//! other:
//!
//! - [`polyhedral`]: the piecewise-linear crystal structure on the
//!   semi-infinite lattice, the `Ŝ_k` closure and the closed-form inequality
//!   system for `A_n`;
//! - [`ud`]: the tropicalization of the decorated geometric crystal on
//!   `T·B⁻_{w0}` with its decoration `f_B`;
//! - [`monomial`]: Nakajima monomials and the refined realization obtained by
//!   tropicalizing the monomials that make up the minors.
//!
//! The symbolic side ([`symbolic`], [`geometric`]) works over multivariate
//! Laurent polynomials with arbitrary-precision rational coefficients, so
//! every identity is checked exactly.
//!
//! The crate is `no_std` and only needs `alloc`. IO, serialization and the
//! command-line driver live in the companion `dgcrystal-cli` crate.

extern crate alloc;

pub mod cartan;
pub mod crystal;
pub mod error;
pub mod geometric;
pub mod monomial;
pub mod polyhedral;
pub mod symbolic;
pub mod tropical;
pub mod ud;
pub mod weyl;

pub use cartan::{CartanA, Weight};
pub use crystal::{Crystal, CrystalGraph};
pub use error::Error;
pub use symbolic::{LaurentFraction, LaurentPoly, Monomial, RationalExpr, SquareMatrix, VarId};
pub use tropical::{AffineForm, TropExpr};

/// Arbitrary precision rational used for every coefficient.
pub type Rational = num_rational::BigRational;
