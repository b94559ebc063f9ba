//! Exact symbolic arithmetic: Laurent polynomials, their quotients,
//! subtraction-free expressions and square matrices over them.

mod expr;
mod fraction;
mod matrix;
pub(crate) mod poly;
mod var;

pub use expr::RationalExpr;
pub use fraction::LaurentFraction;
pub use matrix::SquareMatrix;
pub use poly::{LaurentPoly, Monomial};
pub use var::VarId;
