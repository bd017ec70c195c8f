//! Rings, monomials, monomial orders and multivariate polynomials.
//!
//! # Expression grammar
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' INTEGER)?
//! atom   := INTEGER | VARIABLE | '(' expr ')'
//! ```
//!
//! Juxtaposition is not multiplication. Unary minus binds tighter than
//! `+` and `*` but looser than `^`, so `-X^2` is `-(X^2)`. Exponents are
//! nonnegative integer literals.

mod field;
mod monomial;
mod order;
mod parse;
mod polynomial;
mod ring;

pub use field::{FieldKind, Scalar};
pub use monomial::ExponentVector;
pub use order::MonomialOrder;
pub use parse::parse_poly;
pub use polynomial::Polynomial;
pub use ring::RingSpec;
pub(crate) use polynomial::same_ring as polynomial_same_ring;
