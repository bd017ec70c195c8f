//! Exact computations on blowup algebras of m-primary ideals in
//! polynomial rings localized at the origin.
//!
//! The crate is layered bottom-up: [`kernel`] (exact numbers, linear
//! algebra, LP), [`poly`] (polynomials and the expression grammar),
//! [`groebner`] (Buchberger and ideal operations), [`monomial`] (fast
//! paths and oracles for monomial ideals), [`multiplicity`] (lengths,
//! mixed multiplicities, fiber Hilbert series) and [`blowup`]
//! (reductions, joint reductions and the depth rule engine).

pub mod blowup;
mod error;
pub mod families;
pub mod groebner;
pub mod kernel;
pub mod monomial;
pub mod multiplicity;
pub mod poly;

pub use error::{Error, Result};
