//! Exact computer algebra for multiplicative towers of algebras: symmetric
//! group algebras, Hecke algebras, cross-products with polynomial rings,
//! degenerate affine and affine Hecke algebras. Provides normal forms in
//! every tower, a generators-and-relations checker, operator actions on
//! tensor powers of (polynomially extended) vector spaces, and localized
//! towers with the change-of-braiding constructions that trivialize the
//! deformations away from discriminants.
//!
//! Every displayed identity the library is built around is checked exactly:
//! coefficients are rationals with formal parameters, never floats.

pub mod cli;
pub mod error;
pub mod freeseq;
pub mod localize;
pub mod parse;
pub mod perm;
pub mod rep;
pub mod ring;
pub mod sample;
pub mod tower;

pub use error::Error;
