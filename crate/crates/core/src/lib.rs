//! Exact computations around the condition `∂(I)² ⊆ I` ("strongly Golod") for
//! graded ideals in weighted polynomial rings over the rationals.
//!
//! The crate is `no_std` and only needs `alloc`. Everything is exact: coefficients are
//! arbitrary-precision rationals and every verdict is a decided ideal-membership or
//! linear-algebra statement.
//!
//! Layout:
//! - [`ring`]: gradings, monomials, polynomials, the polynomial text grammar.
//! - [`order`] and [`groebner`]: monomial orders and the Buchberger engine.
//! - [`ideal`]: ideals with cached Gröbner bases, intersection, colon, saturation, syzygies.
//! - [`calculus`]: derivative ideals, the strongly Golod predicate and its closure operations.
//! - [`monomial`]: the combinatorial fast path for monomial ideals.
//! - [`resolution`], [`koszul`], [`poincare`]: homological verification of Golodness.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod calculus;
pub mod corpus;
pub mod error;
pub mod groebner;
pub mod ideal;
pub mod koszul;
pub mod linalg;
pub mod monomial;
pub mod order;
pub mod poincare;
pub mod quotient;
pub mod resolution;
pub mod ring;

pub use error::{Error, Result};
pub use ideal::Ideal;
pub use ring::{GradingSpec, Monomial, Polynomial, Rational, Ring};
