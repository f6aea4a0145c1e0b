//! Exact computer algebra for invariant theory of finite reflection groups,
//! invariant differential forms, and basic forms of polar representations.
//!
//! Everything is computed over the rationals, so every identity checked by
//! this crate is checked as an exact polynomial identity.

pub mod cartan;
pub mod error;
pub mod cli;
pub mod forms;
pub mod groups;
pub mod invariants;
pub mod linalg;
pub mod matrix;
pub mod parse;
pub mod poly;
pub mod polar;
pub mod random;
pub mod rational;
pub mod solomon;

pub use error::{Error, ParseError, Result};
pub use forms::{PolyForm, PolyVectorField};
pub use matrix::MatrixQ;
pub use poly::{Monomial, MultiPoly};
pub use rational::Rational;
