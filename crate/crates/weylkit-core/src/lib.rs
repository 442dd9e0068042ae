//! Exact computational algebra for Weyl groups, Hecke algebras, finite-set
//! convolution, Schur-Weyl duality, and fixed-flag combinatorics.
//!
//! Everything is computed over exact rational (or finite-field) arithmetic;
//! there is no floating point anywhere. The crate is `no_std` (with `alloc`)
//! and keeps IO, serialization, and the command-line surface in a companion
//! crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod cartan;
pub mod convolution;
pub mod degeneration;
pub mod error;
pub mod gf;
pub mod hecke;
pub mod interp;
pub mod laurent;
pub mod ops;
pub mod rational;
pub mod schurweyl;
pub mod series;
pub mod springer;
pub mod text;

pub use cartan::{CartanData, GlWeight, Weight, WeylElement};
pub use error::AlgError;
pub use laurent::LaurentPoly;
pub use rational::Rational;
pub use series::TruncatedSeries;
