//! Exact arithmetic on Stern's diatomic sequence and the objects built on it:
//! binary designs, continuants, nonnegative unimodular matrices, the assembly
//! function and its quadratic-irrational values at periodic designs.

pub mod assembly;
pub mod cli;
pub mod continuant;
pub mod derivative;
pub mod design;
pub mod error;
pub mod matrix;
pub mod quadratic;
pub mod rational;
pub mod sdi;

pub use design::{Design, FiniteDesign, PeriodicDesign, RunLengths, ThetaValue};
pub use error::{Error, Result};
pub use matrix::UniModMatrix;
pub use rational::ExtRational;
