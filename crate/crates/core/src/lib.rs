//! Exact-arithmetic computational Lie theory: classical matrix models,
//! semi-direct products, generalized Takiff algebras, Z2-contractions,
//! symbolic invariants, genericity criteria, and nilpotent-orbit sweeps.

pub mod builders;
pub mod cli;
pub mod error;
pub mod invariants;
pub mod lie;
pub mod linalg;
pub mod orbits;
pub mod poly;
pub mod rational;
pub mod stabilizers;

pub use error::{Error, Result};
