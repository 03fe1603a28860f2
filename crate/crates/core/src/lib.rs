//! Finite lattices, their posets of covers, and the derived lattices
//! `Cov(L, γ)` of semidistributive lattices.

pub mod bits;
pub mod bounded;
pub mod cli;
pub mod cover;
pub mod derived;
pub mod error;
pub mod generators;
pub mod io;
pub mod iso;
pub mod order;
pub mod quotient;
pub mod sd;

pub use cover::{Cover, CoverPoset};
pub use error::{Error, Result};
pub use order::{FiniteLattice, FinitePoset};
