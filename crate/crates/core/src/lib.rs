//! Exact computer algebra for finite-dimensional Hom-Hopf algebras.

pub mod catalog;
pub mod constructions;
pub mod error;
pub mod exactlin;
pub mod format;
pub mod structures;
pub mod verify;

pub use error::{HomError, Result};
