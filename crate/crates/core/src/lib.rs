//! Locality toolkit for 2D-embedded stabilizer codes.

pub mod bounds_audit;
pub mod code_geometry;
pub mod constructions;
pub mod corpus;
pub mod correctability;
pub mod error;
pub mod formats;
pub mod pauli_algebra;

pub use error::{Error, Result};
