//! Surface codes, padding, concatenation and the concatenated code laid out
//! in the plane with bounded interaction length.

pub mod concat;
pub mod locality;
pub mod padding;
pub mod surface;

use crate::code_geometry::Embedding;
use crate::error::{Error, Result};
use crate::pauli_algebra::StabilizerCode;

pub use concat::{concatenate, direct_sum};
pub use locality::{
    build_embedded_concatenation, build_locality_construction, plan_locality, LocalityBuild, LocalityPlan,
    LocalityReport,
};
pub use padding::{pad_code, pad_embedding};
pub use surface::build_surface_code;

/// A code together with a planar position for each qubit.
#[derive(Clone, Debug)]
pub struct EmbeddedCode {
    pub code: StabilizerCode,
    pub embedding: Embedding,
}

impl EmbeddedCode {
    pub fn new(code: StabilizerCode, embedding: Embedding) -> Result<Self> {
        if code.n() != embedding.n() {
            return Err(Error::LengthMismatch {
                expected: code.n(),
                got: embedding.n(),
            });
        }
        Ok(Self { code, embedding })
    }
}
