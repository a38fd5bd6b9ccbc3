//! Binary symplectic Paulis, stabilizer codes and the exact oracles built
//! on them: dimension, logical basis, distance and erasure correctability.

pub mod code;
pub mod correctable;
pub mod distance;
pub mod gf2;
pub mod pauli;

pub use code::{code_dimension, logical_operator_basis, StabilizerCode};
pub use correctable::{is_correctable, logical_supported_on, Correctability};
pub use distance::{code_distance, find_logical_of_weight, find_logical_up_to, DistanceResult};
pub use gf2::{BinMatrix, BitVec, Echelon};
pub use pauli::{symplectic_commutes, Letter, Pauli, QubitSet};
