//! Certificates of correctability and the procedures that build them:
//! growing squares, recursive separation and the three-way partition.

pub mod certificate;
pub mod constants;
pub mod grow;
pub mod partition;
pub mod recursive;

pub use certificate::{boundary, verify_certificate, CertBuilder, Certificate, Node, NodeId, Step, Verification};
pub use constants::Constants;
pub use grow::{grow_square, Attempt, Context, Failure};
pub use partition::{build_partition, Case, Partition, PartitionReport};
pub use recursive::certify_recursive;
