//! Exponent lattice computation: preprocessing, pre-basis, staircase basis.

pub mod basis;
pub mod dependence;
pub mod prebasis;
pub mod preprocess;

pub use basis::{first_basis_vector, get_basis, isomorphism, pre_basis_to_basis, BasisResult, LatticeBasis};
pub use dependence::{decide_dependence, independence_certificate, relation_bound, BoundStrategy, DependenceStats};
pub use prebasis::{get_pre_basis, PreBasis};
pub use preprocess::{preprocess, PreprocessedInput};
