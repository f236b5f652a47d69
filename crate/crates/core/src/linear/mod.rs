//! Integer lattice linear algebra.

pub mod hnf;
pub mod vector;

pub use hnf::{
    canonical_basis, hnf, lattice_equal, lattice_membership, solve_congruence, solve_diophantine, solve_diophantine_n,
    DiophantineSolution, Matrix,
};
pub use vector::ExponentVector;
