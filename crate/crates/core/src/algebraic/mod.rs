//! Exact arithmetic on nonzero algebraic numbers and their classification.

pub mod classify;
pub mod number;
pub mod relation;

pub use classify::{
    classify, degree_reduction, root_of_rational_test, root_of_unity_test, unitary_test, Classification,
};
pub use number::AlgebraicNumber;
pub use relation::{equals_one, equals_one_cached, nondegenerate_check, product_power, NumericCache};
