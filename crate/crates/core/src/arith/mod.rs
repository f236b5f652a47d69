//! Exact integer, rational and polynomial arithmetic.

pub mod cyclotomic;
pub mod factor;
pub mod intfactor;
pub mod modp;
pub mod poly;
pub mod qpoly;
pub mod resultant;

pub use cyclotomic::{cyclotomic_candidates, cyclotomic_polynomial, divisors, euler_phi};
pub use factor::{factor, factor_squarefree, is_irreducible};
pub use poly::IntPolynomial;
pub use qpoly::QPoly;
pub use resultant::{power_polynomial, resultant, resultant_univariate, BiPoly};

/// Exact rational number.
pub type Rational = num_rational::BigRational;

/// Primitive GCD of two integer polynomials.
pub fn poly_gcd(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    a.gcd(b)
}

/// Irreducible factorization with multiplicities.
pub fn factor_rational_poly(p: &IntPolynomial) -> Vec<(IntPolynomial, usize)> {
    factor(p)
}
