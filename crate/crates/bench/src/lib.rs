//! Fixtures shared by the benchmarks under benches/.

use exlat_core::algebraic::AlgebraicNumber;
use exlat_core::arith::IntPolynomial;
use exlat_core::eigen::RationalMatrix;
use num_rational::BigRational;

pub fn example_rationals() -> Vec<AlgebraicNumber> {
    [(21, 4), (27, 50), (245, 32), (16, 7)]
        .iter()
        .map(|&(n, d)| AlgebraicNumber::from_rational(&BigRational::new(n.into(), d.into())))
        .collect()
}

pub fn loop_matrix() -> RationalMatrix {
    [[4, 226, 2, 1, -117], [1, 126, 1, 0, -64], [0, -91, 0, -1, 46], [0, 80, 1, 0, -40], [4, 232, 2, 1, -120]]
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect()
}

/// Roots `a + q^(1/k)` of `(t - a)^k - q`.
pub fn radicals(spec: &[(i64, i64, usize)]) -> Vec<AlgebraicNumber> {
    spec.iter()
        .map(|&(a, q, k)| {
            let mut p = IntPolynomial::from_i64s(&[1]);
            for _ in 0..k {
                p = &p * &IntPolynomial::from_i64s(&[-a, 1]);
            }
            p = &p - &IntPolynomial::from_i64s(&[q]);
            AlgebraicNumber::from_poly_root(&p, 0).expect("irreducible radical")
        })
        .collect()
}
