use num_bigint::BigInt;
use num_traits::One;

use super::poly::IntPolynomial;

pub fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// All `k` with `phi(k) = d`, ascending. Uses `phi(k) >= sqrt(k/2)`.
pub fn cyclotomic_candidates(d: u64) -> Vec<u64> {
    assert!(d >= 1);
    let limit = 2 * d * d + 2;
    (1..=limit).filter(|&k| euler_phi(k) == d).collect()
}

/// All `k` with `phi(k) <= d`, ascending.
pub fn orders_up_to_degree(d: u64) -> Vec<u64> {
    let limit = 2 * d * d + 2;
    (1..=limit).filter(|&k| euler_phi(k) <= d).collect()
}

/// The `k`-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(k: u64) -> IntPolynomial {
    assert!(k >= 1);
    let mut f = &IntPolynomial::monomial(BigInt::one(), k as usize) - &IntPolynomial::one();
    for d in divisors(k) {
        if d < k {
            f = f.div_exact(&cyclotomic_polynomial(d)).expect("cyclotomic factor");
        }
    }
    f
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn candidates() {
        assert_eq!(cyclotomic_candidates(1), vec![1, 2]);
        assert_eq!(cyclotomic_candidates(2), vec![3, 4, 6]);
        assert_eq!(cyclotomic_candidates(4), vec![5, 8, 10, 12]);
        assert_eq!(cyclotomic_candidates(6), vec![7, 9, 14, 18]);
    }

    #[test]
    fn polynomials() {
        assert_eq!(cyclotomic_polynomial(1), IntPolynomial::from_i64s(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(6), IntPolynomial::from_i64s(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), IntPolynomial::from_i64s(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn divisor_lists() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
    }
}
