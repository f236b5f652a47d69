use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::IntPolynomial;

/// Dense polynomial over the rationals, ascending coefficients, trimmed.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct QPoly {
    coeffs: Vec<BigRational>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::new(vec![BigRational::one()])
    }

    pub fn x() -> Self {
        Self::new(vec![BigRational::zero(), BigRational::one()])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn lc(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.lc();
        Self::new(self.coeffs.iter().map(|c| c / &l).collect())
    }

    pub fn div_rem(&self, b: &Self) -> (Self, Self) {
        assert!(!b.is_zero(), "division by zero polynomial");
        if self.coeffs.len() < b.coeffs.len() {
            return (Self::zero(), self.clone());
        }
        let mut r = self.coeffs.clone();
        let db = b.degree();
        let lc_inv = b.lc().recip();
        let mut q = vec![BigRational::zero(); r.len() - db];
        for k in (0..q.len()).rev() {
            let top = &r[k + db] * &lc_inv;
            if top.is_zero() {
                continue;
            }
            for (j, bc) in b.coeffs.iter().enumerate() {
                r[k + j] -= &top * bc;
            }
            q[k] = top;
        }
        r.truncate(db);
        (Self::new(q), Self::new(r))
    }

    pub fn rem(&self, b: &Self) -> Self {
        self.div_rem(b).1
    }

    /// Quotient, panicking when the division is not exact.
    pub fn div_exact_q(&self, b: &Self) -> Self {
        let (q, r) = self.div_rem(b);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic gcd over Q.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn mulmod(&self, other: &Self, m: &Self) -> Self {
        (self * other).rem(m)
    }

    /// `t^e mod m`.
    pub fn x_pow_mod(e: &BigInt, m: &Self) -> Self {
        Self::x().pow_mod(e, m)
    }

    pub fn pow_mod(&self, e: &BigInt, m: &Self) -> Self {
        let mut result = Self::one().rem(m);
        let mut base = self.rem(m);
        let bits = e.bits();
        for i in (0..bits).rev() {
            result = result.mulmod(&result, m);
            if e.bit(i) {
                result = result.mulmod(&base, m);
            }
        }
        let _ = &mut base;
        result
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Clears denominators and returns the primitive integer multiple
    /// with positive leading coefficient.
    pub fn to_primitive_int(&self) -> IntPolynomial {
        self.to_int_multiple().primitive()
    }

    /// Integer multiple obtained by multiplying through by the lcm of the denominators.
    pub fn to_int_multiple(&self) -> IntPolynomial {
        let mut l = BigInt::one();
        for c in &self.coeffs {
            l = l.lcm(c.denom());
        }
        IntPolynomial::new(self.coeffs.iter().map(|c| (c * BigRational::from(l.clone())).to_integer()).collect())
    }
}

impl From<&IntPolynomial> for QPoly {
    fn from(p: &IntPolynomial) -> Self {
        p.to_qpoly()
    }
}

impl<'a> Add<&'a QPoly> for &'a QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a QPoly> for &'a QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a QPoly> for &'a QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut v = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        QPoly::new(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn power_of_x_modulo() {
        // t^3 mod (t^2 - 2) = 2t
        let m = IntPolynomial::from_i64s(&[-2, 0, 1]).to_qpoly();
        let r = QPoly::x_pow_mod(&BigInt::from(3), &m);
        assert_eq!(r.to_int_multiple(), IntPolynomial::from_i64s(&[0, 2]));
    }

    #[test]
    fn monic_gcd() {
        let a = IntPolynomial::from_i64s(&[-2, 0, 2]).to_qpoly();
        let b = IntPolynomial::from_i64s(&[1, 1]).to_qpoly();
        assert_eq!(a.gcd(&b), b);
    }
}
