use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::qpoly::QPoly;

/// Univariate polynomial with arbitrary-precision integer coefficients,
/// stored in ascending degree order with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `t`.
    pub fn x() -> Self {
        Self::from_i64s(&[0, 1])
    }

    /// `c * t^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    /// `t - r` scaled to integer form: `den * t - num`.
    pub fn linear_from_root(r: &BigRational) -> Self {
        Self::new(vec![-r.numer().clone(), r.denom().clone()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn lc(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.lc().is_negative() {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    pub fn is_primitive(&self) -> bool {
        !self.is_zero() && self.content().is_one() && self.lc().is_positive()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect())
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        // Horner on numerator with a common power of the denominator.
        let n = x.numer();
        let d = x.denom();
        if self.is_zero() {
            return BigRational::zero();
        }
        let deg = self.degree();
        let mut acc = BigInt::zero();
        let mut dpow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * n + c * &dpow;
            dpow *= d;
        }
        // acc = sum c_i n^i d^(deg-i) ; dpow = d^(deg+1)
        BigRational::new(acc, num_traits::pow(d.clone(), deg))
    }

    pub fn sign_at(&self, x: &BigRational) -> Ordering {
        self.eval(x).cmp(&BigRational::zero())
    }

    /// `t^deg * p(1/t)`.
    pub fn reverse(&self) -> Self {
        let mut v = self.coeffs.clone();
        v.reverse();
        Self::new(v)
    }

    /// `p(-t)`.
    pub fn negate_var(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() }).collect())
    }

    /// Primitive integer form of `p(c * t)` for rational `c != 0`.
    pub fn scale_var(&self, c: &BigRational) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let d = self.degree();
        let num = c.numer();
        let den = c.denom();
        // p(n/m t) * m^d = sum a_i n^i m^(d-i) t^i
        let mut out = Vec::with_capacity(d + 1);
        let mut npow = BigInt::one();
        let mpows: Vec<BigInt> = (0..=d).map(|k| num_traits::pow(den.clone(), k)).collect();
        for (i, a) in self.coeffs.iter().enumerate() {
            out.push(a * &npow * &mpows[d - i]);
            npow *= num;
        }
        Self::new(out).primitive()
    }

    /// `p(t + a)` for integer `a`.
    pub fn shift(&self, a: &BigInt) -> Self {
        // Horner with polynomial arithmetic.
        let lin = Self::new(vec![a.clone(), BigInt::one()]);
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &Self::constant(c.clone());
        }
        acc
    }

    /// Composition `p(q(t))`.
    pub fn compose(&self, q: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * q) + &Self::constant(c.clone());
        }
        acc
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact division over the integers; `None` if `other` does not divide `self`.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        assert!(!other.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.degree() < other.degree() {
            return None;
        }
        let lc = other.lc();
        // quick rejection on constant terms
        let c0 = other.constant_term();
        if !c0.is_zero() {
            let s0 = self.constant_term();
            if !(&s0 % &c0).is_zero() {
                return None;
            }
        }
        let mut rem = self.coeffs.clone();
        let dq = self.degree() - other.degree();
        let mut quot = vec![BigInt::zero(); dq + 1];
        let od = other.degree();
        for k in (0..=dq).rev() {
            let top = &rem[k + od];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&lc);
            if !r.is_zero() {
                return None;
            }
            for (j, oc) in other.coeffs.iter().enumerate() {
                rem[k + j] -= &q * oc;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::new(quot))
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.div_exact(self).is_some()
    }

    /// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`.
    pub fn pseudo_rem(&self, b: &Self) -> Self {
        assert!(!b.is_zero());
        if self.degree() < b.degree() || self.is_zero() {
            return self.clone();
        }
        let mut r = self.coeffs.clone();
        let lc = b.lc();
        let db = b.degree();
        let mut dr = self.degree();
        loop {
            if r.len() <= db || dr < db {
                break;
            }
            let top = r[dr].clone();
            if top.is_zero() {
                if dr == 0 {
                    break;
                }
                dr -= 1;
                continue;
            }
            for c in r.iter_mut() {
                *c *= &lc;
            }
            let shift = dr - db;
            for (j, bc) in b.coeffs.iter().enumerate() {
                r[shift + j] -= &top * bc;
            }
            r.truncate(dr);
            if dr == 0 {
                break;
            }
            dr -= 1;
        }
        Self::new(r)
    }

    pub fn to_qpoly(&self) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|c| BigRational::from(c.clone())).collect())
    }

    /// Primitive GCD with positive leading coefficient (primitive PRS).
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive();
        }
        if other.is_zero() {
            return self.primitive();
        }
        let (mut a, mut b) = if self.degree() >= other.degree() {
            (self.primitive(), other.primitive())
        } else {
            (other.primitive(), self.primitive())
        };
        loop {
            if b.is_constant() {
                return Self::one();
            }
            let r = a.pseudo_rem(&b);
            if r.is_zero() {
                return b.primitive();
            }
            a = b;
            b = r.primitive();
        }
    }

    pub fn is_squarefree(&self) -> bool {
        if self.degree() <= 1 {
            return true;
        }
        self.gcd(&self.derivative()).is_constant()
    }

    /// Squarefree part (product of distinct irreducible factors), primitive.
    pub fn squarefree_part(&self) -> Self {
        if self.degree() <= 1 {
            return self.primitive();
        }
        let g = self.gcd(&self.derivative());
        if g.is_constant() {
            return self.primitive();
        }
        self.primitive().div_exact(&g).expect("gcd divides").primitive()
    }

    /// Squarefree decomposition (Yun): returns `(s_i, i)` with `p = c * prod s_i^i`.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, usize)> {
        let f = self.primitive();
        if f.degree() == 0 {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut g = f.gcd(&f.derivative());
        let mut w = f.div_exact(&g).expect("gcd divides").primitive();
        let mut i = 1;
        while w.degree() > 0 {
            let y = w.gcd(&g);
            let z = w.div_exact(&y).expect("gcd divides").primitive();
            if z.degree() > 0 {
                out.push((z, i));
            }
            g = g.div_exact(&y).expect("gcd divides").primitive();
            w = y;
            i += 1;
        }
        out
    }

    pub fn cmp_canonical(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.coeffs.cmp(&other.coeffs))
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_else(BigInt::zero)
    }

    /// Ceiling of the Euclidean norm of the coefficient vector.
    pub fn l2_norm_ceil(&self) -> BigInt {
        let s: BigInt = self.coeffs.iter().map(|c| c * c).sum();
        let r = s.sqrt();
        if &r * &r == s {
            r
        } else {
            r + 1
        }
    }

    pub fn to_f64s(&self) -> Vec<f64> {
        use num_traits::ToPrimitive;
        self.coeffs.iter().map(|c| c.to_f64().unwrap_or(f64::INFINITY)).collect()
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let show_coeff = !a.is_one() || i == 0;
            if show_coeff {
                write!(f, "{}", a)?;
            }
            match i {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{}", i)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({})", self)
    }
}

impl<'a> Add<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.coeff(i) + rhs.coeff(i));
        }
        IntPolynomial::new(v)
    }
}

impl<'a> Sub<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.coeff(i) - rhs.coeff(i));
        }
        IntPolynomial::new(v)
    }
}

impl<'a> Mul<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut v = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        IntPolynomial::new(v)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[1, -2, 1])), p(&[-1, 1]));
        assert_eq!(p(&[0, 0, 0, 1]).gcd(&p(&[0, 0, 1])), p(&[0, 0, 1]));
        assert_eq!(p(&[-2, 0, 1]).gcd(&p(&[-3, 0, 1])), p(&[1]));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, -4, 17, 4, 1]).to_string(), "t^4 + 4t^3 + 17t^2 - 4t + 1");
        assert_eq!(p(&[-1]).to_string(), "-1");
        assert_eq!(p(&[0, -1]).to_string(), "-t");
    }

    #[test]
    fn exact_division() {
        let a = p(&[-1, 0, 0, 1]);
        assert_eq!(a.div_exact(&p(&[-1, 1])), Some(p(&[1, 1, 1])));
        assert_eq!(a.div_exact(&p(&[1, 1])), None);
        assert_eq!(p(&[2, 4]).div_exact(&p(&[1, 2])), Some(p(&[2])));
        assert_eq!(p(&[1, 4]).div_exact(&p(&[1, 2])), None);
    }

    #[test]
    fn squarefree_decomposition_recovers_powers() {
        // (t-1)^3 (t+2)^2 (t^2+1)
        let f = &(&p(&[-1, 1]).pow(3) * &p(&[2, 1]).pow(2)) * &p(&[1, 0, 1]);
        let dec = f.squarefree_decomposition();
        assert_eq!(dec, vec![(p(&[1, 0, 1]), 1), (p(&[2, 1]), 2), (p(&[-1, 1]), 3)]);
        assert_eq!(f.squarefree_part(), &(&p(&[-1, 1]) * &p(&[2, 1])) * &p(&[1, 0, 1]));
    }

    #[test]
    fn scale_and_shift() {
        // p(t) = t^2 - 2 ; p(2t) = 4t^2 - 2 -> 2t^2 - 1
        let q = p(&[-2, 0, 1]).scale_var(&BigRational::from_integer(2.into()));
        assert_eq!(q, p(&[-1, 0, 2]));
        assert_eq!(p(&[0, 0, 1]).shift(&BigInt::from(1)), p(&[1, 2, 1]));
        assert_eq!(p(&[1, 2, 3]).reverse(), p(&[3, 2, 1]));
    }

    #[test]
    fn rational_evaluation() {
        let q = BigRational::new(1.into(), 2.into());
        assert_eq!(p(&[-1, 0, 4]).eval(&q), BigRational::zero());
        assert_eq!(p(&[3]).eval(&q), BigRational::from_integer(3.into()));
    }
}
