use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::number::AlgebraicNumber;
use crate::arith::{is_irreducible, resultant, BiPoly};
use crate::isolate::rect::{Interval, Q};
use crate::isolate::{angle_combine, AngleInterval};
use crate::linear::ExponentVector;

const FILTER_BITS: u64 = 64;

/// Cached log-modulus and argument enclosures for repeated relation tests
/// on the same numbers.
#[derive(Clone, Debug)]
pub struct NumericCache {
    logs: Vec<Interval>,
    args: Vec<AngleInterval>,
}

impl NumericCache {
    pub fn new(xs: &[AlgebraicNumber], bits: u64) -> Self {
        NumericCache {
            logs: xs.iter().map(|x| x.log_modulus_sq(bits)).collect(),
            args: xs.iter().map(|x| x.argument(bits)).collect(),
        }
    }

    /// True when the enclosures prove `x^v != 1`.
    pub fn excludes_one(&self, v: &ExponentVector) -> bool {
        let mut lo = Q::zero();
        let mut hi = Q::zero();
        for (c, l) in v.entries().iter().zip(&self.logs) {
            if c.is_zero() {
                continue;
            }
            let k = Q::from_integer(c.clone());
            if c.is_negative() {
                lo += &k * &l.hi;
                hi += &k * &l.lo;
            } else {
                lo += &k * &l.lo;
                hi += &k * &l.hi;
            }
        }
        if lo.is_positive() || hi.is_negative() {
            return true;
        }
        let theta = angle_combine(v.entries(), &self.args);
        !theta.contains_mod2(&Q::zero())
    }
}

fn rational_product(xs: &[AlgebraicNumber], v: &ExponentVector) -> Option<BigRational> {
    let mut acc = BigRational::one();
    for (x, c) in xs.iter().zip(v.entries()) {
        if c.is_zero() {
            continue;
        }
        let r = x.as_rational()?;
        let e: u32 = num_traits::ToPrimitive::to_u32(&c.abs())?;
        let p = num_traits::pow(r, e as usize);
        if c.is_negative() {
            acc /= p;
        } else {
            acc *= p;
        }
    }
    Some(acc)
}

/// Exact product `x^v` as an algebraic number, folding powers and products.
pub fn product_power(xs: &[AlgebraicNumber], v: &ExponentVector) -> AlgebraicNumber {
    assert_eq!(xs.len(), v.len(), "length mismatch");
    if let Some(r) = rational_product(xs, v) {
        return AlgebraicNumber::from_rational(&r);
    }
    let mut rat = BigRational::one();
    let mut acc: Option<AlgebraicNumber> = None;
    for (x, c) in xs.iter().zip(v.entries()) {
        if c.is_zero() {
            continue;
        }
        let t = x.pow_signed(c);
        if let Some(r) = t.as_rational() {
            rat *= r;
            continue;
        }
        acc = Some(match acc {
            None => t,
            Some(a) => a.mul(&t),
        });
    }
    match acc {
        None => AlgebraicNumber::from_rational(&rat),
        Some(a) => a.scale(&rat),
    }
}

/// Exact test of `prod x_i^v_i = 1`.
pub fn equals_one(xs: &[AlgebraicNumber], v: &ExponentVector) -> bool {
    assert_eq!(xs.len(), v.len(), "length mismatch");
    if v.is_zero() {
        return true;
    }
    if let Some(r) = rational_product(xs, v) {
        return r.is_one();
    }
    let support = v.support();
    let sub: Vec<AlgebraicNumber> = support.iter().map(|&i| xs[i].clone()).collect();
    let sv = ExponentVector(support.iter().map(|&i| v[i].clone()).collect());
    if NumericCache::new(&sub, FILTER_BITS).excludes_one(&sv) {
        return false;
    }
    product_power(&sub, &sv).is_one()
}

/// As [`equals_one`], reusing precomputed enclosures for the numeric stage.
pub fn equals_one_cached(xs: &[AlgebraicNumber], cache: &NumericCache, v: &ExponentVector) -> bool {
    if v.is_zero() {
        return true;
    }
    if cache.excludes_one(v) {
        return false;
    }
    equals_one(xs, v)
}

/// Degree of the iterated sum equals the product of the degrees.
pub fn nondegenerate_check(gs: &[AlgebraicNumber]) -> bool {
    let Some(first) = gs.first() else {
        return true;
    };
    let mut s = first.minpoly().clone();
    for g in &gs[1..] {
        let r = resultant(&s, &BiPoly::shifted_arg(g.minpoly()));
        if !is_irreducible(&r) {
            return false;
        }
        s = r.primitive();
    }
    true
}

/// `ln|x|^2` and argument (in units of pi) at a given precision; handy for oracles.
pub fn numeric_parts(x: &AlgebraicNumber, bits: u64) -> (Interval, AngleInterval) {
    (x.log_modulus_sq(bits), x.argument(bits))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::IntPolynomial;
    use crate::isolate::rect::q;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn root(c: &[i64], i: usize) -> AlgebraicNumber {
        AlgebraicNumber::from_poly_root(&p(c), i).unwrap()
    }

    fn v(x: &[i64]) -> ExponentVector {
        ExponentVector::from_i64s(x)
    }

    fn imag() -> AlgebraicNumber {
        let a = root(&[1, 0, 1], 0);
        if a.rect().im_lo.is_positive() {
            a
        } else {
            root(&[1, 0, 1], 1)
        }
    }

    #[test]
    fn equals_one_examples() {
        let i = imag();
        let m1 = AlgebraicNumber::from_integer(-1);
        assert!(equals_one(&[i.clone(), m1.clone()], &v(&[2, 1])));
        assert!(!equals_one(&[i.clone(), m1], &v(&[1, 1])));
        assert!(equals_one(std::slice::from_ref(&i), &v(&[4])));
        assert!(equals_one(&[i], &v(&[-8])));
        let s2 = root(&[-2, 0, 1], 1);
        assert!(!equals_one(std::slice::from_ref(&s2), &v(&[2])));
        let half = AlgebraicNumber::from_rational(&q(1, 2));
        assert!(equals_one(&[s2, half], &v(&[2, 1])));
        let xs: Vec<AlgebraicNumber> =
            [q(21, 4), q(27, 50), q(245, 32), q(16, 7)].iter().map(AlgebraicNumber::from_rational).collect();
        assert!(!equals_one(&xs, &v(&[1, 1, 1, 1])));
        assert!(equals_one(&xs, &v(&[0, 0, 0, 0])));
    }

    #[test]
    fn exact_stage_for_conjugate_products() {
        // golden ratio times its conjugate is -1
        let a = root(&[-1, -1, 1], 0);
        let b = root(&[-1, -1, 1], 1);
        let m1 = AlgebraicNumber::from_integer(-1);
        assert!(equals_one(&[a.clone(), b.clone(), m1], &v(&[1, 1, 1])));
        assert!(equals_one(&[a.clone(), b.clone()], &v(&[2, 2])));
        assert!(!equals_one(&[a, b], &v(&[1, 1])));
    }

    #[test]
    fn nondegenerate_examples() {
        let s2 = root(&[-2, 0, 1], 1);
        let s3 = root(&[-3, 0, 1], 1);
        let t = root(&[-18, 0, 1], 1);
        assert!(nondegenerate_check(&[s2.clone(), s3.clone()]));
        assert!(!nondegenerate_check(&[s2.clone(), t]));
        assert!(nondegenerate_check(&[]));
        assert!(nondegenerate_check(&[s2]));
        let s5 = root(&[-5, 0, 1], 1);
        let s15 = root(&[-15, 0, 1], 1);
        assert!(!nondegenerate_check(&[s3, s5, s15]));
    }

    #[test]
    fn cache_filter_is_sound() {
        let i = imag();
        let c = NumericCache::new(std::slice::from_ref(&i), 64);
        assert!(!c.excludes_one(&v(&[4])));
        assert!(c.excludes_one(&v(&[2])));
        let two = AlgebraicNumber::from_integer(2);
        let c = NumericCache::new(&[two, i], 64);
        assert!(c.excludes_one(&v(&[1, 4])));
    }
}
