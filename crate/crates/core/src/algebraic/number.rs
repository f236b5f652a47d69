use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::{factor, is_irreducible, power_polynomial, resultant, BiPoly, IntPolynomial};
use crate::error::{Error, Result};
use crate::isolate::rect::{Interval, Q};
use crate::isolate::roots::bits_for_width;
use crate::isolate::{
    argument_interval, isolate_roots, isolate_with_prec, refine_to, roots_in, AngleInterval, Rectangle,
};

const SELECT_START_BITS: u64 = 16;
const SELECT_MAX_BITS: u64 = 1 << 15;

/// A nonzero algebraic number: irreducible primitive minimal polynomial and
/// a rectangle isolating one of its roots.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraicNumber {
    minpoly: IntPolynomial,
    rect: Rectangle,
}

fn pow2_inv(bits: u64) -> Q {
    Q::new(BigInt::one(), BigInt::one() << bits)
}

impl AlgebraicNumber {
    /// Validated constructor: `minpoly` must be irreducible and `rect` must
    /// contain exactly one of its roots, which must be nonzero.
    pub fn new(minpoly: IntPolynomial, rect: Rectangle) -> Result<Self> {
        if minpoly.degree() == 0 {
            return Err(Error::InvalidInput("minimal polynomial must have positive degree".into()));
        }
        let minpoly = minpoly.primitive();
        if !is_irreducible(&minpoly) {
            let fs = factor(&minpoly)
                .into_iter()
                .map(|(f, m)| if m > 1 { format!("({})^{}", f, m) } else { format!("({})", f) })
                .collect();
            return Err(Error::Reducible(fs));
        }
        if minpoly.constant_term().is_zero() {
            return Err(Error::InvalidInput("the number 0 is not allowed".into()));
        }
        if minpoly.degree() == 1 {
            let r = BigRational::new(-minpoly.coeff(0), minpoly.coeff(1));
            if !rect.contains_point(&r, &Q::zero()) {
                return Err(Error::BadRectangle("the rational root lies outside the rectangle".into()));
            }
            return Ok(Self::from_rational(&r));
        }
        let inside = roots_in(&minpoly, &rect)
            .ok_or_else(|| Error::BadRectangle("a root lies on or too near the boundary".into()))?;
        match inside.len() {
            1 => Ok(AlgebraicNumber { minpoly, rect: inside.into_iter().next().unwrap() }),
            0 => Err(Error::BadRectangle("no root inside".into())),
            k => Err(Error::BadRectangle(format!("{} roots inside", k))),
        }
    }

    pub fn from_rational(r: &BigRational) -> Self {
        assert!(!r.is_zero(), "zero is not a valid algebraic number here");
        AlgebraicNumber {
            minpoly: IntPolynomial::linear_from_root(r).primitive(),
            rect: Rectangle::point(r.clone(), Q::zero()),
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(&BigRational::from_integer(BigInt::from(n)))
    }

    /// The `index`-th root (0-based, deterministic isolation order) of the
    /// squarefree part of `p`, with its minimal polynomial among the factors of `p`.
    pub fn from_poly_root(p: &IntPolynomial, index: usize) -> Result<Self> {
        if p.degree() == 0 {
            return Err(Error::InvalidInput("polynomial has no roots".into()));
        }
        let sq = p.squarefree_part();
        let roots = isolate_roots(&sq);
        let rect = roots
            .get(index)
            .ok_or_else(|| {
                Error::InvalidInput(format!("root index {} out of range ({} roots)", index + 1, roots.len()))
            })?
            .clone();
        if rect.is_point() && rect.re_lo.is_zero() && rect.im_lo.is_zero() {
            return Err(Error::InvalidInput("the selected root is 0".into()));
        }
        let factors: Vec<IntPolynomial> = factor(&sq).into_iter().map(|(f, _)| f).collect();
        Ok(select_root(&factors, |bits| refine_to(&sq, &rect, &pow2_inv(bits))))
    }

    pub fn minpoly(&self) -> &IntPolynomial {
        &self.minpoly
    }

    pub fn rect(&self) -> &Rectangle {
        &self.rect
    }

    pub fn degree(&self) -> usize {
        self.minpoly.degree()
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.minpoly.degree() == 1 {
            Some(BigRational::new(-self.minpoly.coeff(0), self.minpoly.coeff(1)))
        } else {
            None
        }
    }

    pub fn is_one(&self) -> bool {
        self.minpoly == IntPolynomial::from_i64s(&[-1, 1])
    }

    /// An isolating rectangle of width at most `2^-bits`.
    pub fn enclosure(&self, bits: u64) -> Rectangle {
        refine_to(&self.minpoly, &self.rect, &pow2_inv(bits))
    }

    /// Same number with a rectangle of width at most `2^-bits`.
    pub fn refined(&self, bits: u64) -> Self {
        AlgebraicNumber { minpoly: self.minpoly.clone(), rect: self.enclosure(bits) }
    }

    pub fn argument(&self, bits: u64) -> AngleInterval {
        argument_interval(&self.enclosure(bits)).expect("nonzero number")
    }

    /// Enclosure of `ln |x|^2`.
    pub fn log_modulus_sq(&self, bits: u64) -> Interval {
        let m = self.enclosure(bits).modulus_sq();
        crate::isolate::transcend::ln_of_interval(&m, bits)
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        assert!(!r.is_zero());
        if let Some(a) = self.as_rational() {
            return Self::from_rational(&(a * r));
        }
        let minpoly = self.minpoly.scale_var(&r.recip());
        let rect = Rectangle::from_intervals(self.rect.re().scale(r), self.rect.im().scale(r));
        AlgebraicNumber { minpoly, rect }
    }

    pub fn pow(&self, m: u64) -> Self {
        if m == 1 {
            return self.clone();
        }
        if m == 0 {
            return Self::from_integer(1);
        }
        if let Some(a) = self.as_rational() {
            return Self::from_rational(&num_traits::pow(a, m as usize));
        }
        let f = power_polynomial(&self.minpoly, m).squarefree_part();
        let mbits = 64 - m.leading_zeros() as u64;
        select_root(&[f], |bits| self.enclosure(bits + mbits).pow(m, bits + 2 * mbits + 8))
    }

    pub fn inverse(&self) -> Self {
        if let Some(a) = self.as_rational() {
            return Self::from_rational(&a.recip());
        }
        let f = self.minpoly.reverse().primitive();
        select_root(&[f], |bits| self.enclosure(bits + 8).recip().round_out(bits + 16))
    }

    /// `x^k` for a signed exponent.
    pub fn pow_signed(&self, k: &BigInt) -> Self {
        let m: u64 = num_traits::ToPrimitive::to_u64(&k.abs()).expect("exponent fits in u64");
        let p = self.pow(m);
        if k.is_negative() {
            p.inverse()
        } else {
            p
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if let Some(r) = self.as_rational() {
            return o.scale(&r);
        }
        if let Some(r) = o.as_rational() {
            return self.scale(&r);
        }
        let res = resultant(&self.minpoly, &BiPoly::homogenized_quotient(&o.minpoly));
        let factors: Vec<IntPolynomial> = factor(&res).into_iter().map(|(f, _)| f).collect();
        select_root(&factors, |bits| self.enclosure(bits + 4).mul(&o.enclosure(bits + 4)).round_out(bits + 16))
    }

    pub fn add(&self, o: &Self) -> Option<Self> {
        let res = resultant(&self.minpoly, &BiPoly::shifted_arg(&o.minpoly));
        let factors: Vec<IntPolynomial> = factor(&res).into_iter().map(|(f, _)| f).collect();
        let sum = select_root_any(&factors, |bits| self.enclosure(bits + 2).add(&o.enclosure(bits + 2)));
        sum.filter(|s| !s.minpoly.constant_term().is_zero())
    }
}

fn select_root_any(factors: &[IntPolynomial], enclosure: impl Fn(u64) -> Rectangle) -> Option<AlgebraicNumber> {
    let mut bits = SELECT_START_BITS;
    loop {
        let enc = enclosure(bits);
        let prec = bits_for_width(&enc.width()).max(bits) + 8;
        let mut hits: Vec<(IntPolynomial, Rectangle)> = Vec::new();
        for f in factors {
            if f.degree() == 1 {
                let r = BigRational::new(-f.coeff(0), f.coeff(1));
                if enc.contains_point(&r, &Q::zero()) {
                    hits.push((f.clone(), Rectangle::point(r, Q::zero())));
                }
                continue;
            }
            for b in isolate_with_prec(f, prec) {
                if let Some(i) = b.intersection(&enc) {
                    hits.push((f.clone(), i));
                }
            }
            if hits.len() > 1 {
                break;
            }
        }
        match hits.len() {
            1 => {
                let (f, r) = hits.pop().unwrap();
                return Some(AlgebraicNumber { minpoly: f, rect: r });
            }
            0 => panic!("enclosure meets no candidate root"),
            _ => {}
        }
        assert!(bits < SELECT_MAX_BITS, "root selection did not converge");
        bits *= 2;
    }
}

/// Picks the unique root among the irreducible `factors` lying in the
/// enclosure, refining (`bits` doubling) until exactly one candidate remains.
pub(crate) fn select_root(factors: &[IntPolynomial], enclosure: impl Fn(u64) -> Rectangle) -> AlgebraicNumber {
    select_root_any(factors, enclosure).expect("selection")
}

impl fmt::Debug for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgebraicNumber({}, {:?})", self.minpoly, self.rect)
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{}", r);
        }
        let (x, y) = self.rect.center();
        use num_traits::ToPrimitive;
        write!(
            f,
            "root of {} near {:.6}{:+.6}i",
            self.minpoly,
            x.to_f64().unwrap_or(f64::NAN),
            y.to_f64().unwrap_or(f64::NAN)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::isolate::rect::{q, qi};

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    pub(crate) fn sqrt(n: i64) -> AlgebraicNumber {
        AlgebraicNumber::from_poly_root(&p(&[-n, 0, 1]), 1).unwrap()
    }

    pub(crate) fn imag_unit() -> AlgebraicNumber {
        AlgebraicNumber::from_poly_root(&p(&[1, 0, 1]), 1).unwrap()
    }

    #[test]
    fn construction_validates() {
        let r = Rectangle::new(qi(1), qi(2), q(-1, 2), q(1, 2)).unwrap();
        let a = AlgebraicNumber::new(p(&[-2, 0, 1]), r.clone()).unwrap();
        assert_eq!(a.minpoly(), &p(&[-2, 0, 1]));
        assert!(matches!(AlgebraicNumber::new(p(&[-4, 0, 1]), r.clone()), Err(Error::Reducible(_))));
        let wide = Rectangle::new(qi(-2), qi(2), qi(-1), qi(1)).unwrap();
        assert!(matches!(AlgebraicNumber::new(p(&[-2, 0, 1]), wide), Err(Error::BadRectangle(_))));
    }

    #[test]
    fn powers() {
        let s = sqrt(2);
        assert_eq!(s.pow(2).as_rational(), Some(qi(2)));
        let i = imag_unit();
        let i3 = i.pow(3);
        assert_eq!(i3.minpoly(), &p(&[1, 0, 1]));
        assert!(i3.rect().im_hi < qi(0));
        let a = AlgebraicNumber::from_poly_root(&p(&[1, -4, 17, 4, 1]), 0).unwrap();
        assert_eq!(a.pow(3).minpoly(), &p(&[-1, -76, 1]));
    }

    #[test]
    fn products_and_sums() {
        let s2 = sqrt(2);
        assert_eq!(s2.mul(&s2).as_rational(), Some(qi(2)));
        let s3 = sqrt(3);
        let sum = s2.add(&s3).unwrap();
        assert_eq!(sum.minpoly(), &p(&[1, 0, -10, 0, 1]));
        let i = imag_unit();
        let mi = i.scale(&qi(-1));
        assert!(i.mul(&mi).is_one());
        assert_eq!(s2.inverse().mul(&s2).as_rational(), Some(qi(1)));
    }
}
