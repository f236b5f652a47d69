use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Largest multiple of `2^-bits` not above `x`.
pub fn round_down(x: &Q, bits: u64) -> Q {
    let scaled = x.numer() << bits;
    let f = scaled.div_floor(x.denom());
    Q::new(f, BigInt::one() << bits)
}

/// Smallest multiple of `2^-bits` not below `x`.
pub fn round_up(x: &Q, bits: u64) -> Q {
    let scaled = x.numer() << bits;
    let f = num_integer::Integer::div_ceil(&scaled, x.denom());
    Q::new(f, BigInt::one() << bits)
}

/// Closed rational interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lo: Q,
    pub hi: Q,
}

impl Interval {
    pub fn new(lo: Q, hi: Q) -> Self {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    pub fn point(x: Q) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn width(&self) -> Q {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &Q) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn add(&self, o: &Self) -> Self {
        Interval::new(&self.lo + &o.lo, &self.hi + &o.hi)
    }

    pub fn sub(&self, o: &Self) -> Self {
        Interval::new(&self.lo - &o.hi, &self.hi - &o.lo)
    }

    pub fn neg(&self) -> Self {
        Interval::new(-&self.hi, -&self.lo)
    }

    pub fn scale(&self, k: &Q) -> Self {
        if k.is_negative() {
            Interval::new(&self.hi * k, &self.lo * k)
        } else {
            Interval::new(&self.lo * k, &self.hi * k)
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let c = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        Interval::new(lo, hi)
    }

    pub fn sqr(&self) -> Self {
        if self.contains_zero() {
            let m = if self.lo.abs() > self.hi.abs() { self.lo.abs() } else { self.hi.abs() };
            Interval::new(Q::zero(), &m * &m)
        } else {
            let a = &self.lo * &self.lo;
            let b = &self.hi * &self.hi;
            if a < b {
                Interval::new(a, b)
            } else {
                Interval::new(b, a)
            }
        }
    }

    /// Division by an interval not containing zero.
    pub fn div(&self, o: &Self) -> Self {
        assert!(!o.contains_zero(), "interval division by zero");
        let inv = Interval::new(o.hi.recip(), o.lo.recip());
        self.mul(&inv)
    }

    pub fn hull(&self, o: &Self) -> Self {
        Interval::new(
            if self.lo < o.lo { self.lo.clone() } else { o.lo.clone() },
            if self.hi > o.hi { self.hi.clone() } else { o.hi.clone() },
        )
    }

    /// Outward rounding to the dyadic grid `2^-bits`.
    pub fn round_out(&self, bits: u64) -> Self {
        Interval::new(round_down(&self.lo, bits), round_up(&self.hi, bits))
    }
}

/// Closed axis-parallel rectangle `[re_lo, re_hi] x [im_lo, im_hi]`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rectangle {
    #[serde(with = "qser")]
    pub re_lo: Q,
    #[serde(with = "qser")]
    pub re_hi: Q,
    #[serde(with = "qser")]
    pub im_lo: Q,
    #[serde(with = "qser")]
    pub im_hi: Q,
}

pub mod qser {
    use super::Q;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Q, D::Error> {
        let s = String::deserialize(d)?;
        crate::parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

impl Rectangle {
    pub fn new(re_lo: Q, re_hi: Q, im_lo: Q, im_hi: Q) -> Result<Self> {
        if re_lo > re_hi || im_lo > im_hi {
            return Err(Error::InvalidInput("rectangle bounds are inverted".into()));
        }
        Ok(Rectangle { re_lo, re_hi, im_lo, im_hi })
    }

    pub fn from_intervals(re: Interval, im: Interval) -> Self {
        Rectangle { re_lo: re.lo, re_hi: re.hi, im_lo: im.lo, im_hi: im.hi }
    }

    pub fn point(re: Q, im: Q) -> Self {
        Rectangle { re_lo: re.clone(), re_hi: re, im_lo: im.clone(), im_hi: im }
    }

    /// Square of half-side `r` around `(x, y)`.
    pub fn square(x: &Q, y: &Q, r: &Q) -> Self {
        Rectangle { re_lo: x - r, re_hi: x + r, im_lo: y - r, im_hi: y + r }
    }

    pub fn re(&self) -> Interval {
        Interval::new(self.re_lo.clone(), self.re_hi.clone())
    }

    pub fn im(&self) -> Interval {
        Interval::new(self.im_lo.clone(), self.im_hi.clone())
    }

    pub fn width(&self) -> Q {
        let a = &self.re_hi - &self.re_lo;
        let b = &self.im_hi - &self.im_lo;
        if a > b {
            a
        } else {
            b
        }
    }

    pub fn center(&self) -> (Q, Q) {
        let two = qi(2);
        ((&self.re_lo + &self.re_hi) / &two, (&self.im_lo + &self.im_hi) / &two)
    }

    pub fn is_point(&self) -> bool {
        self.re_lo == self.re_hi && self.im_lo == self.im_hi
    }

    pub fn is_real_point(&self) -> bool {
        self.is_point() && self.im_lo.is_zero()
    }

    pub fn contains_point(&self, x: &Q, y: &Q) -> bool {
        &self.re_lo <= x && x <= &self.re_hi && &self.im_lo <= y && y <= &self.im_hi
    }

    pub fn contains_origin(&self) -> bool {
        self.contains_point(&Q::zero(), &Q::zero())
    }

    pub fn contains(&self, o: &Self) -> bool {
        self.re_lo <= o.re_lo && o.re_hi <= self.re_hi && self.im_lo <= o.im_lo && o.im_hi <= self.im_hi
    }

    pub fn intersects(&self, o: &Self) -> bool {
        self.re_lo <= o.re_hi && o.re_lo <= self.re_hi && self.im_lo <= o.im_hi && o.im_lo <= self.im_hi
    }

    pub fn intersection(&self, o: &Self) -> Option<Self> {
        if !self.intersects(o) {
            return None;
        }
        let mx = |a: &Q, b: &Q| if a > b { a.clone() } else { b.clone() };
        let mn = |a: &Q, b: &Q| if a < b { a.clone() } else { b.clone() };
        Some(Rectangle {
            re_lo: mx(&self.re_lo, &o.re_lo),
            re_hi: mn(&self.re_hi, &o.re_hi),
            im_lo: mx(&self.im_lo, &o.im_lo),
            im_hi: mn(&self.im_hi, &o.im_hi),
        })
    }

    pub fn add(&self, o: &Self) -> Self {
        Rectangle::from_intervals(self.re().add(&o.re()), self.im().add(&o.im()))
    }

    pub fn mul(&self, o: &Self) -> Self {
        let (a, b, c, d) = (self.re(), self.im(), o.re(), o.im());
        Rectangle::from_intervals(a.mul(&c).sub(&b.mul(&d)), a.mul(&d).add(&b.mul(&c)))
    }

    pub fn sqr(&self) -> Self {
        let (a, b) = (self.re(), self.im());
        let ab = a.mul(&b);
        Rectangle::from_intervals(a.sqr().sub(&b.sqr()), ab.add(&ab))
    }

    /// Enclosure of `|z|^2` over the rectangle.
    pub fn modulus_sq(&self) -> Interval {
        self.re().sqr().add(&self.im().sqr())
    }

    /// Enclosure of `1/z`; requires the origin outside.
    pub fn recip(&self) -> Self {
        let m = self.modulus_sq();
        assert!(m.lo.is_positive(), "reciprocal of rectangle containing 0");
        Rectangle::from_intervals(self.re().div(&m), self.im().neg().div(&m))
    }

    pub fn round_out(&self, bits: u64) -> Self {
        Rectangle::from_intervals(self.re().round_out(bits), self.im().round_out(bits))
    }

    /// Enclosure of `z^k`, with outward rounding to keep sizes bounded.
    pub fn pow(&self, k: u64, bits: u64) -> Self {
        let mut acc = Rectangle::point(Q::one(), Q::zero());
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).round_out(bits);
            }
            e >>= 1;
            if e > 0 {
                base = base.sqr().round_out(bits);
            }
        }
        acc
    }

    pub fn to_f64(&self) -> [f64; 4] {
        use num_traits::ToPrimitive;
        [
            self.re_lo.to_f64().unwrap_or(f64::NAN),
            self.re_hi.to_f64().unwrap_or(f64::NAN),
            self.im_lo.to_f64().unwrap_or(f64::NAN),
            self.im_hi.to_f64().unwrap_or(f64::NAN),
        ]
    }
}

impl fmt::Debug for Rectangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.to_f64();
        write!(f, "[{:.6e}, {:.6e}; {:.6e}, {:.6e}]", v[0], v[1], v[2], v[3])
    }
}

/// Argument interval in units of `pi`; `hi` may exceed 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AngleInterval {
    pub lo: Q,
    pub hi: Q,
}

impl AngleInterval {
    pub fn new(lo: Q, hi: Q) -> Self {
        assert!(lo <= hi);
        AngleInterval { lo, hi }
    }

    pub fn width(&self) -> Q {
        &self.hi - &self.lo
    }

    /// True when some representative of `x` modulo 2 lies in the interval.
    pub fn contains_mod2(&self, x: &Q) -> bool {
        let two = qi(2);
        // smallest x + 2k >= lo
        let k = ((&self.lo - x) / &two).ceil();
        let y = x + &k * &two;
        y <= self.hi
    }

    /// Integers `a` in `[0, lam)` with `2a/lam` inside the interval modulo 2.
    pub fn grid_points(&self, lam: u64) -> Vec<u64> {
        let lamq = Q::from_integer(BigInt::from(lam));
        if self.width() >= qi(2) {
            return (0..lam).collect();
        }
        // 2a/lam in [lo, hi] + 2k  <=>  a in [lo*lam/2, hi*lam/2] + k*lam
        let two = qi(2);
        let a_lo = (&self.lo * &lamq / &two).ceil().to_integer();
        let a_hi = (&self.hi * &lamq / &two).floor().to_integer();
        let mut out = Vec::new();
        let mut a = a_lo;
        let lb = BigInt::from(lam);
        while a <= a_hi {
            let r = a.mod_floor(&lb);
            let r: u64 = num_traits::ToPrimitive::to_u64(&r).expect("small");
            if !out.contains(&r) {
                out.push(r);
            }
            a += 1;
        }
        out.sort_unstable();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_ops() {
        let a = Interval::new(q(-1, 2), qi(2));
        let b = Interval::new(qi(3), qi(4));
        assert_eq!(a.mul(&b), Interval::new(qi(-2), qi(8)));
        assert_eq!(a.sqr(), Interval::new(qi(0), qi(4)));
        assert_eq!(b.sub(&a), Interval::new(qi(1), q(9, 2)));
    }

    #[test]
    fn rounding_is_outward() {
        let x = q(1, 3);
        assert!(round_down(&x, 10) <= x && x <= round_up(&x, 10));
        assert_eq!(round_down(&qi(-1), 4), qi(-1));
    }

    #[test]
    fn rect_power_encloses() {
        let r = Rectangle::square(&q(1, 1), &q(1, 1), &q(1, 100));
        let r4 = r.pow(4, 60);
        // (1+i)^4 = -4
        assert!(r4.contains_point(&qi(-4), &qi(0)));
    }

    #[test]
    fn grid_membership() {
        let a = AngleInterval::new(q(49, 100), q(51, 100));
        assert_eq!(a.grid_points(4), vec![1]);
        let w = AngleInterval::new(q(195, 100), q(205, 100));
        assert_eq!(w.grid_points(3), vec![0]);
        assert!(w.contains_mod2(&qi(0)));
        assert!(!w.contains_mod2(&qi(1)));
    }
}
