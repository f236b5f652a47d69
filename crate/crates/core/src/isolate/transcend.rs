//! Certified enclosures of `pi`, `atan` and `ln` on rational arguments,
//! computed with fixed-point integer series and explicit error bounds.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::rect::{q, qi, Interval, Q};

const GUARD: u64 = 16;

/// `sum_k (+-1)^k x^(2k+1)/(2k+1)` for `0 <= x <= 1/2`.
fn odd_series(x: &Q, prec: u64, alternating: bool) -> Interval {
    debug_assert!(!x.is_negative() && *x <= q(1, 2));
    let p = prec + GUARD;
    let one = BigInt::one() << p;
    let xx = (x.numer() << p) / x.denom();
    let x2 = (&xx * &xx) >> p;
    let mut t = xx;
    let mut sum = BigInt::zero();
    let mut k: u64 = 0;
    while !t.is_zero() {
        let term = &t / BigInt::from(2 * k + 1);
        if alternating && k % 2 == 1 {
            sum -= term;
        } else {
            sum += term;
        }
        t = (&t * &x2) >> p;
        k += 1;
    }
    let err = BigInt::from(8 * (k + 4));
    Interval::new(BigRational::new(&sum - &err, one.clone()), BigRational::new(&sum + &err, one))
}

fn atan_small(x: &Q, prec: u64) -> Interval {
    odd_series(x, prec, true)
}

fn atanh_small(x: &Q, prec: u64) -> Interval {
    odd_series(x, prec, false)
}

fn compute_pi(prec: u64) -> Interval {
    let a = atan_small(&q(1, 5), prec + 8).scale(&qi(16));
    let b = atan_small(&q(1, 239), prec + 8).scale(&qi(4));
    a.sub(&b).round_out(prec + 4)
}

const PI_CACHE_BITS: u64 = 1024;

/// Enclosure of `pi` of width about `2^-prec`.
pub fn pi_interval(prec: u64) -> Interval {
    static CACHE: OnceLock<Interval> = OnceLock::new();
    if prec <= PI_CACHE_BITS {
        CACHE.get_or_init(|| compute_pi(PI_CACHE_BITS)).clone()
    } else {
        compute_pi(prec)
    }
}

/// Enclosure of `atan(t)` for `0 <= t <= 1`.
pub fn atan_unit(t: &Q, prec: u64) -> Interval {
    if *t <= q(1, 2) {
        return atan_small(t, prec);
    }
    let one = Q::one();
    let s = (&one - t) / (&one + t);
    let quarter_pi = pi_interval(prec + 2).scale(&q(1, 4));
    quarter_pi.sub(&atan_small(&s, prec))
}

/// Enclosure of `arg(a + bi) / pi` in `[0, 2)` for a nonzero point.
pub fn arg_over_pi(a: &Q, b: &Q, prec: u64) -> Interval {
    assert!(!(a.is_zero() && b.is_zero()), "argument of zero");
    if b.is_zero() {
        return Interval::point(if a.is_positive() { qi(0) } else { qi(1) });
    }
    if a.is_zero() {
        return Interval::point(if b.is_positive() { q(1, 2) } else { q(3, 2) });
    }
    if a.abs() == b.abs() {
        let base = q(1, 4);
        let v = match (a.is_positive(), b.is_positive()) {
            (true, true) => base,
            (false, true) => q(3, 4),
            (false, false) => q(5, 4),
            (true, false) => q(7, 4),
        };
        return Interval::point(v);
    }
    let pi = pi_interval(prec + 8);
    let (aa, bb) = (a.abs(), b.abs());
    // theta in (0, pi/2), radians
    let theta = if bb < aa {
        atan_unit(&(&bb / &aa), prec + 8)
    } else {
        pi.scale(&q(1, 2)).sub(&atan_unit(&(&aa / &bb), prec + 8))
    };
    let t = theta.div(&pi).round_out(prec + 4);
    let r = match (a.is_positive(), b.is_positive()) {
        (true, true) => t,
        (false, true) => Interval::point(qi(1)).sub(&t),
        (false, false) => Interval::point(qi(1)).add(&t),
        (true, false) => Interval::point(qi(2)).sub(&t),
    };
    r.round_out(prec)
}

fn ln2(prec: u64) -> Interval {
    static CACHE: OnceLock<Interval> = OnceLock::new();
    let f = |p: u64| atanh_small(&q(1, 3), p).scale(&qi(2));
    if prec <= PI_CACHE_BITS {
        CACHE.get_or_init(|| f(PI_CACHE_BITS)).clone()
    } else {
        f(prec)
    }
}

/// Enclosure of `ln x` for rational `x > 0`.
pub fn ln_interval(x: &Q, prec: u64) -> Interval {
    assert!(x.is_positive(), "logarithm of nonpositive number");
    let e = x.numer().bits() as i64 - x.denom().bits() as i64;
    let m = if e >= 0 {
        x / Q::from_integer(BigInt::one() << e as u64)
    } else {
        x * Q::from_integer(BigInt::one() << (-e) as u64)
    };
    // m in (1/2, 2): s = (m-1)/(m+1) in (-1/3, 1/3)
    let one = Q::one();
    let s = (&m - &one) / (&m + &one);
    let extra = (e.unsigned_abs()).max(1).ilog2() as u64 + 2;
    let mut t = atanh_small(&s.abs(), prec + 4).scale(&qi(2));
    if s.is_negative() {
        t = t.neg();
    }
    let l2 = ln2(prec + extra + 4).scale(&Q::from_integer(BigInt::from(e)));
    l2.add(&t).round_out(prec)
}

/// Enclosure of `ln` over a positive interval.
pub fn ln_of_interval(x: &Interval, prec: u64) -> Interval {
    let lo = ln_interval(&x.lo, prec);
    let hi = ln_interval(&x.hi, prec);
    Interval::new(lo.lo, hi.hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn mid(i: &Interval) -> f64 {
        ((&i.lo + &i.hi) / qi(2)).to_f64().unwrap()
    }

    #[test]
    fn pi_is_enclosed() {
        let p = pi_interval(200);
        assert!(p.width() < q(1, 1 << 30));
        assert!((mid(&p) - std::f64::consts::PI).abs() < 1e-15);
        // 355/113 is a famous overestimate
        assert!(p.hi < q(355, 113));
        assert!(p.lo > q(333, 106));
    }

    #[test]
    fn arguments() {
        let a = arg_over_pi(&qi(1), &qi(2), 80);
        let exact = 2f64.atan2(1.0) / std::f64::consts::PI;
        assert!((mid(&a) - exact).abs() < 1e-14);
        let b = arg_over_pi(&qi(-3), &q(-1, 7), 80);
        let exact = (-1.0f64 / 7.0).atan2(-3.0) / std::f64::consts::PI + 2.0;
        assert!((mid(&b) - exact).abs() < 1e-14);
        assert!(b.lo <= b.hi && b.width() < q(1, 1 << 40));
    }

    #[test]
    fn logarithms() {
        for (n, d) in [(1, 1), (3, 1), (1, 7), (1000, 3), (5, 4)] {
            let i = ln_interval(&q(n, d), 80);
            let exact = (n as f64 / d as f64).ln();
            assert!(i.lo <= i.hi);
            assert!((mid(&i) - exact).abs() < 1e-13, "{} {}", n, d);
        }
    }
}
