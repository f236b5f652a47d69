use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::rect::{qi, AngleInterval, Interval, Rectangle, Q};
use super::transcend::arg_over_pi;
use crate::error::{Error, Result};

fn log2_ceil(x: &Q) -> i64 {
    if x.is_zero() {
        return i64::MIN / 4;
    }
    x.numer().bits() as i64 - x.denom().bits() as i64 + 1
}

/// Working precision for the argument of `r`: enough that rounding errors
/// are small against the angular size of the rectangle.
fn precision_for(r: &Rectangle) -> u64 {
    let w = r.width();
    let m = [&r.re_lo, &r.re_hi, &r.im_lo, &r.im_hi].iter().map(|x| x.abs()).max().unwrap_or_else(Q::zero);
    if w.is_zero() {
        return 128;
    }
    let rel = log2_ceil(&m) - log2_ceil(&w);
    (rel.max(0) as u64 + 48).max(64)
}

/// Certified argument interval of a rectangle not containing the origin,
/// in units of `pi`, `lo` in `[0, 2)`.
pub fn argument_interval(r: &Rectangle) -> Result<AngleInterval> {
    if r.contains_origin() {
        return Err(Error::InvalidInput("argument of a rectangle containing the origin".into()));
    }
    let prec = precision_for(r);
    let corners = [(&r.re_lo, &r.im_lo), (&r.re_lo, &r.im_hi), (&r.re_hi, &r.im_lo), (&r.re_hi, &r.im_hi)];
    let crosses_positive_axis = !r.im_lo.is_positive() && !r.im_hi.is_negative() && r.re_lo.is_positive();
    let mut acc: Option<Interval> = None;
    for (a, b) in corners {
        if a.is_zero() && b.is_zero() {
            continue;
        }
        let mut t = arg_over_pi(a, b, prec);
        if crosses_positive_axis && t.lo >= qi(1) {
            t = t.sub(&Interval::point(qi(2)));
        }
        acc = Some(match acc {
            None => t,
            Some(x) => x.hull(&t),
        });
    }
    let mut i = acc.expect("a nonzero corner");
    if i.lo.is_negative() {
        i = i.add(&Interval::point(qi(2)));
    }
    Ok(AngleInterval::new(i.lo, i.hi))
}

/// `sum v_i * theta_i` with exact interval arithmetic.
pub fn angle_combine(v: &[BigInt], thetas: &[AngleInterval]) -> AngleInterval {
    assert_eq!(v.len(), thetas.len(), "length mismatch");
    let mut lo = Q::zero();
    let mut hi = Q::zero();
    for (c, t) in v.iter().zip(thetas) {
        if c.is_zero() {
            continue;
        }
        let k = Q::from_integer(c.clone());
        if c.is_negative() {
            lo += &k * &t.hi;
            hi += &k * &t.lo;
        } else {
            lo += &k * &t.lo;
            hi += &k * &t.hi;
        }
    }
    AngleInterval::new(lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::isolate::rect::q;

    fn around(x: Q, y: Q) -> Rectangle {
        Rectangle::square(&x, &y, &q(1, 1000))
    }

    #[test]
    fn cardinal_directions() {
        let a = argument_interval(&around(qi(0), qi(1))).unwrap();
        assert!(a.lo < q(1, 2) && q(1, 2) < a.hi && a.width() < q(1, 100));
        let b = argument_interval(&around(qi(-1), qi(0))).unwrap();
        assert!(b.lo < qi(1) && qi(1) < b.hi);
        let c = argument_interval(&around(qi(1), qi(1))).unwrap();
        assert!(c.lo < q(1, 4) && q(1, 4) < c.hi);
    }

    #[test]
    fn positive_axis_wraps() {
        let a = argument_interval(&around(qi(1), qi(0))).unwrap();
        assert!(a.lo < qi(2) && a.hi > qi(2));
        assert!(a.contains_mod2(&qi(0)));
        assert!(a.width() < q(1, 100));
    }

    #[test]
    fn rejects_origin() {
        assert!(argument_interval(&around(qi(0), qi(0))).is_err());
    }

    #[test]
    fn combine() {
        let t = AngleInterval::new(q(49, 100), q(51, 100));
        let c = angle_combine(&[BigInt::from(2)], &[t]);
        assert_eq!(c, AngleInterval::new(q(98, 100), q(102, 100)));
        let a = AngleInterval::new(q(2, 10), q(3, 10));
        let b = AngleInterval::new(q(1, 10), q(2, 10));
        let c = angle_combine(&[BigInt::from(1), BigInt::from(-1)], &[a.clone(), b.clone()]);
        assert_eq!(c, AngleInterval::new(qi(0), q(2, 10)));
        let z = angle_combine(&[BigInt::from(0), BigInt::from(0)], &[a, b]);
        assert_eq!(z, AngleInterval::new(qi(0), qi(0)));
    }
}
