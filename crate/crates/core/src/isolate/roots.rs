//! Complex root isolation.
//!
//! Roots are approximated numerically (Aberth iteration, first in `f64`,
//! then in fixed-point big-integer arithmetic), and the approximations are
//! certified exactly: with `W_i = p(z_i) / (lc * prod_{j != i} (z_i - z_j))`
//! every root lies in the union of the disks `|z - z_i| <= d |W_i|`, and a
//! disk disjoint from all the others contains exactly one root.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

use super::rect::{Rectangle, Q};
use crate::arith::IntPolynomial;

const START_PREC: u64 = 64;
const MAX_PREC: u64 = 1 << 16;

/// Gaussian integer, read as a fixed-point complex number with an implicit scale.
#[derive(Clone, Debug, PartialEq)]
struct Gi {
    re: BigInt,
    im: BigInt,
}

impl Gi {
    fn zero() -> Self {
        Gi { re: BigInt::zero(), im: BigInt::zero() }
    }
    fn add(&self, o: &Gi) -> Gi {
        Gi { re: &self.re + &o.re, im: &self.im + &o.im }
    }
    fn sub(&self, o: &Gi) -> Gi {
        Gi { re: &self.re - &o.re, im: &self.im - &o.im }
    }
    /// Exact product.
    fn mul(&self, o: &Gi) -> Gi {
        Gi { re: &self.re * &o.re - &self.im * &o.im, im: &self.re * &o.im + &self.im * &o.re }
    }
    fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }
    fn shr(&self, p: u64) -> Gi {
        Gi { re: &self.re >> p, im: &self.im >> p }
    }
    fn shl(&self, p: u64) -> Gi {
        Gi { re: &self.re << p, im: &self.im << p }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    /// `self / o` rounded, at the same scale as `self` relative to `o`.
    fn div(&self, o: &Gi) -> Gi {
        let n = self.mul(&Gi { re: o.re.clone(), im: -&o.im });
        let d = o.norm();
        Gi { re: n.re / &d, im: n.im / &d }
    }
    fn small(&self, bound: i64) -> bool {
        self.re.abs() < BigInt::from(bound) && self.im.abs() < BigInt::from(bound)
    }
}

/// Fixed-point Horner evaluation of `p` and `p'` at `z` (scale `2^prec`).
fn eval_fixed(coeffs: &[BigInt], z: &Gi, prec: u64) -> (Gi, Gi) {
    let d = coeffs.len() - 1;
    let mut v = Gi { re: &coeffs[d] << prec, im: BigInt::zero() };
    let mut dv = Gi::zero();
    for k in (0..d).rev() {
        dv = dv.mul(z).shr(prec).add(&v);
        v = v.mul(z).shr(prec);
        v.re += &coeffs[k] << prec;
    }
    (v, dv)
}

fn f64_aberth(p: &IntPolynomial) -> Option<Vec<Complex64>> {
    let c = p.to_f64s();
    if c.iter().any(|x| !x.is_finite()) {
        return None;
    }
    let d = c.len() - 1;
    let lc = c[d];
    // Fujiwara bound
    let mut r: f64 = 0.0;
    for k in 1..=d {
        let v = (c[d - k] / lc).abs().powf(1.0 / k as f64);
        r = r.max(v);
    }
    let r = (2.0 * r).max(1e-3);
    let mut z: Vec<Complex64> =
        (0..d).map(|k| Complex64::from_polar(r, 2.0 * std::f64::consts::PI * k as f64 / d as f64 + 0.4)).collect();
    let eval = |x: Complex64| {
        let mut v = Complex64::new(c[d], 0.0);
        let mut dv = Complex64::new(0.0, 0.0);
        for k in (0..d).rev() {
            dv = dv * x + v;
            v = v * x + c[k];
        }
        (v, dv)
    };
    for _ in 0..2000 {
        let mut maxw: f64 = 0.0;
        for i in 0..d {
            let (v, dv) = eval(z[i]);
            if v == Complex64::new(0.0, 0.0) {
                continue;
            }
            let ratio = v / dv;
            let mut s = Complex64::new(0.0, 0.0);
            for j in 0..d {
                if j != i {
                    s += Complex64::new(1.0, 0.0) / (z[i] - z[j]);
                }
            }
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if !w.re.is_finite() || !w.im.is_finite() {
                return None;
            }
            z[i] -= w;
            maxw = maxw.max(w.norm() / z[i].norm().max(1e-300));
        }
        if maxw < 1e-15 {
            break;
        }
    }
    if z.iter().any(|x| !x.re.is_finite() || !x.im.is_finite()) {
        return None;
    }
    Some(z)
}

fn to_fixed(x: f64, prec: u64) -> BigInt {
    // x * 2^prec, via 52 bits of mantissa
    let scaled = x * 2f64.powi(52);
    let b = BigInt::from_f64(scaled).unwrap_or_else(BigInt::zero);
    if prec >= 52 {
        b << (prec - 52)
    } else {
        b >> (52 - prec)
    }
}

fn rescale(z: &Gi, from: u64, to: u64) -> Gi {
    if to >= from {
        z.shl(to - from)
    } else {
        z.shr(from - to)
    }
}

fn aberth_fixed(coeffs: &[BigInt], z: &mut [Gi], prec: u64, max_iter: usize) -> bool {
    let d = z.len();
    let one = Gi { re: BigInt::one() << prec, im: BigInt::zero() };
    for _ in 0..max_iter {
        let mut converged = true;
        for i in 0..d {
            let (v, dv) = eval_fixed(coeffs, &z[i], prec);
            if v.is_zero() {
                continue;
            }
            if dv.is_zero() {
                z[i].re += BigInt::one() << (prec / 2);
                converged = false;
                continue;
            }
            // ratio = v / dv at scale 2^prec
            let ratio = v.shl(prec).div(&dv);
            let mut s = Gi::zero();
            for j in 0..d {
                if j != i {
                    let diff = z[i].sub(&z[j]);
                    if diff.is_zero() {
                        continue;
                    }
                    s = s.add(&one.shl(prec).div(&diff));
                }
            }
            let denom = one.sub(&ratio.mul(&s).shr(prec));
            if denom.is_zero() {
                continue;
            }
            let w = ratio.shl(prec).div(&denom);
            z[i] = z[i].sub(&w);
            if !w.small(1 << 8) {
                converged = false;
            }
        }
        if converged {
            return true;
        }
    }
    false
}

struct Certified {
    center: Gi,
    radius: BigInt,
}

/// Certifies approximations at scale `2^prec`; `None` when the disks overlap
/// (or a disk touches the origin while `p(0) != 0`).
fn certify(p: &IntPolynomial, z: &[Gi], prec: u64) -> Option<Vec<Certified>> {
    let d = z.len();
    let coeffs = p.coeffs();
    let lc2 = p.lc() * p.lc();
    let d2 = BigInt::from((d * d) as u64);
    let mut out = Vec::with_capacity(d);
    for i in 0..d {
        let mut acc = Gi { re: coeffs[d].clone(), im: BigInt::zero() };
        for k in (0..d).rev() {
            acc = acc.mul(&z[i]);
            acc.re += &coeffs[k] << (prec * (d - k) as u64);
        }
        let mut prod = Gi { re: BigInt::one(), im: BigInt::zero() };
        for j in 0..d {
            if j != i {
                let diff = z[i].sub(&z[j]);
                if diff.is_zero() {
                    return None;
                }
                prod = prod.mul(&diff);
            }
        }
        let num = &d2 * acc.norm();
        let den = &lc2 * prod.norm();
        let v = num_integer::Integer::div_ceil(&num, &den);
        let r = v.sqrt() + BigInt::one();
        out.push(Certified { center: z[i].clone(), radius: r });
    }
    for i in 0..d {
        for j in i + 1..d {
            let (a, b) = (&out[i], &out[j]);
            let sep = &a.radius + &b.radius;
            let dx = (&a.center.re - &b.center.re).abs();
            let dy = (&a.center.im - &b.center.im).abs();
            if dx <= sep && dy <= sep {
                return None;
            }
        }
    }
    if !p.constant_term().is_zero() {
        for c in &out {
            if c.center.re.abs() <= c.radius && c.center.im.abs() <= c.radius {
                return None;
            }
        }
    }
    Some(out)
}

fn to_rect(c: &Certified, prec: u64) -> Rectangle {
    let den = BigInt::one() << prec;
    let x = Q::new(c.center.re.clone(), den.clone());
    let y = Q::new(c.center.im.clone(), den.clone());
    let r = Q::new(c.radius.clone(), den);
    Rectangle::square(&x, &y, &r)
}

fn sort_rects(v: &mut [Rectangle]) {
    v.sort_by(|a, b| {
        let (ax, ay) = a.center();
        let (bx, by) = b.center();
        ax.cmp(&bx).then(ay.cmp(&by))
    });
}

/// Certified isolating boxes for a squarefree polynomial with nonzero constant
/// term and degree >= 2, starting at precision `prec`.
fn isolate_nonzero(p: &IntPolynomial, mut prec: u64) -> (Vec<Rectangle>, u64) {
    let d = p.degree();
    let start: Option<Vec<Complex64>> = f64_aberth(p);
    let mut z: Vec<Gi> = match &start {
        Some(s) => s.iter().map(|c| Gi { re: to_fixed(c.re, prec), im: to_fixed(c.im, prec) }).collect(),
        None => {
            let bound: BigInt = p.max_abs_coeff() / p.lc().abs() + 1;
            let r = bound.to_f64().unwrap_or(1e300).min(1e300);
            (0..d)
                .map(|k| {
                    let c = Complex64::from_polar(r, 2.0 * std::f64::consts::PI * k as f64 / d as f64 + 0.4);
                    Gi { re: to_fixed(c.re, prec), im: to_fixed(c.im, prec) }
                })
                .collect()
        }
    };
    let mut zprec = prec;
    loop {
        z = z.iter().map(|g| rescale(g, zprec, prec)).collect();
        zprec = prec;
        aberth_fixed(p.coeffs(), &mut z, prec, 60 + 8 * d);
        if let Some(c) = certify(p, &z, prec) {
            let mut rects: Vec<Rectangle> = c.iter().map(|c| to_rect(c, prec)).collect();
            sort_rects(&mut rects);
            return (rects, prec);
        }
        assert!(prec < MAX_PREC, "root isolation did not converge");
        prec *= 2;
    }
}

pub fn isolate_with_prec(p: &IntPolynomial, prec: u64) -> Vec<Rectangle> {
    assert!(!p.is_zero(), "isolating roots of the zero polynomial");
    let mut out = Vec::new();
    let mut p = p.primitive();
    if p.degree() == 0 {
        return out;
    }
    if p.constant_term().is_zero() {
        out.push(Rectangle::point(Q::zero(), Q::zero()));
        p = p.div_exact(&IntPolynomial::x()).expect("t divides");
    }
    match p.degree() {
        0 => {}
        1 => {
            let r = BigRational::new(-p.coeff(0), p.coeff(1));
            out.push(Rectangle::point(r, Q::zero()));
        }
        _ => out.extend(isolate_nonzero(&p, prec).0),
    }
    sort_rects(&mut out);
    out
}

/// One rectangle per distinct complex root of a squarefree polynomial.
pub fn isolate_roots(p: &IntPolynomial) -> Vec<Rectangle> {
    isolate_with_prec(p, START_PREC)
}

pub fn bits_for_width(w: &Q) -> u64 {
    // smallest b with 2^-b <= w
    if w.is_zero() {
        return START_PREC;
    }
    let b = w.denom().bits() as i64 - w.numer().bits() as i64 + 2;
    b.max(1) as u64
}

fn to_gi(x: &Q, y: &Q, prec: u64) -> Gi {
    let f = |v: &Q| (v.numer() << prec) / v.denom();
    Gi { re: f(x), im: f(y) }
}

/// Newton iteration from the center of `r`, certified by the inclusion
/// `|z - root| <= d |p(z)/p'(z)|`.
fn newton_refine(p: &IntPolynomial, r: &Rectangle, target: &Q) -> Option<Rectangle> {
    let d = p.degree();
    if d == 0 {
        return None;
    }
    let prec = bits_for_width(target) + 10 + START_PREC / 2;
    let (cx, cy) = r.center();
    let mut z = to_gi(&cx, &cy, prec);
    let coeffs = p.coeffs();
    let dp = p.derivative();
    let dcoeffs = dp.coeffs();
    let d2 = BigInt::from((d * d) as u64);
    for _ in 0..40 {
        // exact values: S = p(z) 2^(prec d), D = p'(z) 2^(prec (d-1))
        let mut s = Gi { re: coeffs[d].clone(), im: BigInt::zero() };
        for k in (0..d).rev() {
            s = s.mul(&z);
            s.re += &coeffs[k] << (prec * (d - k) as u64);
        }
        let mut dv = Gi { re: dcoeffs[d - 1].clone(), im: BigInt::zero() };
        for k in (0..d - 1).rev() {
            dv = dv.mul(&z);
            dv.re += &dcoeffs[k] << (prec * (d - 1 - k) as u64);
        }
        if dv.is_zero() {
            return None;
        }
        let num = &d2 * s.norm();
        let den = dv.norm();
        let v = num_integer::Integer::div_ceil(&num, &den);
        let rad = v.sqrt() + BigInt::one();
        let den_q = BigInt::one() << prec;
        let rq = Q::new(rad.clone(), den_q.clone());
        if &rq * Q::from_integer(BigInt::from(2)) <= *target {
            let b = Rectangle::square(&Q::new(z.re.clone(), den_q.clone()), &Q::new(z.im.clone(), den_q), &rq);
            if r.contains(&b) {
                return Some(b);
            }
            return None;
        }
        let step = s.div(&dv);
        z = z.sub(&step);
    }
    None
}

/// Shrinks an isolating rectangle of `p` until its width is at most `width`.
pub fn refine_to(p: &IntPolynomial, r: &Rectangle, width: &Q) -> Rectangle {
    if r.is_point() || r.width() <= *width {
        return r.clone();
    }
    let p = p.squarefree_part();
    if let Some(b) = newton_refine(&p, r, width) {
        return b;
    }
    let mut prec = bits_for_width(width) + 8;
    loop {
        let boxes = isolate_with_prec(&p, prec);
        let hits: Vec<&Rectangle> = boxes.iter().filter(|b| b.intersects(r)).collect();
        if hits.len() == 1 {
            let b = hits[0].intersection(r).expect("intersects");
            if b.width() <= *width {
                return b;
            }
        }
        assert!(prec < MAX_PREC, "refinement did not converge");
        prec *= 2;
    }
}

/// Rectangle of at most half the width isolating the same root.
pub fn refine(p: &IntPolynomial, r: &Rectangle) -> Rectangle {
    let w = r.width() / Q::from_integer(BigInt::from(2));
    refine_to(p, r, &w)
}

/// The certified isolating boxes of `p` that meet `r`, with precision
/// escalated until every box is either inside `r` or disjoint from it.
/// Returns `None` when the boundary of `r` cannot be separated from a root.
pub fn roots_in(p: &IntPolynomial, r: &Rectangle) -> Option<Vec<Rectangle>> {
    let p = p.squarefree_part();
    let mut prec = START_PREC.max(bits_for_width(&r.width()) + 8);
    loop {
        let boxes = isolate_with_prec(&p, prec);
        let mut inside = Vec::new();
        let mut ambiguous = false;
        for b in boxes {
            if r.contains(&b) {
                inside.push(b);
            } else if b.intersects(r) {
                ambiguous = true;
            }
        }
        if !ambiguous {
            return Some(inside);
        }
        if prec >= 4096 {
            return None;
        }
        prec *= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::isolate::rect::{q, qi};

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn sqrt_two() {
        let r = isolate_roots(&p(&[-2, 0, 1]));
        assert_eq!(r.len(), 2);
        assert!(r[0].re_hi < qi(0) && r[1].re_lo > qi(0));
        let s = q(14142135, 10000000);
        assert!(r[1].re_lo < s.clone() + q(1, 1000) && r[1].re_hi > s - q(1, 1000));
    }

    #[test]
    fn imaginary_unit() {
        let r = isolate_roots(&p(&[1, 0, 1]));
        assert_eq!(r.len(), 2);
        assert!(r[1].im_lo > qi(0));
        assert!(r[0].im_hi < qi(0));
    }

    #[test]
    fn quartic_avoids_origin() {
        let f = p(&[1, -4, 17, 4, 1]);
        let r = isolate_roots(&f);
        assert_eq!(r.len(), 4);
        assert!(r.iter().all(|b| !b.contains_origin()));
    }

    #[test]
    fn refine_halves() {
        let f = p(&[-2, 0, 1]);
        let r = Rectangle::new(qi(1), qi(2), q(-1, 2), q(1, 2)).unwrap();
        let r1 = refine(&f, &r);
        assert!(r1.width() <= q(1, 2));
        let r2 = refine(&f, &r1);
        assert!(r2.width() <= q(1, 4));
        assert!(r.contains(&r2));
        let tiny = refine_to(&f, &r, &q(1, 1 << 40));
        assert!(tiny.width() <= q(1, 1 << 40));
        let (cx, _) = tiny.center();
        assert!((cx.to_f64().unwrap() - 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn zero_and_rational_roots() {
        let r = isolate_roots(&p(&[0, -1, 1]));
        assert_eq!(r.len(), 2);
        assert!(r[0].is_point());
    }

    #[test]
    fn clustered_roots() {
        // (t - 1)(t - 1 - 1/1000)(t^2 + 1)(1000000 t^2 - 3)
        let f = &(&(&p(&[-1, 1]) * &p(&[-1001, 1000])) * &p(&[1, 0, 1])) * &p(&[-3, 0, 1_000_000]);
        let r = isolate_roots(&f);
        assert_eq!(r.len(), 6);
        for i in 0..6 {
            for j in i + 1..6 {
                assert!(!r[i].intersects(&r[j]));
            }
        }
    }

    #[test]
    fn higher_degree() {
        // t^20 - t - 1
        let mut c = vec![0i64; 21];
        c[0] = -1;
        c[1] = -1;
        c[20] = 1;
        let r = isolate_roots(&p(&c));
        assert_eq!(r.len(), 20);
    }
}
