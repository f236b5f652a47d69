//! Univariate and bivariate resultants.
//!
//! Bivariate resultants `Res_x(A(x, y), B(x, y))` are obtained by evaluating
//! `y` at integer sample points, computing univariate resultants there, and
//! interpolating.

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::IntPolynomial;
use super::qpoly::QPoly;

/// Polynomial in `x` whose coefficients are polynomials in `y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiPoly {
    /// `c[i]` is the coefficient of `x^i`.
    c: Vec<IntPolynomial>,
}

impl BiPoly {
    pub fn new(mut c: Vec<IntPolynomial>) -> Self {
        while c.last().is_some_and(|p| p.is_zero()) {
            c.pop();
        }
        BiPoly { c }
    }

    /// `p(x)`, constant in `y`.
    pub fn from_x(p: &IntPolynomial) -> Self {
        Self::new(p.coeffs().iter().map(|a| IntPolynomial::constant(a.clone())).collect())
    }

    /// `p(y * x)`.
    pub fn scaled_arg(p: &IntPolynomial) -> Self {
        Self::new(p.coeffs().iter().enumerate().map(|(i, a)| IntPolynomial::monomial(a.clone(), i)).collect())
    }

    /// `p(y - x)`.
    pub fn shifted_arg(p: &IntPolynomial) -> Self {
        let d = p.degree();
        let mut c = vec![vec![BigInt::zero(); d + 1]; d + 1];
        for (k, a) in p.coeffs().iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            // (y - x)^k = sum_i C(k,i) (-x)^i y^(k-i)
            for i in 0..=k {
                let mut b: BigInt = binomial(BigInt::from(k), BigInt::from(i)) * a;
                if i % 2 == 1 {
                    b = -b;
                }
                c[i][k - i] += b;
            }
        }
        Self::new(c.into_iter().map(IntPolynomial::new).collect())
    }

    /// `x^deg(p) * p(y / x)`.
    pub fn homogenized_quotient(p: &IntPolynomial) -> Self {
        let d = p.degree();
        let mut c = vec![IntPolynomial::zero(); d + 1];
        for (k, a) in p.coeffs().iter().enumerate() {
            c[d - k] = IntPolynomial::monomial(a.clone(), k);
        }
        Self::new(c)
    }

    /// `c * y - c * r(x)` for a rational polynomial `r`, with `c` clearing denominators.
    pub fn y_minus(r: &QPoly) -> Self {
        let n = r.to_int_multiple();
        let c = if r.is_zero() { BigInt::one() } else { (BigRational::from(n.lc()) / r.lc()).to_integer() };
        let mut v: Vec<IntPolynomial> = n.coeffs().iter().map(|a| IntPolynomial::constant(-a)).collect();
        if v.is_empty() {
            v.push(IntPolynomial::zero());
        }
        v[0] = &v[0] + &IntPolynomial::monomial(c, 1);
        Self::new(v)
    }

    pub fn deg_x(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn deg_y(&self) -> usize {
        self.c.iter().map(|p| if p.is_zero() { 0 } else { p.degree() }).max().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn lc_x(&self) -> IntPolynomial {
        self.c.last().cloned().unwrap_or_else(IntPolynomial::zero)
    }

    pub fn coeffs(&self) -> &[IntPolynomial] {
        &self.c
    }

    /// Specialization at `y = y0`, a polynomial in `x`.
    pub fn eval_y(&self, y0: &BigInt) -> IntPolynomial {
        IntPolynomial::new(self.c.iter().map(|p| p.eval_int(y0)).collect())
    }
}

/// Determinant of an integer matrix by fraction-free Bareiss elimination.
pub fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    sign = !sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

/// Sylvester-matrix resultant of two univariate integer polynomials.
pub fn resultant_univariate(a: &IntPolynomial, b: &IntPolynomial) -> BigInt {
    if a.is_zero() || b.is_zero() {
        return BigInt::zero();
    }
    let m = a.degree();
    let n = b.degree();
    if m == 0 {
        return num_traits::pow(a.lc(), n);
    }
    if n == 0 {
        return num_traits::pow(b.lc(), m);
    }
    let size = m + n;
    let mut s = vec![vec![BigInt::zero(); size]; size];
    // rows 0..n: shifts of a (highest coefficient first)
    for r in 0..n {
        for (k, c) in a.coeffs().iter().enumerate() {
            s[r][r + m - k] = c.clone();
        }
    }
    for r in 0..m {
        for (k, c) in b.coeffs().iter().enumerate() {
            s[n + r][r + n - k] = c.clone();
        }
    }
    bareiss_det(s)
}

/// Polynomial through `(x_i, y_i)` with integer results (Newton form over Q).
fn interpolate(xs: &[BigInt], ys: &[BigInt]) -> IntPolynomial {
    let n = xs.len();
    let mut coef: Vec<BigRational> = ys.iter().map(|y| BigRational::from(y.clone())).collect();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = &coef[i] - &coef[i - 1];
            let den = BigRational::from(&xs[i] - &xs[i - j]);
            coef[i] = num / den;
        }
    }
    let mut acc = QPoly::zero();
    for i in (0..n).rev() {
        let lin = QPoly::new(vec![BigRational::from(-xs[i].clone()), BigRational::one()]);
        acc = &(&acc * &lin) + &QPoly::new(vec![coef[i].clone()]);
    }
    let out = IntPolynomial::new(
        acc.coeffs()
            .iter()
            .map(|c| {
                assert!(c.is_integer(), "non-integral interpolation");
                c.to_integer()
            })
            .collect(),
    );
    out
}

fn sample_points() -> impl Iterator<Item = BigInt> {
    (0i64..).map(|k| if k % 2 == 0 { BigInt::from(k / 2) } else { BigInt::from(-(k + 1) / 2) })
}

/// `Res_x(a, b)` as a polynomial in `y`.
pub fn resultant_bivariate(a: &BiPoly, b: &BiPoly) -> IntPolynomial {
    assert!(!a.is_zero() && !b.is_zero());
    let bound = a.deg_x() * b.deg_y() + b.deg_x() * a.deg_y();
    let lca = a.lc_x();
    let lcb = b.lc_x();
    let mut xs = Vec::with_capacity(bound + 1);
    let mut ys = Vec::with_capacity(bound + 1);
    for y0 in sample_points() {
        if xs.len() > bound {
            break;
        }
        if lca.eval_int(&y0).is_zero() || lcb.eval_int(&y0).is_zero() {
            continue;
        }
        let r = resultant_univariate(&a.eval_y(&y0), &b.eval_y(&y0));
        xs.push(y0);
        ys.push(r);
    }
    interpolate(&xs, &ys)
}

/// `Res_x(p(x), q(x, y))` for univariate `p`.
pub fn resultant(p: &IntPolynomial, q: &BiPoly) -> IntPolynomial {
    resultant_bivariate(&BiPoly::from_x(p), q)
}

/// Polynomial whose roots are `z^m` for the roots `z` of `p`, with multiplicity,
/// in primitive form.
pub fn power_polynomial(p: &IntPolynomial, m: u64) -> IntPolynomial {
    assert!(p.degree() >= 1);
    if p.degree() == 1 {
        let root = BigRational::new(-p.coeff(0), p.coeff(1));
        let r = num_traits::pow(root, m as usize);
        return IntPolynomial::linear_from_root(&r).primitive();
    }
    let r = QPoly::x_pow_mod(&BigInt::from(m), &p.to_qpoly());
    resultant(p, &BiPoly::y_minus(&r)).primitive()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn univariate_matches_product_of_roots() {
        // Res(t - 3, t^2 - 2) = lc^2 * ... = (3^2 - 2) up to sign convention
        assert_eq!(resultant_univariate(&p(&[-3, 1]), &p(&[-2, 0, 1])), BigInt::from(7));
        assert_eq!(resultant_univariate(&p(&[-2, 0, 1]), &p(&[-3, 0, 1])), BigInt::from(1));
        assert_eq!(resultant_univariate(&p(&[-1, 0, 1]), &p(&[-1, 1])), BigInt::zero());
        assert_eq!(resultant_univariate(&p(&[1, 0, 1]), &p(&[5])), BigInt::from(25));
    }

    #[test]
    fn power_of_sqrt2() {
        // Res_x(x^2 - 2, y - x^2) = (y - 2)^2
        let q = BiPoly::new(vec![p(&[0, 1]), p(&[]), p(&[-1])]);
        assert_eq!(resultant(&p(&[-2, 0, 1]), &q), p(&[4, -4, 1]));
        assert_eq!(power_polynomial(&p(&[-2, 0, 1]), 2), p(&[4, -4, 1]));
    }

    #[test]
    fn linear_examples() {
        let q = BiPoly::new(vec![p(&[0, 1]), p(&[-1])]);
        assert_eq!(resultant(&p(&[-3, 1]), &q), p(&[-3, 1]));
        // y - 2x over x^2 + 1: roots +-2i
        let q2 = BiPoly::new(vec![p(&[0, 1]), p(&[-2])]);
        assert_eq!(resultant(&p(&[1, 0, 1]), &q2), p(&[4, 0, 1]));
    }

    #[test]
    fn sum_of_square_roots() {
        let r = resultant(&p(&[-2, 0, 1]), &BiPoly::shifted_arg(&p(&[-3, 0, 1])));
        assert_eq!(r.primitive(), p(&[1, 0, -10, 0, 1]));
    }

    #[test]
    fn product_of_square_roots() {
        let r = resultant(&p(&[-2, 0, 1]), &BiPoly::homogenized_quotient(&p(&[-3, 0, 1])));
        assert_eq!(r.primitive(), p(&[36, 0, -12, 0, 1]));
    }
}
