use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{
    cyclotomic_candidates, divisors, factor, power_polynomial, resultant, BiPoly, IntPolynomial, QPoly,
};

/// Kind of a nonzero algebraic number as used by the lattice pipeline.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Classification {
    RootOfUnity {
        order: u64,
    },
    RootOfRational {
        rorder: u64,
        #[serde(with = "crate::isolate::rect::qser")]
        rvalue: BigRational,
    },
    General {
        rexp: u64,
        #[serde(serialize_with = "ser_poly", deserialize_with = "de_poly")]
        reduced_minpoly: IntPolynomial,
    },
}

fn ser_poly<S: serde::Serializer>(p: &IntPolynomial, s: S) -> Result<S::Ok, S::Error> {
    let v: Vec<String> = p.coeffs().iter().map(|c| c.to_string()).collect();
    v.serialize(s)
}

fn de_poly<'de, D: serde::Deserializer<'de>>(d: D) -> Result<IntPolynomial, D::Error> {
    let v: Vec<String> = Vec::deserialize(d)?;
    let c: Vec<BigInt> = v.iter().map(|s| s.parse().map_err(serde::de::Error::custom)).collect::<Result<_, _>>()?;
    Ok(IntPolynomial::new(c))
}

fn x_pow_mod(k: u64, p: &IntPolynomial) -> QPoly {
    QPoly::x_pow_mod(&BigInt::from(k), &p.to_qpoly())
}

/// `(true, k)` when the roots of `p` are primitive `k`-th roots of unity.
pub fn root_of_unity_test(p: &IntPolynomial) -> (bool, u64) {
    let d = p.degree();
    if d == 0 || !p.lc().abs().is_one() || !p.constant_term().abs().is_one() {
        return (false, 0);
    }
    let m = p.primitive();
    for k in cyclotomic_candidates(d as u64) {
        if x_pow_mod(k, &m) == QPoly::one() {
            return (true, k);
        }
    }
    (false, 0)
}

/// Necessary condition: all roots share one modulus `c = |a0/ad|^(1/d)`, so
/// `p(c t)` is self-reciprocal up to sign. Checked without radicals.
fn equal_modulus_filter(p: &IntPolynomial) -> bool {
    let d = p.degree();
    let a0 = p.coeff(0);
    let ad = p.coeff(d);
    let mu_neg = a0.is_negative() != ad.is_negative();
    let (m0, md) = (a0.abs(), ad.abs());
    for j in 0..=d {
        let aj = p.coeff(j);
        let ak = p.coeff(d - j);
        if aj.is_zero() != ak.is_zero() {
            return false;
        }
        if aj.is_zero() {
            continue;
        }
        if (aj.is_negative() != ak.is_negative()) != mu_neg {
            return false;
        }
        // |a_j|^d |a0|^j |ad|^(d-j) = |a_{d-j}|^d |a0|^(d-j) |ad|^j
        let lhs = num_traits::pow(aj.abs(), d) * num_traits::pow(m0.clone(), j) * num_traits::pow(md.clone(), d - j);
        let rhs = num_traits::pow(ak.abs(), d) * num_traits::pow(m0.clone(), d - j) * num_traits::pow(md.clone(), j);
        if lhs != rhs {
            return false;
        }
    }
    true
}

/// `(Rorder, R)` when a root of `p` has a rational power, else `(0, 1)`.
pub fn root_of_rational_test(p: &IntPolynomial) -> (u64, BigRational) {
    assert!(!p.constant_term().is_zero(), "root_of_rational_test needs p(0) != 0");
    let p = p.primitive();
    let d = p.degree();
    if d == 1 {
        return (1, BigRational::new(-p.coeff(0), p.coeff(1)));
    }
    if !equal_modulus_filter(&p) {
        return (0, BigRational::one());
    }
    // a^d / ((-1)^d a0/ad) is a root of unity whenever a is a root of rational
    let mut c = BigRational::new(p.coeff(0), p.coeff(d));
    if d % 2 == 1 {
        c = -c;
    }
    let g = power_polynomial(&p, d as u64).squarefree_part();
    let h = g.scale_var(&c);
    let (unit, order) = root_of_unity_test(&h);
    if !unit {
        return (0, BigRational::one());
    }
    for k in divisors(d as u64 * order) {
        let r = x_pow_mod(k, &p);
        if r.degree() == 0 {
            return (k, r.coeff(0));
        }
    }
    panic!("divisor scan exhausted for {}", p);
}

/// `(true, k)` when some quotient of two roots of `p` is a root of unity of order `k`.
pub fn unitary_test(p: &IntPolynomial) -> (bool, u64) {
    let d = p.degree();
    if d <= 1 {
        return (false, 0);
    }
    let mut q = resultant(p, &BiPoly::scaled_arg(p));
    let ym1 = IntPolynomial::from_i64s(&[-1, 1]);
    for _ in 0..d {
        q = q.div_exact(&ym1).expect("(y - 1)^d divides the quotient resultant");
    }
    let mut best: Option<u64> = None;
    for (f, _) in factor(&q) {
        if f.degree() > 0 {
            let (u, k) = root_of_unity_test(&f);
            if u && k >= 2 && best.is_none_or(|b| k < b) {
                best = Some(k);
            }
        }
    }
    match best {
        Some(k) => (true, k),
        None => (false, 0),
    }
}

/// `(prod, f)` with `f` the minimal polynomial of `a^prod` of reduced degree.
pub fn degree_reduction(p: &IntPolynomial) -> (u64, IntPolynomial) {
    let mut f = p.primitive();
    let mut prod = 1u64;
    loop {
        let (u, k) = unitary_test(&f);
        if !u {
            return (prod, f);
        }
        f = power_polynomial(&f, k).squarefree_part();
        prod = prod.checked_mul(k).expect("reducing exponent overflow");
    }
}

/// Classification of a number from its minimal polynomial alone.
pub fn classify(minpoly: &IntPolynomial) -> Classification {
    let (unit, order) = root_of_unity_test(minpoly);
    if unit {
        return Classification::RootOfUnity { order };
    }
    let (rorder, rvalue) = root_of_rational_test(minpoly);
    if rorder > 0 {
        return Classification::RootOfRational { rorder, rvalue };
    }
    let (rexp, reduced_minpoly) = degree_reduction(minpoly);
    Classification::General { rexp, reduced_minpoly }
}
