//! Eigenvalues of rational matrices as algebraic numbers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebraic::AlgebraicNumber;
use crate::arith::{factor, IntPolynomial, QPoly};
use crate::error::{Error, Result};

pub type RationalMatrix = Vec<Vec<BigRational>>;

fn check_square(a: &RationalMatrix) -> Result<usize> {
    let n = a.len();
    if n == 0 {
        return Err(Error::InvalidInput("empty matrix".into()));
    }
    if let Some(i) = a.iter().position(|r| r.len() != n) {
        return Err(Error::InvalidInput(format!("row {} has {} entries, expected {}", i + 1, a[i].len(), n)));
    }
    Ok(n)
}

fn mat_mul(a: &RationalMatrix, b: &RationalMatrix) -> RationalMatrix {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).fold(BigRational::zero(), |acc, k| acc + &a[i][k] * &b[k][j])).collect())
        .collect()
}

fn add_scalar(a: &mut RationalMatrix, c: &BigRational) {
    for (i, row) in a.iter_mut().enumerate() {
        row[i] += c;
    }
}

/// Characteristic polynomial `det(t I - A)` by Faddeev–LeVerrier.
pub fn characteristic_polynomial(a: &RationalMatrix) -> Result<QPoly> {
    let n = check_square(a)?;
    let mut c = vec![BigRational::zero(); n + 1];
    c[n] = BigRational::one();
    let mut m: RationalMatrix = vec![vec![BigRational::zero(); n]; n];
    for k in 1..=n {
        m = mat_mul(a, &m);
        add_scalar(&mut m, &c[n - k + 1]);
        let am = mat_mul(a, &m);
        let tr = (0..n).fold(BigRational::zero(), |acc, i| acc + &am[i][i]);
        c[n - k] = -tr / BigRational::from_integer(BigInt::from(k));
    }
    Ok(QPoly::new(c))
}

fn eval_matrix(p: &IntPolynomial, a: &RationalMatrix) -> RationalMatrix {
    let n = a.len();
    let mut acc: RationalMatrix = vec![vec![BigRational::zero(); n]; n];
    for c in p.coeffs().iter().rev() {
        acc = mat_mul(&acc, a);
        add_scalar(&mut acc, &BigRational::from_integer(c.clone()));
    }
    acc
}

/// Over the complex numbers: the minimal polynomial is squarefree.
pub fn is_diagonalizable(a: &RationalMatrix) -> Result<bool> {
    let cp = characteristic_polynomial(a)?.to_primitive_int();
    let s = cp.squarefree_part();
    Ok(eval_matrix(&s, a).iter().flatten().all(|x| x.is_zero()))
}

/// Distinct eigenvalues, grouped by irreducible factor of the characteristic
/// polynomial (canonical factor order) and isolation order within a factor.
pub fn eigenvalues(a: &RationalMatrix) -> Result<Vec<AlgebraicNumber>> {
    let cp = characteristic_polynomial(a)?.to_primitive_int();
    if cp.constant_term().is_zero() {
        return Err(Error::InvalidInput("matrix is singular (eigenvalue 0)".into()));
    }
    if !is_diagonalizable(a)? {
        return Err(Error::InvalidInput("matrix is not diagonalizable".into()));
    }
    let mut out = Vec::new();
    for (f, _) in factor(&cp) {
        for i in 0..f.degree() {
            out.push(AlgebraicNumber::from_poly_root(&f, i)?);
        }
    }
    Ok(out)
}
