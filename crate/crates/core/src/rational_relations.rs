//! Multiplicative relations among nonzero rationals via prime factorization.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::intfactor::factorize_integer;
use crate::error::{Error, Result};
use crate::linear::hnf::{column, from_columns, hnf_with_pivots};
use crate::linear::{solve_diophantine_n, ExponentVector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredRational {
    pub sign: i8,
    pub factors: BTreeMap<BigInt, i64>,
}

impl FactoredRational {
    pub fn value(&self) -> BigRational {
        let mut v = BigRational::from_integer(BigInt::from(self.sign));
        for (p, &e) in &self.factors {
            let pe = BigRational::from_integer(num_traits::pow(p.clone(), e.unsigned_abs() as usize));
            if e > 0 {
                v *= pe;
            } else {
                v /= pe;
            }
        }
        v
    }
}

pub fn factorize_rational(q: &BigRational) -> Result<FactoredRational> {
    if q.is_zero() {
        return Err(Error::InvalidInput("cannot factor zero".into()));
    }
    let mut factors = BTreeMap::new();
    for (p, e) in factorize_integer(q.numer()) {
        factors.insert(p, e as i64);
    }
    for (p, e) in factorize_integer(q.denom()) {
        *factors.entry(p).or_insert(0) -= e as i64;
    }
    factors.retain(|_, e| *e != 0);
    Ok(FactoredRational { sign: if q.is_negative() { -1 } else { 1 }, factors })
}

/// A vector `k` supported on `free ∪ {fixed}` with `prod ys[i]^k[i] = 1`
/// and `k[fixed] > 0` minimal, or `None` if no such vector exists.
pub fn solve_rational_relation(ys: &[BigRational], fixed: usize, free: &[usize]) -> Result<Option<ExponentVector>> {
    let n = ys.len();
    let mut idx = vec![fixed];
    idx.extend(free.iter().copied().filter(|&i| i != fixed));
    let facts: Vec<FactoredRational> = idx.iter().map(|&i| factorize_rational(&ys[i])).collect::<Result<_>>()?;
    let primes: BTreeSet<BigInt> = facts.iter().flat_map(|f| f.factors.keys().cloned()).collect();
    let k = idx.len();
    let nvars = k + 1;
    // rows: one per prime, then the sign parity row with an extra unknown
    let mut a: Vec<Vec<BigInt>> = Vec::new();
    for p in &primes {
        let mut row: Vec<BigInt> = facts.iter().map(|f| BigInt::from(*f.factors.get(p).unwrap_or(&0))).collect();
        row.push(BigInt::zero());
        a.push(row);
    }
    let mut sign_row: Vec<BigInt> =
        facts.iter().map(|f| if f.sign < 0 { BigInt::one() } else { BigInt::zero() }).collect();
    sign_row.push(BigInt::from(-2));
    a.push(sign_row);
    let zero = vec![BigInt::zero(); a.len()];
    let sol = solve_diophantine_n(&a, &zero, nvars).expect("homogeneous system is solvable");
    if sol.kernel_basis.is_empty() {
        return Ok(None);
    }
    let kmat = from_columns(&sol.kernel_basis, nvars);
    let (h, _, pivots) = hnf_with_pivots(&kmat, sol.kernel_basis.len());
    if pivots.first() != Some(&0) {
        return Ok(None);
    }
    let best = column(&h, 0);
    debug_assert!(best[0].is_positive());
    Ok(Some(ExponentVector::scatter(&best.0[..k], &idx, n)))
}
