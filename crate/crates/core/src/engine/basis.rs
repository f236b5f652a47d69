use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::dependence::{BoundStrategy, DependenceStats};
use super::prebasis::get_pre_basis;
use super::preprocess::{preprocess, PreprocessedInput};
use crate::algebraic::{equals_one, AlgebraicNumber, Classification};
use crate::arith::divisors;
use crate::error::{Error, Result};
use crate::isolate::angle_combine;
use crate::linear::{canonical_basis, solve_congruence, solve_diophantine, ExponentVector, Matrix};

const ISO_START_BITS: u64 = 32;
const ISO_MAX_BITS: u64 = 1 << 14;

/// The unique `a` in `[0, lam)` with `x^v = exp(2 pi i a / lam)`, assuming
/// `x^(lam v) = 1`.
pub fn isomorphism(xs: &[AlgebraicNumber], v: &ExponentVector, lam: u64) -> u64 {
    assert!(lam >= 1);
    if lam == 1 {
        return 0;
    }
    let support = v.support();
    let coeffs: Vec<BigInt> = support.iter().map(|&i| v[i].clone()).collect();
    let mut bits = ISO_START_BITS;
    loop {
        let mag = v.max_abs().bits() + (support.len() as u64).max(1).ilog2() as u64 + 2;
        let args: Vec<_> = support.iter().map(|&i| xs[i].argument(bits + mag)).collect();
        let theta = angle_combine(&coeffs, &args);
        let grid = theta.grid_points(lam);
        match grid.len() {
            1 => return grid[0],
            0 => panic!("x^v is not a {}-th root of unity", lam),
            _ => {}
        }
        assert!(bits < ISO_MAX_BITS, "isomorphism did not separate grid points");
        bits *= 2;
    }
}

/// Minimal vector on the ray of the first pre-basis vector.
pub fn first_basis_vector(xs: &[AlgebraicNumber], w: &ExponentVector) -> ExponentVector {
    let g = w.content();
    let gl = g.to_u64().expect("content fits in u64");
    let a = isomorphism(xs, &w.div_exact(&g), gl);
    w.div_exact(&BigInt::from(a).gcd(&g))
}

/// Staircase vector with tail `j` from the pre-basis vector `w` and the
/// already established basis vectors (all with smaller tails).
pub fn pre_basis_to_basis(
    xs: &[AlgebraicNumber],
    w: &ExponentVector,
    j: usize,
    established: &[ExponentVector],
) -> ExponentVector {
    let n = xs.len();
    let big_w = w[j].clone();
    assert!(big_w.is_positive(), "pre-basis vector needs a positive entry at its tail");
    let wl = big_w.to_u64().expect("tail entry fits in u64");
    let s = established.len();
    for lam in divisors(wl).into_iter().rev() {
        let lam_b = BigInt::from(lam);
        // [lam I_j | U] (v, q) = w restricted to coordinates below j
        let a: Matrix = (0..j)
            .map(|row| {
                let mut r = vec![BigInt::zero(); j + s];
                r[row] = lam_b.clone();
                for (c, u) in established.iter().enumerate() {
                    r[j + c] = u[row].clone();
                }
                r
            })
            .collect();
        let b: Vec<BigInt> = (0..j).map(|row| w[row].clone()).collect();
        let sol = if j == 0 { crate::linear::solve_diophantine_n(&a, &b, s) } else { solve_diophantine(&a, &b) };
        let Some(sol) = sol else {
            continue;
        };
        let tail = &big_w / &lam_b;
        let lift = |l: &[BigInt], last: BigInt| {
            let mut e = ExponentVector::zeros(n);
            e.0[..j].clone_from_slice(l);
            e.0[j] = last;
            e
        };
        let l0 = &sol.particular.entries()[..j];
        let a0 = isomorphism(xs, &lift(l0, tail.clone()), lam);
        let ai: Vec<BigInt> = sol
            .kernel_basis
            .iter()
            .map(|k| BigInt::from(isomorphism(xs, &lift(&k.entries()[..j], BigInt::zero()), lam)))
            .collect();
        let Some((z, _)) = solve_congruence(&ai, &BigInt::from(a0), &lam_b) else {
            continue;
        };
        let mut v: Vec<BigInt> = l0.to_vec();
        for (zi, k) in z.iter().zip(&sol.kernel_basis) {
            for (c, x) in v.iter_mut().zip(&k.entries()[..j]) {
                *c += zi * x;
            }
        }
        return lift(&v, tail);
    }
    panic!("no divisor of the tail entry gave a solvable system");
}

/// A basis of the exponent lattice in the original input order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeBasis {
    /// Staircase vectors (computed in the internal order, reported in the input order).
    pub vectors: Vec<ExponentVector>,
    /// Column Hermite normal form of the same lattice.
    pub canonical_hnf: Vec<ExponentVector>,
}

impl LatticeBasis {
    pub fn rank(&self) -> usize {
        self.vectors.len()
    }
}

/// Everything computed for one input list.
#[derive(Clone, Debug)]
pub struct BasisResult {
    pub basis: LatticeBasis,
    /// Indices (0-based, input order) of a maximal independent subsequence.
    pub independent: Vec<usize>,
    pub classifications: Vec<Classification>,
    pub stats: DependenceStats,
    pub preprocessed: PreprocessedInput,
}

pub fn get_basis(xs: &[AlgebraicNumber], strategy: BoundStrategy) -> Result<BasisResult> {
    let n = xs.len();
    let pp = preprocess(xs);
    let pb = get_pre_basis(&pp, strategy)?;
    let mut staircase: Vec<ExponentVector> = Vec::new();
    for &j in &pb.j {
        let w = &pb.w[&j];
        let u = if staircase.is_empty() {
            first_basis_vector(&pp.xs, w)
        } else {
            pre_basis_to_basis(&pp.xs, w, j, &staircase)
        };
        debug_assert_eq!(u.tail(), Some(j));
        staircase.push(u);
    }
    let to_original = |u: &ExponentVector| {
        let mut e = ExponentVector::zeros(n);
        for (k, x) in u.entries().iter().enumerate() {
            e.0[pp.perm[k]] = x.clone();
        }
        e
    };
    let vectors: Vec<ExponentVector> = staircase.iter().map(to_original).collect();
    for v in &vectors {
        if !equals_one(xs, v) {
            return Err(Error::VerificationFailed(format!("basis vector {} is not a relation", v)));
        }
    }
    let mut independent: Vec<usize> = pb.i.iter().map(|&k| pp.perm[k]).collect();
    independent.sort_unstable();
    let canonical_hnf = canonical_basis(&vectors, n);
    Ok(BasisResult {
        basis: LatticeBasis { vectors, canonical_hnf },
        independent,
        classifications: pp.classifications.clone(),
        stats: pb.stats.clone(),
        preprocessed: pp,
    })
}
