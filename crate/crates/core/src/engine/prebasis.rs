use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::dependence::{decide_dependence, BoundStrategy, DependenceStats};
use super::preprocess::PreprocessedInput;
use crate::error::Result;
use crate::linear::ExponentVector;
use crate::rational_relations::solve_rational_relation;

/// Pre-basis vectors `w_j` (indices in permuted order) and the final
/// independent index set.
#[derive(Clone, Debug, Default)]
pub struct PreBasis {
    pub j: Vec<usize>,
    pub w: BTreeMap<usize, ExponentVector>,
    pub i: Vec<usize>,
    pub stats: DependenceStats,
}

impl PreBasis {
    pub fn box_searches(&self) -> usize {
        self.stats.box_searches
    }
}

fn rescaled(pp: &PreprocessedInput, k: &ExponentVector) -> ExponentVector {
    ExponentVector(k.entries().iter().enumerate().map(|(i, e)| e * BigInt::from(pp.rescale(i))).collect())
}

pub fn get_pre_basis(pp: &PreprocessedInput, strategy: BoundStrategy) -> Result<PreBasis> {
    let n = pp.n();
    let (r, s) = (pp.r, pp.s);
    let mut out = PreBasis::default();
    for (j, &order) in pp.orders.iter().enumerate() {
        out.j.push(j);
        out.w.insert(j, ExponentVector::unit(n, j, BigInt::from(order)));
    }
    if s > 0 {
        out.i.push(r);
        let ys: Vec<BigRational> = pp.rorders_and_values.iter().map(|(_, v)| v.clone()).collect();
        for j in r + 1..r + s {
            let free: Vec<usize> = out.i.iter().map(|&i| i - r).collect();
            match solve_rational_relation(&ys, j - r, &free)? {
                Some(k) => {
                    let mut full = ExponentVector::zeros(n);
                    for (b, e) in k.entries().iter().enumerate() {
                        full.0[r + b] = e.clone();
                    }
                    out.j.push(j);
                    out.w.insert(j, rescaled(pp, &full));
                }
                None => out.i.push(j),
            }
        }
    }
    let g0 = r + s;
    out.i.extend(g0..g0 + pp.t);
    for j in g0 + pp.t..n {
        let indep: Vec<_> = out.i.iter().map(|&i| pp.reduced[i].clone()).collect();
        if indep.is_empty() {
            out.i.push(j);
            continue;
        }
        match decide_dependence(&indep, &pp.reduced[j], strategy, &mut out.stats)? {
            Some(v) => {
                let mut positions = out.i.clone();
                positions.push(j);
                let full = ExponentVector::scatter(v.entries(), &positions, n);
                out.j.push(j);
                out.w.insert(j, rescaled(pp, &full));
            }
            None => out.i.push(j),
        }
    }
    out.j.sort_unstable();
    out.i.sort_unstable();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebraic::{equals_one, AlgebraicNumber};
    use crate::arith::IntPolynomial;
    use crate::engine::preprocess::preprocess;
    use crate::isolate::rect::q;

    fn v(x: &[i64]) -> ExponentVector {
        ExponentVector::from_i64s(x)
    }

    fn root(c: &[i64], i: usize) -> AlgebraicNumber {
        AlgebraicNumber::from_poly_root(&IntPolynomial::from_i64s(c), i).unwrap()
    }

    #[test]
    fn roots_of_unity_block() {
        let i = root(&[1, 0, 1], 1);
        let pp = preprocess(&[i, AlgebraicNumber::from_integer(-1)]);
        let pb = get_pre_basis(&pp, BoundStrategy::default()).unwrap();
        assert_eq!(pb.j, vec![0, 1]);
        assert_eq!(pb.w[&0], v(&[4, 0]));
        assert_eq!(pb.w[&1], v(&[0, 2]));
        assert!(pb.i.is_empty());
    }

    #[test]
    fn independent_rationals() {
        let xs: Vec<AlgebraicNumber> =
            [q(21, 4), q(27, 50), q(245, 32), q(16, 7)].iter().map(AlgebraicNumber::from_rational).collect();
        let pb = get_pre_basis(&preprocess(&xs), BoundStrategy::default()).unwrap();
        assert!(pb.j.is_empty());
        assert_eq!(pb.i, vec![0, 1, 2, 3]);
    }

    #[test]
    fn powers_of_two() {
        let xs: Vec<AlgebraicNumber> = [2, 4, 8].iter().map(|&k| AlgebraicNumber::from_integer(k)).collect();
        let pb = get_pre_basis(&preprocess(&xs), BoundStrategy::default()).unwrap();
        assert_eq!(pb.j, vec![1, 2]);
        assert_eq!(pb.w[&1], v(&[-2, 1, 0]));
        assert_eq!(pb.w[&2], v(&[-3, 0, 1]));
        assert_eq!(pb.i, vec![0]);
    }

    #[test]
    fn rescaled_radicals() {
        // sqrt 2 and 2: (sqrt 2)^2 = 2
        let xs = vec![root(&[-2, 0, 1], 1), AlgebraicNumber::from_integer(2)];
        let pp = preprocess(&xs);
        let pb = get_pre_basis(&pp, BoundStrategy::default()).unwrap();
        assert_eq!(pb.j, vec![1]);
        assert!(equals_one(&pp.xs, &pb.w[&1]));
    }

    #[test]
    fn general_tail_dependence() {
        // the roots of t^2 - 5t + 3 multiply to 3
        let xs = vec![root(&[3, -5, 1], 0), root(&[3, -5, 1], 1), AlgebraicNumber::from_integer(3)];
        let pp = preprocess(&xs);
        let pb = get_pre_basis(&pp, BoundStrategy::default()).unwrap();
        assert_eq!(pb.i.len() + pb.j.len(), 3);
        assert_eq!(pb.j.len(), 1);
        for w in pb.w.values() {
            assert!(equals_one(&pp.xs, w));
        }
    }
}
