use num_rational::BigRational;

use crate::algebraic::{classify, nondegenerate_check, AlgebraicNumber, Classification};

/// Inputs reordered as roots of unity, roots of rationals, then the rest,
/// together with the reduced numbers `y` used for dependence decisions.
#[derive(Clone, Debug)]
pub struct PreprocessedInput {
    /// `perm[k]` is the original index of position `k`.
    pub perm: Vec<usize>,
    /// The inputs in permuted order.
    pub xs: Vec<AlgebraicNumber>,
    /// `1` for roots of unity, `R` for roots of rationals, `x^p` otherwise.
    pub reduced: Vec<AlgebraicNumber>,
    pub orders: Vec<u64>,
    pub rorders_and_values: Vec<(u64, BigRational)>,
    pub rexps: Vec<u64>,
    /// Per-input classification in the original order.
    pub classifications: Vec<Classification>,
    pub r: usize,
    pub s: usize,
    pub m: usize,
    pub t: usize,
}

impl PreprocessedInput {
    pub fn n(&self) -> usize {
        self.xs.len()
    }

    /// Factor turning a relation among the reduced numbers into one among
    /// the inputs (1 on the root-of-unity block).
    pub fn rescale(&self, k: usize) -> u64 {
        if k < self.r {
            1
        } else if k < self.r + self.s {
            self.rorders_and_values[k - self.r].0
        } else {
            self.rexps[k - self.r - self.s]
        }
    }
}

pub fn preprocess(xs: &[AlgebraicNumber]) -> PreprocessedInput {
    let classifications: Vec<Classification> = xs.iter().map(|x| classify(x.minpoly())).collect();
    let mut alpha = Vec::new();
    let mut beta = Vec::new();
    let mut gamma = Vec::new();
    for (i, c) in classifications.iter().enumerate() {
        match c {
            Classification::RootOfUnity { .. } => alpha.push(i),
            Classification::RootOfRational { .. } => beta.push(i),
            Classification::General { .. } => gamma.push(i),
        }
    }
    let (r, s, m) = (alpha.len(), beta.len(), gamma.len());
    let perm: Vec<usize> = alpha.iter().chain(&beta).chain(&gamma).copied().collect();
    let mut orders = Vec::new();
    let mut rorders_and_values = Vec::new();
    let mut rexps = Vec::new();
    let mut reduced = Vec::new();
    for &i in &perm {
        match &classifications[i] {
            Classification::RootOfUnity { order } => {
                orders.push(*order);
                reduced.push(AlgebraicNumber::from_integer(1));
            }
            Classification::RootOfRational { rorder, rvalue } => {
                rorders_and_values.push((*rorder, rvalue.clone()));
                reduced.push(AlgebraicNumber::from_rational(rvalue));
            }
            Classification::General { rexp, reduced_minpoly } => {
                rexps.push(*rexp);
                let y = xs[i].pow(*rexp);
                assert_eq!(y.minpoly(), reduced_minpoly, "reduced power disagrees with degree reduction");
                reduced.push(y);
            }
        }
    }
    // greedy longest non-degenerate prefix of the reduced general block
    let block = &reduced[r + s..];
    let mut t = 0;
    while t < m && nondegenerate_check(&block[..t + 1]) {
        t += 1;
    }
    PreprocessedInput {
        xs: perm.iter().map(|&i| xs[i].clone()).collect(),
        perm,
        reduced,
        orders,
        rorders_and_values,
        rexps,
        classifications,
        r,
        s,
        m,
        t,
    }
}
