use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::algebraic::number::select_root;
use crate::algebraic::{equals_one, root_of_unity_test, AlgebraicNumber, NumericCache};
use crate::arith::{factor, resultant, BiPoly, IntPolynomial};
use crate::error::{Error, Result};
use crate::isolate::rect::{Interval, Q};
use crate::isolate::transcend::ln_of_interval;
use crate::isolate::{isolate_roots, isolate_with_prec, refine_to, Rectangle};
use crate::linear::ExponentVector;
use crate::rational_relations::factorize_rational;

const FILTER_BITS: u64 = 64;
const LOG_BITS: u64 = 96;
/// Largest joint-conjugate count for which the certificate is attempted.
const MAX_TUPLES: usize = 64;
/// Largest number of candidates a single search may enumerate.
const MAX_CANDIDATES: f64 = 4.0e6;

/// How `decide_dependence` bounds its exhaustive search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "lowercase")]
pub enum BoundStrategy {
    /// Search up to a height-and-degree bound; exhausting it proves
    /// independence. Inconclusive when that bound exceeds `max_box`.
    Certified { max_box: u64 },
    /// Search boxes 2, 4, ... up to `max_box`; Inconclusive when exhausted.
    Heuristic { max_box: u64 },
}

impl Default for BoundStrategy {
    fn default() -> Self {
        BoundStrategy::Certified { max_box: 64 }
    }
}

impl BoundStrategy {
    pub fn max_box(&self) -> u64 {
        match self {
            BoundStrategy::Certified { max_box } | BoundStrategy::Heuristic { max_box } => *max_box,
        }
    }
}

/// Counters describing how a dependence decision was reached.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DependenceStats {
    pub box_searches: usize,
    pub certificates: usize,
}

/// Decides whether `cand` depends on the independent `indep`. Returns a
/// relation over `indep ++ [cand]` with positive last entry, or `None`.
pub fn decide_dependence(
    indep: &[AlgebraicNumber],
    cand: &AlgebraicNumber,
    strategy: BoundStrategy,
    stats: &mut DependenceStats,
) -> Result<Option<ExponentVector>> {
    let k = indep.len();
    let mut ys: Vec<AlgebraicNumber> = indep.to_vec();
    ys.push(cand.clone());
    if k == 0 {
        let (unit, order) = root_of_unity_test(cand.minpoly());
        return Ok(unit.then(|| ExponentVector::unit(1, 0, BigInt::from(order))));
    }
    let cache = NumericCache::new(&ys, FILTER_BITS);
    let pre = if k <= 4 { 2 } else { 1 };
    stats.box_searches += 1;
    if let Some(v) = search_shell(&ys, &cache, 0, pre)? {
        return Ok(Some(v));
    }
    if independence_certificate(&ys) {
        stats.certificates += 1;
        return Ok(None);
    }
    match strategy {
        BoundStrategy::Heuristic { max_box } => {
            let mut prev = pre;
            let mut r = pre * 2;
            while prev < max_box {
                let r_now = r.min(max_box);
                if let Some(v) = search_shell(&ys, &cache, prev, r_now)? {
                    return Ok(Some(v));
                }
                prev = r_now;
                r *= 2;
            }
            Err(Error::Inconclusive(format!("no relation with entries up to {} and no certificate", max_box)))
        }
        BoundStrategy::Certified { max_box } => {
            let bound = relation_bound(&ys);
            let limit = if bound > max_box as f64 { max_box } else { bound.ceil() as u64 };
            let mut prev = pre;
            let mut r = pre * 2;
            while prev < limit {
                let r_now = r.min(limit);
                if let Some(v) = search_shell(&ys, &cache, prev, r_now)? {
                    return Ok(Some(v));
                }
                prev = r_now;
                r *= 2;
            }
            if bound <= limit as f64 {
                Ok(None)
            } else {
                Err(Error::Inconclusive(format!("certified bound {:.3e} exceeds the search limit {}", bound, max_box)))
            }
        }
    }
}

/// Enumerates vectors with `|v| <= r`, skipping those already covered by
/// radius `prev`, in order of the last entry (1, 2, ...) then lexicographic.
fn search_shell(ys: &[AlgebraicNumber], cache: &NumericCache, prev: u64, r: u64) -> Result<Option<ExponentVector>> {
    let k = ys.len() - 1;
    let count = (2.0 * r as f64 + 1.0).powi(k as i32) * r as f64;
    if count > MAX_CANDIDATES {
        return Err(Error::Inconclusive(format!("search box of radius {} in dimension {} is too large", r, k + 1)));
    }
    let r = r as i64;
    let prev = prev as i64;
    for last in 1..=r {
        let mut odo = vec![-r; k];
        'enumerate: loop {
            let inside_prev = last <= prev && odo.iter().all(|x| x.abs() <= prev);
            if !inside_prev {
                let mut e: Vec<i64> = odo.clone();
                e.push(last);
                let v = ExponentVector::from_i64s(&e);
                if !cache.excludes_one(&v) && equals_one(ys, &v) {
                    return Ok(Some(v));
                }
            }
            let mut i = k;
            loop {
                if i == 0 {
                    break 'enumerate;
                }
                i -= 1;
                if odo[i] < r {
                    odo[i] += 1;
                    continue 'enumerate;
                }
                odo[i] = -r;
            }
        }
    }
    Ok(None)
}

fn norm(p: &IntPolynomial) -> BigRational {
    let d = p.degree();
    let v = BigRational::new(p.coeff(0), p.coeff(d));
    if d % 2 == 1 {
        -v
    } else {
        v
    }
}

/// Joint conjugates of the non-rational numbers: one tuple of root
/// rectangles per complex embedding of the field they generate.
fn joint_embeddings(nums: &[AlgebraicNumber]) -> Option<Vec<Vec<Rectangle>>> {
    let total: usize = nums.iter().map(|x| x.degree()).product();
    if total > MAX_TUPLES {
        return None;
    }
    let weights: [&[i64]; 4] =
        [&[1, 1, 1, 1, 1, 1], &[1, 2, 3, 5, 7, 11], &[1, 3, 9, 27, 81, 243], &[2, -1, 5, -3, 4, 7]];
    for w in weights {
        if w.len() < nums.len() {
            continue;
        }
        let cs: Vec<BigRational> =
            w[..nums.len()].iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect();
        let scaled: Vec<IntPolynomial> = nums.iter().zip(&cs).map(|(x, c)| x.minpoly().scale_var(&c.recip())).collect();
        let mut acc = scaled[0].clone();
        for p in &scaled[1..] {
            acc = resultant(&acc, &BiPoly::shifted_arg(p)).primitive();
        }
        if !acc.is_squarefree() {
            continue;
        }
        // the embedding polynomial: the factor vanishing at the actual weighted sum
        let factors: Vec<IntPolynomial> = factor(&acc).into_iter().map(|(f, _)| f).collect();
        let theta = select_root(&factors, |bits| weighted_sum(nums, &cs, bits + 4).round_out(bits + 16));
        let conj: Vec<Vec<Rectangle>> = nums.iter().map(|x| isolate_roots(x.minpoly())).collect();
        return match_tuples(theta.minpoly(), nums, &conj, &cs);
    }
    None
}

fn weighted_sum(nums: &[AlgebraicNumber], cs: &[BigRational], bits: u64) -> Rectangle {
    let mut acc = Rectangle::point(Q::zero(), Q::zero());
    for (x, c) in nums.iter().zip(cs) {
        let e = x.enclosure(bits);
        acc = acc.add(&Rectangle::from_intervals(e.re().scale(c), e.im().scale(c)));
    }
    acc
}

fn tuples(sizes: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for &s in sizes {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..s).map(move |i| {
                    let mut u = t.clone();
                    u.push(i);
                    u
                })
            })
            .collect();
    }
    out
}

fn match_tuples(
    f: &IntPolynomial,
    nums: &[AlgebraicNumber],
    conj: &[Vec<Rectangle>],
    cs: &[BigRational],
) -> Option<Vec<Vec<Rectangle>>> {
    let sizes: Vec<usize> = conj.iter().map(|c| c.len()).collect();
    let all = tuples(&sizes);
    let mut bits = 32u64;
    while bits <= 4096 {
        let w = Q::new(BigInt::one(), BigInt::one() << bits);
        let refined: Vec<Vec<Rectangle>> =
            conj.iter().zip(nums).map(|(rs, x)| rs.iter().map(|r| refine_to(x.minpoly(), r, &w)).collect()).collect();
        let sums: Vec<Rectangle> = all
            .iter()
            .map(|t| {
                let mut acc = Rectangle::point(Q::zero(), Q::zero());
                for (i, &j) in t.iter().enumerate() {
                    let e = &refined[i][j];
                    acc = acc.add(&Rectangle::from_intervals(e.re().scale(&cs[i]), e.im().scale(&cs[i])));
                }
                acc
            })
            .collect();
        let roots: Vec<Rectangle> = isolate_with_prec(f, bits + 8).iter().map(|r| refine_to(f, r, &w)).collect();
        let mut out = Vec::with_capacity(roots.len());
        for r in &roots {
            let hits: Vec<usize> = (0..all.len()).filter(|&k| sums[k].intersects(r)).collect();
            if hits.len() != 1 {
                break;
            }
            out.push(all[hits[0]].iter().enumerate().map(|(i, &j)| refined[i][j].clone()).collect());
        }
        if out.len() == roots.len() {
            return Some(out);
        }
        bits *= 2;
    }
    None
}

/// Certified full column rank of the log-embedding matrix: archimedean rows
/// `ln|s(y_i)|^2` over all embeddings `s` and one norm-valuation row per prime.
pub fn independence_certificate(ys: &[AlgebraicNumber]) -> bool {
    let alg: Vec<AlgebraicNumber> = ys.iter().filter(|y| y.degree() > 1).cloned().collect();
    let mut rows: Vec<Vec<Interval>> = Vec::new();
    // valuation rows: ord_p N(y) / deg(y)
    let mut facts = Vec::new();
    for y in ys {
        match factorize_rational(&norm(y.minpoly())) {
            Ok(f) => facts.push(f),
            Err(_) => return false,
        }
    }
    let primes: BTreeSet<BigInt> = facts.iter().flat_map(|f| f.factors.keys().cloned()).collect();
    for p in &primes {
        rows.push(
            ys.iter()
                .zip(&facts)
                .map(|(y, f)| {
                    let e = *f.factors.get(p).unwrap_or(&0);
                    Interval::point(BigRational::new(BigInt::from(e), BigInt::from(y.degree())))
                })
                .collect(),
        );
    }
    if !alg.is_empty() {
        let Some(embeddings) = joint_embeddings(&alg) else {
            return false;
        };
        for tuple in embeddings {
            let mut row = Vec::with_capacity(ys.len());
            let mut it = tuple.iter();
            for y in ys {
                let rect = if y.degree() > 1 { it.next().expect("tuple entry").clone() } else { y.rect().clone() };
                row.push(ln_of_interval(&rect.modulus_sq(), LOG_BITS));
            }
            rows.push(row);
        }
    } else {
        rows.push(ys.iter().map(|y| y.log_modulus_sq(LOG_BITS)).collect());
    }
    interval_full_column_rank(rows, ys.len())
}

fn magnitude(i: &Interval) -> Q {
    if i.contains_zero() {
        Q::zero()
    } else if i.lo.is_positive() {
        i.lo.clone()
    } else {
        -i.hi.clone()
    }
}

/// Interval Gaussian elimination; true when some pivot sequence has every
/// pivot interval excluding zero, which certifies full column rank for
/// every point matrix inside the interval matrix.
pub fn interval_full_column_rank(mut rows: Vec<Vec<Interval>>, cols: usize) -> bool {
    if rows.len() < cols {
        return false;
    }
    let mut used = vec![false; rows.len()];
    for c in 0..cols {
        let mut best: Option<(usize, Q)> = None;
        for (r, row) in rows.iter().enumerate() {
            if used[r] {
                continue;
            }
            let m = magnitude(&row[c]);
            if m.is_positive() && best.as_ref().is_none_or(|(_, b)| &m > b) {
                best = Some((r, m));
            }
        }
        let Some((pr, _)) = best else {
            return false;
        };
        used[pr] = true;
        let pivot_row = rows[pr].clone();
        for r in 0..rows.len() {
            if used[r] {
                continue;
            }
            let f = rows[r][c].div(&pivot_row[c]);
            for cc in c..cols {
                rows[r][cc] = rows[r][cc].sub(&f.mul(&pivot_row[cc])).round_out(LOG_BITS + 32);
            }
        }
    }
    true
}

/// Absolute logarithmic height, rounded up.
pub fn height_upper(x: &AlgebraicNumber) -> f64 {
    let p = x.minpoly();
    let mut s = p.lc().abs().to_f64().unwrap_or(f64::MAX).ln();
    for r in isolate_with_prec(p, 64) {
        let (a, b) = r.center();
        let m = a.to_f64().unwrap_or(f64::MAX).hypot(b.to_f64().unwrap_or(f64::MAX));
        let rad = r.width().to_f64().unwrap_or(0.0);
        s += (m + rad).max(1.0).ln();
    }
    (s / p.degree() as f64) * (1.0 + 1e-9) + 1e-12
}

fn max_roots_of_unity(d: u64) -> u64 {
    (1..=2 * d * d + 2).filter(|&k| crate::arith::euler_phi(k) <= d).max().unwrap_or(2)
}

/// Bound on the entries of some relation with nonzero last entry when the
/// last number depends on the others (a Loher–Masser type estimate).
pub fn relation_bound(ys: &[AlgebraicNumber]) -> f64 {
    let n = ys.len() as i32;
    let d: f64 = ys.iter().map(|y| y.degree() as f64).product::<f64>().max(1.0);
    let omega = max_roots_of_unity(d.min(1e6) as u64) as f64;
    let hs: Vec<f64> = ys.iter().map(|y| height_upper(y).max(1.0)).collect();
    let prod: f64 = hs.iter().product();
    let worst = hs.iter().map(|h| prod / h).fold(0.0, f64::max);
    let nf = n as f64;
    let fact: f64 = (1..=n).map(|i| i as f64).product();
    58.0 * fact * std::f64::consts::E.powi(n) / nf.powi(n) * omega * d.powi(n) * d.ln().max(1.0) * worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::isolate::rect::qi;

    fn root(c: &[i64], i: usize) -> AlgebraicNumber {
        AlgebraicNumber::from_poly_root(&IntPolynomial::from_i64s(c), i).unwrap()
    }

    fn v(x: &[i64]) -> ExponentVector {
        ExponentVector::from_i64s(x)
    }

    #[test]
    fn dependence_examples() {
        let mut st = DependenceStats::default();
        let two = AlgebraicNumber::from_integer(2);
        assert_eq!(decide_dependence(&[], &two, BoundStrategy::default(), &mut st).unwrap(), None);
        let s2 = root(&[-2, 0, 1], 1);
        let s8 = root(&[-8, 0, 1], 1);
        let r = decide_dependence(std::slice::from_ref(&s2), &s8, BoundStrategy::default(), &mut st).unwrap();
        assert_eq!(r, Some(v(&[-3, 1])));
        let r = decide_dependence(&[two], &s2, BoundStrategy::default(), &mut st).unwrap();
        assert_eq!(r, Some(v(&[-1, 2])));
        assert!(st.box_searches >= 2);
    }

    #[test]
    fn certificate_on_units_and_conjugates() {
        let a = root(&[-1, -2, 1], 1); // 1 + sqrt 2
        let b = root(&[1, -4, 1], 1); // 2 + sqrt 3
        assert!(independence_certificate(&[a.clone(), b.clone()]));
        let q1 = root(&[3, -5, 1], 0);
        let q2 = root(&[3, -5, 1], 1);
        assert!(independence_certificate(&[q1.clone(), q2.clone()]));
        assert!(!independence_certificate(&[q1, q2, AlgebraicNumber::from_integer(3)]));
        assert!(!independence_certificate(&[a.clone(), a.pow(2)]));
        assert!(independence_certificate(&[AlgebraicNumber::from_integer(2), AlgebraicNumber::from_integer(3)]));
        let mut st = DependenceStats::default();
        let r = decide_dependence(&[a], &b, BoundStrategy::default(), &mut st).unwrap();
        assert_eq!(r, None);
        assert_eq!(st.certificates, 1);
    }

    #[test]
    fn conjugate_gaussian_primes_are_inconclusive() {
        // (2+i)/(2-i) is not a root of unity, but the modulus and norm rows
        // cannot see it; both modes must refuse to answer
        let a = root(&[5, -4, 1], 0);
        let b = root(&[5, -4, 1], 1);
        for s in [BoundStrategy::Heuristic { max_box: 8 }, BoundStrategy::Certified { max_box: 8 }] {
            let mut st = DependenceStats::default();
            let r = decide_dependence(std::slice::from_ref(&a), &b, s, &mut st);
            assert!(matches!(r, Err(Error::Inconclusive(_))), "{:?}", r);
        }
    }

    #[test]
    fn interval_rank() {
        let p = |x: i64| Interval::point(qi(x));
        assert!(interval_full_column_rank(vec![vec![p(1), p(2)], vec![p(3), p(4)]], 2));
        assert!(!interval_full_column_rank(vec![vec![p(1), p(2)], vec![p(2), p(4)]], 2));
        assert!(!interval_full_column_rank(vec![vec![p(1), p(2)]], 2));
        let fuzzy = Interval::new(qi(-1), qi(1));
        assert!(!interval_full_column_rank(vec![vec![fuzzy.clone()]], 1));
    }

    #[test]
    fn bound_is_finite_and_large() {
        let b = relation_bound(&[root(&[-1, -2, 1], 1), root(&[1, -4, 1], 1)]);
        assert!(b.is_finite() && b > 100.0);
        assert!(height_upper(&AlgebraicNumber::from_integer(1)) < 1e-9);
        assert!((height_upper(&AlgebraicNumber::from_integer(3)) - 3f64.ln()).abs() < 1e-6);
    }
}
