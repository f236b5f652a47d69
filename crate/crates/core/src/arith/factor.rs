//! Factorization of integer polynomials: squarefree decomposition,
//! modular factorization, Hensel lifting and Zassenhaus recombination.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::modp::ModPoly;
use super::poly::IntPolynomial;

const SEED: u64 = 0x6c61_7474_6963_65;
const PRIMES_TO_TRY: usize = 5;

/// Irreducible factors of `f` with multiplicities, primitive with positive
/// leading coefficient, sorted by degree and then by coefficients.
/// The integer content is discarded.
pub fn factor(f: &IntPolynomial) -> Vec<(IntPolynomial, usize)> {
    let mut out = Vec::new();
    if f.degree() == 0 {
        return out;
    }
    for (s, m) in f.squarefree_decomposition() {
        for g in factor_squarefree(&s) {
            out.push((g, m));
        }
    }
    out.sort_by(|a, b| a.0.cmp_canonical(&b.0));
    out
}

/// Irreducible factors of a squarefree polynomial (no multiplicities).
pub fn factor_squarefree(f: &IntPolynomial) -> Vec<IntPolynomial> {
    let mut f = f.primitive();
    let mut out = Vec::new();
    if f.degree() == 0 {
        return out;
    }
    if f.constant_term().is_zero() {
        out.push(IntPolynomial::x());
        f = f.div_exact(&IntPolynomial::x()).expect("t divides").primitive();
    }
    if f.degree() > 0 {
        out.extend(zassenhaus(&f));
    }
    out.sort_by(|a, b| a.cmp_canonical(b));
    out
}

pub fn is_irreducible(f: &IntPolynomial) -> bool {
    if f.degree() == 0 {
        return false;
    }
    if f.degree() == 1 {
        return true;
    }
    if !f.is_squarefree() {
        return false;
    }
    let f = f.primitive();
    if f.constant_term().is_zero() {
        return false;
    }
    factor_squarefree(&f).len() == 1
}

fn is_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

pub(crate) fn small_primes() -> impl Iterator<Item = u64> {
    (3u64..).step_by(2).filter(|&n| {
        let mut d = 3;
        while d * d <= n {
            if n % d == 0 {
                return false;
            }
            d += 2;
        }
        true
    })
}

pub(crate) fn to_modp(f: &IntPolynomial, p: u64) -> ModPoly {
    let pb = BigInt::from(p);
    ModPoly::new(p, f.coeffs().iter().map(|c| c.mod_floor(&pb).to_u64().expect("reduced")).collect())
}

fn from_modp(g: &ModPoly) -> IntPolynomial {
    IntPolynomial::new(g.c.iter().map(|&a| BigInt::from(a)).collect())
}

fn subset_sums(degs: &[usize]) -> BTreeSet<usize> {
    let mut s = BTreeSet::new();
    s.insert(0);
    for &d in degs {
        let add: Vec<usize> = s.iter().map(|x| x + d).collect();
        s.extend(add);
    }
    s
}

/// Factors a primitive squarefree polynomial with nonzero constant term.
fn zassenhaus(f: &IntPolynomial) -> Vec<IntPolynomial> {
    let n = f.degree();
    if n == 1 {
        return vec![f.clone()];
    }
    if n == 2 {
        let disc = f.coeff(1) * f.coeff(1) - BigInt::from(4) * f.coeff(2) * f.coeff(0);
        if !is_square(&disc) {
            return vec![f.clone()];
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut best: Option<(u64, Vec<ModPoly>)> = None;
    let mut allowed: Option<BTreeSet<usize>> = None;
    let mut tried = 0;
    for p in small_primes() {
        let fp = to_modp(f, p);
        if fp.degree() != n || !fp.is_squarefree() {
            continue;
        }
        let facs = fp.factor_squarefree(&mut rng);
        let degs: Vec<usize> = facs.iter().map(|g| g.degree()).collect();
        let sums = subset_sums(&degs);
        allowed = Some(match allowed {
            None => sums,
            Some(a) => a.intersection(&sums).copied().collect(),
        });
        if facs.len() == 1 || allowed.as_ref().is_some_and(|a| a.len() == 2) {
            return vec![f.clone()];
        }
        if best.as_ref().is_none_or(|(_, b)| facs.len() < b.len()) {
            best = Some((p, facs));
        }
        tried += 1;
        if tried >= PRIMES_TO_TRY {
            break;
        }
    }
    let (p, facs) = best.expect("a good prime exists");
    let allowed = allowed.expect("set");

    let lc = f.lc();
    let bound = lc.abs() * (BigInt::one() << n) * f.l2_norm_ceil();
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut modulus = pb.clone();
    while modulus <= &bound * 2 {
        modulus *= &pb;
        k += 1;
    }
    let lifted = multifactor_lift(f, &facs, p, k);
    recombine(f, lifted, &modulus, &allowed)
}

fn symmetric(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn sym_poly(f: &IntPolynomial, m: &BigInt) -> IntPolynomial {
    IntPolynomial::new(f.coeffs().iter().map(|c| symmetric(c, m)).collect())
}

fn mod_poly(f: &IntPolynomial, m: &BigInt) -> IntPolynomial {
    IntPolynomial::new(f.coeffs().iter().map(|c| c.mod_floor(m)).collect())
}

/// Lifts `f = lc(f) * prod g_i (mod p)` to a factorization mod `p^k`, monic factors.
fn multifactor_lift(f: &IntPolynomial, facs: &[ModPoly], p: u64, k: u32) -> Vec<IntPolynomial> {
    let modulus = num_traits::pow(BigInt::from(p), k as usize);
    if facs.len() == 1 {
        // monic: f * lc^{-1} mod p^k
        let lc = f.lc();
        let inv = lc.modinv(&modulus).expect("lc invertible");
        return vec![mod_poly(&f.scale(&inv), &modulus)];
    }
    let mid = facs.len() / 2;
    let (left, right) = facs.split_at(mid);
    let mut g = ModPoly::one(p);
    for a in left {
        g = g.mul(a);
    }
    let mut hp = ModPoly::one(p);
    for a in right {
        hp = hp.mul(a);
    }
    let (g_l, h_l) = hensel_pair(f, &g, &hp, p, k);
    let mut out = multifactor_lift(&g_l, left, p, k);
    out.extend(multifactor_lift(&h_l, right, p, k));
    out
}

/// Linear Hensel lifting of `f = g * h (mod p)` with `g` monic.
/// Returns `(g, h)` with `f = g h (mod p^k)`, `g` monic and `lc(h) = lc(f)`.
fn hensel_pair(f: &IntPolynomial, g0: &ModPoly, h0_monic: &ModPoly, p: u64, k: u32) -> (IntPolynomial, IntPolynomial) {
    let lc = f.lc();
    let pb = BigInt::from(p);
    let lcp = lc.mod_floor(&pb).to_u64().expect("small");
    let h0 = h0_monic.scale(lcp);
    let (one, s, t) = g0.monic().xgcd(&h0);
    debug_assert_eq!(one.degree(), 0);
    let mut g = from_modp(g0);
    let mut h = with_lc(&from_modp(&h0), &lc);
    let mut pj = pb.clone();
    for _ in 1..k {
        let diff = f - &(&g * &h);
        let e_int = IntPolynomial::new(
            diff.coeffs()
                .iter()
                .map(|c| {
                    debug_assert!((c % &pj).is_zero());
                    c / &pj
                })
                .collect(),
        );
        let e = to_modp(&e_int, p);
        let et = e.mul(&t);
        let (q, dg) = et.div_rem(g0);
        let dh = e.mul(&s).add(&q.mul(&h0));
        let next = &pj * &pb;
        g = mod_poly(&(&g + &from_modp(&dg).scale(&pj)), &next);
        let hh = &h + &from_modp(&dh).scale(&pj);
        h = with_lc(&mod_poly(&hh, &next), &lc);
        pj = next;
    }
    (g, h)
}

fn with_lc(h: &IntPolynomial, lc: &BigInt) -> IntPolynomial {
    let mut v = h.coeffs().to_vec();
    if let Some(last) = v.last_mut() {
        *last = lc.clone();
    }
    IntPolynomial::new(v)
}

fn recombine(
    f: &IntPolynomial,
    mut lifted: Vec<IntPolynomial>,
    modulus: &BigInt,
    allowed: &BTreeSet<usize>,
) -> Vec<IntPolynomial> {
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut s = 1;
    while 2 * s <= lifted.len() {
        let r = lifted.len();
        let mut found = None;
        let mut idx: Vec<usize> = (0..s).collect();
        loop {
            let deg: usize = idx.iter().map(|&i| lifted[i].degree()).sum();
            if allowed.contains(&deg) {
                let lc = rest.lc();
                let mut prod = IntPolynomial::constant(lc.clone());
                for &i in &idx {
                    prod = mod_poly(&(&prod * &lifted[i]), modulus);
                }
                let cand = sym_poly(&prod, modulus).primitive();
                if let Some(q) = rest.div_exact(&cand) {
                    found = Some((idx.clone(), cand, q.primitive()));
                    break;
                }
            }
            // next combination
            let mut i = s;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                if idx[i] < r - s + i {
                    idx[i] += 1;
                    for j in i + 1..s {
                        idx[j] = idx[j - 1] + 1;
                    }
                    break;
                }
                if i == 0 {
                    idx.clear();
                    break;
                }
            }
            if idx.is_empty() {
                break;
            }
        }
        match found {
            Some((idx, cand, q)) => {
                out.push(cand);
                rest = q;
                for &i in idx.iter().rev() {
                    lifted.remove(i);
                }
            }
            None => s += 1,
        }
    }
    if rest.degree() > 0 {
        out.push(rest);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn product(fs: &[(IntPolynomial, usize)]) -> IntPolynomial {
        let mut acc = IntPolynomial::one();
        for (g, m) in fs {
            acc = &acc * &g.pow(*m as u32);
        }
        acc
    }

    #[test]
    fn swinnerton_dyer_like_irreducible() {
        // t^4 - 10 t^2 + 1 is irreducible but reducible mod every prime
        let f = p(&[1, 0, -10, 0, 1]);
        assert!(is_irreducible(&f));
        assert!(is_irreducible(&p(&[1, 0, 0, 0, 1])));
    }

    #[test]
    fn factors_cyclotomic_product() {
        let f = p(&[-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]); // t^12 - 1
        let fs = factor(&f);
        assert_eq!(fs.len(), 6);
        assert_eq!(product(&fs), f);
        assert!(fs.iter().all(|(g, m)| *m == 1 && is_irreducible(g)));
    }

    #[test]
    fn non_monic_factors() {
        // (2t^2 + 3)(3t^3 - t + 5)(5t - 7)^2
        let a = p(&[3, 0, 2]);
        let b = p(&[5, -1, 0, 3]);
        let c = p(&[-7, 5]);
        let f = &(&a * &b) * &c.pow(2);
        let fs = factor(&f);
        assert_eq!(fs, vec![(c, 2), (a, 1), (b, 1)]);
    }

    #[test]
    fn charpoly_of_matrix_example() {
        let f = &p(&[3, -5, 1]) * &p(&[-1, 6, -5, 1]);
        let fs = factor(&f);
        assert_eq!(fs, vec![(p(&[3, -5, 1]), 1), (p(&[-1, 6, -5, 1]), 1)]);
    }

    #[test]
    fn zero_root_extracted() {
        let f = &p(&[0, 0, 1]) * &p(&[-2, 0, 1]);
        assert_eq!(factor(&f), vec![(p(&[0, 1]), 2), (p(&[-2, 0, 1]), 1)]);
    }
}
