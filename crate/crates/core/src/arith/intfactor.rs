//! Integer factorization: trial division, then Pollard rho (Brent variant)
//! with a Miller-Rabin primality test.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

const TRIAL_LIMIT: u64 = 1_000_000;

/// Prime factorization of `|n|`, `n != 0`, as an ascending map prime -> exponent.
pub fn factorize_integer(n: &BigInt) -> BTreeMap<BigInt, u32> {
    assert!(!n.is_zero(), "cannot factor zero");
    let mut out = BTreeMap::new();
    let mut n = n.abs();
    if n.is_one() {
        return out;
    }
    let mut d = 2u64;
    while d <= TRIAL_LIMIT {
        let db = BigInt::from(d);
        if &db * &db > n {
            break;
        }
        if (&n % &db).is_zero() {
            let mut e = 0;
            while (&n % &db).is_zero() {
                n /= &db;
                e += 1;
            }
            out.insert(db, e);
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n.is_one() {
        return out;
    }
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_probable_prime(&m) {
            *out.entry(m).or_insert(0) += 1;
            continue;
        }
        let f = pollard_brent(&m);
        let g = &m / &f;
        stack.push(f);
        stack.push(g);
    }
    out
}

fn pow_mod(b: &BigInt, e: &BigInt, m: &BigInt) -> BigInt {
    b.modpow(e, m)
}

pub fn is_probable_prime(n: &BigInt) -> bool {
    let two = BigInt::from(2);
    if *n < two {
        return false;
    }
    for p in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let pb = BigInt::from(p);
        if *n == pb {
            return true;
        }
        if (n % &pb).is_zero() {
            return false;
        }
    }
    let nm1: BigInt = n - 1;
    let mut d = nm1.clone();
    let mut s = 0;
    while d.is_even() {
        d >>= 1;
        s += 1;
    }
    'outer: for a in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53] {
        let mut x = pow_mod(&BigInt::from(a), &d, n);
        if x.is_one() || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == nm1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// A nontrivial factor of composite `n`.
fn pollard_brent(n: &BigInt) -> BigInt {
    if n.is_even() {
        return BigInt::from(2);
    }
    let mut c = BigInt::one();
    loop {
        let f = |x: &BigInt| (x * x + &c) % n;
        let mut y = BigInt::from(2);
        let mut r = 1u64;
        let mut q = BigInt::one();
        let mut g = BigInt::one();
        let m = 128u64;
        let mut x = y.clone();
        let mut ys = y.clone();
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..m.min(r - k) {
                    y = f(&y);
                    q = (q * (&x - &y).abs()) % n;
                }
                g = q.gcd(n);
                k += m;
            }
            r *= 2;
            if r > 1 << 26 {
                break;
            }
        }
        if g == *n {
            loop {
                ys = f(&ys);
                g = (&x - &ys).abs().gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if !g.is_one() && g != *n {
            return g;
        }
        c += 1;
        debug_assert!(c.to_u64().is_none_or(|v| v < 1000));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_and_large() {
        let f = factorize_integer(&BigInt::from(-360));
        let v: Vec<(i64, u32)> = f.iter().map(|(p, e)| (p.to_i64().unwrap(), *e)).collect();
        assert_eq!(v, vec![(2, 3), (3, 2), (5, 1)]);
        // product of two primes beyond the trial-division range
        let p = BigInt::from(1_000_003u64);
        let q = BigInt::from(1_000_033u64);
        let f = factorize_integer(&(&p * &q * &p));
        assert_eq!(f.get(&p), Some(&2));
        assert_eq!(f.get(&q), Some(&1));
    }

    #[test]
    fn primality() {
        assert!(is_probable_prime(&BigInt::from(1_000_000_007u64)));
        assert!(!is_probable_prime(&BigInt::from(561)));
    }
}
