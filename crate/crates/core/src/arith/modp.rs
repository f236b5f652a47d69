//! Dense polynomials over a prime field `F_p`, `p < 2^32`.

use num_bigint::BigUint;
use rand::Rng;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModPoly {
    pub p: u64,
    /// Ascending coefficients in `[0, p)`, trimmed.
    pub c: Vec<u64>,
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a % p, p - 2, p)
}

pub fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulm(r, a, p);
        }
        a = mulm(a, a, p);
        e >>= 1;
    }
    r
}

#[inline]
fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

impl ModPoly {
    pub fn new(p: u64, mut c: Vec<u64>) -> Self {
        for x in c.iter_mut() {
            *x %= p;
        }
        while c.last() == Some(&0) {
            c.pop();
        }
        ModPoly { p, c }
    }

    pub fn zero(p: u64) -> Self {
        ModPoly { p, c: Vec::new() }
    }

    pub fn one(p: u64) -> Self {
        Self::new(p, vec![1])
    }

    pub fn x(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn lc(&self) -> u64 {
        *self.c.last().unwrap_or(&0)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = inv_mod(self.lc(), self.p);
        Self::new(self.p, self.c.iter().map(|&a| mulm(a, inv, self.p)).collect())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let p = self.p;
        Self::new(
            p,
            (0..n).map(|i| (self.c.get(i).copied().unwrap_or(0) + o.c.get(i).copied().unwrap_or(0)) % p).collect(),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let p = self.p;
        Self::new(
            p,
            (0..n).map(|i| (self.c.get(i).copied().unwrap_or(0) + p - o.c.get(i).copied().unwrap_or(0)) % p).collect(),
        )
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.p);
        }
        let p = self.p;
        let mut v = vec![0u128; self.c.len() + o.c.len() - 1];
        let pp = p as u128;
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.c.iter().enumerate() {
                v[i + j] = (v[i + j] + a as u128 * b as u128) % pp;
            }
        }
        Self::new(p, v.into_iter().map(|x| x as u64).collect())
    }

    pub fn scale(&self, k: u64) -> Self {
        Self::new(self.p, self.c.iter().map(|&a| mulm(a, k, self.p)).collect())
    }

    pub fn div_rem(&self, b: &Self) -> (Self, Self) {
        assert!(!b.is_zero());
        let p = self.p;
        if self.c.len() < b.c.len() {
            return (Self::zero(p), self.clone());
        }
        let mut r = self.c.clone();
        let db = b.degree();
        let inv = inv_mod(b.lc(), p);
        let mut q = vec![0u64; r.len() - db];
        for k in (0..q.len()).rev() {
            let t = mulm(r[k + db], inv, p);
            if t == 0 {
                continue;
            }
            for (j, &bc) in b.c.iter().enumerate() {
                r[k + j] = (r[k + j] + p - mulm(t, bc, p)) % p;
            }
            q[k] = t;
        }
        r.truncate(db);
        (Self::new(p, q), Self::new(p, r))
    }

    pub fn rem(&self, b: &Self) -> Self {
        self.div_rem(b).1
    }

    pub fn gcd(&self, o: &Self) -> Self {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: returns `(g, s, t)` with `s*a + t*b = g`, `g` monic.
    pub fn xgcd(&self, o: &Self) -> (Self, Self, Self) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (Self::one(p), Self::zero(p));
        let (mut t0, mut t1) = (Self::zero(p), Self::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let ns = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, ns);
            let nt = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, nt);
        }
        let inv = inv_mod(r0.lc(), p);
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }

    pub fn derivative(&self) -> Self {
        let p = self.p;
        Self::new(p, self.c.iter().enumerate().skip(1).map(|(i, &a)| mulm(a, i as u64 % p, p)).collect())
    }

    pub fn pow_mod(&self, mut e: u128, m: &Self) -> Self {
        let mut r = Self::one(self.p).rem(m);
        let mut b = self.rem(m);
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(&b).rem(m);
            }
            b = b.mul(&b).rem(m);
            e >>= 1;
        }
        r
    }

    pub fn pow_mod_big(&self, e: &BigUint, m: &Self) -> Self {
        let mut r = Self::one(self.p).rem(m);
        let b = self.rem(m);
        for i in (0..e.bits()).rev() {
            r = r.mul(&r).rem(m);
            if e.bit(i) {
                r = r.mul(&b).rem(m);
            }
        }
        r
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == 0
    }

    /// Distinct-degree factorization of a monic squarefree polynomial.
    /// Returns pairs `(g, d)` where `g` is the product of all degree-`d` factors.
    pub fn distinct_degree(&self) -> Vec<(Self, usize)> {
        let p = self.p;
        let mut out = Vec::new();
        let mut f = self.monic();
        let x = Self::x(p);
        let mut h = x.clone();
        let mut d = 0;
        while f.degree() >= 2 * (d + 1) {
            d += 1;
            h = h.pow_mod(p as u128, &f);
            let g = h.sub(&x).gcd(&f);
            if g.degree() > 0 {
                f = f.div_rem(&g).0;
                h = h.rem(&f);
                out.push((g, d));
            }
        }
        if f.degree() > 0 {
            let dd = f.degree();
            out.push((f, dd));
        }
        out
    }

    /// Equal-degree splitting (Cantor-Zassenhaus, odd `p`).
    pub fn equal_degree<R: Rng>(&self, d: usize, rng: &mut R) -> Vec<Self> {
        let f = self.monic();
        if f.degree() == d {
            return vec![f];
        }
        let p = self.p;
        let n = f.degree();
        let e: BigUint = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
        loop {
            let a = Self::new(p, (0..n).map(|_| rng.gen_range(0..p)).collect());
            if a.degree() == 0 {
                continue;
            }
            let g = a.gcd(&f);
            let split = if g.degree() > 0 && g.degree() < n {
                g
            } else {
                let b = a.pow_mod_big(&e, &f).sub(&Self::one(p));
                let g = b.gcd(&f);
                if g.degree() == 0 || g.degree() == n {
                    continue;
                }
                g
            };
            let other = f.div_rem(&split).0;
            let mut out = split.equal_degree(d, rng);
            out.extend(other.equal_degree(d, rng));
            return out;
        }
    }

    /// Complete factorization into monic irreducibles (input squarefree, odd `p`).
    pub fn factor_squarefree<R: Rng>(&self, rng: &mut R) -> Vec<Self> {
        let mut out = Vec::new();
        for (g, d) in self.distinct_degree() {
            out.extend(g.equal_degree(d, rng));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn factors_multiply_back() {
        let p = 13;
        // (t^2+1)(t^3+t+1)(t-3)(t-4) mod 13
        let f = ModPoly::new(p, vec![1, 0, 1])
            .mul(&ModPoly::new(p, vec![1, 1, 0, 1]))
            .mul(&ModPoly::new(p, vec![p - 3, 1]))
            .mul(&ModPoly::new(p, vec![p - 4, 1]));
        assert!(f.is_squarefree());
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let fs = f.factor_squarefree(&mut rng);
        let mut prod = ModPoly::one(p);
        for g in &fs {
            prod = prod.mul(g);
        }
        assert_eq!(prod, f.monic());
        // t^2+1 splits mod 13 (13 = 1 mod 4), so 5 linear-or-cubic factors
        let degs: Vec<usize> = fs.iter().map(|g| g.degree()).collect();
        assert_eq!(degs.iter().sum::<usize>(), 7);
    }

    #[test]
    fn xgcd_identity() {
        let p = 7;
        let a = ModPoly::new(p, vec![1, 2, 3]);
        let b = ModPoly::new(p, vec![5, 1]);
        let (g, s, t) = a.xgcd(&b);
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
    }
}
