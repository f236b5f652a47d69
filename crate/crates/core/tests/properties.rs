use exlat_core::algebraic::{degree_reduction, equals_one, root_of_rational_test, AlgebraicNumber};
use exlat_core::arith::{cyclotomic_polynomial, IntPolynomial};
use exlat_core::engine::{get_basis, BoundStrategy};
use exlat_core::linear::{canonical_basis, lattice_equal, lattice_membership, ExponentVector};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};
use proptest::prelude::*;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn product(ys: &[BigRational], v: &[i64]) -> BigRational {
    ys.iter().zip(v).fold(BigRational::one(), |acc, (y, &e)| {
        let p: BigRational = Pow::pow(y, e.unsigned_abs() as u32);
        if e < 0 {
            acc / p
        } else {
            acc * p
        }
    })
}

/// Determinant by fraction-carrying elimination.
fn det(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut d = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return BigRational::zero();
        };
        if p != c {
            m.swap(p, c);
            d = -d;
        }
        d *= &m[c][c];
        for r in c + 1..n {
            let f = &m[r][c] / &m[c][c];
            for k in c..n {
                let x = &f * &m[c][k];
                m[r][k] -= x;
            }
        }
    }
    d
}

fn rank(rows: &[Vec<BigRational>]) -> usize {
    let mut m = rows.to_vec();
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(p, r);
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = &m[i][c] / &m[r][c];
                for k in 0..cols {
                    let x = &f * &m[r][k];
                    m[i][k] -= x;
                }
            }
        }
        r += 1;
    }
    r
}

fn choose(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = choose(n - 1, k);
    for mut c in choose(n - 1, k - 1) {
        c.push(n - 1);
        out.push(c);
    }
    out
}

/// gcd of the maximal minors; 1 iff the lattice is saturated.
fn minor_gcd(vs: &[ExponentVector], n: usize) -> BigInt {
    let r = vs.len();
    let mut g = BigInt::zero();
    for rows in choose(n, r) {
        let m: Vec<Vec<BigRational>> =
            rows.iter().map(|&i| vs.iter().map(|v| BigRational::from_integer(v[i].clone())).collect()).collect();
        g = g.gcd(&det(m).to_integer());
    }
    g
}

fn prime_exponents(mut k: i64) -> Vec<i64> {
    [2, 3, 5, 7, 11, 13, 17, 19, 23]
        .iter()
        .map(|p| {
            let mut e = 0;
            while k % p == 0 {
                k /= p;
                e += 1;
            }
            e
        })
        .collect()
}

fn power_minus(k: usize, c: i64) -> IntPolynomial {
    let mut cs = vec![0i64; k + 1];
    cs[0] = -c;
    cs[k] = 1;
    IntPolynomial::from_i64s(&cs)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn equals_one_matches_exact_rational_product(
        ys in prop::collection::vec((1i64..=12, 1i64..=12, any::<bool>()), 1..=4),
        v in prop::collection::vec(-4i64..=4, 4),
    ) {
        let ys: Vec<BigRational> = ys.iter().map(|&(n, d, s)| rat(if s { -n } else { n }, d)).collect();
        let v = &v[..ys.len()];
        let xs: Vec<AlgebraicNumber> = ys.iter().map(AlgebraicNumber::from_rational).collect();
        prop_assert_eq!(equals_one(&xs, &ExponentVector::from_i64s(v)), product(&ys, v).is_one());
    }

    #[test]
    fn equals_one_on_square_roots(s in prop::sample::select(vec![2i64, 3, 5, 6, 7]), e in -4i64..=4, f in -2i64..=2) {
        // (sqrt s)^e s^f = 1 iff e + 2 f = 0
        let r = AlgebraicNumber::from_poly_root(&power_minus(2, s), 1).unwrap();
        let r = if r.rect().re_lo.is_negative() { AlgebraicNumber::from_poly_root(&power_minus(2, s), 0).unwrap() } else { r };
        let xs = [r, AlgebraicNumber::from_integer(s)];
        prop_assert_eq!(equals_one(&xs, &ExponentVector::from_i64s(&[e, f])), e + 2 * f == 0);
    }

    #[test]
    fn root_of_rational_power_is_the_reported_value(k in 2usize..=6, c in prop::sample::select(vec![-3i64, 2, 3, 5, 6, 10, 12])) {
        let (rorder, value) = root_of_rational_test(&power_minus(k, c));
        prop_assert!(rorder >= 1 && (k as u64).is_multiple_of(rorder));
        // every root x has x^k = c; x^rorder = value forces value^(k / rorder) = c
        let lifted: BigRational = Pow::pow(&value, (k as u64 / rorder) as u32);
        prop_assert_eq!(lifted, rat(c, 1));
    }

    #[test]
    fn degree_reduction_is_a_fixpoint(
        fam in 0u8..3,
        k in 2u64..=8,
        c in prop::sample::select(vec![2i64, 3, 5, 7]),
        a in 1i64..=4,
    ) {
        let f = match fam {
            0 => power_minus(k as usize, c),
            // c zeta_k
            1 => {
                let phi = cyclotomic_polynomial(k);
                let d = phi.degree();
                let cs: Vec<BigInt> =
                    phi.coeffs().iter().enumerate().map(|(i, x)| x * BigInt::from(c).pow((d - i) as u32)).collect();
                IntPolynomial::new(cs)
            }
            // a + sqrt c
            _ => IntPolynomial::from_i64s(&[a * a - c, -2 * a, 1]),
        };
        let (e, g) = degree_reduction(&f);
        prop_assert!(e >= 1 && g.degree() >= 1 && g.degree() <= f.degree());
        let (e2, g2) = degree_reduction(&g);
        prop_assert_eq!(e2, 1);
        prop_assert_eq!(g2, g.clone());
        let x = AlgebraicNumber::from_poly_root(&f, 0).unwrap();
        let y = x.pow(e);
        prop_assert_eq!(y.minpoly(), &g);
    }

    #[test]
    fn rational_lattices_are_exact(ys in prop::collection::vec((1i64..=24, 1i64..=24, any::<bool>()), 1..=4)) {
        let n = ys.len();
        let qs: Vec<BigRational> = ys.iter().map(|&(a, b, s)| rat(if s { -a } else { a }, b)).collect();
        let xs: Vec<AlgebraicNumber> = qs.iter().map(AlgebraicNumber::from_rational).collect();
        let r = get_basis(&xs, BoundStrategy::default()).unwrap();
        let basis = &r.basis.vectors;
        prop_assert_eq!(basis.len() + r.independent.len(), n);
        for u in basis {
            let e: Vec<i64> = u.entries().iter().map(|x| i64::try_from(x).unwrap()).collect();
            prop_assert!(product(&qs, &e).is_one());
        }
        // |x| relations form the saturated kernel of the prime exponent matrix
        let abs: Vec<AlgebraicNumber> = qs.iter().map(|q| AlgebraicNumber::from_rational(&q.abs())).collect();
        let ra = get_basis(&abs, BoundStrategy::default()).unwrap();
        let rows: Vec<Vec<BigRational>> = (0..9)
            .map(|p| ys.iter().map(|&(a, b, _)| BigRational::from_integer((prime_exponents(a)[p] - prime_exponents(b)[p]).into())).collect())
            .collect();
        prop_assert_eq!(ra.basis.vectors.len(), n - rank(&rows));
        prop_assert_eq!(basis.len(), ra.basis.vectors.len());
        if !basis.is_empty() {
            prop_assert!(minor_gcd(&ra.basis.vectors, n).is_one());
            for u in basis {
                prop_assert!(lattice_membership(u, &ra.basis.vectors).is_some());
            }
            // signed relations have index 2 in the |x| ones iff some |x|
            // relation flips the sign
            let flips = ra.basis.vectors.iter().any(|u| {
                let odd: BigInt = u.entries().iter().zip(&ys).filter(|(_, y)| y.2).map(|(e, _)| e.clone()).sum();
                odd.is_odd()
            });
            prop_assert_eq!(minor_gcd(basis, n), BigInt::from(if flips { 2 } else { 1 }));
        }
    }

    #[test]
    fn hnf_basis_spans_the_same_lattice(
        vs in prop::collection::vec(prop::collection::vec(-6i64..=6, 3), 1..=4),
        c in -3i64..=3,
    ) {
        let vs: Vec<ExponentVector> = vs.iter().map(|v| ExponentVector::from_i64s(v)).collect();
        let h = canonical_basis(&vs, 3);
        prop_assert_eq!(canonical_basis(&h, 3), h.clone());
        prop_assert!(lattice_equal(&vs, &h));
        for v in &vs {
            prop_assert!(lattice_membership(v, &h).is_some());
        }
        let mut moved = vs.clone();
        if moved.len() > 1 {
            moved[0] = moved[0].add(&moved[1].scale(&c.into()));
        }
        prop_assert!(lattice_equal(&moved, &vs));
    }
}
