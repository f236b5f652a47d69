use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::vector::ExponentVector;

/// Row-major integer matrix.
pub type Matrix = Vec<Vec<BigInt>>;

pub fn identity(n: usize) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect()
}

pub fn from_i64(rows: &[&[i64]]) -> Matrix {
    rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

/// Matrix whose columns are the given vectors (all of length `m`).
pub fn from_columns(cols: &[ExponentVector], m: usize) -> Matrix {
    let mut a = vec![vec![BigInt::zero(); cols.len()]; m];
    for (j, c) in cols.iter().enumerate() {
        for i in 0..m {
            a[i][j] = c.0.get(i).cloned().unwrap_or_else(BigInt::zero);
        }
    }
    a
}

pub fn column(a: &Matrix, j: usize) -> ExponentVector {
    ExponentVector(a.iter().map(|r| r[j].clone()).collect())
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = b.first().map_or(0, |r| r.len());
    let k = b.len();
    a.iter()
        .map(|row| (0..n).map(|j| (0..k).fold(BigInt::zero(), |acc, t| acc + &row[t] * &b[t][j])).collect())
        .collect()
}

fn ncols(a: &Matrix, fallback: usize) -> usize {
    a.first().map_or(fallback, |r| r.len())
}

/// `col_a <- s col_a + t col_b`, `col_b <- u col_a + v col_b`.
fn combine(m: &mut Matrix, a: usize, b: usize, s: &BigInt, t: &BigInt, u: &BigInt, v: &BigInt) {
    for row in m.iter_mut() {
        let x = row[a].clone();
        let y = row[b].clone();
        row[a] = s * &x + t * &y;
        row[b] = u * &x + v * &y;
    }
}

fn swap_cols(m: &mut Matrix, a: usize, b: usize) {
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

fn axpy_col(m: &mut Matrix, dst: usize, src: usize, k: &BigInt) {
    for row in m.iter_mut() {
        let t = &row[src] * k;
        row[dst] -= t;
    }
}

fn negate_col(m: &mut Matrix, j: usize) {
    for row in m.iter_mut() {
        row[j] = -&row[j];
    }
}

/// Column Hermite normal form `H = M U` with `U` unimodular.
///
/// Pivot rows strictly increase with the column index, pivots are
/// positive, entries left of a pivot lie in `[0, pivot)`, and the columns
/// after the rank are zero. Also returns the pivot rows.
pub fn hnf_with_pivots(m: &Matrix, ncols_hint: usize) -> (Matrix, Matrix, Vec<usize>) {
    let rows = m.len();
    let n = ncols(m, ncols_hint);
    let mut h = m.clone();
    let mut u = identity(n);
    let mut pivots = Vec::new();
    let mut c = 0;
    for i in 0..rows {
        if c >= n {
            break;
        }
        // gather the gcd of row i over columns c.. into column c
        for j in c + 1..n {
            if h[i][j].is_zero() {
                continue;
            }
            if h[i][c].is_zero() {
                swap_cols(&mut h, c, j);
                swap_cols(&mut u, c, j);
                continue;
            }
            let x = h[i][c].clone();
            let y = h[i][j].clone();
            let e = x.extended_gcd(&y);
            let (mut g, mut s, mut t) = (e.gcd, e.x, e.y);
            if g.is_negative() {
                g = -g;
                s = -s;
                t = -t;
            }
            let uu = -(&y / &g);
            let vv = &x / &g;
            combine(&mut h, c, j, &s, &t, &uu, &vv);
            combine(&mut u, c, j, &s, &t, &uu, &vv);
        }
        if h[i][c].is_zero() {
            continue;
        }
        if h[i][c].is_negative() {
            negate_col(&mut h, c);
            negate_col(&mut u, c);
        }
        let piv = h[i][c].clone();
        for j in 0..c {
            let k = h[i][j].div_floor(&piv);
            if !k.is_zero() {
                axpy_col(&mut h, j, c, &k);
                axpy_col(&mut u, j, c, &k);
            }
        }
        pivots.push(i);
        c += 1;
    }
    (h, u, pivots)
}

/// Column Hermite normal form: `(H, U)` with `H = M U`.
pub fn hnf(m: &Matrix) -> (Matrix, Matrix) {
    let (h, u, _) = hnf_with_pivots(m, 0);
    (h, u)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiophantineSolution {
    pub particular: ExponentVector,
    pub kernel_basis: Vec<ExponentVector>,
}

fn normalize_sign(v: ExponentVector) -> ExponentVector {
    match v.0.iter().find(|x| !x.is_zero()) {
        Some(x) if x.is_negative() => v.neg(),
        _ => v,
    }
}

/// General integer solution of `A x = b`, or `None` when there is none.
/// `n` is the number of unknowns (needed when `A` has no rows).
pub fn solve_diophantine_n(a: &Matrix, b: &[BigInt], n: usize) -> Option<DiophantineSolution> {
    assert_eq!(a.len(), b.len(), "row count mismatch");
    let (h, u, pivots) = hnf_with_pivots(a, n);
    let r = pivots.len();
    let mut residual: Vec<BigInt> = b.to_vec();
    let mut y = Vec::with_capacity(r);
    for (k, &row) in pivots.iter().enumerate() {
        let (q, rem) = residual[row].div_rem(&h[row][k]);
        if !rem.is_zero() {
            return None;
        }
        for i in 0..residual.len() {
            let t = &h[i][k] * &q;
            residual[i] -= t;
        }
        y.push(q);
    }
    if residual.iter().any(|x| !x.is_zero()) {
        return None;
    }
    let mut x = ExponentVector::zeros(n);
    for (k, yk) in y.iter().enumerate() {
        for i in 0..n {
            x.0[i] += &u[i][k] * yk;
        }
    }
    let kernel_basis = (r..n).map(|k| normalize_sign(column(&u, k))).collect();
    Some(DiophantineSolution { particular: x, kernel_basis })
}

pub fn solve_diophantine(a: &Matrix, b: &[BigInt]) -> Option<DiophantineSolution> {
    let n = ncols(a, 0);
    solve_diophantine_n(a, b, n)
}

/// Integer `z` in `[0, lam)^s` and `p` with `sum a_i z_i + a0 = p lam`.
pub fn solve_congruence(a: &[BigInt], a0: &BigInt, lam: &BigInt) -> Option<(Vec<BigInt>, BigInt)> {
    assert!(lam.is_positive(), "modulus must be positive");
    // Bezout coefficients for gcd(a_1, ..., a_s, lam)
    let mut g = lam.clone();
    let mut coef: Vec<BigInt> = vec![BigInt::zero(); a.len()];
    for (i, ai) in a.iter().enumerate() {
        let e = g.extended_gcd(ai);
        let (mut ng, mut s, mut t) = (e.gcd, e.x, e.y);
        if ng.is_negative() {
            ng = -ng;
            s = -s;
            t = -t;
        }
        for c in coef.iter_mut().take(i) {
            *c *= &s;
        }
        coef[i] = t;
        g = ng;
    }
    if !(a0 % &g).is_zero() {
        return None;
    }
    let m = -(a0 / &g);
    let z: Vec<BigInt> = coef.iter().map(|c| (c * &m).mod_floor(lam)).collect();
    let total: BigInt = a.iter().zip(&z).map(|(x, y)| x * y).sum::<BigInt>() + a0;
    debug_assert!((&total % lam).is_zero());
    Some((z, total / lam))
}

/// Coefficients of `v` in terms of independent `basis`, or `None`.
pub fn lattice_membership(v: &ExponentVector, basis: &[ExponentVector]) -> Option<Vec<BigInt>> {
    let m = basis.iter().map(|b| b.len()).max().unwrap_or(0).max(v.len());
    let a = from_columns(basis, m);
    let b = v.padded(m).0;
    solve_diophantine_n(&a, &b, basis.len()).map(|s| s.particular.0)
}

/// Canonical column HNF basis (nonzero columns) of the span of `vectors`,
/// in dimension `m`.
pub fn canonical_basis(vectors: &[ExponentVector], m: usize) -> Vec<ExponentVector> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let a = from_columns(vectors, m);
    let (h, _, pivots) = hnf_with_pivots(&a, vectors.len());
    (0..pivots.len()).map(|k| column(&h, k)).collect()
}

pub fn lattice_equal(b1: &[ExponentVector], b2: &[ExponentVector]) -> bool {
    let m = b1.iter().chain(b2).map(|v| v.len()).max().unwrap_or(0);
    canonical_basis(b1, m) == canonical_basis(b2, m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: &[i64]) -> ExponentVector {
        ExponentVector::from_i64s(x)
    }

    fn det(m: &Matrix) -> BigInt {
        crate::arith::resultant::bareiss_det(m.clone())
    }

    #[test]
    fn hnf_examples() {
        let (h, u) = hnf(&identity(3));
        assert_eq!(h, identity(3));
        assert_eq!(u, identity(3));
        let (h, _) = hnf(&from_i64(&[&[2, 4]]));
        assert_eq!(h, from_i64(&[&[2, 0]]));
        let m = from_i64(&[&[2, 1], &[0, 3]]);
        let (h, u) = hnf(&m);
        assert_eq!(mat_mul(&m, &u), h);
        assert_eq!(det(&h).abs(), BigInt::from(6));
        assert!(h[0][0].is_positive() && h[1][1].is_positive());
        assert!(!h[1][0].is_negative() && h[1][0] < h[1][1]);
    }

    #[test]
    fn diophantine_examples() {
        let a = from_i64(&[&[2, 4]]);
        let s = solve_diophantine(&a, &[BigInt::from(6)]).unwrap();
        assert_eq!(s.particular, v(&[3, 0]));
        assert_eq!(s.kernel_basis, vec![v(&[2, -1])]);
        assert!(solve_diophantine(&a, &[BigInt::from(5)]).is_none());
        let a = from_i64(&[&[1, -1]]);
        let s = solve_diophantine(&a, &[BigInt::zero()]).unwrap();
        assert_eq!(s.particular, v(&[0, 0]));
        assert_eq!(s.kernel_basis, vec![v(&[1, 1])]);
    }

    #[test]
    fn congruence_examples() {
        let b = |x: i64| BigInt::from(x);
        assert!(solve_congruence(&[b(2)], &b(1), &b(4)).is_none());
        assert_eq!(solve_congruence(&[b(3)], &b(1), &b(5)), Some((vec![b(3)], b(2))));
        assert_eq!(solve_congruence(&[], &b(0), &b(7)), Some((vec![], b(0))));
    }

    #[test]
    fn membership_and_equality() {
        assert_eq!(lattice_membership(&v(&[4, 2]), &[v(&[2, 1])]), Some(vec![BigInt::from(2)]));
        assert_eq!(lattice_membership(&v(&[1, 0]), &[v(&[2, 0])]), None);
        assert_eq!(lattice_membership(&v(&[0, 0]), &[v(&[2, 0]), v(&[0, 3])]), Some(vec![BigInt::zero(); 2]));
        assert!(lattice_equal(&[v(&[2, 0]), v(&[0, 2])], &[v(&[2, 2]), v(&[0, 2])]));
        assert!(!lattice_equal(&[v(&[1])], &[v(&[2])]));
        assert!(lattice_equal(&[], &[]));
    }
}
