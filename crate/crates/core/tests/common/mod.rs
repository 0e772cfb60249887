//! Reference implementations used by the integration tests.
//!
//! Everything here works on plain `BigRational` arrays and is written without
//! calling into the library's algorithms, so agreement with the library is
//! meaningful evidence. Speed is not a goal.

#![allow(dead_code, clippy::needless_range_loop)]

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use triangulant::{FieldDescriptor, FieldValue, Matrix};

pub type Q = BigRational;
pub type QMat = Vec<Vec<Q>>;

pub fn q(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

pub fn qmat(rows: &[&[i64]]) -> QMat {
    rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect()
}

/// Converts a rational library matrix into a plain array.
pub fn to_q(m: &Matrix) -> QMat {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(|v| v.as_rational().expect("rational entry").clone()).collect())
        .collect()
}

pub fn from_q(m: &QMat) -> Matrix {
    let f = FieldDescriptor::Rational;
    let rows = m.iter().map(|r| r.iter().map(|v| f.from_rational(v).unwrap()).collect()).collect();
    Matrix::from_rows(f, rows).unwrap()
}

pub fn value_q(v: &FieldValue) -> Q {
    v.as_rational().expect("rational value").clone()
}

pub fn identity(n: usize) -> QMat {
    (0..n).map(|i| (0..n).map(|j| if i == j { q(1) } else { q(0) }).collect()).collect()
}

pub fn mul(a: &QMat, b: &QMat) -> QMat {
    let (n, m, p) = (a.len(), b.len(), b[0].len());
    (0..n)
        .map(|i| (0..p).map(|j| (0..m).fold(q(0), |acc, t| acc + &a[i][t] * &b[t][j])).collect())
        .collect()
}

pub fn sub(a: &QMat, b: &QMat) -> QMat {
    a.iter().zip(b).map(|(r, s)| r.iter().zip(s).map(|(x, y)| x - y).collect()).collect()
}

pub fn transpose(a: &QMat) -> QMat {
    (0..a[0].len()).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

pub fn trace(a: &QMat) -> Q {
    (0..a.len()).fold(q(0), |acc, i| acc + &a[i][i])
}

pub fn diag(values: &[Q]) -> QMat {
    let n = values.len();
    (0..n).map(|i| (0..n).map(|j| if i == j { values[i].clone() } else { q(0) }).collect()).collect()
}

/// Determinant by the permutation expansion. Only for tiny matrices.
pub fn det_leibniz(a: &QMat) -> Q {
    let n = a.len();
    (0..n)
        .permutations(n)
        .map(|perm| {
            let inversions = (0..n).tuple_combinations().filter(|&(i, j)| perm[i] > perm[j]).count();
            let term = (0..n).fold(q(1), |acc, i| acc * &a[i][perm[i]]);
            if inversions % 2 == 0 { term } else { -term }
        })
        .fold(q(0), |acc, t| acc + t)
}

/// Determinant by fraction Gaussian elimination with first-nonzero pivoting.
pub fn det_elim(a: &QMat) -> Q {
    let mut m = a.clone();
    let n = m.len();
    let mut det = q(1);
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return q(0);
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det *= &m[c][c];
        for r in c + 1..n {
            if m[r][c].is_zero() {
                continue;
            }
            let factor = &m[r][c] / &m[c][c];
            for j in c..n {
                let t = &factor * &m[c][j];
                m[r][j] -= t;
            }
        }
    }
    det
}

/// Rank by fraction Gaussian elimination.
pub fn rank(a: &QMat) -> usize {
    let mut m = a.clone();
    let (rows, cols) = (m.len(), m[0].len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(p, r);
        for i in r + 1..rows {
            if m[i][c].is_zero() {
                continue;
            }
            let factor = &m[i][c] / &m[r][c];
            for j in c..cols {
                let t = &factor * &m[r][j];
                m[i][j] -= t;
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

pub fn power(a: &QMat, e: usize) -> QMat {
    (0..e).fold(identity(a.len()), |acc, _| mul(&acc, a))
}

/// The n^2 x n^2 matrix whose block (i, j) is A^j B^i (zero-based).
pub fn block_matrix(a: &QMat, b: &QMat) -> QMat {
    let n = a.len();
    let pa: Vec<QMat> = (0..n).map(|j| power(a, j)).collect();
    let pb: Vec<QMat> = (0..n).map(|i| power(b, i)).collect();
    let mut m = vec![vec![q(0); n * n]; n * n];
    for i in 0..n {
        for j in 0..n {
            let block = mul(&pa[j], &pb[i]);
            for r in 0..n {
                for c in 0..n {
                    m[i * n + r][j * n + c] = block[r][c].clone();
                }
            }
        }
    }
    m
}

pub fn triangulant_ref(a: &QMat, b: &QMat) -> Q {
    det_elim(&block_matrix(a, b))
}

/// Vandermonde-type product over i < j of (x_j - x_i).
pub fn vandermonde(xs: &[Q]) -> Q {
    (0..xs.len()).tuple_combinations().fold(q(1), |acc, (i, j)| acc * (&xs[j] - &xs[i]))
}

/// Product of (sum_T - sum_S) over disjoint r-subsets with min S < min T.
pub fn delta_r(eigs: &[Q], r: usize) -> Q {
    let n = eigs.len();
    let subsets: Vec<Vec<usize>> = (0..n).combinations(r).collect();
    let sum = |s: &[usize]| s.iter().fold(q(0), |acc, &i| acc + &eigs[i]);
    let mut out = q(1);
    for s in &subsets {
        for t in &subsets {
            if s[0] < t[0] && s.iter().all(|i| !t.contains(i)) {
                out *= sum(t) - sum(s);
            }
        }
    }
    out
}

pub fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

pub fn pow(x: &Q, e: usize) -> Q {
    (0..e).fold(q(1), |acc, _| acc * x)
}

pub fn gamma(eigs: &[Q], k: usize) -> Q {
    let n = eigs.len();
    (2..=k).fold(q(1), |acc, r| acc * pow(&delta_r(eigs, r), binom(n, k) * binom(n.saturating_sub(2 * r), k - r)))
}

/// Both sides of the subset-sum discriminant identity.
pub fn subset_sum_sides(eigs: &[Q], k: usize) -> (Q, Q) {
    let n = eigs.len();
    let sums: Vec<Q> = (0..n).combinations(k).map(|s| s.iter().fold(q(0), |acc, &i| acc + &eigs[i])).collect();
    let c = binom(n, k);
    let lhs = pow(&vandermonde(&sums), c);
    let rhs = pow(&vandermonde(eigs), c * binom(n - 2, k - 1)) * gamma(eigs, k);
    (lhs, rhs)
}

/// Matrix of k x k minors with rows and columns in lexicographic subset order.
pub fn compound_ref(a: &QMat, k: usize) -> QMat {
    let n = a.len();
    let subsets: Vec<Vec<usize>> = (0..n).combinations(k).collect();
    subsets
        .iter()
        .map(|rows| {
            subsets
                .iter()
                .map(|cols| det_leibniz(&rows.iter().map(|&r| cols.iter().map(|&c| a[r][c].clone()).collect()).collect()))
                .collect()
        })
        .collect()
}

/// The Leibniz-rule action on k-fold wedges: sum over positions of A acting on
/// one factor, with the sign of the sorting permutation.
pub fn wedge_action(a: &QMat, k: usize) -> QMat {
    let n = a.len();
    let subsets: Vec<Vec<usize>> = (0..n).combinations(k).collect();
    let index = |s: &[usize]| subsets.iter().position(|t| t == s);
    let mut out = vec![vec![q(0); subsets.len()]; subsets.len()];
    for (col, s) in subsets.iter().enumerate() {
        for pos in 0..k {
            for i in 0..n {
                let coeff = &a[i][s[pos]];
                if coeff.is_zero() {
                    continue;
                }
                let mut word = s.clone();
                word[pos] = i;
                if word.iter().duplicates().next().is_some() {
                    continue;
                }
                let inversions = (0..k).tuple_combinations().filter(|&(x, y)| word[x] > word[y]).count();
                let mut sorted = word.clone();
                sorted.sort_unstable();
                let row = index(&sorted).expect("subset");
                if inversions % 2 == 0 {
                    out[row][col] += coeff;
                } else {
                    out[row][col] -= coeff;
                }
            }
        }
    }
    out
}

/// Brute-force search for a left eigenvector space of `a` and a right
/// eigenvector space of `b`, each spanned by `k` eigenvectors, whose pairing
/// matrix is singular. Both matrices must be diagonal after conjugation with
/// the given eigenvalues, which must be simple.
pub fn degenerate_pairing_exists(a: &QMat, eigs_a: &[Q], b: &QMat, eigs_b: &[Q], k: usize) -> bool {
    let n = a.len();
    let left: Vec<Vec<Q>> = eigs_a.iter().map(|l| null_vector(&transpose(&sub(a, &diag(&vec![l.clone(); n]))))).collect();
    let right: Vec<Vec<Q>> = eigs_b.iter().map(|l| null_vector(&sub(b, &diag(&vec![l.clone(); n])))).collect();
    (0..n).combinations(k).any(|s| {
        (0..n).combinations(k).any(|t| {
            let pairing: QMat = s
                .iter()
                .map(|&i| t.iter().map(|&j| (0..n).fold(q(0), |acc, x| acc + &left[i][x] * &right[j][x])).collect())
                .collect();
            det_elim(&pairing).is_zero()
        })
    })
}

/// One nonzero kernel vector of a matrix with a one-dimensional kernel.
pub fn null_vector(m: &QMat) -> Vec<Q> {
    let n = m[0].len();
    let mut a = m.clone();
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(p, r);
        let lead = a[r][c].clone();
        for j in 0..n {
            a[r][j] = &a[r][j] / &lead;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..n {
                    let t = &f * &a[r][j];
                    a[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free = (0..n).find(|c| !pivots.contains(c)).expect("nontrivial kernel");
    let mut v = vec![q(0); n];
    v[free] = q(1);
    for (row, &c) in pivots.iter().enumerate() {
        v[c] = -a[row][free].clone();
    }
    v
}

pub fn abs(x: &Q) -> Q {
    x.abs()
}

pub fn is_one(x: &Q) -> bool {
    x.is_one()
}

pub type C = num_complex::Complex64;
pub type CMat = Vec<Vec<C>>;

pub fn to_c(m: &Matrix) -> CMat {
    m.to_rows().iter().map(|r| r.iter().map(|v| v.to_complex().expect("complex-convertible")).collect()).collect()
}

pub fn cmul(a: &CMat, b: &CMat) -> CMat {
    let (n, m, p) = (a.len(), b.len(), b[0].len());
    (0..n).map(|i| (0..p).map(|j| (0..m).map(|t| a[i][t] * b[t][j]).sum()).collect()).collect()
}

/// Determinant by Gaussian elimination with partial pivoting.
pub fn cdet(a: &CMat) -> C {
    let mut m = a.clone();
    let n = m.len();
    let mut det = C::new(1.0, 0.0);
    for c in 0..n {
        let p = (c..n).max_by(|&x, &y| m[x][c].norm().total_cmp(&m[y][c].norm())).expect("nonempty");
        if m[p][c].norm() == 0.0 {
            return C::new(0.0, 0.0);
        }
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det *= m[c][c];
        for r in c + 1..n {
            let f = m[r][c] / m[c][c];
            for j in c..n {
                let t = f * m[c][j];
                m[r][j] -= t;
            }
        }
    }
    det
}

pub fn ctriangulant(a: &CMat, b: &CMat) -> C {
    let n = a.len();
    let id: CMat = (0..n).map(|i| (0..n).map(|j| C::new(if i == j { 1.0 } else { 0.0 }, 0.0)).collect()).collect();
    let pa: Vec<CMat> = (0..n).scan(id.clone(), |acc, _| { let cur = acc.clone(); *acc = cmul(acc, a); Some(cur) }).collect();
    let pb: Vec<CMat> = (0..n).scan(id, |acc, _| { let cur = acc.clone(); *acc = cmul(acc, b); Some(cur) }).collect();
    let mut m = vec![vec![C::new(0.0, 0.0); n * n]; n * n];
    for i in 0..n {
        for j in 0..n {
            let block = cmul(&pa[j], &pb[i]);
            for r in 0..n {
                for c in 0..n {
                    m[i * n + r][j * n + c] = block[r][c];
                }
            }
        }
    }
    cdet(&m)
}
