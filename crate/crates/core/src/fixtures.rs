//! Seeded generators for test and demonstration inputs over the rationals.
//!
//! Every generator is deterministic in its seed (ChaCha8), so suites and
//! examples are reproducible across runs and platforms.

use std::ops::RangeInclusive;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exterior::SubsetIndexer;
use crate::linalg::{determinant, submatrix_minor, Matrix};
use crate::scalars::{FieldDescriptor, FieldValue};
use crate::triangulant::conjugated_diagonal;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn q() -> FieldDescriptor {
    FieldDescriptor::Rational
}

/// Integer entries drawn uniformly from `range`.
pub fn random_matrix(rng: &mut impl Rng, n: usize, range: RangeInclusive<i64>) -> Matrix {
    let entries = (0..n * n).map(|_| q().from_i64(rng.random_range(range.clone()))).collect();
    Matrix::from_vec(q(), n, n, entries).expect("consistent shape")
}

/// Like [`random_matrix`], redrawn until the determinant is nonzero.
pub fn random_invertible(rng: &mut impl Rng, n: usize, range: RangeInclusive<i64>) -> Matrix {
    loop {
        let p = random_matrix(rng, n, range.clone());
        if !determinant(&p).expect("square").is_zero() {
            return p;
        }
    }
}

/// `n` distinct integers from `range`, in random order.
pub fn distinct_values(rng: &mut impl Rng, n: usize, range: RangeInclusive<i64>) -> Vec<FieldValue> {
    let mut pool: Vec<i64> = range.collect();
    assert!(pool.len() >= n, "range too small for {n} distinct values");
    pool.shuffle(rng);
    pool.into_iter().take(n).map(|v| q().from_i64(v)).collect()
}

pub fn ints(values: &[i64]) -> Vec<FieldValue> {
    values.iter().map(|&v| q().from_i64(v)).collect()
}

/// A diagonalizable matrix `P^-1 diag(eigs) P` together with its spectrum and conjugator.
#[derive(Clone, Debug)]
pub struct Diagonalizable {
    pub matrix: Matrix,
    pub eigenvalues: Vec<FieldValue>,
    pub conjugator: Matrix,
}

pub fn diagonalizable(
    rng: &mut impl Rng,
    n: usize,
    eig_range: RangeInclusive<i64>,
    p_range: RangeInclusive<i64>,
) -> Diagonalizable {
    let eigenvalues = distinct_values(rng, n, eig_range);
    let conjugator = random_invertible(rng, n, p_range);
    let matrix = conjugated_diagonal(&eigenvalues, &conjugator).expect("invertible conjugator");
    Diagonalizable { matrix, eigenvalues, conjugator }
}

/// A pair `A = P^-1 diag(a) P`, `B = diag(b)` where the minor `det P[S|T]`
/// was forced to vanish by solving for one entry of `P`.
#[derive(Clone, Debug)]
pub struct ForcedMinorPair {
    pub a: Matrix,
    pub b: Matrix,
    pub eigs_a: Vec<FieldValue>,
    pub eigs_b: Vec<FieldValue>,
    pub p: Matrix,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

pub fn forced_zero_minor_pair(rng: &mut impl Rng, n: usize, k: usize) -> ForcedMinorPair {
    let subsets = SubsetIndexer::new(n, k).expect("k <= n");
    loop {
        let mut p = random_matrix(rng, n, -4..=4);
        let rows = subsets.subsets()[rng.random_range(0..subsets.len())].clone();
        let cols = subsets.subsets()[rng.random_range(0..subsets.len())].clone();
        let (r0, c0) = (rows[0] - 1, cols[0] - 1);
        // det P[S|T] is affine in the entry p[r0][c0]
        p[(r0, c0)] = q().zero();
        let d0 = submatrix_minor(&p, &rows, &cols).expect("valid subsets");
        p[(r0, c0)] = q().one();
        let d1 = submatrix_minor(&p, &rows, &cols).expect("valid subsets");
        let slope = &d1 - &d0;
        if slope.is_zero() {
            continue;
        }
        p[(r0, c0)] = -d0.checked_div(&slope).expect("nonzero slope");
        if determinant(&p).expect("square").is_zero() {
            continue;
        }
        let eigs_a = distinct_values(rng, n, -6..=6);
        let eigs_b = distinct_values(rng, n, -6..=6);
        let a = conjugated_diagonal(&eigs_a, &p).expect("invertible");
        let b = Matrix::diag(q(), &eigs_b).expect("square");
        return ForcedMinorPair { a, b, eigs_a, eigs_b, p, rows, cols };
    }
}

/// Upper-triangular Jordan matrix with the given `(eigenvalue, size)` blocks.
pub fn jordan_matrix(blocks: &[(i64, usize)]) -> Matrix {
    let n = blocks.iter().map(|&(_, s)| s).sum();
    let mut m = Matrix::zeros(q(), n, n);
    let mut offset = 0;
    for &(lambda, size) in blocks {
        for i in 0..size {
            m[(offset + i, offset + i)] = q().from_i64(lambda);
            if i + 1 < size {
                m[(offset + i, offset + i + 1)] = q().one();
            }
        }
        offset += size;
    }
    m
}

/// Random matrix with zeros forced outside a block upper-triangular pattern
/// whose diagonal blocks have the given sizes.
pub fn block_upper(rng: &mut impl Rng, sizes: &[usize], range: RangeInclusive<i64>) -> Matrix {
    let n: usize = sizes.iter().sum();
    let block_of: Vec<usize> = sizes
        .iter()
        .enumerate()
        .flat_map(|(b, &s)| std::iter::repeat_n(b, s))
        .collect();
    let mut m = random_matrix(rng, n, range);
    for i in 0..n {
        for j in 0..n {
            if block_of[i] > block_of[j] {
                m[(i, j)] = q().zero();
            }
        }
    }
    m
}
