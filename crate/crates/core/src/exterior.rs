//! Exterior powers: k-subset indexing, the Leibniz action `A_k`, the graded
//! actions `A_k^(i)`, multiplicative compounds, Plücker coordinates, and
//! invariant-subspace tests.
//!
//! Basis wedges `e_S` are indexed by increasing 1-based subsets in
//! lexicographic order. Replacing a factor of `e_S` and re-sorting the wedge
//! picks up the sign of the sorting permutation.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::linalg::{charpoly, determinant, rank, solve, Matrix, Vector};
use crate::scalars::{FieldDescriptor, FieldValue};

/// The `binomial(n, k)` k-subsets of `[n]`, lexicographically ordered, 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetIndexer {
    n: usize,
    k: usize,
    subsets: Vec<Vec<usize>>,
}

impl SubsetIndexer {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if k > n {
            return Err(Error::OutOfRange(format!("k={k} exceeds n={n}")));
        }
        let subsets = (1..=n).combinations(k).collect();
        Ok(SubsetIndexer { n, k, subsets })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.subsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subsets.is_empty()
    }

    pub fn subsets(&self) -> &[Vec<usize>] {
        &self.subsets
    }

    pub fn unrank(&self, index: usize) -> Option<&[usize]> {
        self.subsets.get(index).map(Vec::as_slice)
    }

    /// Position of an increasing subset.
    pub fn rank(&self, subset: &[usize]) -> Option<usize> {
        self.subsets
            .binary_search_by(|s| s.as_slice().cmp(subset))
            .ok()
    }
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// `binomial(n, k)` with the convention that negative `n` or `k` gives 0.
pub fn binomial_signed(n: i64, k: i64) -> usize {
    if n < 0 || k < 0 {
        0
    } else {
        binomial(n as usize, k as usize)
    }
}

/// Sorts a wedge of basis indices. `None` when an index repeats (the wedge is 0);
/// otherwise the sorted indices and whether the sort was an odd permutation.
fn normalize_wedge(mut idx: Vec<usize>) -> Option<(bool, Vec<usize>)> {
    let mut odd = false;
    // insertion sort, counting transpositions
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            odd = !odd;
            j -= 1;
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((odd, idx))
}

fn accumulate(out: &mut Matrix, row: usize, col: usize, odd: bool, coeff: &FieldValue) {
    let cell = &mut out[(row, col)];
    *cell = if odd { &*cell - coeff } else { &*cell + coeff };
}

/// `A_k`: the Leibniz-rule action of `a` on `∧^k K^n`.
pub fn leibniz_action(a: &Matrix, k: usize) -> Result<Matrix> {
    graded_action_unchecked(a, k, 1.min(k))
}

/// `A_k^(i)`: coefficient of `x^i` in `(I + xA)^{⊗k}`, acting on `∧^k K^n`.
///
/// On a basis wedge this sums, over all `i`-element position sets, the wedge
/// with `a` applied at exactly those positions.
pub fn graded_action(a: &Matrix, k: usize, i: usize) -> Result<Matrix> {
    let n = a.require_square("graded_action")?;
    if i == 0 || i > k || k > n {
        return Err(Error::OutOfRange(format!("need 1 <= i <= k <= n, got i={i}, k={k}, n={n}")));
    }
    graded_action_unchecked(a, k, i)
}

fn graded_action_unchecked(a: &Matrix, k: usize, i: usize) -> Result<Matrix> {
    let n = a.require_square("graded_action")?;
    let indexer = SubsetIndexer::new(n, k)?;
    let field = a.field();
    let size = indexer.len();
    let mut out = Matrix::zeros(field, size, size);
    if i == 0 {
        return Ok(out);
    }
    for (col, t) in indexer.subsets().iter().enumerate() {
        for positions in (0..k).combinations(i) {
            // every choice of replacement rows at the chosen positions
            for rows in std::iter::repeat_n(1..=n, i).multi_cartesian_product() {
                let mut coeff = field.one();
                let mut idx = t.clone();
                for (&p, &r) in positions.iter().zip(&rows) {
                    coeff = &coeff * &a[(r - 1, t[p] - 1)];
                    idx[p] = r;
                }
                if coeff.is_zero() && field.is_exact() {
                    continue;
                }
                if let Some((odd, sorted)) = normalize_wedge(idx) {
                    let row = indexer.rank(&sorted).expect("sorted k-subset");
                    accumulate(&mut out, row, col, odd, &coeff);
                }
            }
        }
    }
    Ok(out)
}

/// Multiplicative compound: entry `(S, T)` is `det p[S|T]`.
pub fn compound(p: &Matrix, k: usize) -> Result<Matrix> {
    let n = p.require_square("compound")?;
    let indexer = SubsetIndexer::new(n, k)?;
    let size = indexer.len();
    let mut out = Matrix::zeros(p.field(), size, size);
    let zero_based: Vec<Vec<usize>> = indexer
        .subsets()
        .iter()
        .map(|s| s.iter().map(|i| i - 1).collect())
        .collect();
    for (r, s) in zero_based.iter().enumerate() {
        for (c, t) in zero_based.iter().enumerate() {
            out[(r, c)] = determinant(&p.select(s, t))?;
        }
    }
    Ok(out)
}

/// Plücker coordinates of a k-dimensional subspace.
#[derive(Clone, Debug, PartialEq)]
pub struct PluckerVector {
    pub indexer: SubsetIndexer,
    pub coords: Vec<FieldValue>,
}

impl PluckerVector {
    pub fn dot(&self, other: &PluckerVector) -> Result<FieldValue> {
        if self.indexer != other.indexer {
            return Err(Error::shape("plucker dot", "different (n, k)"));
        }
        let field = self
            .coords
            .first()
            .map(FieldValue::descriptor)
            .unwrap_or(FieldDescriptor::Rational);
        Ok(self
            .coords
            .iter()
            .zip(&other.coords)
            .fold(field.zero(), |acc, (a, b)| &acc + &(a * b)))
    }

    /// Whether `other` is a scalar multiple of `self` (both nonzero).
    pub fn is_proportional(&self, other: &[FieldValue]) -> bool {
        let Some(pivot) = self.coords.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let Ok(ratio) = other[pivot].checked_div(&self.coords[pivot]) else {
            return other.iter().all(FieldValue::is_zero);
        };
        self.coords
            .iter()
            .zip(other)
            .all(|(s, o)| o.field_eq(&(s * &ratio)).unwrap_or(false))
    }
}

fn basis_matrix(basis: &[Vector], op: &'static str) -> Result<(Matrix, usize)> {
    let first = basis.first().ok_or_else(|| Error::shape(op, "empty basis"))?;
    let n = first.len();
    let field = first
        .first()
        .map(FieldValue::descriptor)
        .ok_or_else(|| Error::shape(op, "vectors of length 0"))?;
    Ok((Matrix::from_columns(field, n, basis)?, n))
}

/// Coordinate at `S` is the determinant of rows `S` of the `n x k` basis matrix.
pub fn plucker(v_basis: &[Vector], k: usize) -> Result<PluckerVector> {
    if v_basis.len() != k {
        return Err(Error::shape("plucker", format!("{} vectors for k={k}", v_basis.len())));
    }
    let (v, n) = basis_matrix(v_basis, "plucker")?;
    let indexer = SubsetIndexer::new(n, k)?;
    let cols: Vec<usize> = (0..k).collect();
    let coords = indexer
        .subsets()
        .iter()
        .map(|s| {
            let rows: Vec<usize> = s.iter().map(|i| i - 1).collect();
            determinant(&v.select(&rows, &cols))
        })
        .collect::<Result<Vec<_>>>()?;
    if coords.iter().all(FieldValue::is_zero) {
        return Err(Error::DependentBasis);
    }
    Ok(PluckerVector { indexer, coords })
}

/// `det(u_i v_j)` and the Plücker dot product `<ι(U), ι(V)>`; Cauchy-Binet makes them equal.
#[derive(Clone, Debug, PartialEq)]
pub struct PairingReport {
    pub gram_det: FieldValue,
    pub plucker_dot: FieldValue,
    pub degenerate: bool,
}

pub fn pairing_report(u_basis: &[Vector], v_basis: &[Vector]) -> Result<PairingReport> {
    let k = u_basis.len();
    if v_basis.len() != k {
        return Err(Error::shape("pairing_degenerate", format!("{} covectors vs {} vectors", k, v_basis.len())));
    }
    let (u_t, n) = basis_matrix(u_basis, "pairing_degenerate")?;
    let (v, m) = basis_matrix(v_basis, "pairing_degenerate")?;
    if n != m {
        return Err(Error::shape("pairing_degenerate", format!("covectors in K^{n}, vectors in K^{m}")));
    }
    let gram = u_t.transpose().matmul(&v)?;
    let gram_det = determinant(&gram)?;
    let plucker_dot = plucker(u_basis, k)?.dot(&plucker(v_basis, k)?)?;
    Ok(PairingReport {
        degenerate: gram_det.is_zero(),
        gram_det,
        plucker_dot,
    })
}

/// Whether the row-column pairing `U x V -> K` is degenerate.
pub fn pairing_degenerate(u_basis: &[Vector], v_basis: &[Vector]) -> Result<bool> {
    let r = pairing_report(u_basis, v_basis)?;
    debug_assert!(r.gram_det.field_eq(&r.plucker_dot).unwrap_or(true));
    Ok(r.degenerate)
}

#[derive(Clone, Debug, PartialEq)]
pub struct InvariantReport {
    pub invariant: bool,
    /// `e_1, ..., e_k` of `A|_V` (sums of principal minors), when invariant.
    pub e_values: Vec<FieldValue>,
    /// `A_k^(i) ι(V) = e_i ι(V)` for every `i`, when invariant.
    pub plucker_consistent: Option<bool>,
}

/// Matrix of `A|_V` in the given basis, assuming `AV ⊆ V`.
pub fn restriction(a: &Matrix, v: &Matrix) -> Result<Matrix> {
    let av = a.matmul(v)?;
    // independent rows of V are the pivot columns of V^T
    let vt = v.transpose();
    let rows: Vec<usize> = independent_columns(&vt);
    let cols: Vec<usize> = (0..v.cols()).collect();
    solve(&v.select(&rows, &cols), &av.select(&rows, &cols))
}

fn independent_columns(m: &Matrix) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::new();
    let mut current = 0;
    for c in 0..m.cols() {
        let mut trial = chosen.clone();
        trial.push(c);
        let sub = m.select(&(0..m.rows()).collect::<Vec<_>>(), &trial);
        let r = rank(&sub);
        if r > current {
            chosen.push(c);
            current = r;
        }
    }
    chosen
}

pub fn is_invariant_subspace(a: &Matrix, v_basis: &[Vector]) -> Result<InvariantReport> {
    let n = a.require_square("is_invariant_subspace")?;
    let k = v_basis.len();
    let (v, vn) = basis_matrix(v_basis, "is_invariant_subspace")?;
    a.require_same_field(&v)?;
    if vn != n {
        return Err(Error::shape("is_invariant_subspace", format!("vectors in K^{vn} for n={n}")));
    }
    if rank(&v) < k {
        return Err(Error::DependentBasis);
    }
    let av = a.matmul(&v)?;
    let mut stacked = Matrix::zeros(a.field(), n, 2 * k);
    stacked.set_block(0, 0, &v);
    stacked.set_block(0, k, &av);
    if rank(&stacked) != k {
        return Ok(InvariantReport {
            invariant: false,
            e_values: Vec::new(),
            plucker_consistent: None,
        });
    }
    let c = restriction(a, &v)?;
    let cp = charpoly(&c)?;
    // det(xI - C) = x^k - e_1 x^(k-1) + e_2 x^(k-2) - ...
    let e_values: Vec<FieldValue> = (1..=k)
        .map(|i| {
            let coeff = cp.coeff(k - i);
            if i % 2 == 1 {
                -coeff
            } else {
                coeff
            }
        })
        .collect();
    let p = plucker(v_basis, k)?;
    let mut consistent = true;
    for (i, e) in e_values.iter().enumerate() {
        let image = graded_action(a, k, i + 1)?.mul_vec(&p.coords)?;
        let expect: Vec<FieldValue> = p.coords.iter().map(|c| c * e).collect();
        consistent &= image
            .iter()
            .zip(&expect)
            .all(|(x, y)| x.field_eq(y).unwrap_or(false));
    }
    Ok(InvariantReport {
        invariant: true,
        e_values,
        plucker_consistent: Some(consistent),
    })
}
