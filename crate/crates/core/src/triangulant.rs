//! The first triangulant `T(A, B) = det M(A, B)`.
//!
//! `M(A, B)` is the `n^2 x n^2` block matrix whose block in block-row `i` and
//! block-column `j` (1-based) is `A^(j-1) B^(i-1)`. `T(A, B)` vanishes exactly
//! when some eigen-covector of `A` annihilates some eigenvector of `B`, as long
//! as the field holds all eigenvalues of both matrices.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{commutator, determinant, inverse, rank, Matrix};
use crate::scalars::{FieldDescriptor, FieldValue};
use crate::spectra::SpectrumReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TriangulantMethod {
    DirectDeterminant,
    DiagonalFormula,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TriangulantReport {
    pub value: FieldValue,
    pub n: usize,
    /// `n^2 - rank M(A, B)`, filled on request.
    pub kernel_dim: Option<usize>,
    pub method: TriangulantMethod,
}

pub(crate) fn check_pair(a: &Matrix, b: &Matrix, op: &'static str) -> Result<usize> {
    let n = a.require_square(op)?;
    b.require_square(op)?;
    a.require_same_field(b)?;
    if b.rows() != n {
        return Err(Error::shape(op, format!("{n}x{n} paired with {0}x{0}", b.rows())));
    }
    if n == 0 {
        return Err(Error::shape(op, "empty matrices"));
    }
    Ok(n)
}

pub fn block_matrix_m(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    let n = check_pair(a, b, "block_matrix_M")?;
    let a_pows = a.powers(n)?;
    let b_pows = b.powers(n)?;
    let mut m = Matrix::zeros(a.field(), n * n, n * n);
    for (i, bp) in b_pows.iter().enumerate() {
        for (j, ap) in a_pows.iter().enumerate() {
            m.set_block(i * n, j * n, &ap.matmul(bp)?);
        }
    }
    Ok(m)
}

pub fn triangulant(a: &Matrix, b: &Matrix) -> Result<TriangulantReport> {
    triangulant_with(a, b, false)
}

/// As [`triangulant`], also reporting `dim ker M(A, B)` when `diagnostics` is set.
pub fn triangulant_with(a: &Matrix, b: &Matrix, diagnostics: bool) -> Result<TriangulantReport> {
    let m = block_matrix_m(a, b)?;
    let n = a.rows();
    Ok(TriangulantReport {
        value: determinant(&m)?,
        n,
        kernel_dim: diagnostics.then(|| n * n - rank(&m)),
        method: TriangulantMethod::DirectDeterminant,
    })
}

/// `prod_{s<t} (x_t - x_s)`; 1 for fewer than two points.
pub fn vandermonde_det(field: FieldDescriptor, xs: &[FieldValue]) -> FieldValue {
    let mut acc = field.one();
    for t in 0..xs.len() {
        for s in 0..t {
            acc = &acc * &(&xs[t] - &xs[s]);
        }
    }
    acc
}

/// `Δ_t(A)`: determinant of the matrix whose `j`-th column is the `t`-th column of `A^(j-1)`.
pub fn delta_t(a: &Matrix, t: usize) -> Result<FieldValue> {
    let n = a.require_square("delta_t")?;
    if t == 0 || t > n {
        return Err(Error::OutOfRange(format!("t={t} outside 1..={n}")));
    }
    delta_t_from_powers(&a.powers(n)?, t - 1)
}

fn delta_t_from_powers(powers: &[Matrix], col: usize) -> Result<FieldValue> {
    let n = powers.len();
    let field = powers[0].field();
    let cols: Vec<Vec<FieldValue>> = powers.iter().map(|p| p.column(col)).collect();
    determinant(&Matrix::from_columns(field, n, &cols)?)
}

/// `Δ(A) = prod_t Δ_t(A)`.
pub fn delta_product(a: &Matrix) -> Result<FieldValue> {
    let n = a.require_square("delta_product")?;
    let powers = a.powers(n)?;
    (0..n).try_fold(a.field().one(), |acc, t| Ok(&acc * &delta_t_from_powers(&powers, t)?))
}

fn floor_half_sign(field: FieldDescriptor, m: usize) -> FieldValue {
    if (m / 2) % 2 == 1 {
        -field.one()
    } else {
        field.one()
    }
}

/// `(-1)^floor(n/2) Δ(A) δ(b)^n`, the triangulant against `diag(bs)`.
pub fn triangulant_diag_formula(a: &Matrix, bs: &[FieldValue]) -> Result<FieldValue> {
    let n = a.require_square("triangulant_diag_formula")?;
    if bs.len() != n {
        return Err(Error::shape("triangulant_diag_formula", format!("{} diagonal entries for n={n}", bs.len())));
    }
    let field = a.field();
    let vdm = vandermonde_det(field, bs);
    Ok(&(&floor_half_sign(field, n) * &delta_product(a)?) * &vdm.pow(n as u64))
}

/// Triangulant against a diagonal matrix, through the product formula.
pub fn triangulant_diagonal(a: &Matrix, bs: &[FieldValue]) -> Result<TriangulantReport> {
    Ok(TriangulantReport {
        value: triangulant_diag_formula(a, bs)?,
        n: a.rows(),
        kernel_dim: None,
        method: TriangulantMethod::DiagonalFormula,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct TwoByTwoIdentities {
    pub t: FieldValue,
    pub det_comm: FieldValue,
    pub trace_form: FieldValue,
    pub comm_square_zero: bool,
}

impl TwoByTwoIdentities {
    pub fn all_equal(&self) -> bool {
        self.t.field_eq(&self.det_comm).unwrap_or(false)
            && self.t.field_eq(&self.trace_form).unwrap_or(false)
    }
}

/// `T(A,B)`, `det [A,B]`, `tr(A[A,B]B)` and whether `[A,B]^2 = 0`, for 2x2 pairs.
pub fn triangulant_2x2_identities(a: &Matrix, b: &Matrix) -> Result<TwoByTwoIdentities> {
    let n = check_pair(a, b, "triangulant_2x2_identities")?;
    if n != 2 {
        return Err(Error::OutOfRange(format!("2x2 identities need n = 2, got {n}")));
    }
    let c = commutator(a, b)?;
    Ok(TwoByTwoIdentities {
        t: triangulant(a, b)?.value,
        det_comm: determinant(&c)?,
        trace_form: a.matmul(&c)?.matmul(b)?.trace()?,
        comm_square_zero: c.matmul(&c)?.is_zero(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KernelBound {
    pub kernel_dim: usize,
    pub lower_bound: usize,
    pub holds: bool,
}

/// Compares `dim ker M(A,B)` with `n * sum (m - 1)` over the geometric
/// multiplicities `m` of the distinct eigenvalues of `B`.
pub fn kernel_bound_check(a: &Matrix, b: &Matrix, spectrum_b: &SpectrumReport) -> Result<KernelBound> {
    let n = check_pair(a, b, "kernel_bound_check")?;
    if !spectrum_b.split {
        return Err(Error::NotSplit(b.field().to_string()));
    }
    let lower_bound = n * spectrum_b
        .eigenvalues
        .iter()
        .map(|e| e.geometric_mult - 1)
        .sum::<usize>();
    let kernel_dim = triangulant_with(a, b, true)?.kernel_dim.expect("diagnostics requested");
    Ok(KernelBound {
        kernel_dim,
        lower_bound,
        holds: kernel_dim >= lower_bound,
    })
}

/// Product formula for `T(P^-1 diag(eigs_a) P, diag(bs))`:
/// `(-1)^floor(n/2) δ(a)^n δ(b)^n prod_{s,t} p_st / det(P)^n`.
pub fn diagonalizable_product_formula(
    eigs_a: &[FieldValue],
    p: &Matrix,
    bs: &[FieldValue],
) -> Result<FieldValue> {
    let n = p.require_square("diagonalizable_product_formula")?;
    if eigs_a.len() != n || bs.len() != n {
        return Err(Error::shape("diagonalizable_product_formula", "eigenvalue lists must have length n"));
    }
    let field = p.field();
    let det_p = determinant(p)?;
    if det_p.is_zero() {
        return Err(Error::Singular);
    }
    let entries = p.entries().iter().fold(field.one(), |acc, v| &acc * v);
    let nn = n as u64;
    let numer = &(&(&floor_half_sign(field, n) * &vandermonde_det(field, eigs_a).pow(nn))
        * &vandermonde_det(field, bs).pow(nn))
        * &entries;
    numer.checked_div(&det_p.pow(nn))
}

/// `P^-1 diag(eigs) P`.
pub fn conjugated_diagonal(eigs: &[FieldValue], p: &Matrix) -> Result<Matrix> {
    let lam = Matrix::diag(p.field(), eigs)?;
    inverse(p)?.matmul(&lam)?.matmul(p)
}
