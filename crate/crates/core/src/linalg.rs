//! Dense matrices over a [`FieldDescriptor`] and the exact kernels built on them.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::UniPoly;
use crate::scalars::{FieldDescriptor, FieldValue};

/// Row-major dense matrix. All entries live in `field`.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    field: FieldDescriptor,
    rows: usize,
    cols: usize,
    data: Vec<FieldValue>,
}

pub type Vector = Vec<FieldValue>;

impl Matrix {
    pub fn from_vec(
        field: FieldDescriptor,
        rows: usize,
        cols: usize,
        data: Vec<FieldValue>,
    ) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::shape(
                "from_vec",
                format!("{} entries for a {rows}x{cols} matrix", data.len()),
            ));
        }
        if let Some(bad) = data.iter().find(|v| v.descriptor() != field) {
            return Err(Error::FieldMismatch(field, bad.descriptor()));
        }
        Ok(Matrix {
            field,
            rows,
            cols,
            data,
        })
    }

    pub fn from_rows(field: FieldDescriptor, rows: Vec<Vec<FieldValue>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::shape("from_rows", "ragged rows"));
        }
        Matrix::from_vec(field, r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_i64(field: FieldDescriptor, rows: &[&[i64]]) -> Result<Self> {
        Matrix::from_rows(
            field,
            rows.iter()
                .map(|row| row.iter().map(|&v| field.from_i64(v)).collect())
                .collect(),
        )
    }

    /// Parses every entry with the scalar grammar of `field`.
    pub fn from_strs(field: FieldDescriptor, rows: &[&[&str]]) -> Result<Self> {
        let parsed = rows
            .iter()
            .map(|row| row.iter().map(|s| field.parse(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_rows(field, parsed)
    }

    pub fn zeros(field: FieldDescriptor, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldDescriptor, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn diag(field: FieldDescriptor, entries: &[FieldValue]) -> Result<Self> {
        let n = entries.len();
        let mut m = Matrix::zeros(field, n, n);
        for (i, v) in entries.iter().enumerate() {
            if v.descriptor() != field {
                return Err(Error::FieldMismatch(field, v.descriptor()));
            }
            m.data[i * n + i] = v.clone();
        }
        Ok(m)
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: FieldDescriptor, n: usize, columns: &[Vector]) -> Result<Self> {
        let mut m = Matrix::zeros(field, n, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != n {
                return Err(Error::shape("from_columns", format!("vector of length {} in K^{n}", c.len())));
            }
            for (i, v) in c.iter().enumerate() {
                if v.descriptor() != field {
                    return Err(Error::FieldMismatch(field, v.descriptor()));
                }
                m[(i, j)] = v.clone();
            }
        }
        Ok(m)
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[FieldValue] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[FieldValue] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<FieldValue>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub(crate) fn require_square(&self, op: &'static str) -> Result<usize> {
        if !self.is_square() {
            return Err(Error::shape(op, format!("{}x{} is not square", self.rows, self.cols)));
        }
        Ok(self.rows)
    }

    pub(crate) fn require_same_field(&self, other: &Matrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field, other.field));
        }
        Ok(())
    }

    pub fn matmul(&self, other: &Matrix) -> Result<Matrix> {
        self.require_same_field(other)?;
        if self.cols != other.rows {
            return Err(Error::shape(
                "matmul",
                format!("{}x{} times {}x{}", self.rows, self.cols, other.rows, other.cols),
            ));
        }
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() && self.field.is_exact() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * &other[(k, j)];
                    let cell = &mut out.data[i * other.cols + j];
                    *cell = &*cell + &prod;
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[FieldValue]) -> Result<Vector> {
        if v.len() != self.cols {
            return Err(Error::shape("mul_vec", format!("{} columns vs vector of length {}", self.cols, v.len())));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(self.field.zero(), |acc, (a, b)| &acc + &(a * b))
            })
            .collect())
    }

    fn zip_with(
        &self,
        other: &Matrix,
        op: &'static str,
        f: impl Fn(&FieldValue, &FieldValue) -> FieldValue,
    ) -> Result<Matrix> {
        self.require_same_field(other)?;
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::shape(
                op,
                format!("{}x{} vs {}x{}", self.rows, self.cols, other.rows, other.cols),
            ));
        }
        Ok(Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, "add", |a, b| a + b)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, "sub", |a, b| a - b)
    }

    pub fn scale(&self, s: &FieldValue) -> Result<Matrix> {
        if s.descriptor() != self.field {
            return Err(Error::FieldMismatch(self.field, s.descriptor()));
        }
        Ok(self.map(|v| v * s))
    }

    pub fn map(&self, f: impl Fn(&FieldValue) -> FieldValue) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Matrix {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self[(i, j)].clone());
            }
        }
        Matrix {
            field: self.field,
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// Entrywise complex conjugate of the transpose. Only meaningful off the prime fields.
    pub fn adjoint(&self) -> Matrix {
        self.transpose().map(|v| match v {
            FieldValue::Gaussian(g) => FieldValue::Gaussian(g.conj()),
            FieldValue::Complex(c) => FieldValue::Complex(crate::scalars::ComplexFloat {
                value: c.value.conj(),
                tol: c.tol,
            }),
            other => other.clone(),
        })
    }

    /// Kronecker product; shape `(a.rows*b.rows, a.cols*b.cols)`.
    pub fn kron(&self, other: &Matrix) -> Result<Matrix> {
        self.require_same_field(other)?;
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = Matrix::zeros(self.field, rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out[(i * other.rows + k, j * other.cols + l)] = a * &other[(k, l)];
                    }
                }
            }
        }
        Ok(out)
    }

    /// `I, A, A^2, ..., A^(count-1)`.
    pub fn powers(&self, count: usize) -> Result<Vec<Matrix>> {
        let n = self.require_square("powers")?;
        let mut out = Vec::with_capacity(count);
        if count == 0 {
            return Ok(out);
        }
        out.push(Matrix::identity(self.field, n));
        for j in 1..count {
            let next = out[j - 1].matmul(self)?;
            out.push(next);
        }
        Ok(out)
    }

    pub fn pow(&self, e: usize) -> Result<Matrix> {
        Ok(self.powers(e + 1)?.pop().expect("nonempty"))
    }

    /// Copies `block` into `self` with its top-left corner at `(r0, c0)`.
    pub(crate) fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self[(r0 + i, c0 + j)] = block[(i, j)].clone();
            }
        }
    }

    /// Submatrix on 0-based row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                data.push(self[(i, j)].clone());
            }
        }
        Matrix {
            field: self.field,
            rows: rows.len(),
            cols: cols.len(),
            data,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(FieldValue::is_zero)
    }

    pub fn trace(&self) -> Result<FieldValue> {
        let n = self.require_square("trace")?;
        Ok((0..n).fold(self.field.zero(), |acc, i| &acc + &self[(i, i)]))
    }

    /// Largest entry magnitude of `self - other` (complex fields; 0/1 for exact ones).
    pub fn max_abs_diff(&self, other: &Matrix) -> Result<f64> {
        let d = self.sub(other)?;
        Ok(d.data.iter().map(FieldValue::pivot_weight).fold(0.0, f64::max))
    }

    pub fn determinant(&self) -> Result<FieldValue> {
        determinant(self)
    }

    pub fn rank(&self) -> usize {
        rank(self)
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = FieldValue;
    fn index(&self, (i, j): (usize, usize)) -> &FieldValue {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut FieldValue {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, v) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Exact Bareiss elimination over the integers after clearing row denominators,
/// exact Gaussian elimination for the other exact fields, and partial pivoting
/// for `complex_float`.
pub fn determinant(a: &Matrix) -> Result<FieldValue> {
    a.require_square("determinant")?;
    match a.field {
        FieldDescriptor::Rational => Ok(FieldValue::Rational(determinant_bareiss(a))),
        _ => Ok(determinant_gauss(a)),
    }
}

/// Fraction-free determinant of a rational matrix.
///
/// Each row is scaled by the lcm of its denominators; the integer determinant
/// is then divided by the product of those scale factors.
pub fn determinant_bareiss(a: &Matrix) -> BigRational {
    let n = a.rows;
    let mut scale = BigInt::one();
    let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for i in 0..n {
        let row: Vec<&BigRational> = a
            .row(i)
            .iter()
            .map(|v| v.as_rational().expect("rational matrix"))
            .collect();
        let l = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        m.push(row.iter().map(|q| q.numer() * (&l / q.denom())).collect());
        scale *= l;
    }
    BigRational::new(bareiss_in_place(&mut m), scale)
}

/// Bareiss on an integer matrix, destroying it. Returns the determinant.
pub fn bareiss_in_place(m: &mut [Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        let (top, rest) = m.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        for row in rest.iter_mut() {
            let lead = row[k].clone();
            for j in k + 1..n {
                let v = &row[j] * pivot - &lead * &pivot_row[j];
                row[j] = if prev.is_one() { v } else { v / &prev };
            }
            row[k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Determinant by Gaussian elimination over the field.
///
/// Exact fields take the first nonzero pivot; `complex_float` takes the largest.
#[allow(clippy::needless_range_loop)]
pub fn determinant_gauss(a: &Matrix) -> FieldValue {
    let n = a.rows;
    let field = a.field;
    let mut m = a.to_rows();
    let mut det = field.one();
    for k in 0..n {
        let pivot = if field.is_exact() {
            (k..n).find(|&i| !m[i][k].is_zero())
        } else {
            (k..n)
                .max_by(|&i, &j| m[i][k].pivot_weight().total_cmp(&m[j][k].pivot_weight()))
                .filter(|&i| m[i][k].pivot_weight() > 0.0)
        };
        let Some(p) = pivot else {
            return field.zero();
        };
        if p != k {
            m.swap(p, k);
            det = -det;
        }
        let inv = m[k][k].inv().expect("nonzero pivot");
        det = &det * &m[k][k];
        for i in k + 1..n {
            if m[i][k].is_zero() && field.is_exact() {
                continue;
            }
            let factor = &m[i][k] * &inv;
            for j in k + 1..n {
                let t = &factor * &m[k][j];
                m[i][j] = &m[i][j] - &t;
            }
        }
    }
    det
}

/// Result of row reduction: reduced rows and pivot columns.
struct Rref {
    rows: Vec<Vec<FieldValue>>,
    pivots: Vec<usize>,
}

/// Zero threshold for row reduction in `complex_float`: `tol * max initial row norm`.
fn elimination_threshold(a: &Matrix, tol: f64) -> f64 {
    tol * max_row_norm(a).max(f64::MIN_POSITIVE)
}

pub(crate) fn max_row_norm(a: &Matrix) -> f64 {
    (0..a.rows)
        .map(|i| {
            a.row(i)
                .iter()
                .map(|v| v.pivot_weight().powi(2))
                .sum::<f64>()
                .sqrt()
        })
        .fold(0.0, f64::max)
}

#[allow(clippy::needless_range_loop)] // two rows of `m` are read in each update
fn rref_with(a: &Matrix, threshold: f64) -> Rref {
    let field = a.field;
    let mut m = a.to_rows();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        let pivot = if field.is_exact() {
            (r..a.rows).find(|&i| !m[i][c].is_zero())
        } else {
            (r..a.rows)
                .max_by(|&i, &j| m[i][c].pivot_weight().total_cmp(&m[j][c].pivot_weight()))
                .filter(|&i| m[i][c].pivot_weight() > threshold)
        };
        let Some(p) = pivot else {
            if !field.is_exact() {
                for row in m.iter_mut().skip(r) {
                    row[c] = field.zero();
                }
            }
            continue;
        };
        m.swap(p, r);
        let inv = m[r][c].inv().expect("nonzero pivot");
        for j in c..a.cols {
            m[r][j] = &m[r][j] * &inv;
        }
        for i in 0..a.rows {
            if i == r || (m[i][c].is_zero() && field.is_exact()) {
                continue;
            }
            let factor = m[i][c].clone();
            for j in c..a.cols {
                let t = &factor * &m[r][j];
                m[i][j] = &m[i][j] - &t;
            }
        }
        pivots.push(c);
        r += 1;
    }
    Rref { rows: m, pivots }
}

fn rref(a: &Matrix) -> Rref {
    let threshold = a.field.tolerance().map_or(0.0, |tol| elimination_threshold(a, tol));
    rref_with(a, threshold)
}

pub fn rank(a: &Matrix) -> usize {
    rref(a).pivots.len()
}

/// Rank with an explicit relative tolerance (`complex_float` only; exact fields ignore it).
pub fn rank_with_tolerance(a: &Matrix, tol: f64) -> usize {
    if a.field.is_exact() {
        return rank(a);
    }
    rref_with(a, elimination_threshold(a, tol)).pivots.len()
}

/// Rank where pivots of magnitude at most `threshold` count as zero (`complex_float` only).
pub fn rank_with_threshold(a: &Matrix, threshold: f64) -> usize {
    if a.field.is_exact() {
        return rank(a);
    }
    rref_with(a, threshold).pivots.len()
}

/// A basis of the right kernel, one vector per free column.
pub fn kernel_basis(a: &Matrix) -> Vec<Vector> {
    let threshold = a.field.tolerance().map_or(0.0, |tol| elimination_threshold(a, tol));
    kernel_from_rref(a, rref_with(a, threshold))
}

pub fn kernel_basis_with_tolerance(a: &Matrix, tol: f64) -> Vec<Vector> {
    if a.field.is_exact() {
        return kernel_basis(a);
    }
    kernel_from_rref(a, rref_with(a, elimination_threshold(a, tol)))
}

fn kernel_from_rref(a: &Matrix, r: Rref) -> Vec<Vector> {
    let field = a.field;
    let free: Vec<usize> = (0..a.cols).filter(|c| !r.pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![field.zero(); a.cols];
            v[f] = field.one();
            for (row, &pc) in r.pivots.iter().enumerate() {
                v[pc] = -&r.rows[row][f];
            }
            v
        })
        .collect()
}

/// Solves `a x = b` for square nonsingular `a`.
pub fn solve(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    let n = a.require_square("solve")?;
    a.require_same_field(b)?;
    if b.rows != n {
        return Err(Error::shape("solve", "right-hand side row count"));
    }
    let mut aug = Matrix::zeros(a.field, n, n + b.cols);
    aug.set_block(0, 0, a);
    aug.set_block(0, n, b);
    let r = rref(&aug);
    if r.pivots.len() < n || r.pivots[n - 1] != n - 1 {
        return Err(Error::Singular);
    }
    let mut out = Matrix::zeros(a.field, n, b.cols);
    for i in 0..n {
        for j in 0..b.cols {
            out[(i, j)] = r.rows[i][n + j].clone();
        }
    }
    Ok(out)
}

pub fn inverse(a: &Matrix) -> Result<Matrix> {
    let n = a.require_square("inverse")?;
    solve(a, &Matrix::identity(a.field, n))
}

/// Characteristic polynomial `det(xI - A)` by Berkowitz's division-free recurrence.
pub fn charpoly(a: &Matrix) -> Result<UniPoly> {
    let n = a.require_square("charpoly")?;
    let field = a.field;
    // coefficients highest degree first
    let mut poly: Vec<FieldValue> = vec![field.one()];
    for size in 1..=n {
        let k = n - size;
        let a11 = &a[(k, k)];
        let tail: Vec<usize> = (k + 1..n).collect();
        // Toeplitz column: 1, -a11, -R C, -R A1 C, ..., -R A1^(size-2) C
        let mut t = Vec::with_capacity(size + 1);
        t.push(field.one());
        t.push(-a11);
        let mut c: Vector = tail.iter().map(|&i| a[(i, k)].clone()).collect();
        for _ in 0..size.saturating_sub(1) {
            let rc = tail
                .iter()
                .zip(&c)
                .fold(field.zero(), |acc, (&j, cj)| &acc + &(&a[(k, j)] * cj));
            t.push(-rc);
            c = tail
                .iter()
                .map(|&i| {
                    tail.iter()
                        .zip(&c)
                        .fold(field.zero(), |acc, (&j, cj)| &acc + &(&a[(i, j)] * cj))
                })
                .collect();
        }
        let next: Vec<FieldValue> = (0..=size)
            .map(|i| {
                (0..=i.min(size - 1)).fold(field.zero(), |acc, j| &acc + &(&t[i - j] * &poly[j]))
            })
            .collect();
        poly = next;
    }
    poly.reverse();
    Ok(UniPoly::new(field, poly))
}

/// `dim K[A]v`: rank of `[v, Av, ..., A^(n-1) v]`.
pub fn krylov_dim(a: &Matrix, v: &[FieldValue]) -> Result<usize> {
    let n = a.require_square("krylov_dim")?;
    if v.len() != n {
        return Err(Error::shape("krylov_dim", format!("vector of length {} for n={n}", v.len())));
    }
    if v.iter().all(FieldValue::is_zero) {
        return Err(Error::ZeroVector);
    }
    let mut cols = Vec::with_capacity(n);
    let mut cur = v.to_vec();
    for _ in 0..n {
        let next = a.mul_vec(&cur)?;
        cols.push(std::mem::replace(&mut cur, next));
    }
    Ok(rank(&Matrix::from_columns(a.field, n, &cols)?))
}

/// `[A, B] = AB - BA`.
pub fn commutator(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    a.require_square("commutator")?;
    if a.rows != b.rows || a.cols != b.cols {
        return Err(Error::shape("commutator", "operands differ in shape"));
    }
    a.matmul(b)?.sub(&b.matmul(a)?)
}

/// `det P[S|T]` with 1-based increasing index sets; rows from `s`, columns from `t`.
pub fn submatrix_minor(p: &Matrix, s: &[usize], t: &[usize]) -> Result<FieldValue> {
    if s.len() != t.len() {
        return Err(Error::shape("submatrix_minor", format!("|S|={} but |T|={}", s.len(), t.len())));
    }
    let check = |idx: &[usize], bound: usize| -> Result<Vec<usize>> {
        idx.iter()
            .map(|&i| {
                if i == 0 || i > bound {
                    Err(Error::IndexOutOfRange(format!("index {i} outside 1..={bound}")))
                } else {
                    Ok(i - 1)
                }
            })
            .collect()
    };
    let rows = check(s, p.rows)?;
    let cols = check(t, p.cols)?;
    determinant(&p.select(&rows, &cols))
}

/// Degree of the minimal polynomial: rank of `vec(I), vec(A), ..., vec(A^(n-1))`.
///
/// A matrix has an eigenvalue of geometric multiplicity above one (over the
/// algebraic closure) exactly when this is below `n`.
pub fn minimal_polynomial_degree(a: &Matrix) -> Result<usize> {
    let n = a.require_square("minimal_polynomial_degree")?;
    let powers = a.powers(n)?;
    let cols: Vec<Vector> = powers.iter().map(|p| p.entries().to_vec()).collect();
    let m = Matrix::from_columns(a.field, n * n, &cols)?;
    Ok(rank(&m))
}
