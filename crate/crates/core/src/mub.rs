//! Mutually unbiased bases and the magnitude bound `|T(A, B)| <= n^(n^2/2)`
//! for unitary `A`, `B`.
//!
//! Two orthonormal bases of `C^n` are mutually unbiased when every cross
//! inner product has squared modulus `1/n`. Turning each basis into a unitary
//! with eigenvalues `1, ε, ..., ε^(n-1)` (`ε = exp(2πi/n)`) makes the pair
//! unbiased exactly when the triangulant of the two unitaries reaches the bound.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalars::{is_prime, FieldDescriptor};
use crate::spectra::{eigenvectors, spectrum};
use crate::triangulant::{check_pair, triangulant};

/// Entrywise tolerance for orthonormality and unitarity checks.
pub const UNITARY_TOL: f64 = 1e-8;
/// Relative tolerance for bound saturation.
pub const SATURATION_TOL: f64 = 1e-6;
/// Largest prime accepted by [`weyl_heisenberg_bases`].
pub const MAX_WH_PRIME: u64 = 13;

fn field() -> FieldDescriptor {
    FieldDescriptor::complex_default()
}

/// Columns of an `n x n` unitary, as complex vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct OrthonormalBasis {
    columns: Vec<Vec<Complex64>>,
}

fn inner(u: &[Complex64], v: &[Complex64]) -> Complex64 {
    u.iter().zip(v).map(|(a, b)| a.conj() * b).sum()
}

impl OrthonormalBasis {
    /// Validates orthonormality within `tol` per Gram entry.
    pub fn new(columns: Vec<Vec<Complex64>>, tol: f64) -> Result<Self> {
        let n = columns.len();
        if n == 0 || columns.iter().any(|c| c.len() != n) {
            return Err(Error::shape("OrthonormalBasis", "need n column vectors of length n"));
        }
        for (s, u) in columns.iter().enumerate() {
            for (t, v) in columns.iter().enumerate() {
                let expected = if s == t { 1.0 } else { 0.0 };
                let dev = (inner(u, v) - expected).norm();
                if dev > tol {
                    return Err(Error::NotOrthonormal(format!(
                        "<u_{s}, u_{t}> deviates by {dev:.3e}"
                    )));
                }
            }
        }
        Ok(OrthonormalBasis { columns })
    }

    pub fn standard(n: usize) -> Self {
        let columns = (0..n)
            .map(|j| (0..n).map(|i| if i == j { Complex64::new(1.0, 0.0) } else { Complex64::new(0.0, 0.0) }).collect())
            .collect();
        OrthonormalBasis { columns }
    }

    /// Columns `f_j[i] = ω^(ij) / sqrt(n)` with `ω = exp(2πi/n)`.
    pub fn fourier(n: usize) -> Self {
        let scale = 1.0 / (n as f64).sqrt();
        let columns = (0..n)
            .map(|j| {
                (0..n)
                    .map(|i| Complex64::from_polar(scale, TAU * (i * j) as f64 / n as f64))
                    .collect()
            })
            .collect();
        OrthonormalBasis { columns }
    }

    pub fn dimension(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[Vec<Complex64>] {
        &self.columns
    }

    /// The unitary whose columns are the basis vectors.
    pub fn to_matrix(&self) -> Matrix {
        let f = field();
        let cols: Vec<Vec<_>> = self
            .columns
            .iter()
            .map(|c| c.iter().map(|&z| f.from_complex(z).expect("complex field")).collect())
            .collect();
        Matrix::from_columns(f, self.dimension(), &cols).expect("square")
    }
}

fn complex_entries(m: &Matrix) -> Result<Vec<Vec<Complex64>>> {
    (0..m.rows())
        .map(|i| {
            m.row(i)
                .iter()
                .map(|v| v.to_complex().ok_or_else(|| Error::Unsupported(format!("{} entries have no complex embedding", m.field()))))
                .collect()
        })
        .collect()
}

/// `U diag(1, ε, ..., ε^(n-1)) U^*` with `U` the basis matrix.
pub fn basis_to_unitary(b: &OrthonormalBasis) -> Matrix {
    let n = b.dimension();
    let f = field();
    let mut out = Matrix::zeros(f, n, n);
    for (s, col) in b.columns.iter().enumerate() {
        let eps = Complex64::from_polar(1.0, TAU * s as f64 / n as f64);
        for i in 0..n {
            for j in 0..n {
                let add = eps * col[i] * col[j].conj();
                out[(i, j)] = &out[(i, j)] + &f.from_complex(add).expect("complex field");
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundCheck {
    pub magnitude: f64,
    pub bound: f64,
    pub saturated: bool,
}

/// `n^(n^2/2)`.
pub fn triangulant_bound(n: usize) -> f64 {
    (n as f64).powf((n * n) as f64 / 2.0)
}

/// Largest entry of `|A^* A - I|`.
pub fn unitarity_defect(a: &Matrix) -> Result<f64> {
    let m = complex_entries(a)?;
    let n = m.len();
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            let g: Complex64 = (0..n).map(|r| m[r][i].conj() * m[r][j]).sum();
            let expected = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((g - expected).norm());
        }
    }
    Ok(worst)
}

pub fn triangulant_bound_check(a: &Matrix, b: &Matrix) -> Result<BoundCheck> {
    triangulant_bound_check_with(a, b, UNITARY_TOL, SATURATION_TOL)
}

pub fn triangulant_bound_check_with(a: &Matrix, b: &Matrix, unitary_tol: f64, rel_tol: f64) -> Result<BoundCheck> {
    let n = check_pair(a, b, "triangulant_bound_check")?;
    for (name, m) in [("A", a), ("B", b)] {
        let defect = unitarity_defect(m)?;
        if defect > unitary_tol {
            return Err(Error::NotUnitary(format!("{name}: |A*A - I| reaches {defect:.3e}")));
        }
    }
    let to_float = |m: &Matrix| -> Result<Matrix> {
        let f = field();
        let rows = complex_entries(m)?
            .into_iter()
            .map(|r| r.into_iter().map(|z| f.from_complex(z)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_rows(f, rows)
    };
    let t = triangulant(&to_float(a)?, &to_float(b)?)?.value;
    let magnitude = t.to_complex().expect("complex value").norm();
    let bound = triangulant_bound(n);
    Ok(BoundCheck { magnitude, bound, saturated: (magnitude - bound).abs() <= rel_tol * bound })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MubCertificate {
    /// `|<u_s, v_t>|^2 - 1/n` for every pair of basis vectors.
    pub pair_deviations: Vec<Vec<f64>>,
    pub max_deviation: f64,
    pub triangulant_magnitude: f64,
    pub bound: f64,
    pub saturated: bool,
    pub verdict: bool,
}

pub fn check_unbiased(b1: &OrthonormalBasis, b2: &OrthonormalBasis, tol: f64) -> Result<MubCertificate> {
    let n = b1.dimension();
    if b2.dimension() != n {
        return Err(Error::shape("check_unbiased", format!("dimensions {n} and {}", b2.dimension())));
    }
    let target = 1.0 / n as f64;
    let pair_deviations: Vec<Vec<f64>> = b1
        .columns
        .iter()
        .map(|u| b2.columns.iter().map(|v| inner(u, v).norm_sqr() - target).collect())
        .collect();
    let max_deviation = pair_deviations.iter().flatten().fold(0.0f64, |m, d| m.max(d.abs()));
    let check = triangulant_bound_check(&basis_to_unitary(b1), &basis_to_unitary(b2))?;
    Ok(MubCertificate {
        pair_deviations,
        max_deviation,
        triangulant_magnitude: check.magnitude,
        bound: check.bound,
        saturated: check.saturated,
        verdict: max_deviation <= tol,
    })
}

/// Clock `Z = diag(1, ω, ..., ω^(n-1))`.
pub fn clock(n: usize) -> Matrix {
    let f = field();
    let d: Vec<_> = (0..n)
        .map(|i| f.from_complex(Complex64::from_polar(1.0, TAU * i as f64 / n as f64)).expect("complex"))
        .collect();
    Matrix::diag(f, &d).expect("square")
}

/// Cyclic shift `X e_j = e_(j+1 mod n)`.
pub fn shift(n: usize) -> Matrix {
    let f = field();
    let mut m = Matrix::zeros(f, n, n);
    for j in 0..n {
        m[((j + 1) % n, j)] = f.one();
    }
    m
}

/// Eigenbasis of a unitary with simple spectrum, ordered by eigenvalue argument in `[0, 2π)`.
fn unitary_eigenbasis(u: &Matrix) -> Result<OrthonormalBasis> {
    let sr = spectrum(u, None)?;
    if !sr.is_simple() {
        return Err(Error::NotSimple("unitary eigenbasis needs distinct eigenvalues".into()));
    }
    let mut eigs = sr.eigenvalue_list().expect("numeric spectra split");
    let arg = |z: Complex64| z.arg().rem_euclid(TAU);
    eigs.sort_by(|x, y| arg(x.to_complex().unwrap()).total_cmp(&arg(y.to_complex().unwrap())));
    let vectors = eigenvectors(u, &eigs)?;
    let columns = vectors
        .into_iter()
        .map(|v| v.iter().map(|x| x.to_complex().unwrap()).collect())
        .collect();
    OrthonormalBasis::new(columns, UNITARY_TOL)
}

/// The `p + 1` eigenbases of `Z, X, XZ, ..., XZ^(p-1)` in prime dimension `p`.
pub fn weyl_heisenberg_bases(p: u64) -> Result<Vec<OrthonormalBasis>> {
    if !is_prime(p) {
        return Err(Error::OutOfRange(format!("{p} is not prime")));
    }
    if p > MAX_WH_PRIME {
        return Err(Error::OutOfRange(format!("p={p} exceeds {MAX_WH_PRIME}")));
    }
    let n = p as usize;
    let (z, x) = (clock(n), shift(n));
    let mut bases = vec![OrthonormalBasis::standard(n)];
    let mut xzj = x.clone();
    for _ in 0..n {
        bases.push(unitary_eigenbasis(&xzj)?);
        xzj = xzj.matmul(&z)?;
    }
    Ok(bases)
}

/// A random unitary from the QR factorization of a complex Gaussian matrix.
pub fn random_unitary(rng: &mut impl Rng, n: usize) -> Matrix {
    let mut cols: Vec<Vec<Complex64>> = (0..n)
        .map(|_| {
            (0..n)
                .map(|_| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
                .collect()
        })
        .collect();
    // modified Gram–Schmidt
    for j in 0..n {
        for i in 0..j {
            let proj = inner(&cols[i], &cols[j]);
            let ci = cols[i].clone();
            for (x, y) in cols[j].iter_mut().zip(ci) {
                *x -= proj * y;
            }
        }
        let norm = cols[j].iter().map(Complex64::norm_sqr).sum::<f64>().sqrt();
        for x in cols[j].iter_mut() {
            *x /= norm;
        }
    }
    OrthonormalBasis { columns: cols }.to_matrix()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::rng;

    fn hadamard() -> OrthonormalBasis {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        OrthonormalBasis::new(
            vec![
                vec![Complex64::new(h, 0.0), Complex64::new(h, 0.0)],
                vec![Complex64::new(h, 0.0), Complex64::new(-h, 0.0)],
            ],
            1e-12,
        )
        .unwrap()
    }

    #[test]
    fn certificates() {
        let c = check_unbiased(&OrthonormalBasis::standard(2), &hadamard(), 1e-10).unwrap();
        assert!(c.verdict && c.saturated);
        assert!((c.triangulant_magnitude - 4.0).abs() < 1e-9);
        let c = check_unbiased(&OrthonormalBasis::standard(3), &OrthonormalBasis::standard(3), 1e-10).unwrap();
        assert!(!c.verdict);
        assert!((c.max_deviation - 2.0 / 3.0).abs() < 1e-12);
        let c = check_unbiased(&OrthonormalBasis::standard(3), &OrthonormalBasis::fourier(3), 1e-10).unwrap();
        assert!(c.verdict && c.saturated);
    }

    #[test]
    fn unitaries_from_bases() {
        let z = basis_to_unitary(&OrthonormalBasis::standard(2));
        assert!(z.max_abs_diff(&clock(2)).unwrap() < 1e-15);
        let x = basis_to_unitary(&hadamard());
        assert!(x.max_abs_diff(&shift(2)).unwrap() < 1e-15);
        // F diag(1, ω, ω^2) F^* is a cyclic shift
        let s = basis_to_unitary(&OrthonormalBasis::fourier(3));
        let back = shift(3).transpose();
        assert!(s.max_abs_diff(&shift(3)).unwrap() < 1e-12 || s.max_abs_diff(&back).unwrap() < 1e-12);
    }

    #[test]
    fn bound_examples() {
        let r = triangulant_bound_check(&shift(2), &clock(2)).unwrap();
        assert!(r.saturated && (r.magnitude - 4.0).abs() < 1e-9);
        let r = triangulant_bound_check(&clock(2), &clock(2)).unwrap();
        assert!(!r.saturated && r.magnitude < 1e-9);
        let r = triangulant_bound_check(&shift(3), &clock(3)).unwrap();
        assert!(r.saturated);
        assert!((r.magnitude / 3f64.powf(4.5) - 1.0).abs() < 1e-6);
        let not_unitary = Matrix::from_strs(field(), &[&["2", "0"], &["0", "1"]]).unwrap();
        assert!(matches!(triangulant_bound_check(&not_unitary, &clock(2)), Err(Error::NotUnitary(_))));
    }

    #[test]
    fn weyl_heisenberg_p2_p3() {
        for p in [2, 3] {
            let bases = weyl_heisenberg_bases(p).unwrap();
            assert_eq!(bases.len(), p as usize + 1);
            for i in 0..bases.len() {
                for j in i + 1..bases.len() {
                    let c = check_unbiased(&bases[i], &bases[j], 1e-10).unwrap();
                    assert!(c.verdict && c.saturated, "p={p} ({i},{j}): {c:?}");
                }
            }
        }
        assert!(weyl_heisenberg_bases(4).is_err());
    }

    #[test]
    fn random_unitaries_respect_bound() {
        let mut r = rng(5);
        for n in [2, 3] {
            let (a, b) = (random_unitary(&mut r, n), random_unitary(&mut r, n));
            assert!(unitarity_defect(&a).unwrap() < 1e-12);
            let c = triangulant_bound_check(&a, &b).unwrap();
            assert!(c.magnitude <= c.bound * (1.0 + 1e-9));
        }
    }
}
