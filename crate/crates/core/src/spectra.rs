//! Spectra with multiplicities, higher discriminants `δ_r`, `D_r`, and the
//! correction factors `γ_k`, `G_k`.

use itertools::Itertools;
use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exterior::{binomial, binomial_signed, leibniz_action, SubsetIndexer};
use crate::linalg::{
    charpoly, kernel_basis, kernel_basis_with_tolerance, max_row_norm, rank, rank_with_threshold, Matrix, Vector,
};
use crate::poly::UniPoly;
use crate::roots::{aberth, cluster_roots, exact_roots};
use crate::scalars::{FieldDescriptor, FieldValue};
use crate::triangulant::vandermonde_det;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SpectrumBackend {
    ExactRationalRoots,
    UserSupplied,
    Numeric,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Eigen {
    pub value: FieldValue,
    pub algebraic_mult: usize,
    pub geometric_mult: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumReport {
    pub charpoly: UniPoly,
    /// Distinct eigenvalues found in the field.
    pub eigenvalues: Vec<Eigen>,
    pub split: bool,
    pub backend: SpectrumBackend,
}

impl SpectrumReport {
    /// Eigenvalues repeated by algebraic multiplicity, or `None` if the spectrum did not split.
    pub fn eigenvalue_list(&self) -> Option<Vec<FieldValue>> {
        self.split.then(|| {
            self.eigenvalues
                .iter()
                .flat_map(|e| std::iter::repeat_n(e.value.clone(), e.algebraic_mult))
                .collect()
        })
    }

    pub fn is_simple(&self) -> bool {
        self.split && self.eigenvalues.iter().all(|e| e.algebraic_mult == 1)
    }

    pub fn is_derogatory(&self) -> bool {
        self.eigenvalues.iter().any(|e| e.geometric_mult > 1)
    }
}

/// Spectrum of `a`. Exact fields search for roots of the characteristic
/// polynomial in the field itself; `complex_float` uses Aberth iteration and
/// clusters roots within `sqrt(tol) * max(1, |λ|)`.
pub fn spectrum(a: &Matrix, supplied: Option<&[FieldValue]>) -> Result<SpectrumReport> {
    let n = a.require_square("spectrum")?;
    let field = a.field();
    let cp = charpoly(a)?;
    if let Some(eigs) = supplied {
        return supplied_spectrum(a, cp, eigs);
    }
    match field {
        FieldDescriptor::ComplexFloat { tol } => {
            let coeffs: Vec<Complex64> = (0..=n)
                .map(|i| cp.coeff(i).to_complex().expect("complex field"))
                .collect();
            let roots = aberth(&coeffs);
            let clusters = cluster_roots(&roots, tol.sqrt());
            let mut eigenvalues: Vec<Eigen> = clusters
                .into_iter()
                .map(|(z, mult)| {
                    let value = field.from_complex(z).expect("complex field");
                    let geometric_mult = numeric_geometric(a, &value, mult, tol);
                    Eigen { value, algebraic_mult: mult, geometric_mult }
                })
                .collect();
            eigenvalues.sort_by(|x, y| cmp_values(&x.value, &y.value));
            Ok(SpectrumReport { charpoly: cp, eigenvalues, split: true, backend: SpectrumBackend::Numeric })
        }
        _ => {
            let (roots, split) = exact_roots(&cp);
            let mut eigenvalues: Vec<Eigen> = roots
                .into_iter()
                .map(|(value, algebraic_mult)| {
                    let geometric_mult = exact_geometric(a, &value);
                    Eigen { value, algebraic_mult, geometric_mult }
                })
                .collect();
            eigenvalues.sort_by(|x, y| cmp_values(&x.value, &y.value));
            Ok(SpectrumReport {
                charpoly: cp,
                eigenvalues,
                split,
                backend: SpectrumBackend::ExactRationalRoots,
            })
        }
    }
}

fn supplied_spectrum(a: &Matrix, cp: UniPoly, eigs: &[FieldValue]) -> Result<SpectrumReport> {
    let n = a.rows();
    let field = a.field();
    if eigs.len() != n {
        return Err(Error::BadEigenvalues(format!("expected {n} eigenvalues, got {}", eigs.len())));
    }
    if let Some(bad) = eigs.iter().find(|e| e.descriptor() != field) {
        return Err(Error::FieldMismatch(field, bad.descriptor()));
    }
    let tol = field.tolerance();
    let mut distinct: Vec<(FieldValue, usize)> = Vec::new();
    for e in eigs {
        let hit = distinct.iter_mut().find(|(v, _)| match tol {
            Some(t) => {
                let (x, y) = (v.to_complex().unwrap(), e.to_complex().unwrap());
                (x - y).norm() <= t.sqrt() * x.norm().max(1.0)
            }
            None => v == e,
        });
        match hit {
            Some((_, m)) => *m += 1,
            None => distinct.push((e.clone(), 1)),
        }
    }
    if field.is_exact() && UniPoly::from_roots(field, eigs) != cp {
        return Err(Error::BadEigenvalues(
            "supplied eigenvalues do not match the characteristic polynomial".into(),
        ));
    }
    let mut eigenvalues: Vec<Eigen> = distinct
        .into_iter()
        .map(|(value, algebraic_mult)| {
            let geometric_mult = match tol {
                Some(t) => numeric_geometric(a, &value, algebraic_mult, t),
                None => exact_geometric(a, &value),
            };
            Eigen { value, algebraic_mult, geometric_mult }
        })
        .collect();
    eigenvalues.sort_by(|x, y| cmp_values(&x.value, &y.value));
    Ok(SpectrumReport { charpoly: cp, eigenvalues, split: true, backend: SpectrumBackend::UserSupplied })
}

fn shifted(a: &Matrix, lambda: &FieldValue) -> Matrix {
    let mut m = a.clone();
    for i in 0..a.rows() {
        m[(i, i)] = &m[(i, i)] - lambda;
    }
    m
}

fn exact_geometric(a: &Matrix, lambda: &FieldValue) -> usize {
    a.rows() - rank(&shifted(a, lambda))
}

fn numeric_geometric(a: &Matrix, lambda: &FieldValue, alg: usize, tol: f64) -> usize {
    // the threshold scales with `a`, not with the nearly singular shift
    let threshold = tol.sqrt() * max_row_norm(a).max(1.0);
    (a.rows() - rank_with_threshold(&shifted(a, lambda), threshold)).clamp(1, alg)
}

/// A total order for reporting: rationals by value, Gaussian and complex values by `(re, im)`.
pub(crate) fn cmp_values(x: &FieldValue, y: &FieldValue) -> std::cmp::Ordering {
    match (x, y) {
        (FieldValue::Rational(p), FieldValue::Rational(q)) => p.cmp(q),
        (FieldValue::Gaussian(p), FieldValue::Gaussian(q)) => (&p.re, &p.im).cmp(&(&q.re, &q.im)),
        (FieldValue::Prime(p), FieldValue::Prime(q)) => p.value.cmp(&q.value),
        _ => {
            let (p, q) = (x.to_complex().unwrap_or_default(), y.to_complex().unwrap_or_default());
            p.re.total_cmp(&q.re).then(p.im.total_cmp(&q.im))
        }
    }
}

fn subset_sum(field: FieldDescriptor, eigs: &[FieldValue], s: &[usize]) -> FieldValue {
    s.iter().fold(field.zero(), |acc, &i| &acc + &eigs[i - 1])
}

/// `δ_r`: product of `λ_T - λ_S` over disjoint r-subsets with `min S < min T`.
pub fn delta_r(field: FieldDescriptor, eigs: &[FieldValue], r: usize) -> Result<FieldValue> {
    if r == 0 {
        return Err(Error::OutOfRange("δ_r needs r >= 1".into()));
    }
    let n = eigs.len();
    if 2 * r > n {
        return Ok(field.one());
    }
    let subsets = SubsetIndexer::new(n, r)?;
    let mut acc = field.one();
    for (s, t) in subsets.subsets().iter().tuple_combinations() {
        // lexicographic order puts the smaller minimum first
        if s.iter().any(|i| t.contains(i)) {
            continue;
        }
        let diff = &subset_sum(field, eigs, t) - &subset_sum(field, eigs, s);
        acc = &acc * &diff;
        if acc.is_zero() && field.is_exact() {
            return Ok(acc);
        }
    }
    Ok(acc)
}

/// `D = δ^2`.
pub fn discriminant_d(field: FieldDescriptor, eigs: &[FieldValue]) -> FieldValue {
    vandermonde_det(field, eigs).pow(2)
}

/// `D_r = δ_r` for `r >= 2`; `D_1` is `D` outside characteristic 2 and `δ` in characteristic 2.
pub fn discriminant_dr(field: FieldDescriptor, eigs: &[FieldValue], r: usize) -> Result<FieldValue> {
    match r {
        0 => Err(Error::OutOfRange("D_r needs r >= 1".into())),
        1 if field.characteristic() == 2 => Ok(vandermonde_det(field, eigs)),
        1 => Ok(discriminant_d(field, eigs)),
        _ => delta_r(field, eigs, r),
    }
}

/// Exponent of `D_r` in `G_k`: `binomial(n, k) * binomial(n - 2r, k - r)`.
pub fn g_exponent(n: usize, k: usize, r: usize) -> usize {
    binomial(n, k) * binomial_signed(n as i64 - 2 * r as i64, k as i64 - r as i64)
}

/// `γ_k` evaluated at an eigenvalue list: `prod_{2<=r<=k} D_r^{g_exponent(n,k,r)}`.
pub fn g_factor(field: FieldDescriptor, eigs: &[FieldValue], k: usize) -> Result<FieldValue> {
    let n = eigs.len();
    if k > n {
        return Err(Error::OutOfRange(format!("k={k} exceeds n={n}")));
    }
    let mut acc = field.one();
    for r in 2..=k {
        let e = g_exponent(n, k, r);
        if e > 0 {
            acc = &acc * &delta_r(field, eigs, r)?.pow(e as u64);
        }
    }
    Ok(acc)
}

#[derive(Clone, Debug, PartialEq)]
pub struct KDeltaCheck {
    pub lhs: FieldValue,
    pub rhs: FieldValue,
    pub holds: bool,
}

/// Both sides of `δ(λ_S)^C(n,k) = δ(λ)^{C(n,k) C(n-2,k-1)} γ_k`.
pub fn kdelta_identity_check(field: FieldDescriptor, eigs: &[FieldValue], k: usize) -> Result<KDeltaCheck> {
    let n = eigs.len();
    let subsets = SubsetIndexer::new(n, k)?;
    let sums: Vec<FieldValue> = subsets
        .subsets()
        .iter()
        .map(|s| subset_sum(field, eigs, s))
        .collect();
    let c = binomial(n, k) as u64;
    let lhs = vandermonde_det(field, &sums).pow(c);
    let e = c * binomial_signed(n as i64 - 2, k as i64 - 1) as u64;
    let rhs = &vandermonde_det(field, eigs).pow(e) * &g_factor(field, eigs, k)?;
    let holds = lhs.field_eq(&rhs)?;
    Ok(KDeltaCheck { lhs, rhs, holds })
}

/// How a `G_k(A)` value was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GkRoute {
    Trivial,
    Eigenvalues,
    Discriminants,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GkValue {
    pub value: FieldValue,
    pub route: GkRoute,
}

/// `δ_r^2` for `r = 1..=r_max` from characteristic polynomials of the Leibniz
/// actions, without eigenvalues: the eigenvalues of `A_r` are the subset sums,
/// so `disc(charpoly A_r) = prod_{m<=r} (δ_m^2)^{C(n-2m, r-m)}`.
///
/// Entry `r - 1` is `None` once an earlier square that must be divided out vanishes.
pub fn delta_squares(a: &Matrix, r_max: usize) -> Result<Vec<Option<FieldValue>>> {
    let n = a.require_square("delta_squares")?;
    let mut out: Vec<Option<FieldValue>> = Vec::with_capacity(r_max);
    for r in 1..=r_max {
        if 2 * r > n {
            out.push(Some(a.field().one()));
            continue;
        }
        let disc = charpoly(&leibniz_action(a, r)?)?.discriminant()?;
        let mut divisor = a.field().one();
        let mut blocked = false;
        for m in 1..r {
            let e = binomial_signed(n as i64 - 2 * m as i64, (r - m) as i64);
            if e == 0 {
                continue;
            }
            match &out[m - 1] {
                Some(sq) if !sq.is_zero() => divisor = &divisor * &sq.pow(e as u64),
                _ => blocked = true,
            }
        }
        out.push(if blocked { None } else { Some(disc.checked_div(&divisor)?) });
    }
    Ok(out)
}

/// `G_k(A)` from the matrix. Supplied eigenvalues are used when given; exact
/// fields otherwise go through [`delta_squares`] (every exponent is even in the
/// supported range, so only squares are needed) and fall back to an exact
/// split spectrum. Returns `None` when neither route determines the value.
pub fn g_factor_matrix(a: &Matrix, k: usize, supplied: Option<&[FieldValue]>) -> Result<Option<GkValue>> {
    let n = a.require_square("g_factor_matrix")?;
    let field = a.field();
    if k > n {
        return Err(Error::OutOfRange(format!("k={k} exceeds n={n}")));
    }
    let needed: Vec<(usize, usize)> = (2..=k)
        .map(|r| (r, g_exponent(n, k, r)))
        .filter(|&(r, e)| e > 0 && 2 * r <= n)
        .collect();
    if needed.is_empty() {
        return Ok(Some(GkValue { value: field.one(), route: GkRoute::Trivial }));
    }
    let from_eigs = |eigs: &[FieldValue]| -> Result<Option<GkValue>> {
        Ok(Some(GkValue { value: g_factor(field, eigs, k)?, route: GkRoute::Eigenvalues }))
    };
    if let Some(eigs) = supplied {
        return from_eigs(eigs);
    }
    if !field.is_exact() {
        let sr = spectrum(a, None)?;
        return from_eigs(&sr.eigenvalue_list().expect("numeric spectra split"));
    }
    if needed.iter().all(|&(_, e)| e % 2 == 0) {
        let r_max = needed.iter().map(|&(r, _)| r).max().unwrap_or(1);
        let squares = delta_squares(a, r_max)?;
        // a vanishing needed factor decides G_k = 0 even if later squares are blocked
        if needed.iter().any(|&(r, _)| squares[r - 1].as_ref().is_some_and(FieldValue::is_zero)) {
            return Ok(Some(GkValue { value: field.zero(), route: GkRoute::Discriminants }));
        }
        if needed.iter().all(|&(r, _)| squares[r - 1].is_some()) {
            let value = needed.iter().fold(field.one(), |acc, &(r, e)| {
                &acc * &squares[r - 1].as_ref().unwrap().pow((e / 2) as u64)
            });
            return Ok(Some(GkValue { value, route: GkRoute::Discriminants }));
        }
    }
    let sr = spectrum(a, None)?;
    match sr.eigenvalue_list() {
        Some(eigs) => from_eigs(&eigs),
        None => Ok(None),
    }
}

/// One eigenvector per (simple) eigenvalue; numeric ones are normalized.
pub fn eigenvectors(m: &Matrix, eigs: &[FieldValue]) -> Result<Vec<Vector>> {
    let field = m.field();
    eigs.iter()
        .map(|lambda| {
            let mut shifted = m.clone();
            for i in 0..m.rows() {
                shifted[(i, i)] = &shifted[(i, i)] - lambda;
            }
            let basis = match field {
                FieldDescriptor::ComplexFloat { tol } => kernel_basis_with_tolerance(&shifted, tol.sqrt()),
                _ => kernel_basis(&shifted),
            };
            let v = basis.into_iter().next().ok_or(Error::NotSimple(format!(
                "no eigenvector found for eigenvalue {lambda}"
            )))?;
            Ok(match field {
                FieldDescriptor::ComplexFloat { .. } => {
                    let norm = v
                        .iter()
                        .map(|x| x.to_complex().unwrap().norm_sqr())
                        .sum::<f64>()
                        .sqrt();
                    let s = field.from_complex((1.0 / norm).into())?;
                    v.iter().map(|x| x * &s).collect()
                }
                _ => v,
            })
        })
        .collect()
}
