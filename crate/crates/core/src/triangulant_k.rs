//! Higher triangulants `T_k(A, B) = T(A_k, B_k) / (G_k(A) G_k(B))`.
//!
//! Evaluation is layered. The boundary cases `k = 0, n` give 1. A derogatory
//! argument (an eigenvalue of geometric multiplicity above 1) gives 0 for
//! `0 < k < n`. Otherwise the upstairs triangulant is divided by the
//! correction factors when both are nonzero. When a correction factor
//! vanishes, the value is recovered from the polynomial
//! `t -> T_k(A + tE, B + tF)` by Lagrange interpolation at `t = 0`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exterior::{binomial, binomial_signed, compound, leibniz_action, pairing_degenerate, SubsetIndexer};
use crate::fixtures::{block_upper, random_invertible};
use crate::linalg::{determinant, inverse, krylov_dim, minimal_polynomial_degree, Matrix, Vector};
use crate::poly::lagrange_eval;
use crate::scalars::FieldValue;
use crate::spectra::{eigenvectors, g_factor_matrix, spectrum, SpectrumReport};
use crate::triangulant::{check_pair, triangulant, vandermonde_det};

/// Largest admitted `binomial(n, k)`; the upstairs determinant is at most 100 x 100.
pub const MAX_EXTERIOR_DIM: usize = 10;

pub const DEFAULT_SEED: u64 = 20_240_917;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TriangulantKMethod {
    TrivialBoundary,
    GeometricMultiplicityZero,
    DirectDivision,
    LineInterpolation,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TriangulantKReport {
    pub value: FieldValue,
    pub k: usize,
    pub method: TriangulantKMethod,
    pub gk_a: Option<FieldValue>,
    pub gk_b: Option<FieldValue>,
    /// `T(A_k, B_k)`.
    pub t_upstairs: Option<FieldValue>,
    pub samples_used: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct TriangulantKOptions {
    pub eigs_a: Option<Vec<FieldValue>>,
    pub eigs_b: Option<Vec<FieldValue>>,
    /// Skip the shortcut and division layers and always interpolate.
    pub force_interpolation: bool,
    pub seed: u64,
}

impl Default for TriangulantKOptions {
    fn default() -> Self {
        TriangulantKOptions {
            eigs_a: None,
            eigs_b: None,
            force_interpolation: false,
            seed: DEFAULT_SEED,
        }
    }
}

/// Degree of `T_k` in the entries of either argument.
pub fn triangulant_k_degree(n: usize, k: usize) -> usize {
    binomial(n, 2) * binomial(n, k) * binomial_signed(n as i64 - 2, k as i64 - 1)
}

pub fn triangulant_k(a: &Matrix, b: &Matrix, k: usize) -> Result<TriangulantKReport> {
    triangulant_k_with(a, b, k, &TriangulantKOptions::default())
}

pub fn triangulant_k_with(a: &Matrix, b: &Matrix, k: usize, opts: &TriangulantKOptions) -> Result<TriangulantKReport> {
    let n = check_pair(a, b, "triangulant_k")?;
    let field = a.field();
    if k > n {
        return Err(Error::OutOfRange(format!("k={k} exceeds n={n}")));
    }
    let report = |value, method| TriangulantKReport {
        value,
        k,
        method,
        gk_a: None,
        gk_b: None,
        t_upstairs: None,
        samples_used: None,
    };
    if k == 0 || k == n {
        return Ok(report(field.one(), TriangulantKMethod::TrivialBoundary));
    }
    if binomial(n, k) > MAX_EXTERIOR_DIM {
        return Err(Error::SizeCap(format!(
            "binomial({n},{k}) = {} exceeds {MAX_EXTERIOR_DIM}",
            binomial(n, k)
        )));
    }
    if !opts.force_interpolation {
        if is_derogatory(a, opts.eigs_a.as_deref())? || is_derogatory(b, opts.eigs_b.as_deref())? {
            return Ok(report(field.zero(), TriangulantKMethod::GeometricMultiplicityZero));
        }
        match direct_division(a, b, k, opts.eigs_a.as_deref(), opts.eigs_b.as_deref())? {
            Direct::Value { value, ga, gb, upstairs } => {
                return Ok(TriangulantKReport {
                    gk_a: Some(ga),
                    gk_b: Some(gb),
                    t_upstairs: Some(upstairs),
                    ..report(value, TriangulantKMethod::DirectDivision)
                });
            }
            Direct::Undetermined { ga, gb } => {
                let (value, samples) = interpolate(a, b, k, opts.seed)?;
                return Ok(TriangulantKReport {
                    gk_a: ga,
                    gk_b: gb,
                    samples_used: Some(samples),
                    ..report(value, TriangulantKMethod::LineInterpolation)
                });
            }
        }
    }
    let (value, samples) = interpolate(a, b, k, opts.seed)?;
    Ok(TriangulantKReport {
        samples_used: Some(samples),
        ..report(value, TriangulantKMethod::LineInterpolation)
    })
}

/// Whether some eigenvalue has geometric multiplicity above 1. Over exact
/// fields this is `deg(minimal polynomial) < n`, which needs no eigenvalues.
pub fn is_derogatory(a: &Matrix, supplied: Option<&[FieldValue]>) -> Result<bool> {
    if a.field().is_exact() {
        Ok(minimal_polynomial_degree(a)? < a.rows())
    } else {
        Ok(spectrum(a, supplied)?.is_derogatory())
    }
}

#[allow(clippy::large_enum_variant)] // short-lived, never stored
enum Direct {
    Value {
        value: FieldValue,
        ga: FieldValue,
        gb: FieldValue,
        upstairs: FieldValue,
    },
    Undetermined {
        ga: Option<FieldValue>,
        gb: Option<FieldValue>,
    },
}

fn direct_division(
    a: &Matrix,
    b: &Matrix,
    k: usize,
    eigs_a: Option<&[FieldValue]>,
    eigs_b: Option<&[FieldValue]>,
) -> Result<Direct> {
    let ga = g_factor_matrix(a, k, eigs_a)?.map(|g| g.value);
    let gb = g_factor_matrix(b, k, eigs_b)?.map(|g| g.value);
    let (Some(ga), Some(gb)) = (ga.clone(), gb.clone()) else {
        return Ok(Direct::Undetermined { ga, gb });
    };
    let denom = &ga * &gb;
    if denom.is_zero() {
        return Ok(Direct::Undetermined { ga: Some(ga), gb: Some(gb) });
    }
    let upstairs = triangulant(&leibniz_action(a, k)?, &leibniz_action(b, k)?)?.value;
    let value = upstairs.checked_div(&denom)?;
    Ok(Direct::Value { value, ga, gb, upstairs })
}

/// Candidate nodes `1, -1, 2, -2, ...` up to `±limit`.
fn sample_nodes(limit: i64) -> impl Iterator<Item = i64> {
    (1..=limit).flat_map(|t| [t, -t])
}

fn interpolate(a: &Matrix, b: &Matrix, k: usize, seed: u64) -> Result<(FieldValue, usize)> {
    let n = a.rows();
    let field = a.field();
    if !field.is_exact() {
        return Err(Error::Unsupported(
            "line interpolation needs an exact field; the Lagrange system is too ill-conditioned in floating point"
                .into(),
        ));
    }
    let degree = 2 * triangulant_k_degree(n, k);
    let needed = degree + 1;
    let limit = 2 * degree as i64 + 4;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..3 {
        let mut direction = || {
            let entries = (0..n * n).map(|_| field.from_i64(rng.random_range(1..=7))).collect();
            Matrix::from_vec(field, n, n, entries)
        };
        let (e, f) = (direction()?, direction()?);
        let mut xs = Vec::with_capacity(needed);
        let mut ys = Vec::with_capacity(needed);
        for t in sample_nodes(limit) {
            if xs.len() == needed {
                break;
            }
            let tv = field.from_i64(t);
            let at = a.add(&e.scale(&tv)?)?;
            let bt = b.add(&f.scale(&tv)?)?;
            if let Direct::Value { value, .. } = direct_division(&at, &bt, k, None, None)? {
                xs.push(tv);
                ys.push(value);
            }
        }
        if xs.len() == needed {
            return Ok((lagrange_eval(&xs, &ys, &field.zero())?, needed));
        }
    }
    Err(Error::Interpolation(format!(
        "no direction gave {needed} admissible sample points in 3 attempts"
    )))
}

/// Closed form for `T_k(P^-1 diag(a) P, diag(b))`:
/// `(-1)^floor(C/2) (δ(a) δ(b))^{C C(n-2,k-1)} prod_{S,T} det P[S|T] / det(P)^{C C(n-1,k-1)}`
/// with `C = binomial(n, k)`.
pub fn triangulant_k_diagdiag(eigs_a: &[FieldValue], p: &Matrix, bs: &[FieldValue], k: usize) -> Result<FieldValue> {
    let n = p.require_square("triangulant_k_diagdiag")?;
    if eigs_a.len() != n || bs.len() != n {
        return Err(Error::shape("triangulant_k_diagdiag", "eigenvalue lists must have length n"));
    }
    if k > n {
        return Err(Error::OutOfRange(format!("k={k} exceeds n={n}")));
    }
    let field = p.field();
    let det_p = determinant(p)?;
    if det_p.is_zero() {
        return Err(Error::Singular);
    }
    let c = binomial(n, k);
    let sign = if (c / 2) % 2 == 1 { -field.one() } else { field.one() };
    let e_delta = (c * binomial_signed(n as i64 - 2, k as i64 - 1)) as u64;
    let e_det = (c * binomial_signed(n as i64 - 1, k as i64 - 1)) as u64;
    let minors = compound(p, k)?.entries().iter().fold(field.one(), |acc, m| &acc * m);
    let deltas = &vandermonde_det(field, eigs_a) * &vandermonde_det(field, bs);
    (&(&sign * &deltas.pow(e_delta)) * &minors).checked_div(&det_p.pow(e_det))
}

/// Outcome of the brute-force search for a degenerate pairing between a
/// `k`-dimensional invariant cosubspace of `A` and a `k`-dimensional invariant subspace of `B`.
#[derive(Clone, Debug, PartialEq)]
pub struct OracleReport {
    pub degenerate_pair_exists: bool,
    /// 1-based positions into `eigs_a` (covectors) and `eigs_b` (vectors).
    pub witness: Option<(Vec<usize>, Vec<usize>)>,
    pub eigs_a: Vec<FieldValue>,
    pub eigs_b: Vec<FieldValue>,
}

pub fn theorem_k_oracle(a: &Matrix, b: &Matrix, k: usize) -> Result<OracleReport> {
    theorem_k_oracle_with(a, b, k, None, None)
}

/// Requires simple split spectra, so the invariant (co)subspaces of dimension
/// `k` are exactly the spans of `k` eigen(co)vectors.
pub fn theorem_k_oracle_with(
    a: &Matrix,
    b: &Matrix,
    k: usize,
    eigs_a: Option<&[FieldValue]>,
    eigs_b: Option<&[FieldValue]>,
) -> Result<OracleReport> {
    let n = check_pair(a, b, "theorem_k_oracle")?;
    if k == 0 || k >= n {
        return Err(Error::OutOfRange(format!("oracle needs 0 < k < n, got k={k}, n={n}")));
    }
    let spec_a = simple_spectrum(a, eigs_a, "A")?;
    let spec_b = simple_spectrum(b, eigs_b, "B")?;
    let eigs_a = spec_a.eigenvalue_list().expect("split");
    let eigs_b = spec_b.eigenvalue_list().expect("split");
    let covectors = eigenvectors(&a.transpose(), &eigs_a)?;
    let vectors = eigenvectors(b, &eigs_b)?;
    let subsets = SubsetIndexer::new(n, k)?;
    for s in subsets.subsets() {
        let u: Vec<Vector> = s.iter().map(|&i| covectors[i - 1].clone()).collect();
        for t in subsets.subsets() {
            let v: Vec<Vector> = t.iter().map(|&j| vectors[j - 1].clone()).collect();
            if pairing_degenerate(&u, &v)? {
                return Ok(OracleReport {
                    degenerate_pair_exists: true,
                    witness: Some((s.clone(), t.clone())),
                    eigs_a,
                    eigs_b,
                });
            }
        }
    }
    Ok(OracleReport { degenerate_pair_exists: false, witness: None, eigs_a, eigs_b })
}

fn simple_spectrum(m: &Matrix, supplied: Option<&[FieldValue]>, name: &str) -> Result<SpectrumReport> {
    let sr = spectrum(m, supplied)?;
    if !sr.split {
        return Err(Error::NotSplit(format!("{} (matrix {name})", m.field())));
    }
    if !sr.is_simple() {
        return Err(Error::NotSimple(format!("matrix {name} has a repeated eigenvalue")));
    }
    Ok(sr)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct KrylovCheck {
    pub dim_a: usize,
    pub dim_b: usize,
    pub holds: bool,
}

/// `dim K[A]v <= n - k` and `dim K[B]v <= k`.
pub fn theorem_k_krylov_check(a: &Matrix, b: &Matrix, k: usize, v: &[FieldValue]) -> Result<KrylovCheck> {
    let n = check_pair(a, b, "theorem_k_krylov_check")?;
    if k > n {
        return Err(Error::OutOfRange(format!("k={k} exceeds n={n}")));
    }
    let dim_a = krylov_dim(a, v)?;
    let dim_b = krylov_dim(b, v)?;
    Ok(KrylovCheck { dim_a, dim_b, holds: dim_a + k <= n && dim_b <= k })
}

/// A rational pair with a `k`-dimensional `B`-invariant subspace meeting a
/// `k`-codimensional `A`-invariant subspace: `A = P A' P^-1`, `B = P B' P^-1`
/// with `A'` block upper triangular of block sizes `(n-k, k)` and `B'` of
/// block sizes `(k, n-k)`. Both invariant subspaces contain `P e_1`.
pub fn make_intersecting_pair(n: usize, k: usize, seed: u64) -> Result<(Matrix, Matrix)> {
    if k == 0 || k >= n {
        return Err(Error::OutOfRange(format!("need 0 < k < n, got k={k}, n={n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a0 = block_upper(&mut rng, &[n - k, k], -5..=5);
    let b0 = block_upper(&mut rng, &[k, n - k], -5..=5);
    let p = random_invertible(&mut rng, n, -3..=3);
    let p_inv = inverse(&p)?;
    Ok((p.matmul(&a0)?.matmul(&p_inv)?, p.matmul(&b0)?.matmul(&p_inv)?))
}
