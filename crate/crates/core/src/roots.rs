//! Polynomial roots for the spectrum backends.
//!
//! Exact fields only ever report roots that were verified by exact
//! evaluation. For `Q` and `Q(i)` the candidates come from Aberth
//! approximations of the square-free part, sharpened by Newton steps in
//! dyadic rationals and snapped to the lattice `(1/L) Z[i]` dictated by the
//! rational root theorem, where `L` clears every denominator of the monic
//! square-free part. Prime fields use exhaustive search for small moduli and
//! `gcd(f, x^p - x)` splitting otherwise.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::poly::UniPoly;
use crate::scalars::{FieldDescriptor, FieldValue, GaussianRational, Residue};

const MAX_ABERTH_ITERS: usize = 2000;

/// All complex roots (with multiplicity) of `sum coeffs[i] x^i` by Aberth–Ehrlich iteration.
pub fn aberth(coeffs: &[Complex64]) -> Vec<Complex64> {
    let mut c: Vec<Complex64> = coeffs.to_vec();
    while c.last().is_some_and(|z| *z == Complex64::zero()) {
        c.pop();
    }
    let mut roots = Vec::new();
    // zero roots first
    while c.len() > 1 && c[0] == Complex64::zero() {
        roots.push(Complex64::zero());
        c.remove(0);
    }
    let d = match c.len() {
        0 | 1 => return roots,
        len => len - 1,
    };
    let lead = c[d];
    let monic: Vec<Complex64> = c.iter().map(|z| z / lead).collect();
    let deriv: Vec<Complex64> = (1..=d).map(|i| monic[i] * i as f64).collect();
    let eval = |p: &[Complex64], z: Complex64| p.iter().rev().fold(Complex64::zero(), |acc, c| acc * z + c);

    // Fujiwara-style bound for the initial circle, shrunk toward the geometric mean
    let bound = (0..d)
        .map(|i| monic[i].norm().powf(1.0 / (d - i) as f64))
        .fold(0.0f64, f64::max)
        * 2.0;
    let geo = monic[0].norm().powf(1.0 / d as f64);
    let radius = if geo > 0.0 { geo.min(bound).max(1e-6) } else { bound.max(1e-6) };
    let mut z: Vec<Complex64> = (0..d)
        .map(|k| Complex64::from_polar(radius, std::f64::consts::TAU * k as f64 / d as f64 + 0.4))
        .collect();

    for _ in 0..MAX_ABERTH_ITERS {
        let mut max_step = 0.0f64;
        for k in 0..d {
            let pz = eval(&monic, z[k]);
            if pz == Complex64::zero() {
                continue;
            }
            let ratio = pz / eval(&deriv, z[k]);
            let repulsion: Complex64 = (0..d)
                .filter(|&j| j != k)
                .map(|j| {
                    let diff = z[k] - z[j];
                    if diff == Complex64::zero() {
                        Complex64::new(1e-300, 0.0).inv()
                    } else {
                        diff.inv()
                    }
                })
                .sum();
            let step = ratio / (Complex64::one() - ratio * repulsion);
            if step.is_finite() {
                z[k] -= step;
                max_step = max_step.max(step.norm() / z[k].norm().max(1.0));
            }
        }
        if max_step < 1e-16 {
            break;
        }
    }
    roots.extend(z);
    roots
}

/// Roots of `p` in its own (exact) field with multiplicities, and whether `p` splits.
pub fn exact_roots(p: &UniPoly) -> (Vec<(FieldValue, usize)>, bool) {
    let Some(deg) = p.degree() else {
        return (Vec::new(), false);
    };
    let candidates = match p.field() {
        FieldDescriptor::PrimeField { p: modulus } => prime_field_roots(p, modulus),
        FieldDescriptor::Rational | FieldDescriptor::GaussianRational => char0_roots(p),
        FieldDescriptor::ComplexFloat { .. } => unreachable!("exact_roots on complex_float"),
    };
    let mut rest = p.clone();
    let mut out = Vec::new();
    for r in candidates {
        let lin = UniPoly::linear_root(&r);
        let mut mult = 0;
        loop {
            let (q, rem) = rest.div_rem(&lin).expect("monic divisor");
            if !rem.is_zero() {
                break;
            }
            rest = q;
            mult += 1;
        }
        if mult > 0 {
            out.push((r, mult));
        }
    }
    let found: usize = out.iter().map(|(_, m)| m).sum();
    (out, found == deg)
}

fn square_free_part(p: &UniPoly) -> UniPoly {
    let d = p.derivative();
    if d.is_zero() {
        return p.monic().expect("nonzero");
    }
    let g = p.gcd(&d).expect("exact gcd");
    p.div_rem(&g).expect("nonzero gcd").0.monic().expect("nonzero")
}

fn lcm_of_denominators(p: &UniPoly) -> BigInt {
    p.coeffs().iter().fold(BigInt::one(), |acc, c| match c {
        FieldValue::Rational(q) => acc.lcm(q.denom()),
        FieldValue::Gaussian(g) => acc.lcm(g.re.denom()).lcm(g.im.denom()),
        _ => acc,
    })
}

fn round_dyadic(q: &BigRational, bits: u32) -> BigRational {
    let scale = BigInt::one() << bits;
    let scaled = (q * BigRational::from_integer(scale.clone())).round();
    BigRational::new(scaled.to_integer(), scale)
}

fn round_value(v: &FieldValue, bits: u32) -> FieldValue {
    match v {
        FieldValue::Rational(q) => FieldValue::Rational(round_dyadic(q, bits)),
        FieldValue::Gaussian(g) => FieldValue::Gaussian(GaussianRational::new(
            round_dyadic(&g.re, bits),
            round_dyadic(&g.im, bits),
        )),
        other => other.clone(),
    }
}

fn f64_to_rational(x: f64) -> BigRational {
    BigRational::from_float(x).unwrap_or_else(BigRational::zero)
}

fn snap(v: &FieldValue, l: &BigInt) -> FieldValue {
    let lq = BigRational::from_integer(l.clone());
    let snap1 = |q: &BigRational| (q * &lq).round() / &lq;
    match v {
        FieldValue::Rational(q) => FieldValue::Rational(snap1(q)),
        FieldValue::Gaussian(g) => {
            FieldValue::Gaussian(GaussianRational::new(snap1(&g.re), snap1(&g.im)))
        }
        other => other.clone(),
    }
}

fn char0_roots(p: &UniPoly) -> Vec<FieldValue> {
    let field = p.field();
    let mut out = Vec::new();
    let mut work = p.clone();
    while work.degree().is_some_and(|d| d > 0) && work.coeff(0).is_zero() {
        work = UniPoly::new(field, work.coeffs()[1..].to_vec());
        if !out.contains(&field.zero()) {
            out.push(field.zero());
        }
    }
    if work.degree().unwrap_or(0) == 0 {
        return out;
    }
    let sf = square_free_part(&work);
    let l = lcm_of_denominators(&sf);
    let height_bits = sf
        .coeffs()
        .iter()
        .map(|c| match c {
            FieldValue::Rational(q) => q.numer().bits().max(q.denom().bits()),
            FieldValue::Gaussian(g) => g.re.numer().bits().max(g.im.numer().bits()),
            _ => 0,
        })
        .max()
        .unwrap_or(0);
    let bits = (96 + 2 * l.bits() + 2 * height_bits).min(20_000) as u32;
    let approx = aberth(
        &sf.coeffs()
            .iter()
            .map(|c| c.to_complex().expect("char 0 value"))
            .collect::<Vec<_>>(),
    );
    let deriv = sf.derivative();
    for z in approx {
        let start = match field {
            FieldDescriptor::Rational => {
                if z.im.abs() > 1e-4 * z.norm().max(1.0) {
                    continue;
                }
                FieldValue::Rational(f64_to_rational(z.re))
            }
            _ => FieldValue::Gaussian(GaussianRational::new(
                f64_to_rational(z.re),
                f64_to_rational(z.im),
            )),
        };
        let mut x = start;
        for _ in 0..200 {
            let fx = sf.eval(&x);
            if fx.is_zero() {
                break;
            }
            let Ok(step) = fx.checked_div(&deriv.eval(&x)) else { break };
            x = round_value(&(&x - &step), bits);
            if step_is_tiny(&step, bits) {
                break;
            }
        }
        for cand in [snap(&x, &l), x] {
            if sf.eval(&cand).is_zero() && !out.contains(&cand) {
                out.push(cand);
                break;
            }
        }
    }
    out
}

fn step_is_tiny(step: &FieldValue, bits: u32) -> bool {
    let tiny = BigRational::new(BigInt::one(), BigInt::one() << (bits.saturating_sub(4)));
    match step {
        FieldValue::Rational(q) => q.abs() < tiny,
        FieldValue::Gaussian(g) => g.re.abs() < tiny && g.im.abs() < tiny,
        _ => true,
    }
}

const EXHAUSTIVE_LIMIT: u64 = 1 << 16;

fn prime_field_roots(p: &UniPoly, modulus: u64) -> Vec<FieldValue> {
    let field = p.field();
    if modulus <= EXHAUSTIVE_LIMIT {
        return (0..modulus)
            .map(|r| FieldValue::Prime(Residue::new(r, modulus)))
            .filter(|x| p.eval(x).is_zero())
            .collect();
    }
    // g = gcd(f, x^p - x) collects the distinct linear factors
    let x = UniPoly::new(field, vec![field.zero(), field.one()]);
    let xp = pow_mod(&x, modulus, p);
    let g = p.gcd(&xp.sub(&x)).expect("exact gcd");
    let mut rng = ChaCha8Rng::seed_from_u64(modulus);
    let mut out = Vec::new();
    split_linear(&g, modulus, &mut rng, &mut out);
    out
}

fn pow_mod(base: &UniPoly, mut e: u64, m: &UniPoly) -> UniPoly {
    let field = base.field();
    let mut acc = UniPoly::constant(field.one());
    let mut b = base.div_rem(m).expect("nonzero modulus").1;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&b).div_rem(m).expect("nonzero modulus").1;
        }
        b = b.mul(&b).div_rem(m).expect("nonzero modulus").1;
        e >>= 1;
    }
    acc
}

fn split_linear(g: &UniPoly, modulus: u64, rng: &mut ChaCha8Rng, out: &mut Vec<FieldValue>) {
    let field = g.field();
    match g.degree() {
        None | Some(0) => {}
        Some(1) => {
            let monic = g.monic().expect("nonzero");
            out.push(-&monic.coeff(0));
        }
        Some(_) => loop {
            let a = rng.random_range(0..modulus);
            let shift = UniPoly::new(
                field,
                vec![FieldValue::Prime(Residue::new(a, modulus)), field.one()],
            );
            let h = pow_mod(&shift, (modulus - 1) / 2, g).sub(&UniPoly::constant(field.one()));
            let d = g.gcd(&h).expect("exact gcd");
            let dd = d.degree().unwrap_or(0);
            if dd > 0 && dd < g.degree().unwrap_or(0) {
                let other = g.div_rem(&d).expect("nonzero").0;
                split_linear(&d, modulus, rng, out);
                split_linear(&other, modulus, rng, out);
                return;
            }
        },
    }
}

/// Groups numeric roots whose distance is within `radius * max(1, |λ|)`; returns means and counts.
pub fn cluster_roots(roots: &[Complex64], radius: f64) -> Vec<(Complex64, usize)> {
    let mut clusters: Vec<(Vec<Complex64>, Complex64)> = Vec::new();
    for &z in roots {
        match clusters
            .iter_mut()
            .find(|(_, c)| (z - *c).norm() <= radius * c.norm().max(1.0))
        {
            Some((members, center)) => {
                members.push(z);
                *center = members.iter().sum::<Complex64>() / members.len() as f64;
            }
            None => clusters.push((vec![z], z)),
        }
    }
    clusters
        .into_iter()
        .map(|(m, c)| (c, m.len()))
        .collect()
}
