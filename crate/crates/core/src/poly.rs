//! Univariate polynomials over a scalar field.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{determinant, Matrix};
use crate::scalars::{FieldDescriptor, FieldValue};

/// Coefficients from the constant term upward; trailing zeros are trimmed.
#[derive(Clone, Debug, PartialEq)]
pub struct UniPoly {
    field: FieldDescriptor,
    coeffs: Vec<FieldValue>,
}

impl UniPoly {
    pub fn new(field: FieldDescriptor, mut coeffs: Vec<FieldValue>) -> Self {
        while coeffs.last().is_some_and(exact_zero) {
            coeffs.pop();
        }
        UniPoly { field, coeffs }
    }

    pub fn zero(field: FieldDescriptor) -> Self {
        UniPoly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(c: FieldValue) -> Self {
        UniPoly::new(c.descriptor(), vec![c])
    }

    /// `x - r`.
    pub fn linear_root(r: &FieldValue) -> Self {
        let f = r.descriptor();
        UniPoly::new(f, vec![-r, f.one()])
    }

    /// `prod (x - r)`.
    pub fn from_roots(field: FieldDescriptor, roots: &[FieldValue]) -> Self {
        roots
            .iter()
            .fold(UniPoly::constant(field.one()), |acc, r| acc.mul(&UniPoly::linear_root(r)))
    }

    pub fn field(&self) -> FieldDescriptor {
        self.field
    }

    pub fn coeffs(&self) -> &[FieldValue] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldValue {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> FieldValue {
        self.coeffs.last().cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn eval(&self, x: &FieldValue) -> FieldValue {
        self.coeffs
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, c| &(&acc * x) + c)
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        UniPoly::new(self.field, (0..n).map(|i| &self.coeff(i) + &other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        UniPoly::new(self.field, (0..n).map(|i| &self.coeff(i) - &other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero(self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        UniPoly::new(self.field, out)
    }

    pub fn scale(&self, s: &FieldValue) -> UniPoly {
        UniPoly::new(self.field, self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.field,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &self.field.from_i64(i as i64))
                .collect(),
        )
    }

    /// Quotient and remainder; the divisor must be nonzero.
    pub fn div_rem(&self, divisor: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = divisor.leading().inv()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.field.zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let top = rem.len() - 1;
            let c = &rem[top] * &lead_inv;
            let shift = top - dd;
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] = &rem[shift + i] - &(&c * d);
            }
            quot[shift] = c;
            rem.pop();
            while rem.last().is_some_and(exact_zero) {
                rem.pop();
            }
        }
        Ok((UniPoly::new(self.field, quot), UniPoly::new(self.field, rem)))
    }

    pub fn monic(&self) -> Result<UniPoly> {
        let inv = self.leading().inv()?;
        Ok(self.scale(&inv))
    }

    /// Monic gcd (exact fields).
    pub fn gcd(&self, other: &UniPoly) -> Result<UniPoly> {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = r;
        }
        if a.is_zero() {
            return Ok(a);
        }
        a.monic()
    }

    /// Resultant via the Sylvester determinant with formal degrees `dp`, `dq`.
    ///
    /// Formal degrees matter in positive characteristic, where `p'` can drop degree.
    pub fn resultant_formal(&self, dp: usize, other: &UniPoly, dq: usize) -> Result<FieldValue> {
        if self.degree().is_some_and(|d| d > dp) || other.degree().is_some_and(|d| d > dq) {
            return Err(Error::OutOfRange("formal degree below actual degree".into()));
        }
        let size = dp + dq;
        if size == 0 {
            return Ok(self.field.one());
        }
        let mut s = Matrix::zeros(self.field, size, size);
        for r in 0..dq {
            for i in 0..=dp {
                s[(r, r + i)] = self.coeff(dp - i);
            }
        }
        for r in 0..dp {
            for i in 0..=dq {
                s[(dq + r, r + i)] = other.coeff(dq - i);
            }
        }
        determinant(&s)
    }

    pub fn resultant(&self, other: &UniPoly) -> Result<FieldValue> {
        let dp = self.degree().ok_or(Error::OutOfRange("resultant of zero polynomial".into()))?;
        let dq = other.degree().ok_or(Error::OutOfRange("resultant of zero polynomial".into()))?;
        self.resultant_formal(dp, other, dq)
    }

    /// `prod_{s<t} (r_t - r_s)^2 * lead^(2n-2)`, computed as
    /// `(-1)^(n(n-1)/2) Res(p, p') / lead`.
    pub fn discriminant(&self) -> Result<FieldValue> {
        let n = self.degree().ok_or(Error::OutOfRange("discriminant of zero polynomial".into()))?;
        if n == 0 {
            return Ok(self.field.one());
        }
        let res = self.resultant_formal(n, &self.derivative(), n - 1)?;
        let signed = if (n * (n - 1) / 2) % 2 == 1 { -res } else { res };
        signed.checked_div(&self.leading())
    }

    /// Human-readable form such as `x^2-1`.
    pub fn pretty(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if exact_zero(c) {
                continue;
            }
            let text = c.to_string();
            let simple = matches!(c, FieldValue::Rational(_) | FieldValue::Prime(_));
            let (neg, body) = match text.strip_prefix('-') {
                Some(rest) if simple => (true, rest.to_string()),
                _ => (false, text.clone()),
            };
            if !out.is_empty() {
                out.push(if neg { '-' } else { '+' });
            } else if neg {
                out.push('-');
            }
            let body = if simple { body } else { format!("({body})") };
            match i {
                0 => out.push_str(&body),
                _ => {
                    if body != "1" {
                        out.push_str(&body);
                    }
                    out.push('x');
                    if i > 1 {
                        out.push_str(&format!("^{i}"));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

/// Structural zero: exact zero, or a complex float that is literally 0.
fn exact_zero(c: &FieldValue) -> bool {
    match c {
        FieldValue::Complex(z) => z.value.re == 0.0 && z.value.im == 0.0,
        other => other.is_zero(),
    }
}

/// Value at `x` of the interpolating polynomial through `(xs[j], ys[j])`.
pub fn lagrange_eval(xs: &[FieldValue], ys: &[FieldValue], x: &FieldValue) -> Result<FieldValue> {
    if xs.len() != ys.len() || xs.is_empty() {
        return Err(Error::Interpolation("need matching nonempty node and value lists".into()));
    }
    let field = xs[0].descriptor();
    let mut total = field.zero();
    for (j, (xj, yj)) in xs.iter().zip(ys).enumerate() {
        let mut num = field.one();
        let mut den = field.one();
        for (m, xm) in xs.iter().enumerate() {
            if m == j {
                continue;
            }
            num = &num * &(x - xm);
            den = &den * &(xj - xm);
        }
        if den.is_zero() {
            return Err(Error::Interpolation("repeated interpolation node".into()));
        }
        total = &total + (&(yj * &num).checked_div(&den)?);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldDescriptor {
        FieldDescriptor::Rational
    }

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::new(q(), c.iter().map(|&v| q().from_i64(v)).collect())
    }

    #[test]
    fn pretty_printing() {
        assert_eq!(p(&[-1, 0, 1]).to_string(), "x^2-1");
        assert_eq!(p(&[4, -4, 1]).to_string(), "x^2-4x+4");
        assert_eq!(p(&[0, -1]).to_string(), "-x");
        assert_eq!(p(&[]).to_string(), "0");
    }

    #[test]
    fn div_rem_and_gcd() {
        let a = p(&[-1, 0, 1]); // (x-1)(x+1)
        let b = p(&[-1, 1]);
        let (qq, r) = a.div_rem(&b).unwrap();
        assert_eq!(qq, p(&[1, 1]));
        assert!(r.is_zero());
        let g = p(&[1, 2, 1]).gcd(&p(&[-1, 0, 1])).unwrap();
        assert_eq!(g, p(&[1, 1]));
    }

    #[test]
    fn discriminant_of_quadratic() {
        // x^2 + bx + c has discriminant b^2 - 4c
        assert_eq!(p(&[-1, 0, 1]).discriminant().unwrap(), q().from_i64(4));
        assert_eq!(p(&[3, 5, 1]).discriminant().unwrap(), q().from_i64(13));
        assert!(p(&[1, 2, 1]).discriminant().unwrap().is_zero());
    }

    #[test]
    fn discriminant_matches_roots() {
        // roots 0, 1, 3: prod (r_t - r_s)^2 = (1*3*2)^2 = 36
        let f = UniPoly::from_roots(q(), &[q().from_i64(0), q().from_i64(1), q().from_i64(3)]);
        assert_eq!(f.discriminant().unwrap(), q().from_i64(36));
    }

    #[test]
    fn lagrange_recovers_value() {
        // y = x^2 + 1 sampled at 1,2,3; value at 0 is 1
        let xs: Vec<_> = [1, 2, 3].iter().map(|&v| q().from_i64(v)).collect();
        let ys: Vec<_> = [2, 5, 10].iter().map(|&v| q().from_i64(v)).collect();
        assert_eq!(lagrange_eval(&xs, &ys, &q().zero()).unwrap(), q().one());
        let dup = vec![q().one(), q().one()];
        assert!(lagrange_eval(&dup, &dup, &q().zero()).is_err());
    }
}
