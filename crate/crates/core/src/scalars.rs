//! Scalar fields.
//!
//! Four ground fields are supported: the rationals, the Gaussian rationals
//! `Q(i)`, prime fields `F_p`, and double-precision complex numbers with an
//! absolute zero tolerance. A [`FieldValue`] always knows which field it lives
//! in, so mixing fields is caught at the point of use instead of producing
//! silent garbage.
//!
//! Text entries follow a small grammar:
//!
//! ```text
//! rational    := int | int "/" posint
//! gaussian    := rational | rational sign rational "i" | rational "i"
//! prime_field := int
//! complex     := decimal | decimal sign decimal "i" | decimal "," decimal
//! ```

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default absolute zero tolerance for `complex_float`.
pub const DEFAULT_TOLERANCE: f64 = 1e-10;

/// Largest accepted prime modulus (exclusive). Residues then multiply inside a `u64`.
pub const MAX_MODULUS: u64 = 1 << 32;

/// The ground field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "FieldWire", into = "FieldWire")]
pub enum FieldDescriptor {
    Rational,
    GaussianRational,
    PrimeField { p: u64 },
    ComplexFloat { tol: f64 },
}

/// Wire form of a [`FieldDescriptor`]: `{"kind": "...", "p": ..., "tol": ...}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FieldWire {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tol: Option<f64>,
}

impl TryFrom<FieldWire> for FieldDescriptor {
    type Error = Error;

    fn try_from(wire: FieldWire) -> Result<Self> {
        match wire.kind.as_str() {
            "rational" | "gaussian_rational" if wire.p.is_some() || wire.tol.is_some() => Err(
                Error::InvalidField(format!("{} takes neither p nor tol", wire.kind)),
            ),
            "rational" => Ok(FieldDescriptor::Rational),
            "gaussian_rational" => Ok(FieldDescriptor::GaussianRational),
            "prime_field" => {
                if wire.tol.is_some() {
                    return Err(Error::InvalidField("prime_field takes no tol".into()));
                }
                let p = wire
                    .p
                    .ok_or_else(|| Error::InvalidField("prime_field requires p".into()))?;
                FieldDescriptor::prime(p)
            }
            "complex_float" => {
                if wire.p.is_some() {
                    return Err(Error::InvalidField("complex_float takes no p".into()));
                }
                FieldDescriptor::complex(wire.tol.unwrap_or(DEFAULT_TOLERANCE))
            }
            other => Err(Error::InvalidField(format!("unknown field kind {other:?}"))),
        }
    }
}

impl From<FieldDescriptor> for FieldWire {
    fn from(d: FieldDescriptor) -> Self {
        let (p, tol) = match d {
            FieldDescriptor::PrimeField { p } => (Some(p), None),
            FieldDescriptor::ComplexFloat { tol } => (None, Some(tol)),
            _ => (None, None),
        };
        FieldWire {
            kind: d.kind_name().to_string(),
            p,
            tol,
        }
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p < 4 {
        return true;
    }
    if p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl FieldDescriptor {
    pub fn rational() -> Self {
        FieldDescriptor::Rational
    }

    pub fn gaussian() -> Self {
        FieldDescriptor::GaussianRational
    }

    pub fn prime(p: u64) -> Result<Self> {
        if p >= MAX_MODULUS {
            return Err(Error::InvalidField(format!(
                "modulus {p} exceeds the supported bound 2^32"
            )));
        }
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("modulus {p} is not prime")));
        }
        Ok(FieldDescriptor::PrimeField { p })
    }

    pub fn complex(tol: f64) -> Result<Self> {
        if !(tol.is_finite() && tol >= 0.0) {
            return Err(Error::InvalidField(format!("tolerance {tol} must be a nonnegative real")));
        }
        Ok(FieldDescriptor::ComplexFloat { tol })
    }

    pub fn complex_default() -> Self {
        FieldDescriptor::ComplexFloat {
            tol: DEFAULT_TOLERANCE,
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            FieldDescriptor::Rational => "rational",
            FieldDescriptor::GaussianRational => "gaussian_rational",
            FieldDescriptor::PrimeField { .. } => "prime_field",
            FieldDescriptor::ComplexFloat { .. } => "complex_float",
        }
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self, FieldDescriptor::ComplexFloat { .. })
    }

    /// 0 for characteristic-zero fields.
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldDescriptor::PrimeField { p } => *p,
            _ => 0,
        }
    }

    pub fn tolerance(&self) -> Option<f64> {
        match self {
            FieldDescriptor::ComplexFloat { tol } => Some(*tol),
            _ => None,
        }
    }

    pub fn zero(&self) -> FieldValue {
        self.from_i64(0)
    }

    pub fn one(&self) -> FieldValue {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> FieldValue {
        self.from_bigint(&BigInt::from(v))
    }

    pub fn from_bigint(&self, v: &BigInt) -> FieldValue {
        match *self {
            FieldDescriptor::Rational => FieldValue::Rational(BigRational::from_integer(v.clone())),
            FieldDescriptor::GaussianRational => FieldValue::Gaussian(GaussianRational::new(
                BigRational::from_integer(v.clone()),
                BigRational::zero(),
            )),
            FieldDescriptor::PrimeField { p } => FieldValue::Prime(Residue::from_bigint(v, p)),
            FieldDescriptor::ComplexFloat { tol } => FieldValue::Complex(ComplexFloat {
                value: Complex64::new(v.to_f64().unwrap_or(f64::NAN), 0.0),
                tol,
            }),
        }
    }

    /// Image of a rational number. Fails in `F_p` when `p` divides the denominator.
    pub fn from_rational(&self, q: &BigRational) -> Result<FieldValue> {
        match *self {
            FieldDescriptor::Rational => Ok(FieldValue::Rational(q.clone())),
            FieldDescriptor::GaussianRational => Ok(FieldValue::Gaussian(GaussianRational::new(
                q.clone(),
                BigRational::zero(),
            ))),
            FieldDescriptor::PrimeField { .. } => {
                let num = self.from_bigint(q.numer());
                let den = self.from_bigint(q.denom());
                num.checked_div(&den)
            }
            FieldDescriptor::ComplexFloat { tol } => Ok(FieldValue::Complex(ComplexFloat {
                value: Complex64::new(rational_to_f64(q), 0.0),
                tol,
            })),
        }
    }

    /// Complex value in a `complex_float` field.
    pub fn from_complex(&self, z: Complex64) -> Result<FieldValue> {
        match *self {
            FieldDescriptor::ComplexFloat { tol } => {
                Ok(FieldValue::Complex(ComplexFloat { value: z, tol }))
            }
            other => Err(Error::FieldMismatch(other, FieldDescriptor::complex_default())),
        }
    }

    pub fn parse(&self, text: &str) -> Result<FieldValue> {
        parse_scalar(text, self)
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::PrimeField { p } => write!(f, "prime_field(p={p})"),
            FieldDescriptor::ComplexFloat { tol } => write!(f, "complex_float(tol={tol:e})"),
            other => f.write_str(other.kind_name()),
        }
    }
}

pub(crate) fn rational_to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or_else(|| {
        // fall back through a scaled integer quotient for huge parts
        let n = q.numer().to_f64().unwrap_or(f64::INFINITY);
        let d = q.denom().to_f64().unwrap_or(f64::INFINITY);
        n / d
    })
}

/// `re + im·i` with both parts in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), -self.im.clone())
    }

    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(rational_to_f64(&self.re), rational_to_f64(&self.im))
    }

    fn add(&self, o: &Self) -> Self {
        GaussianRational::new(&self.re + &o.re, &self.im + &o.im)
    }

    fn sub(&self, o: &Self) -> Self {
        GaussianRational::new(&self.re - &o.re, &self.im - &o.im)
    }

    fn mul(&self, o: &Self) -> Self {
        GaussianRational::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(GaussianRational::new(&self.re / &n, -&self.im / &n))
    }
}

/// An element of `F_p` with its modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Residue {
    pub value: u64,
    pub modulus: u64,
}

impl Residue {
    pub fn new(value: u64, modulus: u64) -> Self {
        Residue {
            value: value % modulus,
            modulus,
        }
    }

    pub fn from_bigint(v: &BigInt, modulus: u64) -> Self {
        let r = v.mod_floor(&BigInt::from(modulus));
        Residue {
            value: r.to_u64().expect("residue below modulus"),
            modulus,
        }
    }

    fn add(self, o: Self) -> Self {
        Residue::new(self.value + o.value, self.modulus)
    }

    fn sub(self, o: Self) -> Self {
        Residue::new(self.value + self.modulus - o.value, self.modulus)
    }

    fn mul(self, o: Self) -> Self {
        Residue::new(self.value * o.value, self.modulus)
    }

    fn neg(self) -> Self {
        Residue::new(self.modulus - self.value, self.modulus)
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Residue::new(1, self.modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            e >>= 1;
        }
        acc
    }

    fn inv(self) -> Option<Self> {
        if self.value == 0 {
            return None;
        }
        // extended Euclid on i64 is safe since modulus < 2^32
        let (mut r0, mut r1) = (self.modulus as i64, self.value as i64);
        let (mut s0, mut s1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1);
        Some(Residue::new(
            s0.rem_euclid(self.modulus as i64) as u64,
            self.modulus,
        ))
    }
}

/// A double-precision complex number and the zero tolerance of its field.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ComplexFloat {
    pub value: Complex64,
    pub tol: f64,
}

/// An element of one of the supported fields.
#[derive(Clone, Debug, PartialEq)]
pub enum FieldValue {
    Rational(BigRational),
    Gaussian(GaussianRational),
    Prime(Residue),
    Complex(ComplexFloat),
}

macro_rules! same_field {
    ($a:expr, $b:expr, $op:ident) => {
        match ($a, $b) {
            (FieldValue::Rational(x), FieldValue::Rational(y)) => Ok(FieldValue::Rational($op!(rat, x, y))),
            (FieldValue::Gaussian(x), FieldValue::Gaussian(y)) => Ok(FieldValue::Gaussian(x.$op(y))),
            (FieldValue::Prime(x), FieldValue::Prime(y)) if x.modulus == y.modulus => {
                Ok(FieldValue::Prime(x.$op(*y)))
            }
            (FieldValue::Complex(x), FieldValue::Complex(y)) if x.tol == y.tol => {
                Ok(FieldValue::Complex(ComplexFloat {
                    value: $op!(cpx, x.value, y.value),
                    tol: x.tol,
                }))
            }
            (x, y) => Err(Error::FieldMismatch(x.descriptor(), y.descriptor())),
        }
    };
}

macro_rules! add {
    (rat, $x:expr, $y:expr) => {
        $x + $y
    };
    (cpx, $x:expr, $y:expr) => {
        $x + $y
    };
}
macro_rules! sub {
    (rat, $x:expr, $y:expr) => {
        $x - $y
    };
    (cpx, $x:expr, $y:expr) => {
        $x - $y
    };
}
macro_rules! mul {
    (rat, $x:expr, $y:expr) => {
        $x * $y
    };
    (cpx, $x:expr, $y:expr) => {
        $x * $y
    };
}

impl FieldValue {
    pub fn descriptor(&self) -> FieldDescriptor {
        match self {
            FieldValue::Rational(_) => FieldDescriptor::Rational,
            FieldValue::Gaussian(_) => FieldDescriptor::GaussianRational,
            FieldValue::Prime(r) => FieldDescriptor::PrimeField { p: r.modulus },
            FieldValue::Complex(c) => FieldDescriptor::ComplexFloat { tol: c.tol },
        }
    }

    /// Exact zero test, or `|z| <= tol` for `complex_float`.
    pub fn is_zero(&self) -> bool {
        match self {
            FieldValue::Rational(x) => x.is_zero(),
            FieldValue::Gaussian(x) => x.is_zero(),
            FieldValue::Prime(x) => x.value == 0,
            FieldValue::Complex(c) => c.value.norm() <= c.tol,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldValue::Complex(c) => (c.value - Complex64::new(1.0, 0.0)).norm() <= c.tol,
            other => *other == other.descriptor().one(),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        same_field!(self, other, add)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        same_field!(self, other, sub)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        same_field!(self, other, mul)
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        let inv = other.inv()?;
        self.try_mul(&inv)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            FieldValue::Rational(x) => FieldValue::Rational(x.recip()),
            FieldValue::Gaussian(x) => FieldValue::Gaussian(x.inv().ok_or(Error::DivisionByZero)?),
            FieldValue::Prime(x) => FieldValue::Prime(x.inv().ok_or(Error::DivisionByZero)?),
            FieldValue::Complex(c) => FieldValue::Complex(ComplexFloat {
                value: c.value.inv(),
                tol: c.tol,
            }),
        })
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.descriptor().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Equality in the field: exact, or within tolerance for `complex_float`.
    pub fn field_eq(&self, other: &Self) -> Result<bool> {
        match (self, other) {
            (FieldValue::Complex(x), FieldValue::Complex(y)) if x.tol == y.tol => {
                Ok((x.value - y.value).norm() <= x.tol)
            }
            _ => Ok(self.try_sub(other)?.is_zero()),
        }
    }

    /// Numeric approximation; `None` in prime fields.
    pub fn to_complex(&self) -> Option<Complex64> {
        match self {
            FieldValue::Rational(x) => Some(Complex64::new(rational_to_f64(x), 0.0)),
            FieldValue::Gaussian(x) => Some(x.to_complex()),
            FieldValue::Prime(_) => None,
            FieldValue::Complex(c) => Some(c.value),
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            FieldValue::Rational(x) => Some(x),
            _ => None,
        }
    }

    pub fn as_gaussian(&self) -> Option<GaussianRational> {
        match self {
            FieldValue::Rational(x) => Some(GaussianRational::new(x.clone(), BigRational::zero())),
            FieldValue::Gaussian(x) => Some(x.clone()),
            _ => None,
        }
    }

    pub fn as_complex(&self) -> Option<Complex64> {
        match self {
            FieldValue::Complex(c) => Some(c.value),
            _ => None,
        }
    }

    /// Magnitude used for pivot selection: `|z|` for complex floats, 0/1 otherwise.
    pub(crate) fn pivot_weight(&self) -> f64 {
        match self {
            FieldValue::Complex(c) => c.value.norm(),
            other => {
                if other.is_zero() {
                    0.0
                } else {
                    1.0
                }
            }
        }
    }
}

impl<'a> Add<&'a FieldValue> for &'a FieldValue {
    type Output = FieldValue;
    fn add(self, rhs: &'a FieldValue) -> FieldValue {
        self.try_add(rhs).expect("field mismatch in add")
    }
}

impl<'a> Sub<&'a FieldValue> for &'a FieldValue {
    type Output = FieldValue;
    fn sub(self, rhs: &'a FieldValue) -> FieldValue {
        self.try_sub(rhs).expect("field mismatch in sub")
    }
}

impl<'a> Mul<&'a FieldValue> for &'a FieldValue {
    type Output = FieldValue;
    fn mul(self, rhs: &'a FieldValue) -> FieldValue {
        self.try_mul(rhs).expect("field mismatch in mul")
    }
}

impl Neg for &FieldValue {
    type Output = FieldValue;
    fn neg(self) -> FieldValue {
        match self {
            FieldValue::Rational(x) => FieldValue::Rational(-x),
            FieldValue::Gaussian(x) => {
                FieldValue::Gaussian(GaussianRational::new(-&x.re, -&x.im))
            }
            FieldValue::Prime(x) => FieldValue::Prime(x.neg()),
            FieldValue::Complex(c) => FieldValue::Complex(ComplexFloat {
                value: -c.value,
                tol: c.tol,
            }),
        }
    }
}

impl Neg for FieldValue {
    type Output = FieldValue;
    fn neg(self) -> FieldValue {
        -&self
    }
}

fn parse_err(text: &str, field: &FieldDescriptor, reason: impl Into<String>) -> Error {
    Error::Parse {
        text: text.to_string(),
        field: field.kind_name().to_string(),
        reason: reason.into(),
    }
}

fn is_int_literal(s: &str, allow_sign: bool) -> bool {
    let digits = if allow_sign {
        s.strip_prefix(['+', '-']).unwrap_or(s)
    } else {
        s
    };
    !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
}

fn parse_rational(text: &str, field: &FieldDescriptor) -> Result<BigRational> {
    let s = text.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    if !is_int_literal(num, true) {
        return Err(parse_err(text, field, "malformed integer"));
    }
    let num = BigInt::from_str(num.trim_start_matches('+'))
        .map_err(|e| parse_err(text, field, e.to_string()))?;
    match den {
        None => Ok(BigRational::from_integer(num)),
        Some(d) => {
            if !is_int_literal(d, false) {
                return Err(parse_err(text, field, "malformed denominator"));
            }
            let d = BigInt::from_str(d).map_err(|e| parse_err(text, field, e.to_string()))?;
            if d.is_zero() {
                return Err(parse_err(text, field, "denominator zero"));
            }
            Ok(BigRational::new(num, d))
        }
    }
}

/// Splits `re±im` at the last sign that is neither leading nor part of an exponent.
fn split_complex_body(body: &str) -> Option<(&str, &str)> {
    let bytes = body.as_bytes();
    (1..bytes.len())
        .rev()
        .find(|&i| {
            (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'e' | b'E')
        })
        .map(|i| (&body[..i], &body[i..]))
}

fn parse_imag_rational(part: &str, text: &str, field: &FieldDescriptor) -> Result<BigRational> {
    match part.trim() {
        "" | "+" => Ok(BigRational::one()),
        "-" => Ok(-BigRational::one()),
        p => parse_rational(p, field).map_err(|_| parse_err(text, field, "malformed imaginary part")),
    }
}

fn parse_f64(part: &str, text: &str, field: &FieldDescriptor) -> Result<f64> {
    let p = part.trim();
    let v = match p {
        "" | "+" => 1.0,
        "-" => -1.0,
        _ => f64::from_str(p).map_err(|e| parse_err(text, field, e.to_string()))?,
    };
    if !v.is_finite() {
        return Err(parse_err(text, field, "non-finite value"));
    }
    Ok(v)
}

/// Parses one entry under the grammar for `field`.
pub fn parse_scalar(text: &str, field: &FieldDescriptor) -> Result<FieldValue> {
    let s = text.trim();
    if s.is_empty() {
        return Err(parse_err(text, field, "empty entry"));
    }
    match *field {
        FieldDescriptor::Rational => Ok(FieldValue::Rational(parse_rational(s, field)?)),
        FieldDescriptor::GaussianRational => {
            let (re, im) = match s.strip_suffix('i') {
                None => (parse_rational(s, field)?, BigRational::zero()),
                Some(body) => match split_complex_body(body) {
                    Some((re, im)) => (parse_rational(re, field)?, parse_imag_rational(im, s, field)?),
                    None => (BigRational::zero(), parse_imag_rational(body, s, field)?),
                },
            };
            Ok(FieldValue::Gaussian(GaussianRational::new(re, im)))
        }
        FieldDescriptor::PrimeField { p } => {
            if s.contains('/') {
                return Err(parse_err(text, field, "residue not reducible: non-integer entry"));
            }
            if !is_int_literal(s, true) {
                return Err(parse_err(text, field, "malformed integer"));
            }
            let v = BigInt::from_str(s.trim_start_matches('+'))
                .map_err(|e| parse_err(text, field, e.to_string()))?;
            Ok(FieldValue::Prime(Residue::from_bigint(&v, p)))
        }
        FieldDescriptor::ComplexFloat { tol } => {
            let value = if let Some((re, im)) = s.split_once(',') {
                Complex64::new(parse_f64(re, s, field)?, parse_f64(im, s, field)?)
            } else if let Some(body) = s.strip_suffix('i') {
                match split_complex_body(body) {
                    Some((re, im)) => Complex64::new(parse_f64(re, s, field)?, parse_f64(im, s, field)?),
                    None => Complex64::new(0.0, parse_f64(body, s, field)?),
                }
            } else {
                Complex64::new(parse_f64(s, s, field)?, 0.0)
            };
            Ok(FieldValue::Complex(ComplexFloat { value, tol }))
        }
    }
}

fn fmt_gaussian(g: &GaussianRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match (g.re.is_zero(), g.im.is_zero()) {
        (_, true) => write!(f, "{}", g.re),
        (true, false) => write!(f, "{}i", g.im),
        (false, false) => {
            if g.im.is_negative() {
                write!(f, "{}-{}i", g.re, -&g.im)
            } else {
                write!(f, "{}+{}i", g.re, g.im)
            }
        }
    }
}

/// Formats in the entry grammar; complex floats use `re,im` with 17 significant digits.
impl fmt::Display for FieldValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldValue::Rational(x) => write!(f, "{x}"),
            FieldValue::Gaussian(g) => fmt_gaussian(g, f),
            FieldValue::Prime(r) => write!(f, "{}", r.value),
            FieldValue::Complex(c) => write!(f, "{:.16e},{:.16e}", c.value.re, c.value.im),
        }
    }
}

pub fn format_scalar(v: &FieldValue) -> String {
    v.to_string()
}
