//! Complex scalars in three arithmetic modes.
//!
//! * [`ExactComplex`]: Gaussian integers over arbitrary-precision integers.
//! * [`Wrap64Complex`]: pairs of `i64` with two's-complement wrapping, the
//!   number representation of the original command-line program.
//! * [`FloatComplex`]: pairs of `f64`, compared with an absolute tolerance.
//!
//! Algorithms are generic over [`ComplexRing`]. The dynamically-moded
//! [`Scalar`] enum exists for callers (the CLI) that pick the mode at runtime.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{EsymError, Result};

/// Default absolute tolerance for [`FloatComplex::approx_eq`].
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, clap::ValueEnum)]
pub enum Mode {
    #[default]
    Exact,
    Wrap64,
    Float,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Exact => "exact",
            Mode::Wrap64 => "wrap64",
            Mode::Float => "float",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = EsymError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(Mode::Exact),
            "wrap64" => Ok(Mode::Wrap64),
            "float" => Ok(Mode::Float),
            _ => Err(EsymError::parse(s, "expected exact, wrap64 or float")),
        }
    }
}

/// Commutative ring of complex numbers under one arithmetic mode.
pub trait ComplexRing: Clone + PartialEq + fmt::Debug + fmt::Display {
    const MODE: Mode;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(re: i64, im: i64) -> Self;

    fn add(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn is_zero(&self) -> bool;

    /// Decimal text of the real and imaginary parts.
    fn parts(&self) -> (String, String);

    /// Inverse of [`ComplexRing::parts`].
    fn from_parts(re: &str, im: &str) -> Result<Self>;

    /// Parse a complex literal: `a`, `bi`, `a+bi`, `a-bi` or `(a,b)`.
    fn parse_literal(s: &str) -> Result<Self> {
        let (re, im) = split_literal(s)?;
        Self::from_parts(&re, &im).map_err(|_| EsymError::parse(s, "not a complex number"))
    }

    /// Compact literal form such as `3`, `-2i`, `i`, `-2+i`.
    fn literal(&self) -> String {
        let (re, im) = self.parts();
        compose_literal(&re, &im)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ExactComplex {
    pub re: BigInt,
    pub im: BigInt,
}

impl ExactComplex {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        Self {
            re: re.into(),
            im: im.into(),
        }
    }

    pub fn real(re: impl Into<BigInt>) -> Self {
        Self::new(re, 0)
    }

    /// `(0, 1)`.
    pub fn i() -> Self {
        Self::new(0, 1)
    }

    /// Narrow to 64-bit parts, `None` if either part does not fit.
    pub fn to_wrap64(&self) -> Option<Wrap64Complex> {
        Some(Wrap64Complex::new(self.re.to_i64()?, self.im.to_i64()?))
    }

    /// Reduce both parts modulo 2^64 into the signed range.
    pub fn wrapped(&self) -> Wrap64Complex {
        fn wrap(v: &BigInt) -> i64 {
            let modulus = BigInt::one() << 64;
            let mut r: BigInt = v % &modulus;
            if r.is_negative() {
                r += &modulus;
            }
            if r >= (BigInt::one() << 63) {
                r -= &modulus;
            }
            r.to_i64().expect("reduced into i64 range")
        }
        Wrap64Complex::new(wrap(&self.re), wrap(&self.im))
    }

    pub fn to_float(&self) -> FloatComplex {
        FloatComplex::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }

    /// Largest absolute value among the two parts.
    pub fn max_abs_part(&self) -> BigInt {
        self.re.abs().max(self.im.abs())
    }
}

impl ComplexRing for ExactComplex {
    const MODE: Mode = Mode::Exact;

    fn zero() -> Self {
        Self::default()
    }

    fn one() -> Self {
        Self::new(1, 0)
    }

    fn from_i64(re: i64, im: i64) -> Self {
        Self::new(re, im)
    }

    fn add(&self, rhs: &Self) -> Self {
        Self {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        Self {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }

    fn neg(&self) -> Self {
        Self {
            re: -&self.re,
            im: -&self.im,
        }
    }

    fn sub(&self, rhs: &Self) -> Self {
        Self {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn parts(&self) -> (String, String) {
        (self.re.to_string(), self.im.to_string())
    }

    fn from_parts(re: &str, im: &str) -> Result<Self> {
        let parse = |s: &str| {
            parse_integer_text(s)
                .and_then(|t| BigInt::from_str(t).ok())
                .ok_or_else(|| EsymError::parse(s, "not an integer"))
        };
        Ok(Self::new(parse(re)?, parse(im)?))
    }
}

/// Complex number over two's-complement `i64` with silent wrap-around.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Wrap64Complex {
    pub re: i64,
    pub im: i64,
}

impl Wrap64Complex {
    pub const fn new(re: i64, im: i64) -> Self {
        Self { re, im }
    }

    pub fn to_exact(self) -> ExactComplex {
        ExactComplex::new(self.re, self.im)
    }
}

impl ComplexRing for Wrap64Complex {
    const MODE: Mode = Mode::Wrap64;

    fn zero() -> Self {
        Self::new(0, 0)
    }

    fn one() -> Self {
        Self::new(1, 0)
    }

    fn from_i64(re: i64, im: i64) -> Self {
        Self::new(re, im)
    }

    fn add(&self, rhs: &Self) -> Self {
        Self::new(self.re.wrapping_add(rhs.re), self.im.wrapping_add(rhs.im))
    }

    fn mul(&self, rhs: &Self) -> Self {
        Self::new(
            self.re
                .wrapping_mul(rhs.re)
                .wrapping_sub(self.im.wrapping_mul(rhs.im)),
            self.re
                .wrapping_mul(rhs.im)
                .wrapping_add(self.im.wrapping_mul(rhs.re)),
        )
    }

    fn neg(&self) -> Self {
        Self::new(self.re.wrapping_neg(), self.im.wrapping_neg())
    }

    fn sub(&self, rhs: &Self) -> Self {
        Self::new(self.re.wrapping_sub(rhs.re), self.im.wrapping_sub(rhs.im))
    }

    fn is_zero(&self) -> bool {
        self.re == 0 && self.im == 0
    }

    fn parts(&self) -> (String, String) {
        (self.re.to_string(), self.im.to_string())
    }

    fn from_parts(re: &str, im: &str) -> Result<Self> {
        let parse = |s: &str| {
            parse_integer_text(s)
                .and_then(|t| t.parse::<i64>().ok())
                .ok_or_else(|| EsymError::parse(s, "not a 64-bit integer"))
        };
        Ok(Self::new(parse(re)?, parse(im)?))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct FloatComplex {
    pub re: f64,
    pub im: f64,
}

impl FloatComplex {
    pub const fn new(re: f64, im: f64) -> Self {
        Self { re, im }
    }

    pub fn abs(self) -> f64 {
        self.re.hypot(self.im)
    }

    /// Componentwise comparison within an absolute tolerance.
    pub fn approx_eq(self, other: Self, tol: f64) -> bool {
        (self.re - other.re).abs() <= tol && (self.im - other.im).abs() <= tol
    }
}

impl ComplexRing for FloatComplex {
    const MODE: Mode = Mode::Float;

    fn zero() -> Self {
        Self::new(0.0, 0.0)
    }

    fn one() -> Self {
        Self::new(1.0, 0.0)
    }

    fn from_i64(re: i64, im: i64) -> Self {
        Self::new(re as f64, im as f64)
    }

    fn add(&self, rhs: &Self) -> Self {
        Self::new(self.re + rhs.re, self.im + rhs.im)
    }

    fn mul(&self, rhs: &Self) -> Self {
        Self::new(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }

    fn neg(&self) -> Self {
        Self::new(-self.re, -self.im)
    }

    fn sub(&self, rhs: &Self) -> Self {
        Self::new(self.re - rhs.re, self.im - rhs.im)
    }

    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }

    fn parts(&self) -> (String, String) {
        (self.re.to_string(), self.im.to_string())
    }

    fn from_parts(re: &str, im: &str) -> Result<Self> {
        let parse = |s: &str| {
            s.trim()
                .parse::<f64>()
                .map_err(|_| EsymError::parse(s, "not a number"))
        };
        Ok(Self::new(parse(re)?, parse(im)?))
    }
}

macro_rules! impl_pair_display {
    ($($t:ty),*) => {$(
        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "({},{})", self.re, self.im)
            }
        }
    )*};
}

impl_pair_display!(ExactComplex, Wrap64Complex, FloatComplex);

/// A complex value whose arithmetic mode is chosen at runtime.
#[derive(Debug, Clone, PartialEq)]
pub enum Scalar {
    Exact(ExactComplex),
    Wrap64(Wrap64Complex),
    Float(FloatComplex),
}

impl Scalar {
    pub fn mode(&self) -> Mode {
        match self {
            Scalar::Exact(_) => Mode::Exact,
            Scalar::Wrap64(_) => Mode::Wrap64,
            Scalar::Float(_) => Mode::Float,
        }
    }

    pub fn zero(mode: Mode) -> Self {
        Self::from_i64(mode, 0, 0)
    }

    pub fn from_i64(mode: Mode, re: i64, im: i64) -> Self {
        match mode {
            Mode::Exact => Scalar::Exact(ExactComplex::from_i64(re, im)),
            Mode::Wrap64 => Scalar::Wrap64(Wrap64Complex::from_i64(re, im)),
            Mode::Float => Scalar::Float(FloatComplex::from_i64(re, im)),
        }
    }

    pub fn parse(mode: Mode, literal: &str) -> Result<Self> {
        Ok(match mode {
            Mode::Exact => Scalar::Exact(ExactComplex::parse_literal(literal)?),
            Mode::Wrap64 => Scalar::Wrap64(Wrap64Complex::parse_literal(literal)?),
            Mode::Float => Scalar::Float(FloatComplex::parse_literal(literal)?),
        })
    }

    fn mismatch(&self, other: &Self) -> EsymError {
        EsymError::ModeMismatch {
            left: self.mode(),
            right: other.mode(),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Ok(Scalar::Exact(a.add(b))),
            (Scalar::Wrap64(a), Scalar::Wrap64(b)) => Ok(Scalar::Wrap64(a.add(b))),
            (Scalar::Float(a), Scalar::Float(b)) => Ok(Scalar::Float(a.add(b))),
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Ok(Scalar::Exact(a.mul(b))),
            (Scalar::Wrap64(a), Scalar::Wrap64(b)) => Ok(Scalar::Wrap64(a.mul(b))),
            (Scalar::Float(a), Scalar::Float(b)) => Ok(Scalar::Float(a.mul(b))),
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn literal(&self) -> String {
        match self {
            Scalar::Exact(z) => z.literal(),
            Scalar::Wrap64(z) => z.literal(),
            Scalar::Float(z) => z.literal(),
        }
    }

    pub fn parts(&self) -> (String, String) {
        match self {
            Scalar::Exact(z) => z.parts(),
            Scalar::Wrap64(z) => z.parts(),
            Scalar::Float(z) => z.parts(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(z) => z.fmt(f),
            Scalar::Wrap64(z) => z.fmt(f),
            Scalar::Float(z) => z.fmt(f),
        }
    }
}

impl From<ExactComplex> for Scalar {
    fn from(z: ExactComplex) -> Self {
        Scalar::Exact(z)
    }
}

impl From<Wrap64Complex> for Scalar {
    fn from(z: Wrap64Complex) -> Self {
        Scalar::Wrap64(z)
    }
}

impl From<FloatComplex> for Scalar {
    fn from(z: FloatComplex) -> Self {
        Scalar::Float(z)
    }
}

/// Strip an optional leading `+`; reject anything that is not `-?digits`.
fn parse_integer_text(s: &str) -> Option<&str> {
    let s = s.trim();
    let s = s.strip_prefix('+').unwrap_or(s);
    let digits = s.strip_prefix('-').unwrap_or(s);
    (!digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())).then_some(s)
}

/// Split a complex literal into real and imaginary text.
pub(crate) fn split_literal(input: &str) -> Result<(String, String)> {
    let s = input.trim();
    if s.is_empty() {
        return Err(EsymError::parse(input, "empty literal"));
    }
    if let Some(inner) = s.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
        let (re, im) = inner
            .split_once(',')
            .ok_or_else(|| EsymError::parse(input, "expected (re,im)"))?;
        return Ok((re.trim().to_string(), im.trim().to_string()));
    }
    let Some(body) = s.strip_suffix('i') else {
        return Ok((s.to_string(), "0".to_string()));
    };
    // Last sign that is neither leading nor part of an exponent.
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&p| matches!(bytes[p], b'+' | b'-') && !matches!(bytes[p - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(p) => (&body[..p], &body[p..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => "1",
        "-" => "-1",
        other => other,
    };
    if re.ends_with(['+', '-']) || re.is_empty() {
        return Err(EsymError::parse(input, "malformed complex literal"));
    }
    Ok((re.to_string(), im.to_string()))
}

fn is_zero_text(s: &str) -> bool {
    matches!(s, "0" | "-0")
}

/// Inverse of [`split_literal`] on canonical decimal parts.
pub(crate) fn compose_literal(re: &str, im: &str) -> String {
    let im_zero = is_zero_text(im);
    let re_zero = is_zero_text(re);
    if im_zero {
        return if re_zero { "0".to_string() } else { re.to_string() };
    }
    let im_text = match im {
        "1" => "i".to_string(),
        "-1" => "-i".to_string(),
        other => format!("{other}i"),
    };
    if re_zero {
        im_text
    } else if im_text.starts_with('-') {
        format!("{re}{im_text}")
    } else {
        format!("{re}+{im_text}")
    }
}
