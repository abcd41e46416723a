//! Single-variable polynomials built and modified through their zeroes.
//!
//! Coefficients are stored leading-first: `[t_0, ..., t_n]` means
//! `f(z) = Σ t_k z^(n-k)`.

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{EsymError, Result};
use crate::esp::build_table;
use crate::scalar::ComplexRing;

#[derive(Debug, Clone, PartialEq)]
pub struct Poly1<S> {
    coeffs: Vec<S>,
}

impl<S: ComplexRing> Poly1<S> {
    /// Leading zeros are dropped; an empty or all-zero list is the zero
    /// polynomial `[0]`.
    pub fn new(coeffs: Vec<S>) -> Self {
        let lead = coeffs.iter().position(|c| !c.is_zero());
        let coeffs = match lead {
            Some(0) => coeffs,
            Some(i) => coeffs[i..].to_vec(),
            None => vec![S::zero()],
        };
        Self { coeffs }
    }

    pub fn constant(c: S) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<S> {
        self.coeffs
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    pub fn leading(&self) -> &S {
        &self.coeffs[0]
    }

    /// Horner evaluation: `n` multiplications and `n` additions.
    pub fn eval(&self, z: &S) -> S {
        let (first, rest) = self.coeffs.split_first().expect("never empty");
        rest.iter()
            .fold(first.clone(), |acc, t| acc.mul(z).add(t))
    }

    /// Multiply by `(z + x)`: `s_0 = t_0`, `s_k = t_k + x·t_{k-1}`,
    /// `s_{n+1} = x·t_n`.
    pub fn mul_linear(&self, x: &S) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let n = self.coeffs.len();
        let mut out = Vec::with_capacity(n + 1);
        out.push(self.coeffs[0].clone());
        for k in 1..n {
            out.push(self.coeffs[k].add(&x.mul(&self.coeffs[k - 1])));
        }
        out.push(x.mul(&self.coeffs[n - 1]));
        Self { coeffs: out }
    }

    /// Adjoin the zero `lambda`: multiply by `(z - lambda)`.
    pub fn insert_zero(&self, lambda: &S) -> Self {
        self.mul_linear(&lambda.neg())
    }

    /// Synthetic division by `(z - lambda)`.
    ///
    /// Returns `(q, r)` with `p(z) = q(z)(z - lambda) + r`; `r = p(lambda)`.
    pub fn deflate(&self, lambda: &S) -> Result<(Self, S)> {
        if self.degree() == 0 {
            return Err(EsymError::ConstantDeflation);
        }
        let mut acc = self.coeffs[0].clone();
        let mut quotient = Vec::with_capacity(self.coeffs.len() - 1);
        for t in &self.coeffs[1..] {
            quotient.push(acc.clone());
            acc = t.add(&acc.mul(lambda));
        }
        Ok((Self { coeffs: quotient }, acc))
    }

    /// Full polynomial product (convolution of coefficient lists).
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = vec![S::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(out)
    }

    /// Human-readable form such as `z^5 + (-2+i) z^4 - 2i z^3 + 3i`.
    pub fn pretty(&self) -> String {
        let n = self.degree();
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (negative, body) = signed_body(c);
            let power = n - k;
            let mut term = String::new();
            if power == 0 || body != "1" {
                term.push_str(&body);
            }
            if power > 0 {
                if !term.is_empty() {
                    term.push(' ');
                }
                term.push('z');
                if power > 1 {
                    term.push_str(&format!("^{power}"));
                }
            }
            match (out.is_empty(), negative) {
                (true, false) => {}
                (true, true) => out.push('-'),
                (false, false) => out.push_str(" + "),
                (false, true) => out.push_str(" - "),
            }
            out.push_str(&term);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// Split a coefficient into a sign and an unsigned printable body.
fn signed_body<S: ComplexRing>(c: &S) -> (bool, String) {
    let (re, im) = c.parts();
    let zero = |s: &str| matches!(s, "0" | "-0");
    if !zero(&re) && !zero(&im) {
        return (false, format!("({})", c.literal()));
    }
    let lit = c.literal();
    match lit.strip_prefix('-') {
        Some(rest) => (true, rest.to_string()),
        None => (false, lit),
    }
}

impl<S: ComplexRing> Serialize for Poly1<S> {
    fn serialize<Z: Serializer>(&self, serializer: Z) -> std::result::Result<Z::Ok, Z::Error> {
        let coeffs: Vec<[String; 2]> = self
            .coeffs
            .iter()
            .map(|c| {
                let (re, im) = c.parts();
                [re, im]
            })
            .collect();
        let mut s = serializer.serialize_struct("Poly1", 3)?;
        s.serialize_field("convention", "t0-leading")?;
        s.serialize_field("mode", S::MODE.as_str())?;
        s.serialize_field("coeffs", &coeffs)?;
        s.end()
    }
}

/// Monic polynomial with the given zeroes: `t_k = ε_k(-λ_1, ..., -λ_n)`.
pub fn from_roots<S: ComplexRing>(roots: &[S]) -> Poly1<S> {
    if roots.is_empty() {
        return Poly1::constant(S::one());
    }
    let negated: Vec<S> = roots.iter().map(ComplexRing::neg).collect();
    let table = build_table(&negated).expect("non-empty");
    let mut coeffs = Vec::with_capacity(roots.len() + 1);
    coeffs.push(S::one());
    coeffs.extend_from_slice(table.last_row());
    Poly1 { coeffs }
}
