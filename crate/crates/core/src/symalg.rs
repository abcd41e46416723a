//! Polynomials in the generator symbols `e1..en` of a symmetric subalgebra.
//!
//! A [`GenPoly`] over ambient `n` is a sparse map from generator monomials to
//! Gaussian-integer coefficients. Generator monomials are treated as a linear
//! basis, so equality of canonical forms is equality of polynomials.
//!
//! Maps provided here:
//!
//! * [`shift_u`]: linear, kills constants, lowers every factor index by one
//!   (a factor lowered to `e0` is the identity and disappears).
//! * [`alpha_gen`]: `e_k ↦ e_k + e_{k-1}·g` into ambient `n+1`, where
//!   generator `n+1` stands for the adjoined variable `y`.
//! * [`phi`]: the linear multiplicative extension of `alpha_gen`.
//!
//! Polynomials produced by `alpha_gen`/`phi` live in the *extended basis*
//! (`e1..en` are still the symmetric values of `x1..xn`, `e{n+1}` is `y`);
//! evaluate them with [`eval_extended`], not [`eval_genpoly`].

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::Zero;

use crate::error::{EsymError, Result};
use crate::esp::{build_table, direct_eps};
use crate::scalar::{compose_literal, split_literal, ComplexRing, ExactComplex};

/// Ordered set of distinct variable names.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VarSet {
    names: Vec<String>,
}

impl VarSet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut out = VarSet::default();
        for name in names {
            let name = name.into();
            if out.contains(&name) {
                return Err(EsymError::parse(name, "duplicate variable name"));
            }
            out.names.push(name);
        }
        Ok(out)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn contains(&self, name: &str) -> bool {
        self.names.iter().any(|n| n == name)
    }

    /// Ordered union: `self`'s names, then `other`'s names not already
    /// present. Shared names are identified and counted once.
    pub fn merge(&self, other: &VarSet) -> VarSet {
        let mut names = self.names.clone();
        names.extend(other.names.iter().filter(|n| !self.contains(n)).cloned());
        VarSet { names }
    }

    /// Look up this set's values, in order, from a named assignment.
    pub fn project(&self, values: &HashMap<String, ExactComplex>) -> Result<Vec<ExactComplex>> {
        self.names
            .iter()
            .map(|n| {
                values
                    .get(n)
                    .cloned()
                    .ok_or_else(|| EsymError::parse(n.clone(), "no value for variable"))
            })
            .collect()
    }
}

/// `merge_varsets(a, b)`: see [`VarSet::merge`].
pub fn merge_varsets(a: &VarSet, b: &VarSet) -> VarSet {
    a.merge(b)
}

/// Action of a generator of `S_x` on a generator of `S_y`: the product
/// `ε_k(x) · ε_l(y)` as a function on the merged variable set.
///
/// Returns the merged set and the value at `values`, which must name every
/// variable of the merged set.
pub fn generator_action(
    k: usize,
    xvars: &VarSet,
    l: usize,
    yvars: &VarSet,
    values: &HashMap<String, ExactComplex>,
) -> Result<(VarSet, ExactComplex)> {
    let merged = xvars.merge(yvars);
    merged.project(values)?;
    let left = direct_eps(&xvars.project(values)?, k);
    let right = direct_eps(&yvars.project(values)?, l);
    Ok((merged, left.mul(&right)))
}

/// Sorted multiset of generator indices; empty is the constant monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GenMonomial(Vec<usize>);

impl GenMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn new(mut factors: Vec<usize>) -> Self {
        factors.sort_unstable();
        Self(factors)
    }

    pub fn factors(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_constant(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_index(&self) -> usize {
        self.0.last().copied().unwrap_or(0)
    }

    pub fn contains(&self, index: usize) -> bool {
        self.0.binary_search(&index).is_ok()
    }

    /// Multiset union.
    pub fn product(&self, other: &GenMonomial) -> GenMonomial {
        let mut f = Vec::with_capacity(self.degree() + other.degree());
        f.extend_from_slice(&self.0);
        f.extend_from_slice(&other.0);
        GenMonomial::new(f)
    }
}

impl Ord for GenMonomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for GenMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for GenMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.0.len() {
            let idx = self.0[i];
            let run = self.0[i..].iter().take_while(|&&j| j == idx).count();
            if !first {
                f.write_str("*")?;
            }
            write!(f, "e{idx}")?;
            if run > 1 {
                write!(f, "^{run}")?;
            }
            first = false;
            i += run;
        }
        Ok(())
    }
}

/// Polynomial in generators `e1..en` with Gaussian-integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenPoly {
    n: usize,
    terms: BTreeMap<GenMonomial, ExactComplex>,
}

impl GenPoly {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: ExactComplex) -> Self {
        Self::monomial(n, GenMonomial::one(), c).expect("constant fits any ambient")
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, ExactComplex::one())
    }

    /// The single generator `e_k`, `1 <= k <= n`.
    pub fn generator(n: usize, k: usize) -> Result<Self> {
        Self::monomial(n, GenMonomial::new(vec![k]), ExactComplex::one())
    }

    pub fn monomial(n: usize, m: GenMonomial, c: ExactComplex) -> Result<Self> {
        check_indices(n, &m)?;
        let mut p = Self::zero(n);
        p.add_term(m, c);
        Ok(p)
    }

    /// Build from raw `(factors, coefficient)` pairs, merging duplicates.
    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<usize>, ExactComplex)>,
    {
        let mut p = Self::zero(n);
        for (factors, c) in terms {
            let m = GenMonomial::new(factors);
            check_indices(n, &m)?;
            p.add_term(m, c);
        }
        Ok(p)
    }

    /// Ambient generator count.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&GenMonomial, &ExactComplex)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &GenMonomial) -> ExactComplex {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(GenMonomial::degree).max().unwrap_or(0)
    }

    /// Same polynomial viewed in a larger ambient algebra.
    pub fn with_ambient(&self, n: usize) -> Result<Self> {
        let max = self.terms.keys().map(GenMonomial::max_index).max().unwrap_or(0);
        if max > n {
            return Err(EsymError::IndexOutOfRange {
                what: "generator",
                index: max,
                bound: n,
            });
        }
        Ok(Self {
            n,
            terms: self.terms.clone(),
        })
    }

    fn add_term(&mut self, m: GenMonomial, c: ExactComplex) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing = existing.add(&c);
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn check_ambient(&self, other: &GenPoly) -> Result<()> {
        if self.n != other.n {
            return Err(EsymError::AmbientMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &GenPoly) -> Result<GenPoly> {
        self.check_ambient(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> GenPoly {
        GenPoly {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &GenPoly) -> Result<GenPoly> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &ExactComplex) -> GenPoly {
        let mut out = GenPoly::zero(self.n);
        for (m, d) in &self.terms {
            out.add_term(m.clone(), d.mul(c));
        }
        out
    }

    pub fn mul(&self, other: &GenPoly) -> Result<GenPoly> {
        self.check_ambient(other)?;
        let mut out = GenPoly::zero(self.n);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.product(mb), ca.mul(cb));
            }
        }
        Ok(out)
    }

    /// Parse the printed form, e.g. `3 + 2*e1*e2 - e3^2` or `(1+2i)*e1`.
    ///
    /// With `n = None` the ambient count is the largest index used.
    pub fn parse(text: &str, n: Option<usize>) -> Result<GenPoly> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(EsymError::parse(text, "empty polynomial"));
        }
        let mut raw = Vec::new();
        for (negative, body) in split_terms(&compact)? {
            let (factors, mut c) = parse_term(body)?;
            if negative {
                c = c.neg();
            }
            raw.push((factors, c));
        }
        let max = raw
            .iter()
            .flat_map(|(f, _)| f.iter().copied())
            .max()
            .unwrap_or(0);
        let n = n.unwrap_or(max);
        GenPoly::from_terms(n, raw)
    }
}

/// `gp_add`.
pub fn gp_add(p: &GenPoly, q: &GenPoly) -> Result<GenPoly> {
    p.add(q)
}

/// `gp_mul`.
pub fn gp_mul(p: &GenPoly, q: &GenPoly) -> Result<GenPoly> {
    p.mul(q)
}

fn check_indices(n: usize, m: &GenMonomial) -> Result<()> {
    match m.factors().iter().find(|&&k| k == 0 || k > n) {
        Some(&k) => Err(EsymError::IndexOutOfRange {
            what: "generator",
            index: k,
            bound: n,
        }),
        None => Ok(()),
    }
}

/// Coefficient text for printing; complex values are parenthesized.
fn coefficient_text(c: &ExactComplex) -> String {
    if c.im.is_zero() {
        return c.re.to_string();
    }
    let lit = compose_literal(&c.re.to_string(), &c.im.to_string());
    if c.re.is_zero() {
        lit
    } else {
        format!("({lit})")
    }
}

impl fmt::Display for GenPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let one = ExactComplex::one();
            let text = if m.is_constant() {
                coefficient_text(c)
            } else if *c == one {
                m.to_string()
            } else if *c == one.neg() {
                format!("-{m}")
            } else {
                format!("{}*{m}", coefficient_text(c))
            };
            match (i, text.strip_prefix('-')) {
                (0, _) => f.write_str(&text)?,
                (_, Some(rest)) => write!(f, " - {rest}")?,
                (_, None) => write!(f, " + {text}")?,
            }
        }
        Ok(())
    }
}

/// Split at top-level `+`/`-` into `(negative, body)` pairs.
fn split_terms(s: &str) -> Result<Vec<(bool, &str)>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let mut negative = false;
    let bytes = s.as_bytes();
    for (i, &b) in bytes.iter().enumerate() {
        match b {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'+' | b'-' if depth == 0 => {
                if i > start {
                    out.push((negative, &s[start..i]));
                } else if i > 0 {
                    return Err(EsymError::parse(s, "dangling sign"));
                }
                negative = b == b'-';
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(EsymError::parse(s, "unbalanced parentheses"));
    }
    if start >= s.len() {
        return Err(EsymError::parse(s, "dangling sign"));
    }
    out.push((negative, &s[start..]));
    Ok(out)
}

fn parse_term(body: &str) -> Result<(Vec<usize>, ExactComplex)> {
    let mut factors = Vec::new();
    let mut c = ExactComplex::one();
    for factor in body.split('*') {
        if let Some(rest) = factor.strip_prefix('e') {
            let (idx, pow) = match rest.split_once('^') {
                Some((i, p)) => (i, p),
                None => (rest, "1"),
            };
            let idx: usize = idx
                .parse()
                .map_err(|_| EsymError::parse(factor, "bad generator index"))?;
            let pow: usize = pow
                .parse()
                .map_err(|_| EsymError::parse(factor, "bad exponent"))?;
            factors.extend(std::iter::repeat_n(idx, pow));
        } else {
            let literal = factor
                .strip_prefix('(')
                .and_then(|r| r.strip_suffix(')'))
                .filter(|inner| !inner.contains(','))
                .unwrap_or(factor);
            let (re, im) = split_literal(literal)?;
            let z = ExactComplex::from_parts(&re, &im)
                .map_err(|_| EsymError::parse(factor, "bad coefficient"))?;
            c = c.mul(&z);
        }
    }
    Ok((factors, c))
}

/// The shift: linear, constants to zero, each factor index lowered by one
/// with `e0 = 1` dropped.
pub fn shift_u(p: &GenPoly) -> GenPoly {
    let mut out = GenPoly::zero(p.n);
    for (m, c) in p.terms() {
        if m.is_constant() {
            continue;
        }
        let lowered: Vec<usize> = m
            .factors()
            .iter()
            .filter(|&&k| k > 1)
            .map(|&k| k - 1)
            .collect();
        out.add_term(GenMonomial::new(lowered), c.clone());
    }
    out
}

/// `α(e_k) = e_k + e_{k-1}·e_{n+1}` in ambient `n+1`.
pub fn alpha_gen(k: usize, n: usize) -> Result<GenPoly> {
    if k == 0 || k > n {
        return Err(EsymError::IndexOutOfRange {
            what: "generator",
            index: k,
            bound: n,
        });
    }
    let top = n + 1;
    let lower = if k == 1 { vec![top] } else { vec![k - 1, top] };
    GenPoly::from_terms(
        top,
        [(vec![k], ExactComplex::one()), (lower, ExactComplex::one())],
    )
}

/// Linear multiplicative extension of [`alpha_gen`]; constants are fixed.
pub fn phi(p: &GenPoly) -> GenPoly {
    let n = p.n;
    let images: Vec<GenPoly> = (1..=n)
        .map(|k| alpha_gen(k, n).expect("index in range"))
        .collect();
    let mut out = GenPoly::zero(n + 1);
    for (m, c) in p.terms() {
        let mut image = GenPoly::constant(n + 1, c.clone());
        for &k in m.factors() {
            image = image.mul(&images[k - 1]).expect("same ambient");
        }
        out = out.add(&image).expect("same ambient");
    }
    out
}

/// Generator set of the extended algebra: `[α(e_1), ..., α(e_n)]` and the
/// complementary generator `e_n·e_{n+1}`.
pub fn generator_partition(n: usize) -> Result<(Vec<GenPoly>, GenPoly)> {
    if n == 0 {
        return Err(EsymError::IndexOutOfRange {
            what: "generator count",
            index: 0,
            bound: usize::MAX,
        });
    }
    let image = (1..=n).map(|k| alpha_gen(k, n)).collect::<Result<Vec<_>>>()?;
    let complement = GenPoly::from_terms(n + 1, [(vec![n, n + 1], ExactComplex::one())])?;
    Ok((image, complement))
}

/// Split into the part free of the top generator `e_n` and the part whose
/// every monomial contains it.
pub fn split_by_top_generator(p: &GenPoly) -> (GenPoly, GenPoly) {
    let top = p.n;
    let mut free = GenPoly::zero(p.n);
    let mut with_top = GenPoly::zero(p.n);
    for (m, c) in p.terms() {
        if top > 0 && m.contains(top) {
            with_top.add_term(m.clone(), c.clone());
        } else {
            free.add_term(m.clone(), c.clone());
        }
    }
    (free, with_top)
}

fn eval_with(p: &GenPoly, generator_values: &[ExactComplex]) -> ExactComplex {
    let mut total = ExactComplex::zero();
    for (m, c) in p.terms() {
        let term = m
            .factors()
            .iter()
            .fold(c.clone(), |acc, &k| acc.mul(&generator_values[k - 1]));
        total = total.add(&term);
    }
    total
}

/// Evaluate with `e_k ↦ ε_k(xs)`; `xs` must have exactly `n` values.
pub fn eval_genpoly(p: &GenPoly, xs: &[ExactComplex]) -> Result<ExactComplex> {
    if xs.len() != p.n {
        return Err(EsymError::LengthMismatch {
            expected: p.n,
            got: xs.len(),
        });
    }
    if xs.is_empty() {
        return Ok(p.coeff(&GenMonomial::one()));
    }
    let table = build_table(xs)?;
    Ok(eval_with(p, table.last_row()))
}

/// Evaluate a polynomial of the extended basis: `e_k ↦ ε_k(xs)` for
/// `k <= n` and `e_{n+1} ↦ y`, where `p` has ambient `xs.len() + 1`.
pub fn eval_extended(p: &GenPoly, xs: &[ExactComplex], y: &ExactComplex) -> Result<ExactComplex> {
    if p.n != xs.len() + 1 {
        return Err(EsymError::LengthMismatch {
            expected: p.n.saturating_sub(1),
            got: xs.len(),
        });
    }
    let mut values: Vec<ExactComplex> = if xs.is_empty() {
        Vec::new()
    } else {
        build_table(xs)?.last_row().to_vec()
    };
    values.push(y.clone());
    Ok(eval_with(p, &values))
}

/// Evaluated generator partition for the variable set `xs` with the `j`-th
/// value (1-based) playing the adjoined variable: the `n` values of
/// `α(e_k)` followed by the complementary generator.
///
/// For every `j` these are the elementary symmetric values of all of `xs`.
pub fn partition_values(xs: &[ExactComplex], j: usize) -> Result<Vec<ExactComplex>> {
    let total = xs.len();
    if j == 0 || j > total {
        return Err(EsymError::IndexOutOfRange {
            what: "adjoined index",
            index: j,
            bound: total,
        });
    }
    if total < 2 {
        return Err(EsymError::LengthMismatch {
            expected: 2,
            got: total,
        });
    }
    let y = &xs[j - 1];
    let others: Vec<ExactComplex> = xs
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != j - 1)
        .map(|(_, x)| x.clone())
        .collect();
    let (image, complement) = generator_partition(others.len())?;
    image
        .iter()
        .chain(std::iter::once(&complement))
        .map(|g| eval_extended(g, &others, y))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(c: i64) -> ExactComplex {
        ExactComplex::real(c)
    }

    fn p(text: &str, n: usize) -> GenPoly {
        GenPoly::parse(text, Some(n)).unwrap()
    }

    fn reals(v: &[i64]) -> Vec<ExactComplex> {
        v.iter().map(|&r| int(r)).collect()
    }

    #[test]
    fn add_examples() {
        assert_eq!(gp_add(&p("e1", 3), &p("e1", 3)).unwrap(), p("2*e1", 3));
        assert_eq!(gp_add(&p("e1 + e2", 3), &p("-e2", 3)).unwrap(), p("e1", 3));
        let sum = gp_add(&p("3", 3), &p("e2*e2", 3)).unwrap();
        assert_eq!(sum.to_string(), "3 + e2^2");
        assert_eq!(sum.len(), 2);
    }

    #[test]
    fn ambient_mismatch() {
        assert!(matches!(
            gp_add(&p("e1", 2), &p("e1", 3)),
            Err(EsymError::AmbientMismatch { left: 2, right: 3 })
        ));
        assert!(gp_mul(&p("e1", 2), &p("e1", 3)).is_err());
    }

    #[test]
    fn mul_examples() {
        assert_eq!(gp_mul(&p("e1", 2), &p("e2", 2)).unwrap(), p("e1*e2", 2));
        assert_eq!(
            gp_mul(&p("1 + e1", 2), &p("1 - e1", 2)).unwrap(),
            p("1 - e1^2", 2)
        );
    }

    #[test]
    fn mul_matches_pointwise_evaluation() {
        let a = p("3 + 2*e1*e2 - e3^2", 3);
        let b = p("(1+2i)*e1 - 4*e2 + i", 3);
        let xs = [ExactComplex::new(2, -1), int(3), ExactComplex::new(-1, 4)];
        let lhs = eval_genpoly(&a.mul(&b).unwrap(), &xs).unwrap();
        let rhs = eval_genpoly(&a, &xs)
            .unwrap()
            .mul(&eval_genpoly(&b, &xs).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn shift_examples() {
        assert_eq!(shift_u(&p("e1", 3)), GenPoly::one(3));
        assert_eq!(shift_u(&p("7", 3)), GenPoly::zero(3));
        assert_eq!(shift_u(&p("e2*e3 + 5", 3)), p("e1*e2", 3));
        // Lowered terms can merge.
        assert_eq!(shift_u(&p("e1*e2 + e2", 3)), p("2*e1", 3));
    }

    #[test]
    fn shift_is_not_unital() {
        let one = GenPoly::one(2);
        let u1 = shift_u(&one);
        assert!(u1.is_zero());
        assert_ne!(shift_u(&one.mul(&one).unwrap()), GenPoly::one(2));
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha_gen(1, 3).unwrap(), p("e1 + e4", 4));
        assert_eq!(alpha_gen(3, 3).unwrap(), p("e3 + e2*e4", 4));
        assert!(alpha_gen(0, 3).is_err());
        assert!(alpha_gen(4, 3).is_err());
    }

    #[test]
    fn alpha_evaluates_to_extended_eps() {
        let xs = [ExactComplex::new(1, 2), int(-3), ExactComplex::new(0, 5)];
        let y = ExactComplex::new(4, -1);
        let mut all = xs.to_vec();
        all.push(y.clone());
        for k in 1..=3 {
            let v = eval_extended(&alpha_gen(k, 3).unwrap(), &xs, &y).unwrap();
            assert_eq!(v, direct_eps(&all, k));
        }
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&GenPoly::one(2)), GenPoly::one(3));
        let sq = phi(&p("e1^2", 2));
        let a1 = alpha_gen(1, 2).unwrap();
        assert_eq!(sq, a1.mul(&a1).unwrap());
        assert_eq!(sq, p("e1^2 + 2*e1*e3 + e3^2", 3));
    }

    #[test]
    fn phi_evaluation_matches_lifted_polynomial() {
        let q = p("2 - e1*e2 + (1-i)*e2^2", 2);
        let xs = [int(3), ExactComplex::new(-2, 1)];
        let y = ExactComplex::new(1, 1);
        let lhs = eval_extended(&phi(&q), &xs, &y).unwrap();
        let all = [xs[0].clone(), xs[1].clone(), y];
        let rhs = eval_genpoly(&q.with_ambient(3).unwrap(), &all).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn partition_examples() {
        let (image, complement) = generator_partition(3).unwrap();
        assert_eq!(image.len(), 3);
        let xs = reals(&[2, 3, 5]);
        let y = int(7);
        assert_eq!(eval_extended(&complement, &xs, &y).unwrap(), int(210));

        let (image, complement) = generator_partition(1).unwrap();
        assert_eq!(image, vec![p("e1 + e2", 2)]);
        assert_eq!(complement, p("e1*e2", 2));
        let (x, y) = (int(4), int(9));
        assert_eq!(eval_extended(&image[0], std::slice::from_ref(&x), &y).unwrap(), int(13));
        assert_eq!(eval_extended(&complement, &[x], &y).unwrap(), int(36));

        assert!(generator_partition(0).is_err());
    }

    #[test]
    fn partition_values_for_every_adjoined_index() {
        let xs = [int(1), ExactComplex::new(2, -1), int(-3), ExactComplex::new(0, 2)];
        let expected: Vec<_> = (1..=4).map(|k| direct_eps(&xs, k)).collect();
        for j in 1..=4 {
            assert_eq!(partition_values(&xs, j).unwrap(), expected, "j = {j}");
        }
        assert!(partition_values(&xs, 5).is_err());
    }

    #[test]
    fn split_examples() {
        assert_eq!(split_by_top_generator(&p("e1 + e2", 2)), (p("e1", 2), p("e2", 2)));
        assert_eq!(
            split_by_top_generator(&p("3", 2)),
            (p("3", 2), GenPoly::zero(2))
        );
        let whole = alpha_gen(2, 2).unwrap().mul(&p("e3", 3)).unwrap();
        assert_eq!(split_by_top_generator(&whole), (GenPoly::zero(3), whole.clone()));
    }

    #[test]
    fn merge_examples() {
        let v = |names: &[&str]| VarSet::new(names.iter().copied()).unwrap();
        assert_eq!(merge_varsets(&v(&["x1", "x2"]), &v(&["y"])), v(&["x1", "x2", "y"]));
        assert_eq!(merge_varsets(&v(&["x1", "x2"]), &v(&["x2", "y"])), v(&["x1", "x2", "y"]));
        assert_eq!(merge_varsets(&v(&["x"]), &v(&["x"])), v(&["x"]));
        assert!(VarSet::new(["a", "a"]).is_err());
    }

    #[test]
    fn generator_action_on_shared_variables() {
        let x = VarSet::new(["a", "b"]).unwrap();
        let y = VarSet::new(["b", "c"]).unwrap();
        let values: HashMap<String, ExactComplex> =
            [("a", 2), ("b", 3), ("c", 5)].map(|(k, v)| (k.to_string(), int(v))).into();
        let (merged, v) = generator_action(1, &x, 2, &y, &values).unwrap();
        assert_eq!(merged.names(), ["a", "b", "c"]);
        assert_eq!(v, int((2 + 3) * 15));
        let missing: HashMap<String, ExactComplex> = HashMap::new();
        assert!(generator_action(1, &x, 1, &y, &missing).is_err());
    }

    #[test]
    fn eval_examples() {
        assert_eq!(eval_genpoly(&p("e1", 3), &reals(&[1, 2, 3])).unwrap(), int(6));
        assert_eq!(
            eval_genpoly(&p("e1*e2 - e3", 3), &reals(&[1, 1, 1])).unwrap(),
            int(8)
        );
        assert_eq!(eval_genpoly(&p("1", 2), &reals(&[5, 6])).unwrap(), int(1));
        assert!(matches!(
            eval_genpoly(&p("e1", 3), &reals(&[1, 2])),
            Err(EsymError::LengthMismatch { expected: 3, got: 2 })
        ));
    }

    #[test]
    fn printing() {
        assert_eq!(p("3 + 2*e1*e2 - e3^2", 3).to_string(), "3 + 2*e1*e2 - e3^2");
        assert_eq!(p("e3^2 - e3^2", 3).to_string(), "0");
        assert_eq!(p("-e1 + (2-i)*e2 + 3i*e1*e1", 2).to_string(), "-e1 + (2-i)*e2 + 3i*e1^2");
        assert_eq!(p("-i", 2).to_string(), "-i");
        assert_eq!(p("e2 + e1*e1 + e1", 2).to_string(), "e1 + e2 + e1^2");
    }

    #[test]
    fn parse_errors() {
        for bad in ["", "e", "e1 +", "+ - e1", "2*(1+i", "e0", "e1^x", "q"] {
            assert!(GenPoly::parse(bad, None).is_err(), "{bad:?}");
        }
        assert!(GenPoly::parse("e4", Some(3)).is_err());
        assert_eq!(GenPoly::parse("e4", None).unwrap().n(), 4);
        assert_eq!(GenPoly::parse("-e1", None).unwrap().to_string(), "-e1");
        assert_eq!(GenPoly::parse("(2,-1)*e1", None).unwrap().to_string(), "(2-i)*e1");
    }
}
