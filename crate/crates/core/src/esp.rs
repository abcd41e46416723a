//! Elementary symmetric polynomial evaluation.
//!
//! [`build_table`] computes every `ε_k(x_1..x_i)` with the prefix recurrence
//!
//! ```text
//! e[i][k] = e[i-1][k] + e[i-1][k-1] * x_i,   e[.][0] = 1,  e[i-1][i] = 0
//! ```
//!
//! in `n(n+1)/2` entries. [`direct_eps`] is the exponential subset
//! expansion, kept as an independent oracle.

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{EsymError, Result};
use crate::scalar::ComplexRing;

/// Values for `x_1..x_n`, optionally named.
#[derive(Debug, Clone, PartialEq)]
pub struct Assignment<S> {
    values: Vec<S>,
    labels: Option<Vec<String>>,
}

impl<S: ComplexRing> Assignment<S> {
    pub fn new(values: Vec<S>) -> Result<Self> {
        if values.is_empty() {
            return Err(EsymError::EmptyAssignment);
        }
        Ok(Self {
            values,
            labels: None,
        })
    }

    pub fn with_labels(values: Vec<S>, labels: Vec<String>) -> Result<Self> {
        if labels.len() != values.len() {
            return Err(EsymError::LabelMismatch {
                labels: labels.len(),
                values: values.len(),
            });
        }
        let mut a = Self::new(values)?;
        a.labels = Some(labels);
        Ok(a)
    }

    pub fn values(&self) -> &[S] {
        &self.values
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn table(&self) -> EpsTable<S> {
        build_table(&self.values).expect("assignment is non-empty")
    }
}

impl<S> AsRef<[S]> for Assignment<S> {
    fn as_ref(&self) -> &[S] {
        &self.values
    }
}

/// Triangular table of `ε_k` over the prefixes of an assignment.
///
/// Indexing is 1-based: `query(i, k)` is `ε_k(x_1, ..., x_i)`.
#[derive(Debug, Clone, PartialEq)]
pub struct EpsTable<S> {
    rows: Vec<Vec<S>>,
}

impl<S: ComplexRing> EpsTable<S> {
    /// Number of variables.
    pub fn n(&self) -> usize {
        self.rows.len()
    }

    /// Total stored entries, always `n(n+1)/2`.
    pub fn entry_count(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Row `i`: `[ε_1, ..., ε_i]` over the first `i` variables.
    pub fn row(&self, i: usize) -> Result<&[S]> {
        if i == 0 || i > self.n() {
            return Err(EsymError::IndexOutOfRange {
                what: "row",
                index: i,
                bound: self.n(),
            });
        }
        Ok(&self.rows[i - 1])
    }

    /// Row `n`, the elementary symmetric values of the whole assignment.
    pub fn last_row(&self) -> &[S] {
        self.rows.last().expect("tables are never empty")
    }

    pub fn rows(&self) -> impl Iterator<Item = &[S]> {
        self.rows.iter().map(Vec::as_slice)
    }

    /// `ε_k` over the first `i` variables, with `ε_0 = 1` and `ε_k = 0`
    /// for `k > i`.
    pub fn query(&self, i: usize, k: usize) -> Result<S> {
        let row = self.row(i)?;
        Ok(boundary_get(row, k))
    }

    /// Builds a table from rows that were produced elsewhere. Rows must have
    /// lengths `1, 2, ..., n`.
    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(EsymError::EmptyAssignment);
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != i + 1 {
                return Err(EsymError::LengthMismatch {
                    expected: i + 1,
                    got: row.len(),
                });
            }
        }
        Ok(Self { rows })
    }
}

impl<S: ComplexRing> Serialize for EpsTable<S> {
    fn serialize<Z: Serializer>(&self, serializer: Z) -> std::result::Result<Z::Ok, Z::Error> {
        let rows: Vec<Vec<[String; 2]>> = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|z| {
                        let (re, im) = z.parts();
                        [re, im]
                    })
                    .collect()
            })
            .collect();
        let mut s = serializer.serialize_struct("EpsTable", 3)?;
        s.serialize_field("n", &self.n())?;
        s.serialize_field("mode", S::MODE.as_str())?;
        s.serialize_field("rows", &rows)?;
        s.end()
    }
}

/// `row[k-1]` with the boundary conventions applied.
fn boundary_get<S: ComplexRing>(row: &[S], k: usize) -> S {
    match k {
        0 => S::one(),
        k if k > row.len() => S::zero(),
        k => row[k - 1].clone(),
    }
}

/// Build the full prefix table with `O(n^2)` ring operations.
pub fn build_table<S: ComplexRing>(xs: &[S]) -> Result<EpsTable<S>> {
    let (first, rest) = xs.split_first().ok_or(EsymError::EmptyAssignment)?;
    let mut rows: Vec<Vec<S>> = Vec::with_capacity(xs.len());
    rows.push(vec![first.clone()]);
    for x in rest {
        let prev = rows.last().expect("at least one row");
        let mut row = Vec::with_capacity(prev.len() + 1);
        // ε_1: previous ε_1 plus x (ε_0 = 1).
        row.push(prev[0].add(x));
        for k in 2..=prev.len() {
            row.push(prev[k - 1].add(&prev[k - 2].mul(x)));
        }
        // ε_i: previous ε_{i-1} times x (previous ε_i = 0).
        row.push(prev[prev.len() - 1].mul(x));
        rows.push(row);
    }
    Ok(EpsTable { rows })
}

/// `ε_k(xs)` by summing over all increasing index tuples.
///
/// Total in `k`: returns 1 for `k = 0` and 0 for `k > n`. Tuples are walked
/// with a combinatorial successor, so memory is `O(k)`.
pub fn direct_eps<S: ComplexRing>(xs: &[S], k: usize) -> S {
    let n = xs.len();
    if k == 0 {
        return S::one();
    }
    if k > n {
        return S::zero();
    }
    let mut idx: Vec<usize> = (0..k).collect();
    let mut total = S::zero();
    loop {
        let term = idx[1..]
            .iter()
            .fold(xs[idx[0]].clone(), |acc, &j| acc.mul(&xs[j]));
        total = total.add(&term);

        // Rightmost position that can still advance.
        let Some(pos) = (0..k).rev().find(|&p| idx[p] < n - k + p) else {
            return total;
        };
        idx[pos] += 1;
        for p in pos + 1..k {
            idx[p] = idx[p - 1] + 1;
        }
    }
}

/// Both sides of the omit-one identity
/// `ε_k(xs) = ε_k(xs \ x_i0) + ε_{k-1}(xs \ x_i0) * x_i0`, by direct expansion.
pub fn eps_omit_identity<S: ComplexRing>(xs: &[S], i0: usize, k: usize) -> Result<(S, S)> {
    let n = xs.len();
    if i0 == 0 || i0 > n {
        return Err(EsymError::IndexOutOfRange {
            what: "omitted index",
            index: i0,
            bound: n,
        });
    }
    if k == 0 {
        return Err(EsymError::IndexOutOfRange {
            what: "degree",
            index: k,
            bound: n,
        });
    }
    let omitted = &xs[i0 - 1];
    let others: Vec<S> = xs
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != i0 - 1)
        .map(|(_, x)| x.clone())
        .collect();
    let lhs = direct_eps(xs, k);
    let rhs = direct_eps(&others, k).add(&direct_eps(&others, k - 1).mul(omitted));
    Ok((lhs, rhs))
}
