//! Random inputs for property checks. Everything is driven by a caller
//! supplied RNG so runs are reproducible from a seed.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::scalar::ExactComplex;
use crate::symalg::{GenMonomial, GenPoly};

/// Gaussian integer with both parts uniform in `[-bound, bound]`.
pub fn gaussian<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> ExactComplex {
    ExactComplex::new(rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound))
}

pub fn gaussians<R: Rng + ?Sized>(rng: &mut R, n: usize, bound: i64) -> Vec<ExactComplex> {
    (0..n).map(|_| gaussian(rng, bound)).collect()
}

/// Non-constant monomial over `e1..en` with degree in `1..=max_degree`.
pub fn monomial<R: Rng + ?Sized>(rng: &mut R, n: usize, max_degree: usize) -> GenMonomial {
    let degree = rng.gen_range(1..=max_degree);
    GenMonomial::new((0..degree).map(|_| rng.gen_range(1..=n)).collect())
}

/// Sparse polynomial with up to `max_terms` terms (constants included) of
/// degree at most `max_degree`.
pub fn genpoly<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    max_degree: usize,
    max_terms: usize,
    coeff_bound: i64,
) -> GenPoly {
    let terms = rng.gen_range(0..=max_terms);
    let raw = (0..terms).map(|_| {
        let degree = rng.gen_range(0..=max_degree);
        let factors = (0..degree).map(|_| rng.gen_range(1..=n)).collect();
        (factors, gaussian(rng, coeff_bound))
    });
    GenPoly::from_terms(n, raw.collect::<Vec<_>>()).expect("indices drawn in range")
}

pub fn shuffled<T: Clone, R: Rng + ?Sized>(rng: &mut R, xs: &[T]) -> Vec<T> {
    let mut v = xs.to_vec();
    v.shuffle(rng);
    v
}
