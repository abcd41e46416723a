//! Seeded property runner behind `esym verify`.
//!
//! Each property draws `trials` random instances from a ChaCha stream seeded
//! by the caller, so a `(seed, max_n, trials)` triple always produces the
//! same report.

use std::ops::RangeInclusive;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{EsymError, Result};
use crate::esp::{build_table, direct_eps, eps_omit_identity, EpsTable};
use crate::polyzero::{from_roots, Poly1};
use crate::sample;
use crate::scalar::{ComplexRing, ExactComplex, Wrap64Complex};
use crate::symalg::{
    alpha_gen, eval_extended, eval_genpoly, generator_partition, partition_values, phi, shift_u,
    split_by_top_generator, GenMonomial, GenPoly,
};

/// Upper bound on `max_n`; the direct oracle is exponential in `n`.
pub const MAX_N_LIMIT: usize = 12;

/// Name of the table-versus-oracle property.
pub const ORACLE_PROPERTY: &str = "eq-2.2-oracle";

/// Builds the prefix table under test.
pub type TableBuilder = fn(&[ExactComplex]) -> Result<EpsTable<ExactComplex>>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub max_n: usize,
    pub trials: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            max_n: 6,
            trials: 50,
            seed: 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyResult {
    pub name: &'static str,
    pub checks: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl PropertyResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub max_n: usize,
    pub trials: usize,
    pub passed: bool,
    pub properties: Vec<PropertyResult>,
}

impl VerifyReport {
    pub fn failed(&self) -> impl Iterator<Item = &PropertyResult> {
        self.properties.iter().filter(|p| !p.passed())
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for p in &self.properties {
            let status = if p.passed() { "PASS" } else { "FAIL" };
            out.push_str(&format!(
                "{status} {:<24} checks={} failures={}\n",
                p.name, p.checks, p.failures
            ));
            if let Some(detail) = &p.first_failure {
                out.push_str(&format!("     first failure: {detail}\n"));
            }
        }
        let failed = self.failed().count();
        out.push_str(&format!(
            "verify: {} properties, {} failed (seed {}, max-n {}, trials {})\n",
            self.properties.len(),
            failed,
            self.seed,
            self.max_n,
            self.trials
        ));
        out
    }
}

struct Property {
    result: PropertyResult,
}

impl Property {
    fn new(name: &'static str) -> Self {
        Self {
            result: PropertyResult {
                name,
                checks: 0,
                failures: 0,
                first_failure: None,
            },
        }
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.result.checks += 1;
        if !ok {
            self.result.failures += 1;
            if self.result.first_failure.is_none() {
                self.result.first_failure = Some(detail());
            }
        }
    }
}

fn show(xs: &[ExactComplex]) -> String {
    let parts: Vec<String> = xs.iter().map(ComplexRing::literal).collect();
    format!("[{}]", parts.join(", "))
}

/// Gaussian integers with parts in `[-9, 9]`, count drawn from `sizes`.
fn values(rng: &mut ChaCha8Rng, sizes: RangeInclusive<usize>) -> Vec<ExactComplex> {
    let len = rng.gen_range(sizes);
    sample::gaussians(rng, len, 9)
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
}

fn pow(base: &ExactComplex, e: usize) -> ExactComplex {
    (0..e).fold(ExactComplex::one(), |acc, _| acc.mul(base))
}

/// Run every property with the production table builder.
pub fn run(config: VerifyConfig) -> Result<VerifyReport> {
    run_with(config, build_table)
}

/// Run every property, using `builder` wherever a prefix table is needed.
pub fn run_with(config: VerifyConfig, builder: TableBuilder) -> Result<VerifyReport> {
    if config.max_n == 0 || config.max_n > MAX_N_LIMIT {
        return Err(EsymError::IndexOutOfRange {
            what: "max-n",
            index: config.max_n,
            bound: MAX_N_LIMIT,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let rng = &mut rng;
    let max_n = config.max_n;
    let trials = config.trials;
    let bound = 9;
    let mut props = Vec::new();

    let mut p = Property::new(ORACLE_PROPERTY);
    for _ in 0..trials {
        let xs = values(rng, 1..=max_n);
        let table = builder(&xs)?;
        let row = table.last_row();
        let ok = (1..=xs.len()).all(|k| row.get(k - 1) == Some(&direct_eps(&xs, k)));
        p.check(ok, || format!("row n differs from subset expansion at {}", show(&xs)));
    }
    props.push(p);

    let mut p = Property::new("recurrence-interior");
    for _ in 0..trials {
        let xs = values(rng, 1..=max_n);
        let t = builder(&xs)?;
        let mut ok = t.n() == xs.len();
        for i in 1..=t.n().min(xs.len()) {
            let sum = xs[..i].iter().fold(ExactComplex::zero(), |a, x| a.add(x));
            let prod = xs[..i].iter().fold(ExactComplex::one(), |a, x| a.mul(x));
            ok &= t.query(i, 1)? == sum && t.query(i, i)? == prod;
            if i > 1 {
                for k in 1..=i {
                    let step = t.query(i - 1, k)?.add(&t.query(i - 1, k - 1)?.mul(&xs[i - 1]));
                    ok &= t.query(i, k)? == step;
                }
            }
        }
        p.check(ok, || format!("recurrence broken at {}", show(&xs)));
    }
    props.push(p);

    let mut p = Property::new("omit-one-identity");
    let omit_max = max_n.min(8);
    for _ in 0..trials {
        let xs = values(rng, 1..=omit_max);
        for i0 in 1..=xs.len() {
            for k in 1..=xs.len() {
                let (lhs, rhs) = eps_omit_identity(&xs, i0, k)?;
                p.check(lhs == rhs, || format!("i0={i0} k={k} at {}", show(&xs)));
            }
        }
    }
    props.push(p);

    let mut p = Property::new("permutation-invariance");
    for _ in 0..trials {
        let xs = values(rng, 1..=max_n);
        let base = builder(&xs)?.last_row().to_vec();
        let perm = sample::shuffled(rng, &xs);
        let ok = builder(&perm)?.last_row() == base.as_slice();
        p.check(ok, || format!("row n changed under permutation of {}", show(&xs)));
    }
    props.push(p);

    let mut p = Property::new("binomial-row");
    for n in 1..=20 {
        let ones = vec![ExactComplex::one(); n];
        let t = builder(&ones)?;
        for k in 0..=n + 1 {
            let want = ExactComplex::real(binomial(n, k));
            p.check(t.query(n, k)? == want, || format!("n={n} k={k}"));
        }
    }
    props.push(p);

    let mut p = Property::new("homogeneity");
    for _ in 0..trials {
        let xs = values(rng, 1..=max_n);
        let c = sample::gaussian(rng, 5);
        let scaled: Vec<_> = xs.iter().map(|x| c.mul(x)).collect();
        let a = builder(&xs)?;
        let b = builder(&scaled)?;
        let ok = (1..=xs.len()).all(|k| {
            b.last_row()[k - 1] == pow(&c, k).mul(&a.last_row()[k - 1])
        });
        p.check(ok, || format!("c={} at {}", c.literal(), show(&xs)));
    }
    props.push(p);

    let mut p = Property::new("wrap64-agreement");
    for _ in 0..trials {
        let factors = rng.gen_range(1..=4);
        let xs = sample::gaussians(rng, factors, 1_000_000);
        let exact = xs.iter().fold(ExactComplex::one(), |a, x| a.mul(x));
        let wrapped = xs
            .iter()
            .map(|x| x.to_wrap64().expect("small"))
            .fold(Wrap64Complex::one(), |a, x| a.mul(&x));
        // Four factors of size 1e6 can exceed 2^63, where both sides must
        // still agree modulo 2^64.
        p.check(exact.wrapped() == wrapped, || format!("product of {}", show(&xs)));
        if let Some(narrow) = exact.to_wrap64() {
            p.check(narrow == wrapped, || format!("no-wrap product of {}", show(&xs)));
        }
    }
    props.push(p);

    if max_n >= 2 {
        let mut p = Property::new("alpha-embedding");
        for _ in 0..trials {
            let n = rng.gen_range(1..max_n);
            let xs = sample::gaussians(rng, n, bound);
            let y = sample::gaussian(rng, bound);
            let mut all = xs.clone();
            all.push(y.clone());
            let (image, complement) = generator_partition(n)?;
            for (k, g) in image.iter().enumerate() {
                let v = eval_extended(g, &xs, &y)?;
                p.check(v == direct_eps(&all, k + 1), || {
                    format!("k={} at {} with y={}", k + 1, show(&xs), y.literal())
                });
            }
            let top = eval_extended(&complement, &xs, &y)?;
            p.check(top == direct_eps(&all, n + 1), || {
                format!("complement at {} with y={}", show(&xs), y.literal())
            });
            let distinct = (1..=n).all(|a| {
                (a + 1..=n).all(|b| alpha_gen(a, n).ok() != alpha_gen(b, n).ok())
            });
            p.check(distinct, || format!("alpha not injective for n={n}"));
        }
        props.push(p);

        let mut p = Property::new("partition-any-omitted");
        for _ in 0..trials {
            let xs = values(rng, 2..=max_n.min(7));
            let expected: Vec<_> = (1..=xs.len()).map(|k| direct_eps(&xs, k)).collect();
            for j in 1..=xs.len() {
                let got = partition_values(&xs, j)?;
                p.check(got == expected, || format!("j={j} at {}", show(&xs)));
            }
        }
        props.push(p);
    }

    let mut p = Property::new("shift-monomial");
    for n in 1..=6 {
        for k in 1..=n {
            let want = if k == 1 {
                GenPoly::one(n)
            } else {
                GenPoly::generator(n, k - 1)?
            };
            p.check(shift_u(&GenPoly::generator(n, k)?) == want, || format!("U(e{k}), n={n}"));
        }
        let c = sample::gaussian(rng, 5);
        p.check(shift_u(&GenPoly::constant(n, c)).is_zero(), || "U(constant) != 0".into());
    }
    for _ in 0..trials {
        let n = rng.gen_range(1..=6);
        let m = sample::monomial(rng, n, 4);
        let input = GenPoly::monomial(n, m.clone(), ExactComplex::one())?;
        let lowered: Vec<usize> = m.factors().iter().filter(|&&k| k > 1).map(|&k| k - 1).collect();
        let want = GenPoly::monomial(n, GenMonomial::new(lowered), ExactComplex::one())?;
        p.check(shift_u(&input) == want, || format!("U({m})"));
    }
    props.push(p);

    let mut p = Property::new("phi-homomorphism");
    for _ in 0..trials {
        let n = rng.gen_range(1..=4);
        let a = sample::genpoly(rng, n, 3, 4, 5);
        let b = sample::genpoly(rng, n, 3, 4, 5);
        let sum_ok = phi(&a.add(&b)?) == phi(&a).add(&phi(&b))?;
        let prod_ok = phi(&a.mul(&b)?) == phi(&a).mul(&phi(&b))?;
        p.check(sum_ok && prod_ok, || format!("p = {a}, q = {b}"));
    }
    props.push(p);

    let mut p = Property::new("phi-injective");
    for n in 1..=4 {
        let monomials = monomials_up_to(n, 3);
        let mut images: Vec<GenPoly> = monomials
            .iter()
            .map(|m| phi(&GenPoly::monomial(n, m.clone(), ExactComplex::one()).expect("in range")))
            .collect();
        let count = images.len();
        images.sort_by_key(|g| g.to_string());
        images.dedup();
        p.check(images.len() == count, || format!("collision among degree <= 3, n={n}"));
    }
    props.push(p);

    let mut p = Property::new("split-soundness");
    for _ in 0..trials {
        let n = rng.gen_range(1..=5);
        let q = sample::genpoly(rng, n, 3, 6, 5);
        let (free, top) = split_by_top_generator(&q);
        let ok = free.add(&top)? == q
            && free.terms().all(|(m, _)| !m.contains(n))
            && top.terms().all(|(m, _)| m.contains(n));
        p.check(ok, || format!("split of {q}"));
    }
    props.push(p);

    let mut p = Property::new("genpoly-mul-evaluation");
    for _ in 0..trials {
        let n = rng.gen_range(1..=max_n.min(5));
        let a = sample::genpoly(rng, n, 3, 4, 5);
        let b = sample::genpoly(rng, n, 3, 4, 5);
        let xs = sample::gaussians(rng, n, bound);
        let lhs = eval_genpoly(&a.mul(&b)?, &xs)?;
        let rhs = eval_genpoly(&a, &xs)?.mul(&eval_genpoly(&b, &xs)?);
        p.check(lhs == rhs, || format!("p = {a}, q = {b} at {}", show(&xs)));
    }
    props.push(p);

    let mut p = Property::new("vieta-bridge");
    for _ in 0..trials {
        let roots = values(rng, 0..=max_n.min(8));
        let f = from_roots(&roots);
        let mut ok = f.coeffs().len() == roots.len() + 1;
        for (k, t) in f.coeffs().iter().enumerate() {
            let e = direct_eps(&roots, k);
            ok &= *t == if k % 2 == 0 { e } else { e.neg() };
        }
        ok &= roots.iter().all(|r| f.eval(r).is_zero());
        p.check(ok, || format!("roots {}", show(&roots)));
    }
    props.push(p);

    let mut p = Property::new("incremental-vieta");
    for _ in 0..trials {
        let roots = values(rng, 0..=max_n.min(8));
        let lambda = sample::gaussian(rng, bound);
        let mut extended = roots.clone();
        extended.push(lambda.clone());
        let ok = from_roots(&extended) == from_roots(&roots).insert_zero(&lambda);
        p.check(ok, || format!("roots {} + {}", show(&roots), lambda.literal()));
    }
    props.push(p);

    let mut p = Property::new("insert-commutes");
    for _ in 0..trials {
        let f = random_poly1(rng, max_n.min(8), bound);
        let a = sample::gaussian(rng, bound);
        let b = sample::gaussian(rng, bound);
        let ok = f.insert_zero(&a).insert_zero(&b) == f.insert_zero(&b).insert_zero(&a);
        p.check(ok, || format!("{} with {} and {}", f.pretty(), a.literal(), b.literal()));
    }
    props.push(p);

    let mut p = Property::new("deflate-roundtrip");
    for _ in 0..trials {
        let f = random_poly1(rng, max_n.min(8), bound);
        let lambda = sample::gaussian(rng, bound);
        let g = f.insert_zero(&lambda);
        let ok = g.eval(&lambda).is_zero()
            && g.deflate(&lambda)? == (f.clone(), ExactComplex::zero());
        p.check(ok, || format!("{} with {}", f.pretty(), lambda.literal()));
    }
    props.push(p);

    let properties: Vec<PropertyResult> = props.into_iter().map(|p| p.result).collect();
    Ok(VerifyReport {
        seed: config.seed,
        max_n: config.max_n,
        trials: config.trials,
        passed: properties.iter().all(PropertyResult::passed),
        properties,
    })
}

/// Random polynomial of degree `0..=max_degree` with nonzero leading term.
pub fn random_poly1<R: Rng + ?Sized>(rng: &mut R, max_degree: usize, bound: i64) -> Poly1<ExactComplex> {
    let degree = rng.gen_range(0..=max_degree);
    let mut coeffs = sample::gaussians(rng, degree + 1, bound);
    while coeffs[0].is_zero() {
        coeffs[0] = sample::gaussian(rng, bound);
    }
    Poly1::new(coeffs)
}

/// Every monomial over `e1..en` of degree `1..=max_degree`.
pub fn monomials_up_to(n: usize, max_degree: usize) -> Vec<GenMonomial> {
    let mut out = Vec::new();
    let mut frontier: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..max_degree {
        let mut next = Vec::new();
        for f in &frontier {
            let start = f.last().copied().unwrap_or(1);
            for k in start..=n {
                let mut g = f.clone();
                g.push(k);
                out.push(GenMonomial::new(g.clone()));
                next.push(g);
            }
        }
        frontier = next;
    }
    out
}

/// Deliberately broken recurrence that forgets the `x_i` factor. Used to
/// exercise the failure path of the runner.
pub fn corrupted_build_table(xs: &[ExactComplex]) -> Result<EpsTable<ExactComplex>> {
    let (first, rest) = xs.split_first().ok_or(EsymError::EmptyAssignment)?;
    let mut rows = vec![vec![first.clone()]];
    for x in rest {
        let prev: &Vec<ExactComplex> = rows.last().expect("non-empty");
        let mut row = vec![prev[0].add(x)];
        for k in 2..=prev.len() {
            row.push(prev[k - 1].add(&prev[k - 2]));
        }
        row.push(prev[prev.len() - 1].mul(x));
        rows.push(row);
    }
    EpsTable::from_rows(rows)
}
