//! Acceptance criteria. Run with `cargo test --test acceptance -- --nocapture`
//! to see one PASS/FAIL line per criterion.

mod common;

use esym_core::sample;
use esym_core::{
    build_table, direct_eps, eps_omit_identity, eval_extended, from_roots, generator_partition,
    phi, shift_u, ComplexRing, ExactComplex, GenMonomial, GenPoly, Poly1, Wrap64Complex,
};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, detail: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(detail())
    }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn ex(re: i64, im: i64) -> ExactComplex {
    ExactComplex::new(re, im)
}

fn show(xs: &[ExactComplex]) -> String {
    xs.iter().map(|x| x.literal()).collect::<Vec<_>>().join(", ")
}

fn mul_linear_example() -> Check {
    let f = Poly1::new(vec![ex(1, 0), ex(-2, 0), ex(0, 0), ex(1, 0), ex(3, 0)]);
    let g = f.mul_linear(&ExactComplex::i());
    let want = [ex(1, 0), ex(-2, 1), ex(0, -2), ex(1, 0), ex(3, 1), ex(0, 3)];
    ensure(g.coeffs() == want, || format!("got [{}]", show(g.coeffs())))
}

fn oracle_equivalence() -> Check {
    let mut rng = rng(2);
    for n in 1..=10 {
        for _ in 0..200 {
            let xs = sample::gaussians(&mut rng, n, 9);
            let table = build_table(&xs).map_err(|e| e.to_string())?;
            for k in 1..=n {
                let direct = direct_eps(&xs, k);
                ensure(table.last_row()[k - 1] == direct, || format!("k={k} at [{}]", show(&xs)))?;
            }
        }
    }
    Ok(())
}

fn omit_identity() -> Check {
    let mut rng = rng(3);
    for n in 2..=8 {
        for _ in 0..50 {
            let xs = sample::gaussians(&mut rng, n, 9);
            for i0 in 1..=n {
                for k in 1..=n {
                    let (lhs, rhs) = eps_omit_identity(&xs, i0, k).map_err(|e| e.to_string())?;
                    ensure(lhs == rhs, || format!("i0={i0} k={k} at [{}]", show(&xs)))?;
                }
            }
        }
    }
    Ok(())
}

fn symmetry() -> Check {
    let mut rng = rng(4);
    for n in 1..=8 {
        for _ in 0..20 {
            let xs = sample::gaussians(&mut rng, n, 9);
            let base = build_table(&xs).map_err(|e| e.to_string())?;
            for _ in 0..20 {
                let perm = sample::shuffled(&mut rng, &xs);
                let t = build_table(&perm).map_err(|e| e.to_string())?;
                ensure(t.last_row() == base.last_row(), || format!("[{}]", show(&perm)))?;
            }
        }
    }
    Ok(())
}

fn embedding() -> Check {
    let mut rng = rng(5);
    for n in 1..=8 {
        let (image, complement) = generator_partition(n).map_err(|e| e.to_string())?;
        for _ in 0..25 {
            let xs = sample::gaussians(&mut rng, n, 9);
            let y = sample::gaussian(&mut rng, 9);
            let mut all = xs.clone();
            all.push(y.clone());
            for (k, g) in image.iter().enumerate() {
                let v = eval_extended(g, &xs, &y).map_err(|e| e.to_string())?;
                ensure(v == direct_eps(&all, k + 1), || format!("k={} at [{}]", k + 1, show(&all)))?;
            }
            let v = eval_extended(&complement, &xs, &y).map_err(|e| e.to_string())?;
            ensure(v == direct_eps(&all, n + 1), || format!("complement at [{}]", show(&all)))?;
        }
    }
    Ok(())
}

fn shift() -> Check {
    let one = ExactComplex::one();
    for n in 1..=6 {
        for k in 1..=n {
            let want = if k == 1 {
                GenPoly::one(n)
            } else {
                GenPoly::generator(n, k - 1).unwrap()
            };
            ensure(shift_u(&GenPoly::generator(n, k).unwrap()) == want, || format!("U(e{k})"))?;
        }
        ensure(shift_u(&GenPoly::constant(n, ex(4, -3))).is_zero(), || "U(c) != 0".into())?;
    }
    let mut rng = rng(6);
    for _ in 0..100 {
        let n = rng.gen_range(1..=6);
        let m = sample::monomial(&mut rng, n, 4);
        let lowered = m.factors().iter().filter(|&&k| k > 1).map(|&k| k - 1).collect();
        let want = GenPoly::monomial(n, GenMonomial::new(lowered), one.clone()).unwrap();
        let got = shift_u(&GenPoly::monomial(n, m.clone(), one.clone()).unwrap());
        ensure(got == want, || format!("U({m}) = {got}"))?;
    }
    Ok(())
}

fn phi_homomorphism() -> Check {
    let mut rng = rng(7);
    for _ in 0..100 {
        let n = rng.gen_range(1..=4);
        let p = sample::genpoly(&mut rng, n, 3, 5, 5);
        let q = sample::genpoly(&mut rng, n, 3, 5, 5);
        let sum = phi(&p.add(&q).unwrap()) == phi(&p).add(&phi(&q)).unwrap();
        let prod = phi(&p.mul(&q).unwrap()) == phi(&p).mul(&phi(&q)).unwrap();
        ensure(sum && prod, || format!("p = {p}, q = {q}"))?;
    }
    Ok(())
}

fn vieta() -> Check {
    let mut rng = rng(8);
    for _ in 0..200 {
        let size = rng.gen_range(0..=8);
        let roots = sample::gaussians(&mut rng, size, 9);
        let f = from_roots(&roots);
        for (k, t) in f.coeffs().iter().enumerate() {
            let e = direct_eps(&roots, k);
            let want = if k % 2 == 0 { e } else { e.neg() };
            ensure(*t == want, || format!("t_{k} for roots [{}]", show(&roots)))?;
        }
        for r in &roots {
            ensure(f.eval(r).is_zero(), || format!("f({}) != 0", r.literal()))?;
        }
        let incremental = roots
            .iter()
            .fold(Poly1::constant(ExactComplex::one()), |p, r| p.insert_zero(r));
        ensure(incremental == f, || format!("incremental differs for [{}]", show(&roots)))?;
    }
    Ok(())
}

fn deflation() -> Check {
    let mut rng = rng(9);
    for _ in 0..100 {
        let degree = rng.gen_range(0..=8);
        let mut coeffs = sample::gaussians(&mut rng, degree + 1, 9);
        coeffs[0] = ex(rng.gen_range(1..=9), rng.gen_range(-9..=9));
        let p = Poly1::new(coeffs);
        let lambda = sample::gaussian(&mut rng, 9);
        let got = p.insert_zero(&lambda).deflate(&lambda).map_err(|e| e.to_string())?;
        ensure(got == (p.clone(), ExactComplex::zero()), || {
            format!("{} at {}", p.pretty(), lambda.literal())
        })?;
    }
    Ok(())
}

fn golden_transcripts() -> Check {
    let all = common::transcripts();
    ensure(all.len() >= 5, || format!("only {} transcripts", all.len()))?;
    for t in &all {
        common::check_transcript(t)?;
    }
    let wrap = all
        .iter()
        .find(|t| t.name.starts_with("wrap"))
        .ok_or("no wrap transcript")?;
    // Recompute the wrap case from exact arithmetic and reduce modulo 2^64.
    let a = i64::from(i32::MAX);
    let b = i64::from(i32::MIN);
    let exact = direct_eps(&[ex(a, a), ex(a, b), ex(b, a)], 3);
    let reduced = exact.wrapped();
    ensure(exact.to_wrap64().is_none(), || "wrap case does not overflow".into())?;
    ensure(reduced == Wrap64Complex::new(-6442450943, 6442450943), || reduced.to_string())?;
    let line = format!("epsilon[3][3] = {reduced}\n");
    ensure(String::from_utf8_lossy(&wrap.stdout).ends_with(&line), || {
        format!("{} does not end with {line}", wrap.name)
    })?;
    ensure(
        common::transcripts()
            .iter()
            .any(|t| t.stdout.ends_with(b"epsilon[2][2] = (-5,10)\n")),
        || "missing (1,2),(3,4) case".into(),
    )
}

fn binomial() -> Check {
    for n in 1..=20usize {
        let table = build_table(&vec![ExactComplex::one(); n]).map_err(|e| e.to_string())?;
        let mut c = BigInt::from(1);
        for k in 1..=n {
            c = c * (n + 1 - k) / k;
            ensure(table.last_row()[k - 1] == ExactComplex::real(c.clone()), || {
                format!("C({n},{k})")
            })?;
        }
    }
    Ok(())
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 11] = [
        ("mul-linear worked example reproduced exactly", mul_linear_example),
        ("recurrence table equals subset oracle (n<=10, 200 each)", oracle_equivalence),
        ("omit-one identity (n=2..8, all i0 and k, 50 each)", omit_identity),
        ("row n invariant under permutation (n<=8, 20 perms)", symmetry),
        ("alpha embedding and complement generator (n<=8)", embedding),
        ("shift U on generators, constants and 100 monomials", shift),
        ("Phi additive and multiplicative on 100 pairs", phi_homomorphism),
        ("Vieta coefficients, zeroes and incremental insertion", vieta),
        ("deflate(insert_zero(p, l), l) = (p, 0) on 100 cases", deflation),
        ("java-compat golden transcripts incl. 64-bit wrap", golden_transcripts),
        ("eps_k(1,...,1) = C(n,k) for n<=20", binomial),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("[PASS] {}: {name}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("[FAIL] {}: {name}: {detail}", i + 1);
            }
        }
    }
    assert_eq!(failed, 0, "{failed} acceptance criteria failed");
}
