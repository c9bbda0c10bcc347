//! Seeded random polynomials and sampled checks of the Poisson axioms.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactla::ratio;
use crate::orbit::OrbitDescriptor;
use crate::poisson::{lie_poisson_bracket, PoissonContext};
use crate::poly::{Monomial, Polynomial};
use crate::structure::{Record, Verdict, VerificationReport};

/// Polynomial with one to four terms of degree ≤ `max_degree` and small
/// rational coefficients.
pub fn random_polynomial<R: Rng>(rng: &mut R, nvars: usize, max_degree: u32) -> Polynomial {
    let nterms = rng.random_range(1..=4);
    let mut f = Polynomial::zero(nvars);
    for _ in 0..nterms {
        let d = rng.random_range(0..=max_degree);
        let mut exps = vec![0u32; nvars];
        for _ in 0..d {
            exps[rng.random_range(0..nvars)] += 1;
        }
        let num = rng.random_range(1..=5) * if rng.random_bool(0.5) { 1 } else { -1 };
        let den = rng.random_range(1..=3);
        f.add_term(Monomial::from_exponents(exps), ratio(num, den));
    }
    f
}

/// `count` triples drawn from a ChaCha8 stream seeded with `seed`.
pub fn random_triples(
    nvars: usize,
    max_degree: u32,
    count: usize,
    seed: u64,
) -> Vec<[Polynomial; 3]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            [
                random_polynomial(&mut rng, nvars, max_degree),
                random_polynomial(&mut rng, nvars, max_degree),
                random_polynomial(&mut rng, nvars, max_degree),
            ]
        })
        .collect()
}

fn tally(
    ctx: &PoissonContext,
    max_degree: u32,
    name: &str,
    triples: &[[Polynomial; 3]],
    check: impl Fn(&[Polynomial; 3]) -> bool + Sync + Send,
) -> Record {
    let results = ctx.exec().map(triples, |t| check(t));
    let failures = results.iter().filter(|ok| !**ok).count();
    let mut rec = Record::new(max_degree, Verdict::from_bool(failures == 0))
        .label(name)
        .dim("samples", triples.len())
        .dim("failures", failures);
    if let Some(i) = results.iter().position(|ok| !ok) {
        let t: Vec<String> = triples[i].iter().map(|f| ctx.text(f)).collect();
        rec = rec.witness(format!("({})", t.join(", ")));
    }
    rec
}

/// Jacobi, Leibniz, antisymmetry and the degree bound on seeded samples.
pub fn axiom_suite(
    ctx: &PoissonContext,
    samples: usize,
    max_degree: u32,
    seed: u64,
) -> VerificationReport {
    let triples = random_triples(ctx.nvars(), max_degree, samples, seed);
    let records = vec![
        tally(ctx, max_degree, "jacobi", &triples, |[f, g, h]| {
            ctx.jacobi_defect(f, g, h).is_ok_and(|d| d.is_zero())
        }),
        tally(ctx, max_degree, "leibniz", &triples, |[f, g, h]| {
            ctx.leibniz_defect(f, g, h)
                .is_ok_and(|(a, b)| a.is_zero() && b.is_zero())
        }),
        tally(ctx, max_degree, "antisymmetry", &triples, |[f, g, _]| {
            ctx.bracket_unchecked(f, g) == -&ctx.bracket_unchecked(g, f)
        }),
        tally(ctx, max_degree, "degree bound", &triples, |[f, g, _]| {
            let b = ctx.bracket_unchecked(f, g);
            match (b.degree(), f.degree(), g.degree()) {
                (None, _, _) => true,
                (Some(db), Some(df), Some(dg)) => df >= 1 && dg >= 1 && db < df + dg,
                _ => false,
            }
        }),
    ];
    VerificationReport::new(
        "Poisson axioms on sampled polynomials",
        sample_params(ctx, samples, max_degree, seed),
        records,
    )
}

/// `NF({f, g}) = {NF f, NF g}` on seeded samples.
pub fn quotient_compatibility(
    orbit: &OrbitDescriptor,
    samples: usize,
    max_degree: u32,
    seed: u64,
) -> VerificationReport {
    let ctx = orbit.context();
    let triples = random_triples(ctx.nvars(), max_degree, samples, seed);
    let rec = tally(
        &ctx,
        max_degree,
        "quotient compatibility",
        &triples,
        |[f, g, _]| {
            let lhs = ctx.reduce(&lie_poisson_bracket(orbit.algebra(), f, g));
            lhs == ctx.bracket_unchecked(&ctx.reduce(f), &ctx.reduce(g))
        },
    );
    VerificationReport::new(
        "normal form commutes with the bracket",
        sample_params(&ctx, samples, max_degree, seed),
        vec![rec],
    )
}

fn sample_params(
    ctx: &PoissonContext,
    samples: usize,
    max_degree: u32,
    seed: u64,
) -> std::collections::BTreeMap<String, String> {
    let mut p = std::collections::BTreeMap::new();
    p.insert("algebra".to_string(), ctx.algebra().name().to_string());
    p.insert(
        "relation".to_string(),
        ctx.ideal()
            .map_or("none".to_string(), |i| ctx.text(i.relation())),
    );
    p.insert("samples".to_string(), samples.to_string());
    p.insert("max_degree".to_string(), max_degree.to_string());
    p.insert("seed".to_string(), seed.to_string());
    p
}
