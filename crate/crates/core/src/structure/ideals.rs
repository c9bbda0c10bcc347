//! Homogeneous ideals on conical orbits and the `I² ≠ I` check.

use super::closure::{poisson_ideal_closure, prepare_generators};
use super::report::{params, Record, Verdict, VerificationReport};
use super::subspace::Coordinates;
use super::StructureError;
use crate::exactla::EchelonBasis;
use crate::exec::Exec;
use crate::orbit::OrbitDescriptor;
use crate::poisson::PoissonContext;
use crate::poly::{Monomial, Polynomial};

fn monomial_poly(m: &Monomial) -> Polynomial {
    Polynomial::term(m.clone(), crate::exactla::rat(1))
}

/// On a homogeneous orbit: brackets of degree-`a` and degree-`b` normal
/// forms are homogeneous of degree `a + b − 1` (for `a + b − 1 ≤ bound`),
/// and the closure of `P_(k)` truncated at `bound` is itself: it misses `1`
/// and nothing of degree below `k` appears.
pub fn verify_homogeneous_ideals(
    orbit: &OrbitDescriptor,
    k: u32,
    bound: u32,
    exec: Exec,
) -> Result<VerificationReport, StructureError> {
    if !orbit.is_homogeneous() {
        return Err(StructureError::NotHomogeneous);
    }
    if k == 0 {
        return Err(StructureError::ZeroIndex);
    }
    let ctx = orbit.context().with_exec(exec);
    let mut records = Vec::new();
    for a in 1..=bound {
        for b in a..=(bound + 1 - a) {
            let target = a + b - 1;
            let pairs: Vec<(Polynomial, Polynomial)> = ctx
                .basis_monomials(a)
                .iter()
                .flat_map(|ma| {
                    ctx.basis_monomials(b)
                        .into_iter()
                        .map(move |mb| (monomial_poly(ma), monomial_poly(&mb)))
                })
                .collect();
            let brackets = ctx.brackets_of_pairs(&pairs);
            let bad = brackets
                .iter()
                .position(|f| !f.is_zero() && !(f.is_homogeneous() && f.degree() == Some(target)));
            let mut rec = Record::new(target, Verdict::from_bool(bad.is_none()))
                .label(format!("{{P_{a}, P_{b}}} in P_{target}"))
                .dim("pairs", pairs.len())
                .dim("nonzero", brackets.iter().filter(|f| !f.is_zero()).count());
            if let Some(i) = bad {
                let (f, g) = &pairs[i];
                rec = rec.witness(format!(
                    "{{{}, {}}} = {}",
                    ctx.text(f),
                    ctx.text(g),
                    ctx.text(&brackets[i])
                ));
            }
            records.push(rec);
        }
    }
    let truncation: Vec<Polynomial> = (k..=bound)
        .flat_map(|d| ctx.basis_monomials(d))
        .map(|m| monomial_poly(&m))
        .collect();
    if !truncation.is_empty() {
        let res = poisson_ideal_closure(&ctx, &truncation, bound)?;
        let below = res.levels[k as usize - 1].rank();
        let ok = !res.contains_one && below == 0 && res.subspace.rank() == truncation.len();
        let mut rec = Record::new(bound, Verdict::from_bool(ok))
            .label(format!("closure of P_({k}) truncation"))
            .dim("truncation", truncation.len())
            .dim("closure", res.subspace.rank())
            .dim("below_k", below);
        if res.contains_one {
            rec = rec.witness("closure contains 1");
        } else if !ok {
            rec = rec.witness(format!(
                "closure gained {} elements of degree below {k}",
                below
            ));
        }
        records.push(rec);
    }
    Ok(VerificationReport::new(
        format!("P_({k})(O) is a proper Poisson ideal (bounded)"),
        params([
            ("algebra", orbit.algebra().name().to_string()),
            ("relation", ctx.text(orbit.relation())),
            ("orbit_type", orbit.orbit_type().to_string()),
            ("k", k.to_string()),
            ("max_degree", bound.to_string()),
        ]),
        records,
    ))
}

/// Span of `NF(g · m)` over generators `g` and normal-form monomials `m`
/// with `deg g + deg m ≤ bound`.
fn ideal_span(
    ctx: &PoissonContext,
    coords: &Coordinates,
    gens: &[Polynomial],
    bound: u32,
) -> EchelonBasis {
    let products: Vec<(Polynomial, Monomial)> = gens
        .iter()
        .flat_map(|g| {
            let dg = g.degree().unwrap_or(0);
            ctx.basis_monomials_up_to(bound.saturating_sub(dg))
                .into_iter()
                .map(move |m| (g.clone(), m))
        })
        .filter(|(g, m)| g.degree().unwrap_or(0) + m.degree() <= bound)
        .collect();
    let reduced = ctx
        .exec()
        .map(&products, |(g, m)| ctx.reduce(&(g * &monomial_poly(m))));
    let mut ech = EchelonBasis::new(coords.len());
    for f in reduced {
        if !f.is_zero() {
            ech.insert_int(coords.int_vector(&f).expect("products stay within bound"));
        }
    }
    ech
}

/// Whether `{ξ_i, v}` stays in the span for every basis row `v` and generator.
fn is_lie_ideal(ctx: &PoissonContext, coords: &Coordinates, ech: &EchelonBasis) -> bool {
    let rows: Vec<Polynomial> = ech
        .integer_rows()
        .iter()
        .map(|r| coords.polynomial_int(ctx.nvars(), r))
        .collect();
    let xis = ctx.generators();
    ctx.exec()
        .map(&rows, |f| {
            xis.iter().all(|xi| {
                let b = ctx.bracket_unchecked(xi, f);
                ech.contains_int(
                    &coords
                        .int_vector(&b)
                        .expect("bracket with a generator keeps degree"),
                )
            })
        })
        .into_iter()
        .all(|ok| ok)
}

/// Truncations of `I = (gens)` and `I²` at `bound`; passes when a generator
/// lies outside `I²`. When `I` is a Lie ideal at the bound, also checks that
/// `I²` is one.
pub fn ideal_square_check(
    ctx: &PoissonContext,
    gens: &[Polynomial],
    bound: u32,
) -> Result<VerificationReport, StructureError> {
    let gens = prepare_generators(ctx, gens, bound)?;
    let coords = Coordinates::new(ctx.basis_monomials_up_to(bound));
    let ideal = ideal_span(ctx, &coords, &gens, bound);
    let mut squares = Vec::new();
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i..] {
            let ab = ctx.reduce(&(a * b));
            if !ab.is_zero() && ab.degree().unwrap_or(0) <= bound {
                squares.push(ab);
            }
        }
    }
    let square = if squares.is_empty() {
        EchelonBasis::new(coords.len())
    } else {
        ideal_span(ctx, &coords, &squares, bound)
    };
    let nested = square.integer_rows().iter().all(|r| ideal.contains_int(r));
    let witness = gens
        .iter()
        .find(|g| !square.contains_int(&coords.int_vector(g).unwrap()));
    let mut rec = Record::new(bound, Verdict::from_bool(nested && witness.is_some()))
        .label("I^2 strictly inside I")
        .dim("I", ideal.rank())
        .dim("I^2", square.rank());
    rec = match (witness, nested) {
        (Some(g), true) => rec.witness(format!("{} is in I but not in I^2", ctx.text(g))),
        (_, false) => rec.witness("I^2 is not contained in I"),
        (None, true) => rec.witness("every generator lies in I^2"),
    };
    let mut records = vec![rec];
    let lie = is_lie_ideal(ctx, &coords, &ideal);
    if lie {
        let ok = is_lie_ideal(ctx, &coords, &square);
        let mut rec = Record::new(bound, Verdict::from_bool(ok)).label("I^2 is a Lie ideal");
        if !ok {
            rec = rec.witness("a bracket with a generator leaves I^2");
        }
        records.push(rec);
    }
    let gen_text: Vec<String> = gens.iter().map(|g| ctx.text(g)).collect();
    Ok(VerificationReport::new(
        "I^2 != I for a finitely generated proper ideal (bounded)",
        params([
            ("algebra", ctx.algebra().name().to_string()),
            (
                "relation",
                ctx.ideal()
                    .map_or("none".to_string(), |i| ctx.text(i.relation())),
            ),
            ("generators", gen_text.join(", ")),
            ("max_degree", bound.to_string()),
            ("i_is_lie_ideal", lie.to_string()),
        ]),
        records,
    ))
}
