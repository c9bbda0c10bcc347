//! Bounded Poisson-ideal closure and the simplicity probes built on it.

use super::report::{params, Record, Verdict, VerificationReport};
use super::subspace::{filtration_piece, Coordinates, GradedSubspace};
use super::StructureError;
use crate::exactla::EchelonBasis;
use crate::orbit::{OrbitDescriptor, OrbitType};
use crate::poisson::PoissonContext;
use crate::poly::Polynomial;

#[derive(Clone, Debug)]
pub struct ClosureResult {
    /// The closure inside the normal forms of degree ≤ bound.
    pub subspace: GradedSubspace,
    /// `levels[k]` is the closure intersected with degree ≤ k.
    pub levels: Vec<GradedSubspace>,
    pub contains_one: bool,
    /// No constant reached, so the closure is a proper ideal at this bound.
    pub proper_at_bound: bool,
    /// Rank after seeding and after each sweep.
    pub trace: Vec<usize>,
}

pub(crate) fn prepare_generators(
    ctx: &PoissonContext,
    gens: &[Polynomial],
    bound: u32,
) -> Result<Vec<Polynomial>, StructureError> {
    if gens.is_empty() {
        return Err(StructureError::EmptyGenerators);
    }
    gens.iter()
        .map(|g| {
            if g.nvars() != ctx.nvars() {
                return Err(StructureError::VariableMismatch {
                    expected: ctx.nvars(),
                    found: g.nvars(),
                });
            }
            let g = ctx.reduce(g);
            match g.degree() {
                None => Err(StructureError::ZeroGenerator),
                Some(d) if d > bound => Err(StructureError::AboveBound {
                    generator: ctx.text(&g),
                    degree: d,
                    bound,
                }),
                Some(_) => Ok(g),
            }
        })
        .collect()
}

/// Smallest subspace of normal forms of degree ≤ `bound` that contains
/// `gens` and is stable under multiplication by each generator `ξ_i`
/// (while the degree stays within the bound) and under `{ξ_i, ·}`.
///
/// Sweeps apply every move to every basis row until a sweep leaves the rank
/// unchanged.
pub fn poisson_ideal_closure(
    ctx: &PoissonContext,
    gens: &[Polynomial],
    bound: u32,
) -> Result<ClosureResult, StructureError> {
    let gens = prepare_generators(ctx, gens, bound)?;
    let nv = ctx.nvars();
    let coords = Coordinates::new(ctx.basis_monomials_up_to(bound));
    let mut ech = EchelonBasis::new(coords.len());
    for g in &gens {
        ech.insert_int(coords.int_vector(g).expect("generator within bound"));
    }
    let xis = ctx.generators();
    let mut trace = vec![ech.rank()];
    while ech.rank() < coords.len() {
        let rows: Vec<(Polynomial, u32)> = ech
            .integer_rows()
            .iter()
            .zip(ech.pivots())
            .map(|(r, &p)| (coords.polynomial_int(nv, r), coords.ambient()[p].degree()))
            .collect();
        let moves = ctx.exec().map(&rows, |(f, deg)| {
            let mut out = Vec::with_capacity(2 * xis.len());
            for xi in &xis {
                if *deg < bound {
                    out.push(ctx.reduce(&(xi * f)));
                }
                out.push(ctx.bracket_unchecked(xi, f));
            }
            out
        });
        let before = ech.rank();
        for m in moves.into_iter().flatten() {
            if !m.is_zero() {
                ech.insert_int(coords.int_vector(&m).expect("moves stay within bound"));
            }
        }
        trace.push(ech.rank());
        if ech.rank() == before {
            break;
        }
    }
    let one = coords.int_vector(&Polynomial::one(nv)).unwrap();
    let contains_one = ech.contains_int(&one);
    let levels = (0..=bound)
        .map(|k| {
            let (ambient, piece) = filtration_piece(&ech, &coords, k);
            GradedSubspace::from_echelon(k, ambient, &piece)
        })
        .collect();
    Ok(ClosureResult {
        subspace: GradedSubspace::from_echelon(bound, coords.ambient().to_vec(), &ech),
        levels,
        contains_one,
        proper_at_bound: !contains_one,
        trace,
    })
}

/// Closure of each trial generator on its own.
///
/// Semisimple and unclassified orbits pass when every closure reaches `1`.
/// Nilpotent orbits pass when at least one closure stays proper; their
/// per-trial records are informational and a final record carries the
/// verdict. A closure that stays proper on a semisimple orbit is
/// inconclusive at this bound, not a refutation.
pub fn simplicity_probe(
    orbit: &OrbitDescriptor,
    trials: &[Polynomial],
    bound: u32,
    exec: crate::exec::Exec,
) -> Result<VerificationReport, StructureError> {
    let ctx = orbit.context().with_exec(exec);
    let trials = prepare_generators(&ctx, trials, bound)?;
    if let Some(c) = trials.iter().find(|t| t.is_constant()) {
        return Err(StructureError::ConstantGenerator(ctx.text(c)));
    }
    let nilpotent = orbit.orbit_type() == OrbitType::Nilpotent;
    let mut records = Vec::new();
    let mut any_proper = false;
    for t in &trials {
        let res = poisson_ideal_closure(&ctx, std::slice::from_ref(t), bound)?;
        any_proper |= res.proper_at_bound;
        let ok = nilpotent || res.contains_one;
        let mut rec = Record::new(bound, Verdict::from_bool(ok))
            .label(format!(
                "closure of {}: {}",
                ctx.text(t),
                if res.contains_one {
                    "reaches 1"
                } else {
                    "proper"
                }
            ))
            .dim("closure", res.subspace.rank())
            .dim("ambient", res.subspace.ambient_dim())
            .dim("sweeps", res.trace.len() - 1);
        if !ok {
            rec = rec.witness(format!(
                "closure of {} stays proper at this bound",
                ctx.text(t)
            ));
        }
        records.push(rec);
    }
    if nilpotent {
        let mut rec =
            Record::new(bound, Verdict::from_bool(any_proper)).label("some closure proper");
        if !any_proper {
            rec = rec.witness("every trial closure reached 1");
        }
        records.push(rec);
    }
    Ok(VerificationReport::new(
        if nilpotent {
            "P(O) is not simple (bounded witness)"
        } else {
            "P(O) is simple (bounded probes)"
        },
        params([
            ("algebra", orbit.algebra().name().to_string()),
            ("relation", ctx.text(orbit.relation())),
            ("orbit_type", orbit.orbit_type().to_string()),
            ("max_degree", bound.to_string()),
        ]),
        records,
    ))
}
