//! The exactness system `NF(Σ_i {ξ_i, f_i}) = target` with `deg f_i ≤ D`.

use super::report::{params, Record, Verdict, VerificationReport};
use super::subspace::Coordinates;
use crate::exactla::{solve_linear, Rational, RationalMatrix};
use crate::exec::Exec;
use crate::orbit::OrbitDescriptor;
use crate::poly::{Monomial, Polynomial};

/// Solves for the coefficients of `f_1, …, f_d` over the normal-form
/// monomials of degree ≤ `degree`. Unknowns are ordered generator-major.
/// `None` means the system is inconsistent.
pub fn exactness_system(
    orbit: &OrbitDescriptor,
    degree: u32,
    target: &Polynomial,
) -> Option<Vec<Rational>> {
    exactness_system_with(orbit, degree, target, Exec::default())
}

fn exactness_system_with(
    orbit: &OrbitDescriptor,
    degree: u32,
    target: &Polynomial,
    exec: Exec,
) -> Option<Vec<Rational>> {
    let ctx = orbit.context().with_exec(exec);
    let target = ctx.reduce(target);
    let rows_deg = degree.max(target.degree().unwrap_or(0));
    let coords = Coordinates::new(ctx.basis_monomials_up_to(rows_deg));
    let unknown_monomials = ctx.basis_monomials_up_to(degree);
    let xis = ctx.generators();
    let unknowns: Vec<(usize, Monomial)> = (0..xis.len())
        .flat_map(|i| unknown_monomials.iter().map(move |m| (i, m.clone())))
        .collect();
    let columns = exec.map(&unknowns, |(i, m)| {
        let f = Polynomial::term(m.clone(), crate::exactla::rat(1));
        coords
            .vector(&ctx.bracket_unchecked(&xis[*i], &f))
            .expect("bracket with a generator keeps degree")
    });
    let mut a = RationalMatrix::zeros(coords.len(), unknowns.len());
    for (j, col) in columns.into_iter().enumerate() {
        for (i, x) in col.into_iter().enumerate() {
            a.set(i, j, x);
        }
    }
    let b = coords.vector(&target).expect("target within row space");
    solve_linear(&a, &b).expect("dimensions agree by construction")
}

/// Infeasibility of `Σ {ξ_i, f_i} = 1` for every coefficient degree up to
/// `max_degree`, plus a feasible control with target `0`.
pub fn nonexactness_check(
    orbit: &OrbitDescriptor,
    max_degree: u32,
    exec: Exec,
) -> VerificationReport {
    let nv = orbit.algebra().dim();
    let one = Polynomial::one(nv);
    let mut records = exec.map_range(0..max_degree as usize + 1, |d| {
        let d = d as u32;
        let sol = exactness_system_with(orbit, d, &one, exec);
        let unknowns = nv * orbit.context().basis_monomials_up_to(d).len();
        let mut rec = Record::new(d, Verdict::from_bool(sol.is_none()))
            .label("target 1")
            .dim("unknowns", unknowns);
        if sol.is_some() {
            rec = rec.witness("system is consistent: 1 is a sum of brackets with generators");
        }
        rec
    });
    let control = exactness_system_with(orbit, max_degree, &Polynomial::zero(nv), exec);
    let mut rec =
        Record::new(max_degree, Verdict::from_bool(control.is_some())).label("control: target 0");
    if control.is_none() {
        rec = rec.witness("homogeneous system reported inconsistent");
    }
    records.push(rec);
    VerificationReport::new(
        "1 is not a sum of brackets with generators (bounded)",
        params([
            ("algebra", orbit.algebra().name().to_string()),
            (
                "relation",
                orbit.relation().to_text(orbit.algebra().names()),
            ),
            ("max_degree", max_degree.to_string()),
        ]),
        records,
    )
}
