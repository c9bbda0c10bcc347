//! Invariants, derived spans and the degreewise splitting checks.

use num_traits::Zero;

use super::report::{params, Record, Verdict, VerificationReport};
use super::subspace::{filtration_piece, Coordinates, GradedSubspace};
use crate::exactla::{kernel, EchelonBasis, RationalMatrix};
use crate::exec::Exec;
use crate::liealg::LieAlgebra;
use crate::orbit::OrbitDescriptor;
use crate::poisson::{lie_poisson_bracket, PoissonContext};
use crate::poly::{monomials_of_degree, Monomial, Polynomial};

/// Which monomial pairs feed a derived span.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairScope {
    /// First factor restricted to the linear generators: `{g, ·}`.
    LinearFirst,
    /// Every unordered pair of distinct normal-form monomials.
    AllPairs,
}

impl PairScope {
    pub fn as_str(self) -> &'static str {
        match self {
            PairScope::LinearFirst => "linear-first",
            PairScope::AllPairs => "all-pairs",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Membership {
    InSpan,
    /// Not in the span of brackets reachable at this bound; says nothing
    /// about larger bounds.
    NotInSpanAtBound,
}

impl Membership {
    pub fn in_span(self) -> bool {
        self == Membership::InSpan
    }
}

/// Basis of `C(g) ∩ S_n`: the joint kernel of `f ↦ {ξ_i, f}` on `S_n`.
pub fn invariants_basis(alg: &LieAlgebra, n: u32) -> GradedSubspace {
    invariants_basis_with(alg, n, Exec::default())
}

pub fn invariants_basis_with(alg: &LieAlgebra, n: u32, exec: Exec) -> GradedSubspace {
    let d = alg.dim();
    let ambient = monomials_of_degree(d, n);
    let coords = Coordinates::new(ambient.clone());
    let columns: Vec<Vec<crate::exactla::Rational>> = exec.map(&ambient, |m| {
        let f = Polynomial::term(m.clone(), crate::exactla::rat(1));
        (0..d)
            .flat_map(|i| {
                let b = lie_poisson_bracket(alg, &Polynomial::var(d, i), &f);
                coords.vector(&b).expect("ad preserves degree")
            })
            .collect()
    });
    let rows = d * ambient.len();
    let mut stacked = RationalMatrix::zeros(rows, ambient.len());
    for (j, col) in columns.iter().enumerate() {
        for (i, x) in col.iter().enumerate() {
            if !x.is_zero() {
                stacked.set(i, j, x.clone());
            }
        }
    }
    let mut ech = EchelonBasis::new(ambient.len());
    for v in kernel(&stacked) {
        ech.insert(&v);
    }
    GradedSubspace::from_echelon(n, ambient, &ech)
}

fn monomial_poly(m: &Monomial) -> Polynomial {
    Polynomial::term(m.clone(), crate::exactla::rat(1))
}

/// Pairs of nonconstant normal-form monomials of degree ≤ `max_total` whose
/// bracket degree `deg a + deg b − 1` is accepted, under the chosen scope.
fn bracket_pairs(
    ctx: &PoissonContext,
    scope: PairScope,
    accept: impl Fn(u32) -> bool,
    max_total: u32,
) -> Vec<(Polynomial, Polynomial)> {
    let mons: Vec<Monomial> = (1..=max_total)
        .flat_map(|deg| ctx.basis_monomials(deg))
        .collect();
    let mut pairs = Vec::new();
    for (ia, a) in mons.iter().enumerate() {
        if scope == PairScope::LinearFirst && a.degree() != 1 {
            continue;
        }
        let others: Box<dyn Iterator<Item = &Monomial>> = match scope {
            PairScope::LinearFirst => Box::new(mons.iter().filter(move |b| *b != a)),
            PairScope::AllPairs => Box::new(mons[ia + 1..].iter()),
        };
        for b in others {
            let total = a.degree() + b.degree() - 1;
            if accept(total) {
                pairs.push((monomial_poly(a), monomial_poly(b)));
            }
        }
    }
    pairs
}

/// Span of all normal-form brackets reachable at `source_bound`, over the
/// normal-form monomials of degree ≤ `ambient_degree`.
fn reachable_span(
    ctx: &PoissonContext,
    source_bound: u32,
    ambient_degree: u32,
    scope: PairScope,
) -> (Coordinates, EchelonBasis) {
    let coords = Coordinates::new(ctx.basis_monomials_up_to(ambient_degree.max(source_bound)));
    let pairs = bracket_pairs(ctx, scope, |t| t <= source_bound, source_bound + 1);
    let brackets = ctx.brackets_of_pairs(&pairs);
    let mut ech = EchelonBasis::new(coords.len());
    for b in brackets {
        if !b.is_zero() {
            ech.insert_int(
                coords
                    .int_vector(&b)
                    .expect("brackets stay within the source bound"),
            );
        }
    }
    (coords, ech)
}

/// Derived span at degree `n`: brackets of normal-form monomial pairs with
/// `deg a + deg b − 1 ≤ source_bound`, intersected with the degree-`n`
/// piece (`S_n` / `P_n` when graded, degree ≤ `n` otherwise).
pub fn derived_span(
    ctx: &PoissonContext,
    n: u32,
    source_bound: u32,
    scope: PairScope,
) -> GradedSubspace {
    if ctx.is_graded() {
        let ambient = ctx.basis_monomials(n);
        let coords = Coordinates::new(ambient.clone());
        let pairs = if n <= source_bound {
            bracket_pairs(ctx, scope, |t| t == n, n + 1)
        } else {
            Vec::new()
        };
        let mut ech = EchelonBasis::new(ambient.len());
        for b in ctx.brackets_of_pairs(&pairs) {
            if !b.is_zero() {
                ech.insert_int(
                    coords
                        .int_vector(&b)
                        .expect("graded bracket is homogeneous"),
                );
            }
        }
        GradedSubspace::from_echelon(n, ambient, &ech)
    } else {
        let (coords, ech) = reachable_span(ctx, source_bound, n, scope);
        let (ambient, piece) = filtration_piece(&ech, &coords, n);
        GradedSubspace::from_echelon(n, ambient, &piece)
    }
}

/// Span of `{m_a, m_b}` over normal-form monomials of degrees exactly
/// `deg_a` and `deg_b`, inside the degree-`deg_a + deg_b − 1` piece of a
/// graded context.
pub fn pair_span(ctx: &PoissonContext, deg_a: u32, deg_b: u32) -> GradedSubspace {
    assert!(
        ctx.is_graded(),
        "pair spans are defined for graded contexts"
    );
    assert!(deg_a >= 1 && deg_b >= 1);
    let n = deg_a + deg_b - 1;
    let ambient = ctx.basis_monomials(n);
    let coords = Coordinates::new(ambient.clone());
    let left = ctx.basis_monomials(deg_a);
    let right = ctx.basis_monomials(deg_b);
    let pairs: Vec<(Polynomial, Polynomial)> = left
        .iter()
        .flat_map(|a| {
            right
                .iter()
                .map(move |b| (monomial_poly(a), monomial_poly(b)))
        })
        .collect();
    let mut ech = EchelonBasis::new(ambient.len());
    for b in ctx.brackets_of_pairs(&pairs) {
        if !b.is_zero() {
            ech.insert_int(
                coords
                    .int_vector(&b)
                    .expect("graded bracket is homogeneous"),
            );
        }
    }
    GradedSubspace::from_echelon(n, ambient, &ech)
}

/// Whether `f` (reduced first) lies in the span of all normal-form brackets
/// of monomial pairs with `deg a + deg b − 1 ≤ source_bound`.
pub fn derived_membership(ctx: &PoissonContext, f: &Polynomial, source_bound: u32) -> Membership {
    let f = ctx.reduce(f);
    let deg = f.degree().unwrap_or(0);
    let (coords, ech) = reachable_span(ctx, source_bound, deg, PairScope::AllPairs);
    let v = coords
        .int_vector(&f)
        .expect("ambient covers the degree of f");
    if ech.contains_int(&v) {
        Membership::InSpan
    } else {
        Membership::NotInSpanAtBound
    }
}

/// `S_n = C_n ⊕ D_n` for every `n ≤ max_degree`, where `D_n` is the
/// linear-first derived span at source bound `n + 1`.
pub fn verify_prop1(alg: &LieAlgebra, max_degree: u32, exec: Exec) -> VerificationReport {
    verify_prop1_scoped(alg, max_degree, PairScope::LinearFirst, exec)
}

pub fn verify_prop1_scoped(
    alg: &LieAlgebra,
    max_degree: u32,
    scope: PairScope,
    exec: Exec,
) -> VerificationReport {
    let semisimple = alg.is_semisimple().map(|s| s.semisimple).unwrap_or(false);
    let ctx = PoissonContext::free(alg.clone()).with_exec(exec);
    let records = exec.map_range(0..max_degree as usize + 1, |n| {
        let n = n as u32;
        let invariants = invariants_basis_with(alg, n, exec);
        let derived = derived_span(&ctx, n, n + 1, scope);
        let dim = invariants.ambient_dim();
        let mut joint = EchelonBasis::new(dim);
        for row in invariants
            .basis()
            .row_iter()
            .chain(derived.basis().row_iter())
        {
            joint.insert(row);
        }
        let (c, d, cd) = (invariants.rank(), derived.rank(), joint.rank());
        let ok = c + d == dim && cd == dim;
        let mut rec = Record::new(n, Verdict::from_bool(ok))
            .dim("S", dim)
            .dim("C", c)
            .dim("D", d)
            .dim("C+D", cd);
        if !ok {
            let coords = Coordinates::new(invariants.ambient().to_vec());
            let missing = invariants
                .ambient()
                .iter()
                .find(|m| !joint.contains_int(&coords.int_vector(&monomial_poly(m)).unwrap()));
            rec = match missing {
                Some(m) => rec.witness(format!("not in C+D: {}", ctx.text(&monomial_poly(m)))),
                None => rec.witness(format!("C and D intersect in dimension {}", c + d - cd)),
            };
        }
        rec
    });
    VerificationReport::new(
        "S(g) = C(g) + S(g)' (direct, degreewise)",
        params([
            ("algebra", alg.name().to_string()),
            ("max_degree", max_degree.to_string()),
            ("scope", scope.as_str().to_string()),
            ("semisimple", semisimple.to_string()),
        ]),
        records,
    )
}

fn orbit_params(
    orbit: &OrbitDescriptor,
    extra: &[(&str, String)],
) -> std::collections::BTreeMap<String, String> {
    let mut p = params([
        ("algebra", orbit.algebra().name().to_string()),
        (
            "relation",
            orbit.relation().to_text(orbit.algebra().names()),
        ),
        ("orbit_type", orbit.orbit_type().to_string()),
    ]);
    for (k, v) in extra {
        p.insert(k.to_string(), v.clone());
    }
    p
}

/// Two-sided evidence for `P(O) = R ⊕ P(O)'` at every source bound
/// `b ≤ max_bound`: `1` is not a combination of reachable brackets, and
/// constants plus reachable brackets fill every normal form of degree ≤ b.
pub fn verify_thm2(orbit: &OrbitDescriptor, max_bound: u32, exec: Exec) -> VerificationReport {
    let ctx = orbit.context().with_exec(exec);
    let nv = ctx.nvars();
    let records = exec.map_range(0..max_bound as usize + 1, |b| {
        let b = b as u32;
        let (coords, ech) = reachable_span(&ctx, b, b, PairScope::AllPairs);
        let (ambient, piece) = filtration_piece(&ech, &coords, b);
        let piece_coords = Coordinates::new(ambient);
        let one = piece_coords.int_vector(&Polynomial::one(nv)).unwrap();
        let one_in = piece.contains_int(&one);
        let mut with_one = piece.clone();
        with_one.insert_int(one);
        let full = piece_coords.len();
        let covers = with_one.rank() == full;
        let mut rec = Record::new(b, Verdict::from_bool(!one_in && covers))
            .label("source bound")
            .dim("F", full)
            .dim("W", piece.rank())
            .dim("R+W", with_one.rank());
        if one_in {
            rec = rec.witness("1 lies in the derived span");
        } else if !covers {
            let m = piece_coords
                .ambient()
                .iter()
                .find(|m| {
                    !with_one.contains_int(&piece_coords.int_vector(&monomial_poly(m)).unwrap())
                })
                .expect("rank deficit has a missing monomial");
            rec = rec.witness(format!("not in R + W: {}", ctx.text(&monomial_poly(m))));
        }
        rec
    });
    VerificationReport::new(
        "P(O) = R + P(O)' with trivial intersection (bounded)",
        orbit_params(orbit, &[("max_bound", max_bound.to_string())]),
        records,
    )
}

/// Evidence for `P(O) = P(O)'`: at each bound `b` in `1..=max_bound`, the
/// reachable brackets contain `1` and every normal form of degree `< b`.
pub fn verify_perfect(orbit: &OrbitDescriptor, max_bound: u32, exec: Exec) -> VerificationReport {
    let ctx = orbit.context().with_exec(exec);
    let nv = ctx.nvars();
    let records = exec.map_range(1..max_bound as usize + 1, |b| {
        let b = b as u32;
        let (coords, ech) = reachable_span(&ctx, b, b, PairScope::AllPairs);
        let one_in = ech.contains_int(&coords.int_vector(&Polynomial::one(nv)).unwrap());
        let lower = ctx.basis_monomials_up_to(b - 1);
        let missing = lower
            .iter()
            .find(|m| !ech.contains_int(&coords.int_vector(&monomial_poly(m)).unwrap()));
        let mut rec = Record::new(b, Verdict::from_bool(one_in && missing.is_none()))
            .label("source bound")
            .dim("F_below", lower.len())
            .dim("W", ech.rank());
        if let Some(m) = missing {
            rec = rec.witness(format!(
                "not in derived span: {}",
                ctx.text(&monomial_poly(m))
            ));
        }
        rec
    });
    VerificationReport::new(
        "P(O) = P(O)' (bounded)",
        orbit_params(orbit, &[("max_bound", max_bound.to_string())]),
        records,
    )
}
