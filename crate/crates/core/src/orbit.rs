//! Orbits as level sets of a single invariant: the principal ideal `I(O)`,
//! the quotient context `P(O)` and the projection `ρ_O`.

use std::fmt;

use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::exactla::Rational;
use crate::liealg::LieAlgebra;
use crate::poisson::{lie_poisson_bracket, PoissonContext};
use crate::poly::{Monomial, MonomialOrder, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrbitError {
    #[error("relation must be a nonconstant polynomial")]
    ConstantRelation,
    #[error("relation has {found} variables but the algebra has dimension {expected}")]
    VariableMismatch { expected: usize, found: usize },
    #[error("relation is not bracket-closed: {{relation, {generator}}} reduces to {residue}")]
    NotBracketClosed { generator: String, residue: String },
    #[error("monomial order covers {found} variables, expected {expected}")]
    OrderMismatch { expected: usize, found: usize },
    #[error("algebra {0} has no built-in Casimir")]
    NoCasimir(String),
}

/// Principal ideal generated by a bracket-closed relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitIdeal {
    relation: Polynomial,
    order: MonomialOrder,
    leading: Monomial,
}

impl OrbitIdeal {
    /// Checks that `{relation, ξ_i}` reduces to zero for every generator,
    /// i.e. that the ideal is also a Lie ideal.
    pub fn new(
        algebra: &LieAlgebra,
        relation: Polynomial,
        order: MonomialOrder,
    ) -> Result<Self, OrbitError> {
        let d = algebra.dim();
        if relation.nvars() != d {
            return Err(OrbitError::VariableMismatch {
                expected: d,
                found: relation.nvars(),
            });
        }
        if order.nvars() != d {
            return Err(OrbitError::OrderMismatch {
                expected: d,
                found: order.nvars(),
            });
        }
        if relation.is_constant() {
            return Err(OrbitError::ConstantRelation);
        }
        let leading = relation
            .leading_term(&order)
            .map(|(m, _)| m.clone())
            .expect("nonconstant relation has terms");
        let ideal = OrbitIdeal {
            relation,
            order,
            leading,
        };
        for i in 0..d {
            let b = lie_poisson_bracket(algebra, &ideal.relation, &Polynomial::var(d, i));
            let residue = ideal.reduce(&b);
            if !residue.is_zero() {
                return Err(OrbitError::NotBracketClosed {
                    generator: algebra.names()[i].clone(),
                    residue: residue.to_text(algebra.names()),
                });
            }
        }
        Ok(ideal)
    }

    pub fn relation(&self) -> &Polynomial {
        &self.relation
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn leading_monomial(&self) -> &Monomial {
        &self.leading
    }

    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        f.normal_form(&self.relation, &self.order)
            .expect("relation is nonzero and variable counts agree")
    }

    pub fn is_homogeneous(&self) -> bool {
        self.relation.is_homogeneous()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OrbitType {
    Semisimple,
    Nilpotent,
    Other,
}

impl fmt::Display for OrbitType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrbitType::Semisimple => "semisimple",
            OrbitType::Nilpotent => "nilpotent",
            OrbitType::Other => "other",
        })
    }
}

#[derive(Clone, Debug)]
pub struct OrbitDescriptor {
    algebra: LieAlgebra,
    ideal: OrbitIdeal,
    orbit_type: OrbitType,
    level: Option<Rational>,
}

/// If `relation = λ·casimir + μ`, the Casimir level `c = −μ/λ`.
fn casimir_level(casimir: &Polynomial, relation: &Polynomial) -> Option<Rational> {
    let mu = relation.constant_term();
    let shape = relation - &Polynomial::constant(relation.nvars(), mu.clone());
    let (m, c) = casimir.terms().next()?;
    let lambda = shape.coefficient(m) / c;
    if lambda.is_zero() || shape != casimir.scale(&lambda) {
        return None;
    }
    Some(-mu / lambda)
}

impl OrbitDescriptor {
    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn ideal(&self) -> &OrbitIdeal {
        &self.ideal
    }

    pub fn relation(&self) -> &Polynomial {
        self.ideal.relation()
    }

    pub fn orbit_type(&self) -> OrbitType {
        self.orbit_type
    }

    /// Casimir level when the relation is an affine multiple of the Casimir.
    pub fn level(&self) -> Option<&Rational> {
        self.level.as_ref()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.ideal.is_homogeneous()
    }

    pub fn with_type(mut self, orbit_type: OrbitType) -> Self {
        self.orbit_type = orbit_type;
        self
    }

    pub fn context(&self) -> PoissonContext {
        PoissonContext::quotient(self.algebra.clone(), self.ideal.clone())
            .expect("ideal was built for this algebra")
    }

    /// `ρ_O`: the normal form of `f`.
    pub fn project(&self, f: &Polynomial) -> Result<Polynomial, OrbitError> {
        if f.nvars() != self.algebra.dim() {
            return Err(OrbitError::VariableMismatch {
                expected: self.algebra.dim(),
                found: f.nvars(),
            });
        }
        Ok(self.ideal.reduce(f))
    }

    /// Number of normal-form monomials of degree exactly `n` (homogeneous
    /// relation) or at most `n` (otherwise).
    pub fn quotient_dimension(&self, n: u32) -> usize {
        let ctx = self.context();
        if self.is_homogeneous() {
            ctx.basis_monomials(n).len()
        } else {
            ctx.basis_monomials_up_to(n).len()
        }
    }

    pub fn describe(&self) -> String {
        format!(
            "{} / ({}) [{}]",
            self.algebra.name(),
            self.relation().to_text(self.algebra.names()),
            self.orbit_type
        )
    }
}

/// Orbit cut out by `relation` with the default monomial order.
pub fn make_orbit(
    algebra: LieAlgebra,
    relation: &Polynomial,
) -> Result<OrbitDescriptor, OrbitError> {
    let order = MonomialOrder::default_for(algebra.dim());
    make_orbit_with_order(algebra, relation, order)
}

pub fn make_orbit_with_order(
    algebra: LieAlgebra,
    relation: &Polynomial,
    order: MonomialOrder,
) -> Result<OrbitDescriptor, OrbitError> {
    let ideal = OrbitIdeal::new(&algebra, relation.clone(), order)?;
    let level = algebra.casimir().and_then(|c| casimir_level(c, relation));
    let orbit_type = match (&level, algebra.kind().is_builtin_semisimple()) {
        (Some(c), true) if c.is_zero() => OrbitType::Nilpotent,
        (Some(_), true) => OrbitType::Semisimple,
        _ => OrbitType::Other,
    };
    Ok(OrbitDescriptor {
        algebra,
        ideal,
        orbit_type,
        level,
    })
}

/// Level set `casimir = c` of the algebra's built-in invariant.
pub fn casimir_orbit(algebra: LieAlgebra, c: Rational) -> Result<OrbitDescriptor, OrbitError> {
    let casimir = algebra
        .casimir()
        .cloned()
        .ok_or_else(|| OrbitError::NoCasimir(algebra.name().to_string()))?;
    let relation = &casimir - &Polynomial::constant(algebra.dim(), c);
    make_orbit(algebra, &relation)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rat;
    use crate::liealg::builtin;
    use crate::poly::parse_poly;

    fn sl2r() -> LieAlgebra {
        builtin("sl2r", None).unwrap()
    }

    fn p(alg: &LieAlgebra, s: &str) -> Polynomial {
        parse_poly(s, alg.names()).unwrap()
    }

    #[test]
    fn classification() {
        let hyper = casimir_orbit(sl2r(), rat(1)).unwrap();
        assert_eq!(hyper.orbit_type(), OrbitType::Semisimple);
        assert_eq!(hyper.level(), Some(&rat(1)));
        let cone = casimir_orbit(sl2r(), rat(0)).unwrap();
        assert_eq!(cone.orbit_type(), OrbitType::Nilpotent);
        assert!(cone.is_homogeneous());
        let two_sheet = make_orbit(sl2r(), &p(&sl2r(), "2*x^2 + 2*y^2 - 2*z^2 + 6")).unwrap();
        assert_eq!(two_sheet.level(), Some(&rat(-3)));
        assert_eq!(two_sheet.orbit_type(), OrbitType::Semisimple);
        let h = builtin("heisenberg", Some(1)).unwrap();
        let plane = make_orbit(h.clone(), &p(&h, "z - 1")).unwrap();
        assert_eq!(plane.orbit_type(), OrbitType::Other);
        assert_eq!(
            plane.with_type(OrbitType::Nilpotent).orbit_type(),
            OrbitType::Nilpotent
        );
    }

    #[test]
    fn rejects_relations_that_are_not_bracket_closed() {
        let alg = sl2r();
        match make_orbit(alg.clone(), &p(&alg, "x - 1")) {
            Err(OrbitError::NotBracketClosed { generator, .. }) => assert_eq!(generator, "y"),
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(
            make_orbit(alg.clone(), &p(&alg, "3")).unwrap_err(),
            OrbitError::ConstantRelation
        );
        assert!(matches!(
            make_orbit(alg, &Polynomial::var(2, 0)),
            Err(OrbitError::VariableMismatch { .. })
        ));
    }

    #[test]
    fn projection_examples() {
        let alg = sl2r();
        let hyper = casimir_orbit(alg.clone(), rat(1)).unwrap();
        assert_eq!(
            hyper.project(&p(&alg, "z^2")).unwrap(),
            p(&alg, "x^2 + y^2 - 1")
        );
        assert_eq!(
            hyper.project(&p(&alg, "x^2 + y^2 - z^2")).unwrap(),
            p(&alg, "1")
        );
        let h = builtin("heisenberg", Some(1)).unwrap();
        let plane = make_orbit(h.clone(), &p(&h, "z - 1")).unwrap();
        assert_eq!(plane.project(&p(&h, "3*z + q")).unwrap(), p(&h, "3 + q"));
        assert!(plane.project(&Polynomial::var(2, 0)).is_err());
    }

    #[test]
    fn quotient_dimensions() {
        let cone = casimir_orbit(sl2r(), rat(0)).unwrap();
        assert_eq!(cone.quotient_dimension(2), 5);
        assert_eq!(cone.quotient_dimension(0), 1);
        let hyper = casimir_orbit(sl2r(), rat(1)).unwrap();
        assert_eq!(hyper.quotient_dimension(1), 4);
        for n in 0..6u32 {
            assert_eq!(hyper.quotient_dimension(n), ((n + 1) * (n + 1)) as usize);
            if n > 0 {
                assert_eq!(cone.quotient_dimension(n), (2 * n + 1) as usize);
            }
        }
    }

    #[test]
    fn casimir_needed_for_level_sets() {
        let names: Vec<String> = vec!["a".into(), "b".into()];
        let abelian = LieAlgebra::from_brackets("ab", names, []).unwrap();
        assert!(matches!(
            casimir_orbit(abelian, rat(1)),
            Err(OrbitError::NoCasimir(_))
        ));
    }
}
