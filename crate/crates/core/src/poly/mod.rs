//! Sparse multivariate polynomials over the rationals.

mod monomial;
mod parse;
mod polynomial;

pub use monomial::{monomials_of_degree, monomials_up_to, Monomial, MonomialOrder};
pub use parse::parse_poly;
pub use polynomial::{PolyDisplay, Polynomial};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("variable count mismatch: {left} vs {right}")]
    VariableMismatch { left: usize, right: usize },
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown variable '{name}' at position {position}")]
    UnknownVariable { name: String, position: usize },
}

pub fn poly_mul(f: &Polynomial, g: &Polynomial) -> Result<Polynomial, PolyError> {
    f.checked_mul(g)
}

pub fn graded_component(f: &Polynomial, n: u32) -> Polynomial {
    f.graded_component(n)
}

pub fn normal_form(
    f: &Polynomial,
    divisor: &Polynomial,
    order: &MonomialOrder,
) -> Result<Polynomial, PolyError> {
    f.normal_form(divisor, order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{rat, Rational};
    use proptest::prelude::*;

    fn names() -> Vec<String> {
        ["x", "y", "z"].iter().map(|s| s.to_string()).collect()
    }

    fn p(text: &str) -> Polynomial {
        parse_poly(text, &names()).unwrap()
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(((0u32..3, 0u32..3, 0u32..3), -5i64..6, 1i64..4), 0..6).prop_map(
            |ts| {
                Polynomial::from_terms(
                    3,
                    ts.into_iter().map(|((a, b, c), n, d)| {
                        (
                            Monomial::from_exponents(vec![a, b, c]),
                            Rational::new(n.into(), d.into()),
                        )
                    }),
                )
            },
        )
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(poly_mul(&p("x + y"), &p("x - y")).unwrap(), p("x^2 - y^2"));
        let f = p("3/2*x*y - z");
        assert_eq!(poly_mul(&f, &Polynomial::one(3)).unwrap(), f);
        assert_eq!(
            poly_mul(&p("x^2 + y^2 - z^2"), &p("z")).unwrap(),
            p("x^2*z + y^2*z - z^3")
        );
        assert!(poly_mul(&f, &Polynomial::one(2)).is_err());
    }

    #[test]
    fn graded_component_examples() {
        assert_eq!(graded_component(&p("x^2*y + z"), 3), p("x^2*y"));
        assert_eq!(graded_component(&p("x^2*y + z"), 1), p("z"));
        assert!(graded_component(&p("x^2 + y^2 - z^2"), 1).is_zero());
    }

    #[test]
    fn normal_form_examples() {
        let ord = MonomialOrder::default_for(3);
        let rel = p("x^2 + y^2 - z^2 - 1");
        assert_eq!(
            normal_form(&p("z^2"), &rel, &ord).unwrap(),
            p("x^2 + y^2 - 1")
        );
        assert_eq!(normal_form(&p("x"), &rel, &ord).unwrap(), p("x"));
        assert!(normal_form(&rel, &rel, &ord).unwrap().is_zero());
        assert_eq!(
            normal_form(&p("x"), &Polynomial::zero(3), &ord),
            Err(PolyError::ZeroDivisor)
        );
    }

    #[test]
    fn normal_form_respects_variable_priority() {
        // x highest: the leading monomial of the relation becomes x^2
        let ord = MonomialOrder::with_priority(vec![0, 1, 2]).unwrap();
        let rel = p("x^2 + y^2 - z^2 - 1");
        assert_eq!(
            normal_form(&p("x^2"), &rel, &ord).unwrap(),
            p("-y^2 + z^2 + 1")
        );
    }

    #[test]
    fn degree_and_constants() {
        assert_eq!(p("0").degree(), None);
        assert_eq!(p("5").degree(), Some(0));
        assert_eq!(p("x*y^2 + 1").degree(), Some(3));
        assert!(p("7/3").is_constant());
        assert_eq!(
            p("x + 7/3").constant_term(),
            Rational::new(7.into(), 3.into())
        );
        assert_eq!(p("x*y").derivative(1), p("x"));
        assert_eq!(p("x^3").derivative(0), p("3*x^2"));
        assert_eq!(p("x + y").pow(2), p("x^2 + 2*x*y + y^2"));
        assert_eq!(p("x").scale(&rat(0)), p("0"));
    }

    proptest! {
        #[test]
        fn ring_axioms(f in arb_poly(), g in arb_poly(), h in arb_poly()) {
            prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
            prop_assert_eq!(&f * &g, &g * &f);
            prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
            prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
            prop_assert!((&f - &f).is_zero());
        }

        #[test]
        fn product_degree_is_additive(f in arb_poly(), g in arb_poly()) {
            if let (Some(a), Some(b)) = (f.degree(), g.degree()) {
                prop_assert_eq!((&f * &g).degree(), Some(a + b));
            }
        }

        #[test]
        fn graded_components_partition(f in arb_poly()) {
            let total = (0..=6).fold(Polynomial::zero(3), |acc, n| &acc + &f.graded_component(n));
            prop_assert_eq!(total, f);
        }

        #[test]
        fn normal_form_is_canonical_mod_divisor(f in arb_poly(), g in arb_poly()) {
            let ord = MonomialOrder::default_for(3);
            let rel = p("x^2 + y^2 - z^2 - 1");
            let nf = normal_form(&f, &rel, &ord).unwrap();
            let shifted = &f + &(&g * &rel);
            prop_assert_eq!(normal_form(&shifted, &rel, &ord).unwrap(), nf.clone());
            prop_assert_eq!(normal_form(&nf, &rel, &ord).unwrap(), nf.clone());
            prop_assert!(nf.terms().all(|(m, _)| m.exponent(2) <= 1));
        }

        #[test]
        fn print_then_parse_is_identity(f in arb_poly()) {
            let text = f.to_text(&names());
            prop_assert_eq!(parse_poly(&text, &names()).unwrap(), f);
        }
    }
}
