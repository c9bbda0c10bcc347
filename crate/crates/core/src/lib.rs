//! Exact computer algebra for Lie–Poisson polynomial algebras `S(g)` and
//! their quotients `P(O)` by orbit relations, with bounded-degree checks of
//! their structure.

pub mod exactla;
pub mod exec;
pub mod liealg;
pub mod orbit;
pub mod poisson;
pub mod poly;
pub mod sampling;
pub mod structure;

pub use exactla::{Rational, RationalMatrix};
pub use exec::Exec;
pub use liealg::{builtin, LieAlgebra};
pub use orbit::{casimir_orbit, make_orbit, OrbitDescriptor, OrbitType};
pub use poisson::PoissonContext;
pub use poly::{parse_poly, Monomial, MonomialOrder, Polynomial};
pub use structure::{Verdict, VerificationReport};
