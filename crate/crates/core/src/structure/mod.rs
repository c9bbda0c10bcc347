//! Bounded-degree verification of the structural claims about `S(g)` and
//! `P(O)`: degreewise splittings, derived spans, Poisson-ideal closures,
//! homogeneous ideals, ideal squares and the exactness system.
//!
//! Every verdict is relative to the degree bound recorded in its report.

mod closure;
mod derived;
mod ideals;
mod nonexact;
mod report;
mod subspace;

use thiserror::Error;

pub use closure::{poisson_ideal_closure, simplicity_probe, ClosureResult};
pub use derived::{
    derived_membership, derived_span, invariants_basis, invariants_basis_with, pair_span,
    verify_perfect, verify_prop1, verify_prop1_scoped, verify_thm2, Membership, PairScope,
};
pub use ideals::{ideal_square_check, verify_homogeneous_ideals};
pub use nonexact::{exactness_system, nonexactness_check};
pub use report::{Record, Verdict, VerificationReport};
pub use subspace::GradedSubspace;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("generator {0} is constant")]
    ConstantGenerator(String),
    #[error("generator reduces to zero")]
    ZeroGenerator,
    #[error("generator {generator} has degree {degree}, above the bound {bound}")]
    AboveBound {
        generator: String,
        degree: u32,
        bound: u32,
    },
    #[error("polynomial has {found} variables but the algebra has dimension {expected}")]
    VariableMismatch { expected: usize, found: usize },
    #[error("orbit relation is not homogeneous")]
    NotHomogeneous,
    #[error("ideal index must be at least 1")]
    ZeroIndex,
}
