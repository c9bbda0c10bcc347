//! The Lie–Poisson bracket on `S(g)` and on quotients `S(g)/I(O)`.

use thiserror::Error;

use crate::exec::Exec;
use crate::liealg::LieAlgebra;
use crate::orbit::OrbitIdeal;
use crate::poly::{monomials_of_degree, Monomial, PolyError, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PoissonError {
    #[error("polynomial has {found} variables but the algebra has dimension {expected}")]
    VariableMismatch { expected: usize, found: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// `{f, g} = Σ_{i<j} (∂_i f ∂_j g − ∂_j f ∂_i g) [ξ_i, ξ_j]`, unreduced.
pub fn lie_poisson_bracket(alg: &LieAlgebra, f: &Polynomial, g: &Polynomial) -> Polynomial {
    let d = alg.dim();
    let mut out = Polynomial::zero(d);
    if f.is_constant() || g.is_constant() {
        return out;
    }
    let df: Vec<Polynomial> = (0..d).map(|i| f.derivative(i)).collect();
    let dg: Vec<Polynomial> = (0..d).map(|i| g.derivative(i)).collect();
    for i in 0..d {
        for j in (i + 1)..d {
            let structure = alg.bracket_of_generators(i, j);
            if structure.is_zero() {
                continue;
            }
            let coeff = &(&df[i] * &dg[j]) - &(&df[j] * &dg[i]);
            if coeff.is_zero() {
                continue;
            }
            out = &out + &(&coeff * &structure);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ContextMode {
    Free,
    Quotient(OrbitIdeal),
}

/// Either the free algebra `S(g)` or a quotient `P(O) = S(g)/I(O)`.
///
/// In quotient mode every result is returned in normal form.
#[derive(Clone, Debug)]
pub struct PoissonContext {
    algebra: LieAlgebra,
    mode: ContextMode,
    exec: Exec,
}

impl PoissonContext {
    pub fn free(algebra: LieAlgebra) -> Self {
        PoissonContext {
            algebra,
            mode: ContextMode::Free,
            exec: Exec::default(),
        }
    }

    /// The ideal must have been built for this algebra; [`OrbitIdeal::new`]
    /// has already checked that the relation is bracket-closed.
    pub fn quotient(algebra: LieAlgebra, ideal: OrbitIdeal) -> Result<Self, PoissonError> {
        if ideal.relation().nvars() != algebra.dim() {
            return Err(PoissonError::VariableMismatch {
                expected: algebra.dim(),
                found: ideal.relation().nvars(),
            });
        }
        Ok(PoissonContext {
            algebra,
            mode: ContextMode::Quotient(ideal),
            exec: Exec::default(),
        })
    }

    pub fn with_exec(mut self, exec: Exec) -> Self {
        self.exec = exec;
        self
    }

    pub fn exec(&self) -> Exec {
        self.exec
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn mode(&self) -> &ContextMode {
        &self.mode
    }

    pub fn ideal(&self) -> Option<&OrbitIdeal> {
        match &self.mode {
            ContextMode::Free => None,
            ContextMode::Quotient(ideal) => Some(ideal),
        }
    }

    pub fn nvars(&self) -> usize {
        self.algebra.dim()
    }

    pub fn names(&self) -> &[String] {
        self.algebra.names()
    }

    /// Free contexts and quotients by homogeneous relations are graded;
    /// other quotients are only filtered by degree.
    pub fn is_graded(&self) -> bool {
        self.ideal().is_none_or(|i| i.relation().is_homogeneous())
    }

    pub fn generators(&self) -> Vec<Polynomial> {
        (0..self.nvars())
            .map(|i| self.reduce(&Polynomial::var(self.nvars(), i)))
            .collect()
    }

    fn check(&self, f: &Polynomial) -> Result<(), PoissonError> {
        if f.nvars() != self.nvars() {
            return Err(PoissonError::VariableMismatch {
                expected: self.nvars(),
                found: f.nvars(),
            });
        }
        Ok(())
    }

    /// Normal form in quotient mode, identity in free mode.
    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        match &self.mode {
            ContextMode::Free => f.clone(),
            ContextMode::Quotient(ideal) => ideal.reduce(f),
        }
    }

    pub fn is_normal(&self, m: &Monomial) -> bool {
        self.ideal()
            .is_none_or(|i| !i.leading_monomial().divides(m))
    }

    /// Normal-form monomials of degree exactly `n`, descending.
    pub fn basis_monomials(&self, n: u32) -> Vec<Monomial> {
        monomials_of_degree(self.nvars(), n)
            .into_iter()
            .filter(|m| self.is_normal(m))
            .collect()
    }

    /// Normal-form monomials of degree at most `n`, descending.
    pub fn basis_monomials_up_to(&self, n: u32) -> Vec<Monomial> {
        (0..=n)
            .rev()
            .flat_map(|d| self.basis_monomials(d))
            .collect()
    }

    pub fn mul(&self, f: &Polynomial, g: &Polynomial) -> Result<Polynomial, PoissonError> {
        self.check(f)?;
        self.check(g)?;
        Ok(self.reduce(&(f * g)))
    }

    pub fn bracket(&self, f: &Polynomial, g: &Polynomial) -> Result<Polynomial, PoissonError> {
        self.check(f)?;
        self.check(g)?;
        Ok(self.bracket_unchecked(f, g))
    }

    pub(crate) fn bracket_unchecked(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        self.reduce(&lie_poisson_bracket(&self.algebra, f, g))
    }

    /// `{f,{g,h}} + {g,{h,f}} + {h,{f,g}}`.
    pub fn jacobi_defect(
        &self,
        f: &Polynomial,
        g: &Polynomial,
        h: &Polynomial,
    ) -> Result<Polynomial, PoissonError> {
        let b = |a: &Polynomial, c: &Polynomial| self.bracket(a, c);
        let t1 = b(f, &b(g, h)?)?;
        let t2 = b(g, &b(h, f)?)?;
        let t3 = b(h, &b(f, g)?)?;
        Ok(&(&t1 + &t2) + &t3)
    }

    /// `({fg,h} − f{g,h} − g{f,h}, {fg,h} − {f,gh} − {g,fh})`.
    pub fn leibniz_defect(
        &self,
        f: &Polynomial,
        g: &Polynomial,
        h: &Polynomial,
    ) -> Result<(Polynomial, Polynomial), PoissonError> {
        let fg = self.mul(f, g)?;
        let lhs = self.bracket(&fg, h)?;
        let leibniz =
            &(&lhs - &self.mul(f, &self.bracket(g, h)?)?) - &self.mul(g, &self.bracket(f, h)?)?;
        let gh = self.mul(g, h)?;
        let fh = self.mul(f, h)?;
        let identity = &(&lhs - &self.bracket(f, &gh)?) - &self.bracket(g, &fh)?;
        Ok((leibniz, identity))
    }

    /// Hamiltonian map `b ↦ {a, b}`.
    pub fn hamiltonian<'a>(
        &'a self,
        a: &'a Polynomial,
    ) -> impl Fn(&Polynomial) -> Result<Polynomial, PoissonError> + 'a {
        move |b| self.bracket(a, b)
    }

    /// Brackets of many pairs, evaluated under the context's execution policy.
    pub fn brackets_of_pairs(&self, pairs: &[(Polynomial, Polynomial)]) -> Vec<Polynomial> {
        self.exec.map(pairs, |(f, g)| self.bracket_unchecked(f, g))
    }

    pub fn text(&self, f: &Polynomial) -> String {
        f.to_text(self.names())
    }
}
