use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::exactla::{clear_denominators, EchelonBasis, Rational, RationalMatrix};
use crate::poly::{Monomial, Polynomial};

/// Finite-dimensional subspace of polynomials, stored as a reduced row
/// echelon basis over an explicit monomial list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSubspace {
    degree: u32,
    ambient: Vec<Monomial>,
    basis: RationalMatrix,
    rank: usize,
}

impl GradedSubspace {
    pub(crate) fn from_echelon(degree: u32, ambient: Vec<Monomial>, ech: &EchelonBasis) -> Self {
        debug_assert_eq!(ambient.len(), ech.cols());
        GradedSubspace {
            degree,
            rank: ech.rank(),
            basis: ech.to_matrix(),
            ambient,
        }
    }

    /// Degree this subspace lives in: exact degree for graded contexts,
    /// degree bound for filtered ones.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn ambient(&self) -> &[Monomial] {
        &self.ambient
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient.len()
    }

    pub fn basis(&self) -> &RationalMatrix {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_full(&self) -> bool {
        self.rank == self.ambient.len()
    }

    fn echelon(&self) -> EchelonBasis {
        let mut ech = EchelonBasis::new(self.ambient.len());
        for row in self.basis.row_iter() {
            ech.insert(row);
        }
        ech
    }

    /// Membership; polynomials with terms outside the ambient are not members.
    pub fn contains(&self, f: &Polynomial) -> bool {
        match Coordinates::new(self.ambient.clone()).int_vector(f) {
            Some(v) => self.echelon().contains_int(&v),
            None => false,
        }
    }

    pub fn basis_polynomials(&self, nvars: usize) -> Vec<Polynomial> {
        let coords = Coordinates::new(self.ambient.clone());
        self.basis
            .row_iter()
            .map(|row| coords.polynomial(nvars, row))
            .collect()
    }

    /// True iff every basis vector of `self` lies in `other`.
    pub fn is_contained_in(&self, other: &GradedSubspace) -> bool {
        let nvars = self
            .ambient
            .first()
            .or(other.ambient.first())
            .map_or(0, Monomial::nvars);
        self.basis_polynomials(nvars)
            .iter()
            .all(|f| other.contains(f))
    }
}

/// Column indexing for a fixed list of monomials.
#[derive(Clone, Debug)]
pub(crate) struct Coordinates {
    ambient: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl Coordinates {
    pub fn new(ambient: Vec<Monomial>) -> Self {
        let index = ambient
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        Coordinates { ambient, index }
    }

    pub fn ambient(&self) -> &[Monomial] {
        &self.ambient
    }

    pub fn len(&self) -> usize {
        self.ambient.len()
    }

    pub fn vector(&self, f: &Polynomial) -> Option<Vec<Rational>> {
        let mut v = vec![Rational::zero(); self.ambient.len()];
        for (m, c) in f.terms() {
            v[*self.index.get(m)?] = c.clone();
        }
        Some(v)
    }

    pub fn int_vector(&self, f: &Polynomial) -> Option<Vec<BigInt>> {
        self.vector(f).map(|v| clear_denominators(&v))
    }

    pub fn polynomial(&self, nvars: usize, v: &[Rational]) -> Polynomial {
        Polynomial::from_terms(nvars, self.ambient.iter().cloned().zip(v.iter().cloned()))
    }

    pub fn polynomial_int(&self, nvars: usize, v: &[BigInt]) -> Polynomial {
        Polynomial::from_terms(
            nvars,
            self.ambient
                .iter()
                .cloned()
                .zip(v.iter().map(|x| Rational::from_integer(x.clone()))),
        )
    }

    /// First column whose monomial has degree at most `n` (columns are in
    /// descending degree order).
    pub fn start_of_degree_at_most(&self, n: u32) -> usize {
        self.ambient.partition_point(|m| m.degree() > n)
    }
}

/// `W ∩ F_n` where `F_n` is spanned by the ambient monomials of degree ≤ n.
///
/// Relies on descending-degree column order: rows of the echelon basis whose
/// pivot lies at or after the first degree-≤n column are exactly those inside
/// `F_n`, and together they span the intersection.
pub(crate) fn filtration_piece(
    ech: &EchelonBasis,
    coords: &Coordinates,
    n: u32,
) -> (Vec<Monomial>, EchelonBasis) {
    let start = coords.start_of_degree_at_most(n);
    let ambient = coords.ambient()[start..].to_vec();
    let mut piece = EchelonBasis::new(ambient.len());
    for (row, &p) in ech.integer_rows().iter().zip(ech.pivots()) {
        if p >= start {
            debug_assert!(row[..start].iter().all(Zero::is_zero));
            piece.insert_int(row[start..].to_vec());
        }
    }
    (ambient, piece)
}
