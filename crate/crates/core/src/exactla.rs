//! Exact rational scalars and fraction-free linear algebra.
//!
//! Matrices are dense and small (a few hundred columns at most). All
//! elimination happens on integer rows obtained by clearing denominators:
//! [`rank`] and [`solve_linear`] use one-step Bareiss elimination, while
//! [`EchelonBasis`] maintains an incrementally built, fully reduced echelon
//! basis of primitive integer rows. Both routes stay inside `Z` until the
//! final rational read-out.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact rational number, always in lowest terms with a positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinAlgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}

/// Parses `p`, `-p` or `p/q` into a rational.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Dense row-major matrix of rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self, LinAlgError> {
        if entries.len() != rows * cols {
            return Err(LinAlgError::DimensionMismatch {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(RationalMatrix {
            rows,
            cols,
            entries,
        })
    }

    /// Builds a matrix from row vectors; `cols` is needed so that an empty row
    /// list still has a well-defined width.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self, LinAlgError> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(LinAlgError::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(RationalMatrix {
            rows: n,
            cols,
            entries,
        })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| rat(x)).collect())
            .collect();
        Self::from_rows(cols, rows).expect("ragged integer rows")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Rational]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, x: &[Rational]) -> Result<Vec<Rational>, LinAlgError> {
        if x.len() != self.cols {
            return Err(LinAlgError::DimensionMismatch {
                expected: self.cols,
                found: x.len(),
            });
        }
        Ok(self
            .row_iter()
            .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect())
    }

    /// Appends a row, returning a new matrix.
    pub fn with_row(&self, v: &[Rational]) -> Result<Self, LinAlgError> {
        if v.len() != self.cols {
            return Err(LinAlgError::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(v);
        Ok(RationalMatrix {
            rows: self.rows + 1,
            cols: self.cols,
            entries,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.row_iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Multiplies a rational vector by the lcm of its denominators.
pub fn clear_denominators(v: &[Rational]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
}

fn integer_rows(m: &RationalMatrix) -> Vec<Vec<BigInt>> {
    m.row_iter().map(clear_denominators).collect()
}

/// One-step Bareiss elimination restricted to the first `elim_cols` columns.
/// Columns beyond `elim_cols` are carried along (augmented part). Returns the
/// pivot columns; rows `0..pivots.len()` of `a` are then in echelon form.
fn bareiss_echelon(a: &mut [Vec<BigInt>], elim_cols: usize) -> Vec<usize> {
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..elim_cols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (head, tail) = a.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let pivot = pivot_row[c].clone();
        for row in tail.iter_mut() {
            let factor = row[c].clone();
            for j in (c + 1)..ncols {
                let num = &pivot * &row[j] - &factor * &pivot_row[j];
                debug_assert!((&num % &prev).is_zero(), "Bareiss division not exact");
                row[j] = num / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = pivot;
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Exact rank over the rationals.
pub fn rank(m: &RationalMatrix) -> usize {
    let mut a = integer_rows(m);
    bareiss_echelon(&mut a, m.cols()).len()
}

/// True iff `v` is a rational combination of the rows of `basis`.
pub fn in_span(v: &[Rational], basis: &RationalMatrix) -> Result<bool, LinAlgError> {
    let extended = basis.with_row(v)?;
    Ok(rank(&extended) == rank(basis))
}

/// Returns some `x` with `a·x = b`, or `None` when the system is inconsistent.
/// Free variables are set to zero.
pub fn solve_linear(
    a: &RationalMatrix,
    b: &[Rational],
) -> Result<Option<Vec<Rational>>, LinAlgError> {
    if b.len() != a.rows() {
        return Err(LinAlgError::DimensionMismatch {
            expected: a.rows(),
            found: b.len(),
        });
    }
    let n = a.cols();
    let rows: Vec<Vec<Rational>> = a
        .row_iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.to_vec();
            r.push(bi.clone());
            r
        })
        .collect();
    let mut aug: Vec<Vec<BigInt>> = rows.iter().map(|r| clear_denominators(r)).collect();
    let pivots = bareiss_echelon(&mut aug, n);
    if aug[pivots.len()..].iter().any(|row| !row[n].is_zero()) {
        return Ok(None);
    }
    let mut x = vec![Rational::zero(); n];
    for (r, &c) in pivots.iter().enumerate().rev() {
        let row = &aug[r];
        let mut rhs = Rational::from_integer(row[n].clone());
        for &c2 in &pivots[r + 1..] {
            rhs -= Rational::from_integer(row[c2].clone()) * &x[c2];
        }
        x[c] = rhs / Rational::from_integer(row[c].clone());
    }
    Ok(Some(x))
}

/// Basis of the right kernel `{x : m·x = 0}`, one vector per free column,
/// in reduced form (each basis vector has a 1 at its own free column and 0 at
/// the others).
pub fn kernel(m: &RationalMatrix) -> Vec<Vec<Rational>> {
    let mut ech = EchelonBasis::new(m.cols());
    for row in m.row_iter() {
        ech.insert(row);
    }
    let rref = ech.rref_rows();
    let pivots = ech.pivots().to_vec();
    let mut is_pivot = vec![false; m.cols()];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..m.cols())
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![Rational::zero(); m.cols()];
            v[free] = Rational::one();
            for (row, &p) in rref.iter().zip(&pivots) {
                v[p] = -row[free].clone();
            }
            v
        })
        .collect()
}

fn make_primitive(v: &mut [BigInt]) {
    let content = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if content.is_zero() {
        return;
    }
    let lead_negative = v
        .iter()
        .find(|x| !x.is_zero())
        .is_some_and(|x| x.is_negative());
    let divisor = if lead_negative { -content } else { content };
    if !divisor.is_one() {
        for x in v.iter_mut() {
            *x = &*x / &divisor;
        }
    }
}

/// Fully reduced echelon basis of a subspace of `Q^cols`, kept as primitive
/// integer rows.
///
/// Rows are sorted by pivot column; each pivot column is zero in every other
/// row and the pivot entry is positive. The pivot of a row is its leftmost
/// nonzero entry, so when columns are ordered by descending degree, the rows
/// whose pivot sits in a low-degree column span exactly the intersection of
/// the subspace with the low-degree coordinate subspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EchelonBasis {
    cols: usize,
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(cols: usize) -> Self {
        EchelonBasis {
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn integer_rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    fn reduce_int(&self, mut v: Vec<BigInt>) -> Vec<BigInt> {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let g = row[p].gcd(&v[p]);
            let a = &row[p] / &g;
            let b = &v[p] / &g;
            for (x, r) in v.iter_mut().zip(row) {
                *x = &a * &*x - &b * r;
            }
            make_primitive(&mut v);
        }
        v
    }

    /// Inserts an integer vector; returns true if the rank grew.
    pub fn insert_int(&mut self, v: Vec<BigInt>) -> bool {
        assert_eq!(
            v.len(),
            self.cols,
            "vector length does not match basis width"
        );
        let mut v = self.reduce_int(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        make_primitive(&mut v);
        for row in &mut self.rows {
            if row[p].is_zero() {
                continue;
            }
            let g = v[p].gcd(&row[p]);
            let a = &v[p] / &g;
            let b = &row[p] / &g;
            for (x, w) in row.iter_mut().zip(&v) {
                *x = &a * &*x - &b * w;
            }
            make_primitive(row);
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    pub fn insert(&mut self, v: &[Rational]) -> bool {
        self.insert_int(clear_denominators(v))
    }

    pub fn contains_int(&self, v: &[BigInt]) -> bool {
        assert_eq!(
            v.len(),
            self.cols,
            "vector length does not match basis width"
        );
        self.reduce_int(v.to_vec()).iter().all(Zero::is_zero)
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.contains_int(&clear_denominators(v))
    }

    /// Rows scaled so that every pivot is 1: the reduced row echelon form.
    pub fn rref_rows(&self) -> Vec<Vec<Rational>> {
        self.rows
            .iter()
            .zip(&self.pivots)
            .map(|(row, &p)| {
                row.iter()
                    .map(|x| Rational::new(x.clone(), row[p].clone()))
                    .collect()
            })
            .collect()
    }

    pub fn to_matrix(&self) -> RationalMatrix {
        RationalMatrix::from_rows(self.cols, self.rref_rows()).expect("rows have basis width")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Textbook Gauss-Jordan over Q, used as an independent oracle.
    fn naive_rank(m: &RationalMatrix) -> usize {
        let mut a: Vec<Vec<Rational>> = m.row_iter().map(<[_]>::to_vec).collect();
        let mut r = 0;
        for c in 0..m.cols() {
            let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            let piv = a[r][c].clone();
            for i in 0..a.len() {
                if i != r && !a[i][c].is_zero() {
                    let f = &a[i][c] / &piv;
                    for j in 0..m.cols() {
                        let d = &f * &a[r][j];
                        a[i][j] -= d;
                    }
                }
            }
            r += 1;
        }
        r
    }

    fn small_matrix() -> impl Strategy<Value = RationalMatrix> {
        (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
            prop::collection::vec((-4i64..5, 1i64..4), r * c).prop_map(move |vals| {
                let entries = vals.into_iter().map(|(n, d)| ratio(n, d)).collect();
                RationalMatrix::new(r, c, entries).unwrap()
            })
        })
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&RationalMatrix::from_i64_rows(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&RationalMatrix::zeros(3, 3)), 0);
        assert_eq!(rank(&RationalMatrix::identity(4)), 4);
    }

    #[test]
    fn in_span_examples() {
        let e1 = RationalMatrix::from_i64_rows(&[&[1, 0]]);
        assert!(!in_span(&[rat(0), rat(1)], &e1).unwrap());
        let b = RationalMatrix::from_i64_rows(&[&[1, 2]]);
        assert!(in_span(&[rat(2), rat(4)], &b).unwrap());
        let id = RationalMatrix::identity(3);
        assert!(in_span(&[rat(1), rat(1), rat(1)], &id).unwrap());
        assert_eq!(
            in_span(&[rat(1)], &id),
            Err(LinAlgError::DimensionMismatch {
                expected: 3,
                found: 1
            })
        );
    }

    #[test]
    fn solve_examples() {
        let x = solve_linear(&RationalMatrix::identity(2), &[rat(3), ratio(-1, 2)]).unwrap();
        assert_eq!(x, Some(vec![rat(3), ratio(-1, 2)]));
        let dup = RationalMatrix::from_i64_rows(&[&[1, 1], &[1, 1]]);
        assert_eq!(solve_linear(&dup, &[rat(0), rat(1)]).unwrap(), None);
        let two = RationalMatrix::from_i64_rows(&[&[2]]);
        assert_eq!(
            solve_linear(&two, &[rat(1)]).unwrap(),
            Some(vec![ratio(1, 2)])
        );
        assert!(solve_linear(&two, &[rat(1), rat(2)]).is_err());
    }

    #[test]
    fn kernel_of_rank_one_map() {
        let m = RationalMatrix::from_i64_rows(&[&[1, 2, 3], &[2, 4, 6]]);
        let k = kernel(&m);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.mul_vec(v).unwrap().iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn echelon_rows_are_reduced_and_sorted() {
        let mut e = EchelonBasis::new(3);
        assert!(e.insert(&[rat(0), rat(2), rat(4)]));
        assert!(e.insert(&[rat(3), rat(1), rat(0)]));
        assert!(!e.insert(&[rat(6), rat(4), rat(4)]));
        assert_eq!(e.pivots(), &[0, 1]);
        let rows = e.rref_rows();
        assert_eq!(rows[0], vec![rat(1), rat(0), ratio(-2, 3)]);
        assert_eq!(rows[1], vec![rat(0), rat(1), rat(2)]);
    }

    proptest! {
        #[test]
        fn bareiss_rank_matches_gauss_jordan(m in small_matrix()) {
            prop_assert_eq!(rank(&m), naive_rank(&m));
        }

        #[test]
        fn rank_is_transpose_invariant(m in small_matrix()) {
            prop_assert_eq!(rank(&m), rank(&m.transpose()));
        }

        #[test]
        fn echelon_rank_matches_bareiss(m in small_matrix()) {
            let mut e = EchelonBasis::new(m.cols());
            for row in m.row_iter() {
                e.insert(row);
            }
            prop_assert_eq!(e.rank(), rank(&m));
        }

        #[test]
        fn in_span_agrees_with_rank_test(m in small_matrix(), seed in prop::collection::vec(-3i64..4, 6)) {
            let v: Vec<Rational> = seed.iter().take(m.cols()).map(|&x| rat(x)).chain(std::iter::repeat(rat(0))).take(m.cols()).collect();
            let mut e = EchelonBasis::new(m.cols());
            for row in m.row_iter() {
                e.insert(row);
            }
            prop_assert_eq!(in_span(&v, &m).unwrap(), e.contains(&v));
        }

        #[test]
        fn solutions_satisfy_system_exactly(m in small_matrix(), xs in prop::collection::vec(-3i64..4, 6)) {
            // b built from a known x is always consistent
            let x0: Vec<Rational> = (0..m.cols()).map(|j| rat(xs[j % xs.len()])).collect();
            let b = m.mul_vec(&x0).unwrap();
            let x = solve_linear(&m, &b).unwrap().expect("consistent by construction");
            prop_assert_eq!(m.mul_vec(&x).unwrap(), b);
        }
    }
}
