//! Independent modular oracle: its own structure constants, bracket, orbit
//! reduction and Gaussian elimination over GF(p), sharing no code with the
//! library. Ranks mod p never exceed rational ranks; agreement is the check.

#![allow(dead_code)]

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

pub const P: u64 = (1 << 61) - 1;

fn mulm(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn addm(a: u64, b: u64) -> u64 {
    (a + b) % P
}

fn from_i64(x: i64) -> u64 {
    x.rem_euclid(P as i64) as u64
}

fn inv(a: u64) -> u64 {
    let (mut base, mut e, mut acc) = (a, P - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = mulm(acc, base);
        }
        base = mulm(base, base);
        e >>= 1;
    }
    acc
}

pub type Poly = BTreeMap<Vec<u32>, u64>;

fn add_into(f: &mut Poly, m: Vec<u32>, c: u64) {
    if c == 0 {
        return;
    }
    match f.entry(m) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            let s = addm(*o.get(), c);
            if s == 0 {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

pub fn mono(e: &[u32]) -> Poly {
    let mut f = Poly::new();
    f.insert(e.to_vec(), 1);
    f
}

/// Brackets `[ξ_i, ξ_j] = Σ c·ξ_k` for `i < j`, typed in by hand.
pub struct Table {
    pub dim: usize,
    pub brackets: Vec<(usize, usize, Vec<(usize, i64)>)>,
}

impl Table {
    pub fn sl2r() -> Self {
        // [x,y] = -z, [y,z] = x, [x,z] = -y
        Table {
            dim: 3,
            brackets: vec![
                (0, 1, vec![(2, -1)]),
                (1, 2, vec![(0, 1)]),
                (0, 2, vec![(1, -1)]),
            ],
        }
    }

    pub fn so3() -> Self {
        Table {
            dim: 3,
            brackets: vec![
                (0, 1, vec![(2, 1)]),
                (1, 2, vec![(0, 1)]),
                (0, 2, vec![(1, -1)]),
            ],
        }
    }

    pub fn heisenberg(n: usize) -> Self {
        Table {
            dim: 2 * n + 1,
            brackets: (0..n).map(|i| (i, n + i, vec![(2 * n, 1)])).collect(),
        }
    }

    fn pair(&self, i: usize, j: usize) -> Vec<(usize, i64)> {
        for (a, b, t) in &self.brackets {
            if (*a, *b) == (i, j) {
                return t.clone();
            }
            if (*a, *b) == (j, i) {
                return t.iter().map(|(k, c)| (*k, -c)).collect();
            }
        }
        Vec::new()
    }

    /// `Σ_{i≠j} ∂_i a ∂_j b [ξ_i, ξ_j]` on monomials.
    pub fn bracket_monomials(&self, a: &[u32], b: &[u32]) -> Poly {
        let mut out = Poly::new();
        for i in 0..self.dim {
            if a[i] == 0 {
                continue;
            }
            for j in 0..self.dim {
                if i == j || b[j] == 0 {
                    continue;
                }
                for (k, c) in self.pair(i, j) {
                    let mut m: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                    m[i] -= 1;
                    m[j] -= 1;
                    m[k] += 1;
                    add_into(&mut out, m, from_i64(c * a[i] as i64 * b[j] as i64));
                }
            }
        }
        out
    }

    pub fn bracket(&self, f: &Poly, g: &Poly) -> Poly {
        let mut out = Poly::new();
        for (a, ca) in f {
            for (b, cb) in g {
                for (m, c) in self.bracket_monomials(a, b) {
                    add_into(&mut out, m, mulm(mulm(*ca, *cb), c));
                }
            }
        }
        out
    }
}

pub fn mul(f: &Poly, g: &Poly) -> Poly {
    let mut out = Poly::new();
    for (a, ca) in f {
        for (b, cb) in g {
            add_into(
                &mut out,
                a.iter().zip(b).map(|(x, y)| x + y).collect(),
                mulm(*ca, *cb),
            );
        }
    }
    out
}

/// Quotient relations the acceptance criteria use.
#[derive(Clone, Copy)]
pub enum Relation {
    None,
    /// `x² + y² − z² = c` on three variables: `z² ↦ x² + y² − c`.
    Sl2rLevel(i64),
    /// Last variable equals one.
    LastIsOne,
}

pub fn reduce(f: &Poly, rel: Relation) -> Poly {
    match rel {
        Relation::None => f.clone(),
        Relation::LastIsOne => {
            let mut out = Poly::new();
            for (m, c) in f {
                let mut m = m.clone();
                *m.last_mut().unwrap() = 0;
                add_into(&mut out, m, *c);
            }
            out
        }
        Relation::Sl2rLevel(level) => {
            let mut sub = Poly::new();
            add_into(&mut sub, vec![2, 0, 0], 1);
            add_into(&mut sub, vec![0, 2, 0], 1);
            add_into(&mut sub, vec![0, 0, 0], from_i64(-level));
            let mut out = Poly::new();
            for (m, c) in f {
                let mut term = Poly::new();
                term.insert(vec![m[0], m[1], m[2] % 2], *c);
                for _ in 0..m[2] / 2 {
                    term = mul(&term, &sub);
                }
                for (k, v) in term {
                    add_into(&mut out, k, v);
                }
            }
            out
        }
    }
}

pub fn is_normal(m: &[u32], rel: Relation) -> bool {
    match rel {
        Relation::None => true,
        Relation::Sl2rLevel(_) => m[2] < 2,
        Relation::LastIsOne => *m.last().unwrap() == 0,
    }
}

/// Exponent vectors of exact degree `d`.
pub fn monomials(nvars: usize, d: u32) -> Vec<Vec<u32>> {
    if nvars == 1 {
        return vec![vec![d]];
    }
    (0..=d)
        .flat_map(|a| {
            monomials(nvars - 1, d - a)
                .into_iter()
                .map(move |mut rest| {
                    rest.insert(0, a);
                    rest
                })
        })
        .collect()
}

pub fn normal_monomials_up_to(nvars: usize, d: u32, rel: Relation) -> Vec<Vec<u32>> {
    (0..=d)
        .flat_map(|k| monomials(nvars, k))
        .filter(|m| is_normal(m, rel))
        .collect()
}

pub fn vector(f: &Poly, basis: &[Vec<u32>]) -> Vec<u64> {
    let v: Vec<u64> = basis
        .iter()
        .map(|m| f.get(m).copied().unwrap_or(0))
        .collect();
    assert_eq!(
        f.len(),
        v.iter().filter(|x| **x != 0).count(),
        "polynomial has terms outside the basis"
    );
    v
}

/// Row reduction mod p; returns the reduced rows and their pivots.
pub fn echelon(rows: &[Vec<u64>]) -> (Vec<Vec<u64>>, Vec<usize>) {
    let mut a: Vec<Vec<u64>> = rows.to_vec();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, p);
        let s = inv(a[r][c]);
        for x in a[r].iter_mut() {
            *x = mulm(*x, s);
        }
        for i in 0..a.len() {
            if i != r && a[i][c] != 0 {
                let f = a[i][c];
                for j in 0..cols {
                    let t = mulm(f, a[r][j]);
                    a[i][j] = addm(a[i][j], P - t);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

pub fn rank(rows: &[Vec<u64>]) -> usize {
    echelon(rows).1.len()
}

pub fn in_span(v: &[u64], rows: &[Vec<u64>]) -> bool {
    let mut all = rows.to_vec();
    all.push(v.to_vec());
    rank(&all) == rank(rows)
}

/// Kernel of the matrix whose columns are `cols`.
pub fn kernel_of_columns(cols: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let n = cols.len();
    let m = cols.first().map_or(0, Vec::len);
    let rows: Vec<Vec<u64>> = (0..m)
        .map(|i| cols.iter().map(|c| c[i]).collect())
        .collect();
    let (red, pivots) = echelon(&rows);
    (0..n)
        .filter(|j| !pivots.contains(j))
        .map(|free| {
            let mut v = vec![0u64; n];
            v[free] = 1;
            for (row, &p) in red.iter().zip(&pivots) {
                v[p] = (P - row[free]) % P;
            }
            v
        })
        .collect()
}
