//! Lie algebras given by structure constants.
//!
//! `[ξ_i, ξ_j] = Σ_k c(i,j,k) ξ_k`, stored sparsely. The basis names double as
//! the variable names of the symmetric algebra.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactla::{parse_rational, rank, rat, Rational, RationalMatrix};
use crate::poly::{parse_poly, Polynomial};

#[derive(Debug, Error)]
pub enum LieError {
    #[error("unknown built-in algebra '{0}' (expected sl2r, so3 or heisenberg)")]
    UnknownBuiltin(String),
    #[error("invalid size for {name}: {reason}")]
    InvalidSize { name: String, reason: String },
    #[error("duplicate basis name '{0}'")]
    DuplicateName(String),
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("unknown basis element '{0}'")]
    UnknownName(String),
    #[error("bad coefficient '{0}' (expected p or p/q)")]
    BadCoefficient(String),
    #[error("conflicting brackets: [{i},{j}] and [{j},{i}] are not negatives of each other")]
    Conflict { i: String, j: String },
    #[error("bracket [{0},{0}] must vanish")]
    SelfBracket(String),
    #[error("dimension {dim} does not match {count} basis names")]
    DimensionMismatch { dim: usize, count: usize },
    #[error("algebra file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("reading algebra file: {0}")]
    Io(#[from] std::io::Error),
    #[error("not a Lie algebra: {0}")]
    Invalid(String),
}

/// Which family an algebra belongs to; drives orbit classification.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum AlgebraKind {
    Sl2r,
    So3,
    Heisenberg(usize),
    Custom,
}

impl AlgebraKind {
    /// Built-in semisimple algebras whose Casimir level sets are classified.
    pub fn is_builtin_semisimple(&self) -> bool {
        matches!(self, AlgebraKind::Sl2r | AlgebraKind::So3)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    name: String,
    kind: AlgebraKind,
    names: Vec<String>,
    constants: BTreeMap<(usize, usize, usize), Rational>,
    casimir: Option<Polynomial>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Antisymmetry {
        i: usize,
        j: usize,
        k: usize,
        ij: Rational,
        ji: Rational,
    },
    Jacobi {
        i: usize,
        j: usize,
        k: usize,
        l: usize,
        value: Rational,
    },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

pub struct ViolationDisplay<'a> {
    violation: &'a Violation,
    names: &'a [String],
}

impl Violation {
    pub fn display<'a>(&'a self, names: &'a [String]) -> ViolationDisplay<'a> {
        ViolationDisplay {
            violation: self,
            names,
        }
    }
}

impl fmt::Display for ViolationDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = |i: usize| self.names[i].as_str();
        match self.violation {
            Violation::Antisymmetry { i, j, k, ij, ji } => write!(
                f,
                "antisymmetry: c({},{},{}) = {} but c({},{},{}) = {}",
                n(*i),
                n(*j),
                n(*k),
                ij,
                n(*j),
                n(*i),
                n(*k),
                ji
            ),
            Violation::Jacobi { i, j, k, l, value } => write!(
                f,
                "jacobi: cyclic sum for ({},{},{}) has {}-component {}",
                n(*i),
                n(*j),
                n(*k),
                n(*l),
                value
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Semisimplicity {
    pub killing: RationalMatrix,
    pub semisimple: bool,
}

impl LieAlgebra {
    /// Raw constructor: stores exactly the given nonzero triples, with no
    /// antisymmetric completion. Use [`LieAlgebra::validate`] to check axioms.
    pub fn from_structure_constants(
        name: impl Into<String>,
        names: Vec<String>,
        triples: impl IntoIterator<Item = (usize, usize, usize, Rational)>,
    ) -> Result<Self, LieError> {
        check_names(&names)?;
        let dim = names.len();
        let mut constants = BTreeMap::new();
        for (i, j, k, c) in triples {
            for index in [i, j, k] {
                if index >= dim {
                    return Err(LieError::IndexOutOfRange { index, dim });
                }
            }
            if !c.is_zero() {
                constants.insert((i, j, k), c);
            }
        }
        Ok(LieAlgebra {
            name: name.into(),
            kind: AlgebraKind::Custom,
            names,
            constants,
            casimir: None,
        })
    }

    /// Builds from a list of brackets `[ξ_i, ξ_j] = Σ c_k ξ_k`, completing
    /// `[ξ_j, ξ_i]` automatically. A pair given in both orders must agree.
    pub fn from_brackets(
        name: impl Into<String>,
        names: Vec<String>,
        brackets: impl IntoIterator<Item = (usize, usize, Vec<(usize, Rational)>)>,
    ) -> Result<Self, LieError> {
        check_names(&names)?;
        let dim = names.len();
        let mut table: BTreeMap<(usize, usize), BTreeMap<usize, Rational>> = BTreeMap::new();
        for (i, j, terms) in brackets {
            for index in [i, j] {
                if index >= dim {
                    return Err(LieError::IndexOutOfRange { index, dim });
                }
            }
            let mut combo = BTreeMap::new();
            for (k, c) in terms {
                if k >= dim {
                    return Err(LieError::IndexOutOfRange { index: k, dim });
                }
                let e: &mut Rational = combo.entry(k).or_insert_with(Rational::zero);
                *e += c;
            }
            combo.retain(|_, c: &mut Rational| !c.is_zero());
            if i == j {
                if !combo.is_empty() {
                    return Err(LieError::SelfBracket(names[i].clone()));
                }
                continue;
            }
            let negated: BTreeMap<usize, Rational> = combo.iter().map(|(k, c)| (*k, -c)).collect();
            for (key, value) in [((i, j), combo), ((j, i), negated)] {
                match table.get(&key) {
                    Some(existing) if *existing != value => {
                        return Err(LieError::Conflict {
                            i: names[i].clone(),
                            j: names[j].clone(),
                        })
                    }
                    _ => {
                        table.insert(key, value);
                    }
                }
            }
        }
        let triples = table
            .into_iter()
            .flat_map(|((i, j), combo)| combo.into_iter().map(move |(k, c)| (i, j, k, c)));
        Self::from_structure_constants(name, names, triples)
    }

    pub fn from_json(text: &str) -> Result<Self, LieError> {
        let file: AlgebraFile = serde_json::from_str(text)?;
        file.into_algebra()
    }

    pub fn from_json_file(path: &Path) -> Result<Self, LieError> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn to_json(&self) -> String {
        let mut brackets = Vec::new();
        for i in 0..self.dim() {
            for j in (i + 1)..self.dim() {
                let terms: Vec<TermEntry> = (0..self.dim())
                    .filter_map(|k| {
                        let c = self.constant(i, j, k);
                        (!c.is_zero()).then(|| TermEntry {
                            k: self.names[k].clone(),
                            coeff: c.to_string(),
                        })
                    })
                    .collect();
                if !terms.is_empty() {
                    brackets.push(BracketEntry {
                        i: self.names[i].clone(),
                        j: self.names[j].clone(),
                        terms,
                    });
                }
            }
        }
        let file = AlgebraFile {
            dim: self.dim(),
            basis: self.names.clone(),
            brackets,
            casimir: self.casimir.as_ref().map(|c| c.to_text(&self.names)),
        };
        serde_json::to_string_pretty(&file).expect("algebra serializes")
    }

    /// One of the built-ins: `sl2r`, `so3`, `heisenberg` (with `n ≥ 1`).
    pub fn builtin(name: &str, n: Option<usize>) -> Result<Self, LieError> {
        let s = |v: &[&str]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
        let no_size = |n: Option<usize>| match n {
            None => Ok(()),
            Some(_) => Err(LieError::InvalidSize {
                name: name.to_string(),
                reason: "takes no size parameter".into(),
            }),
        };
        let (x, y, z) = (0, 1, 2);
        let mut alg = match name {
            "sl2r" => {
                no_size(n)?;
                // read off x∂y∧∂z + y∂z∧∂x − z∂x∧∂y
                let mut a = Self::from_brackets(
                    "sl2r",
                    s(&["x", "y", "z"]),
                    [
                        (y, z, vec![(x, rat(1))]),
                        (z, x, vec![(y, rat(1))]),
                        (x, y, vec![(z, rat(-1))]),
                    ],
                )?;
                a.kind = AlgebraKind::Sl2r;
                a.casimir = Some(parse_poly("x^2 + y^2 - z^2", &a.names).expect("casimir parses"));
                a
            }
            "so3" => {
                no_size(n)?;
                let mut a = Self::from_brackets(
                    "so3",
                    s(&["x", "y", "z"]),
                    [
                        (x, y, vec![(z, rat(1))]),
                        (y, z, vec![(x, rat(1))]),
                        (z, x, vec![(y, rat(1))]),
                    ],
                )?;
                a.kind = AlgebraKind::So3;
                a.casimir = Some(parse_poly("x^2 + y^2 + z^2", &a.names).expect("casimir parses"));
                a
            }
            "heisenberg" => {
                let n = n.unwrap_or(1);
                if n == 0 {
                    return Err(LieError::InvalidSize {
                        name: name.into(),
                        reason: "n must be at least 1".into(),
                    });
                }
                let names: Vec<String> = if n == 1 {
                    s(&["q", "p", "z"])
                } else {
                    (1..=n)
                        .map(|i| format!("q_{i}"))
                        .chain((1..=n).map(|i| format!("p_{i}")))
                        .chain(std::iter::once("z".to_string()))
                        .collect()
                };
                let center = 2 * n;
                let mut a = Self::from_brackets(
                    format!("heisenberg({n})"),
                    names,
                    (0..n).map(|i| (i, n + i, vec![(center, rat(1))])),
                )?;
                a.kind = AlgebraKind::Heisenberg(n);
                a.casimir = Some(Polynomial::var(2 * n + 1, center));
                a
            }
            other => return Err(LieError::UnknownBuiltin(other.to_string())),
        };
        alg.name = match alg.kind {
            AlgebraKind::Heisenberg(n) => format!("heisenberg({n})"),
            _ => name.to_string(),
        };
        Ok(alg)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> &AlgebraKind {
        &self.kind
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> Rational {
        self.constants
            .get(&(i, j, k))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Nonzero structure constants `(i, j, k, c)`.
    pub fn constants(&self) -> impl Iterator<Item = (usize, usize, usize, &Rational)> {
        self.constants.iter().map(|(&(i, j, k), c)| (i, j, k, c))
    }

    /// `[ξ_i, ξ_j]` as a linear polynomial on the dual.
    pub fn bracket_of_generators(&self, i: usize, j: usize) -> Polynomial {
        let d = self.dim();
        let mut p = Polynomial::zero(d);
        for ((_, _, k), c) in self.constants.range((i, j, 0)..=(i, j, d)) {
            p.add_term(crate::poly::Monomial::var(d, *k), c.clone());
        }
        p
    }

    /// The distinguished invariant used for `--casimir` level sets.
    pub fn casimir(&self) -> Option<&Polynomial> {
        self.casimir.as_ref()
    }

    pub fn with_casimir(mut self, casimir: Polynomial) -> Self {
        self.casimir = Some(casimir);
        self
    }

    pub fn validate(&self) -> ValidationReport {
        let d = self.dim();
        let mut violations = Vec::new();
        for i in 0..d {
            for j in i..d {
                for k in 0..d {
                    let ij = self.constant(i, j, k);
                    let ji = self.constant(j, i, k);
                    if ij != -ji.clone() {
                        violations.push(Violation::Antisymmetry { i, j, k, ij, ji });
                    }
                }
            }
        }
        for i in 0..d {
            for j in (i + 1)..d {
                for k in (j + 1)..d {
                    for l in 0..d {
                        let value: Rational = (0..d)
                            .map(|m| {
                                self.constant(i, j, m) * self.constant(m, k, l)
                                    + self.constant(j, k, m) * self.constant(m, i, l)
                                    + self.constant(k, i, m) * self.constant(m, j, l)
                            })
                            .sum();
                        if !value.is_zero() {
                            violations.push(Violation::Jacobi { i, j, k, l, value });
                        }
                    }
                }
            }
        }
        ValidationReport { violations }
    }

    /// `B(ξ_i, ξ_j) = tr(ad ξ_i ∘ ad ξ_j) = Σ_{k,l} c(i,l,k) c(j,k,l)`.
    pub fn killing_matrix(&self) -> RationalMatrix {
        let d = self.dim();
        let mut b = RationalMatrix::zeros(d, d);
        for i in 0..d {
            for j in 0..d {
                let mut s = Rational::zero();
                for k in 0..d {
                    for l in 0..d {
                        s += self.constant(i, l, k) * self.constant(j, k, l);
                    }
                }
                b.set(i, j, s);
            }
        }
        b
    }

    /// Cartan's criterion: semisimple iff the Killing form is nondegenerate.
    pub fn is_semisimple(&self) -> Result<Semisimplicity, LieError> {
        let report = self.validate();
        if let Some(v) = report.violations.first() {
            return Err(LieError::Invalid(v.display(&self.names).to_string()));
        }
        let killing = self.killing_matrix();
        let semisimple = rank(&killing) == self.dim();
        Ok(Semisimplicity {
            killing,
            semisimple,
        })
    }
}

fn check_names(names: &[String]) -> Result<(), LieError> {
    for (i, n) in names.iter().enumerate() {
        if names[..i].contains(n) {
            return Err(LieError::DuplicateName(n.clone()));
        }
    }
    Ok(())
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraFile {
    dim: usize,
    basis: Vec<String>,
    #[serde(default)]
    brackets: Vec<BracketEntry>,
    /// Optional invariant polynomial enabling `--casimir` for custom algebras.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    casimir: Option<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BracketEntry {
    i: String,
    j: String,
    #[serde(default)]
    terms: Vec<TermEntry>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermEntry {
    k: String,
    coeff: String,
}

impl AlgebraFile {
    fn into_algebra(self) -> Result<LieAlgebra, LieError> {
        if self.dim != self.basis.len() {
            return Err(LieError::DimensionMismatch {
                dim: self.dim,
                count: self.basis.len(),
            });
        }
        let idx = |name: &str| {
            self.basis
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| LieError::UnknownName(name.to_string()))
        };
        let mut brackets = Vec::new();
        for b in &self.brackets {
            let mut terms = Vec::new();
            for t in &b.terms {
                let c = parse_rational(&t.coeff)
                    .ok_or_else(|| LieError::BadCoefficient(t.coeff.clone()))?;
                terms.push((idx(&t.k)?, c));
            }
            brackets.push((idx(&b.i)?, idx(&b.j)?, terms));
        }
        let mut alg = LieAlgebra::from_brackets("custom", self.basis.clone(), brackets)?;
        if let Some(text) = &self.casimir {
            let c = parse_poly(text, &self.basis)
                .map_err(|e| LieError::Invalid(format!("casimir: {e}")))?;
            alg.casimir = Some(c);
        }
        Ok(alg)
    }
}

impl fmt::Display for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} (dim {}; basis {})",
            self.name,
            self.dim(),
            self.names.join(", ")
        )
    }
}

pub fn builtin(name: &str, n: Option<usize>) -> Result<LieAlgebra, LieError> {
    LieAlgebra::builtin(name, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn diag(values: &[i64]) -> RationalMatrix {
        let mut m = RationalMatrix::zeros(values.len(), values.len());
        for (i, &v) in values.iter().enumerate() {
            m.set(i, i, rat(v));
        }
        m
    }

    #[test]
    fn builtins_are_lie_algebras() {
        for (name, n) in [
            ("sl2r", None),
            ("so3", None),
            ("heisenberg", Some(1)),
            ("heisenberg", Some(2)),
            ("heisenberg", Some(3)),
        ] {
            let alg = builtin(name, n).unwrap();
            assert!(alg.validate().is_valid(), "{name}");
            assert!(alg.killing_matrix().is_symmetric());
        }
    }

    #[test]
    fn sl2r_brackets_follow_the_poisson_tensor() {
        let a = builtin("sl2r", None).unwrap();
        assert_eq!(a.dim(), 3);
        assert_eq!(a.names(), ["x", "y", "z"]);
        let names = a.names().to_vec();
        assert_eq!(a.bracket_of_generators(0, 1).to_text(&names), "-z");
        assert_eq!(a.bracket_of_generators(1, 2).to_text(&names), "x");
        assert_eq!(a.bracket_of_generators(2, 0).to_text(&names), "y");
        assert_eq!(a.bracket_of_generators(1, 0).to_text(&names), "z");
    }

    #[test]
    fn killing_forms() {
        let sl = builtin("sl2r", None).unwrap().is_semisimple().unwrap();
        assert_eq!(sl.killing, diag(&[2, 2, -2]));
        assert!(sl.semisimple);
        let so = builtin("so3", None).unwrap().is_semisimple().unwrap();
        assert_eq!(so.killing, diag(&[-2, -2, -2]));
        assert!(so.semisimple);
        for n in 1..=3 {
            let h = builtin("heisenberg", Some(n))
                .unwrap()
                .is_semisimple()
                .unwrap();
            assert!(h.killing.is_zero());
            assert!(!h.semisimple);
        }
    }

    #[test]
    fn heisenberg_layout() {
        let h = builtin("heisenberg", Some(1)).unwrap();
        assert_eq!(h.names(), ["q", "p", "z"]);
        assert_eq!(h.bracket_of_generators(0, 1).to_text(h.names()), "z");
        for i in 0..3 {
            assert!(h.bracket_of_generators(i, 2).is_zero());
        }
        let h2 = builtin("heisenberg", Some(2)).unwrap();
        assert_eq!(h2.names(), ["q_1", "q_2", "p_1", "p_2", "z"]);
        assert!(h2.bracket_of_generators(0, 3).is_zero());
        assert_eq!(h2.bracket_of_generators(1, 3).to_text(h2.names()), "z");
    }

    #[test]
    fn builtin_errors() {
        assert!(matches!(
            builtin("e8", None),
            Err(LieError::UnknownBuiltin(_))
        ));
        assert!(matches!(
            builtin("heisenberg", Some(0)),
            Err(LieError::InvalidSize { .. })
        ));
        assert!(matches!(
            builtin("sl2r", Some(2)),
            Err(LieError::InvalidSize { .. })
        ));
    }

    #[test]
    fn antisymmetry_violation_is_reported() {
        let names: Vec<String> = ["a", "b", "c"].iter().map(|s| s.to_string()).collect();
        let alg = LieAlgebra::from_structure_constants(
            "bad",
            names,
            [(0, 1, 2, rat(1)), (1, 0, 2, rat(1))],
        )
        .unwrap();
        let report = alg.validate();
        assert!(report.violations.contains(&Violation::Antisymmetry {
            i: 0,
            j: 1,
            k: 2,
            ij: rat(1),
            ji: rat(1)
        }));
        assert!(alg.is_semisimple().is_err());
    }

    #[test]
    fn jacobi_violation_is_reported() {
        // antisymmetric but [[a,b],c] + ... ≠ 0
        let names: Vec<String> = ["a", "b", "c"].iter().map(|s| s.to_string()).collect();
        let alg = LieAlgebra::from_brackets(
            "bad",
            names,
            [
                (0, 1, vec![(0, rat(1))]),
                (1, 2, vec![(1, rat(1))]),
                (2, 0, vec![(2, rat(1))]),
            ],
        )
        .unwrap();
        let report = alg.validate();
        assert!(report
            .violations
            .iter()
            .all(|v| matches!(v, Violation::Jacobi { .. })));
        assert!(!report.is_valid());
    }

    #[test]
    fn json_round_trip_and_errors() {
        let text = r#"{"dim": 3, "basis": ["x","y","z"], "brackets": [
            {"i": "y", "j": "z", "terms": [{"k": "x", "coeff": "1"}]},
            {"i": "z", "j": "x", "terms": [{"k": "y", "coeff": "1"}]},
            {"i": "x", "j": "y", "terms": [{"k": "z", "coeff": "-1"}]}]}"#;
        let a = LieAlgebra::from_json(text).unwrap();
        let sl = builtin("sl2r", None).unwrap();
        assert_eq!(a.constants().count(), sl.constants().count());
        assert!(sl.constants().all(|(i, j, k, c)| a.constant(i, j, k) == *c));
        let again = LieAlgebra::from_json(&sl.to_json()).unwrap();
        assert!(sl
            .constants()
            .all(|(i, j, k, c)| again.constant(i, j, k) == *c));
        assert_eq!(again.casimir(), sl.casimir());

        let conflict = r#"{"dim": 2, "basis": ["a","b"], "brackets": [
            {"i": "a", "j": "b", "terms": [{"k": "a", "coeff": "1"}]},
            {"i": "b", "j": "a", "terms": [{"k": "a", "coeff": "1"}]}]}"#;
        assert!(matches!(
            LieAlgebra::from_json(conflict),
            Err(LieError::Conflict { .. })
        ));
        let consistent = r#"{"dim": 2, "basis": ["a","b"], "brackets": [
            {"i": "a", "j": "b", "terms": [{"k": "a", "coeff": "1/2"}]},
            {"i": "b", "j": "a", "terms": [{"k": "a", "coeff": "-1/2"}]}]}"#;
        assert!(LieAlgebra::from_json(consistent)
            .unwrap()
            .validate()
            .is_valid());
        assert!(matches!(
            LieAlgebra::from_json(r#"{"dim": 2, "basis": ["a"]}"#),
            Err(LieError::DimensionMismatch { .. })
        ));
        assert!(matches!(
            LieAlgebra::from_json(
                r#"{"dim": 1, "basis": ["a"], "brackets": [{"i": "a", "j": "w"}]}"#
            ),
            Err(LieError::UnknownName(_))
        ));
        assert!(matches!(
            LieAlgebra::from_json("{ not json"),
            Err(LieError::Json(_))
        ));
        assert!(matches!(
            LieAlgebra::from_json(
                r#"{"dim": 2, "basis": ["a","b"], "brackets": [{"i": "a", "j": "b", "terms": [{"k": "a", "coeff": "x"}]}]}"#
            ),
            Err(LieError::BadCoefficient(_))
        ));
    }

    #[test]
    fn unit_constant_is_one() {
        let sl = builtin("sl2r", None).unwrap();
        assert!(sl.constant(1, 2, 0).is_one());
    }
}
