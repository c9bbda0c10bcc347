//! Command-line front end for the `orbitalg` kernel.
//!
//! [`RunConfig`] is parsed from arguments with clap and executed by [`run`],
//! which returns the exit status and the rendered report instead of printing,
//! so the whole front end can be tested in-process.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use orbitalg::exactla::{parse_rational, Rational};
use orbitalg::liealg::LieAlgebra;
use orbitalg::orbit::{casimir_orbit, make_orbit, OrbitDescriptor};
use orbitalg::poly::{parse_poly, Polynomial};
use orbitalg::sampling::{axiom_suite, quotient_compatibility};
use orbitalg::structure::{
    ideal_square_check, nonexactness_check, simplicity_probe, verify_homogeneous_ideals,
    verify_perfect, verify_prop1, verify_thm2, Record, Verdict, VerificationReport,
};
use orbitalg::{Exec, PoissonContext};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "orbitalg",
    version,
    about = "Exact checks for Lie-Poisson algebras on coadjoint orbits"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone, PartialEq, Eq)]
pub enum Command {
    /// Check the structure constants and sample the Poisson axioms.
    Validate(Options),
    /// Run one bounded verification.
    Verify {
        #[command(subcommand)]
        claim: Claim,
    },
    Probe {
        #[command(subcommand)]
        probe: Probe,
    },
}

#[derive(Subcommand, Debug, Clone, PartialEq, Eq)]
pub enum Claim {
    /// Degreewise splitting of S(g) into invariants and derived span.
    Prop1(Options),
    /// Constants meet the derived span of P(O) trivially and complement it.
    Thm2(Options),
    /// The derived span of P(O) is everything (Heisenberg orbits).
    Heisenberg(Options),
    /// P_(k)(O) is a proper Poisson ideal on a conical orbit.
    NilpotentIdeals(Options),
    /// 1 is not a sum of brackets with the generators.
    Nonexact(Options),
    /// I^2 is strictly smaller than I.
    Lemma(Options),
}

#[derive(Subcommand, Debug, Clone, PartialEq, Eq)]
pub enum Probe {
    /// Poisson-ideal closures of trial generators.
    Simplicity(Options),
}

#[derive(Args, Debug, Clone, PartialEq, Eq)]
pub struct Options {
    /// Built-in name (sl2r, so3, heisenberg) or path to an algebra JSON file.
    #[arg(long, default_value = "sl2r")]
    pub algebra: String,
    /// Heisenberg size.
    #[arg(long)]
    pub n: Option<usize>,
    /// Orbit as the level set casimir = p/q.
    #[arg(long, conflicts_with = "relation")]
    pub casimir: Option<String>,
    /// Orbit as the zero set of a bracket-closed relation.
    #[arg(long)]
    pub relation: Option<String>,
    #[arg(long)]
    pub max_degree: Option<u32>,
    /// Generator polynomial; repeatable.
    #[arg(long = "gen")]
    pub gens: Vec<String>,
    /// Index k of P_(k)(O).
    #[arg(long, default_value_t = 1)]
    pub k: u32,
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub json: bool,
    /// Run on the calling thread only.
    #[arg(long)]
    pub sequential: bool,
}

/// Where the algebra comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraSource {
    Builtin { name: String, n: Option<usize> },
    File(PathBuf),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrbitSpec {
    None,
    Casimir(Rational),
    Relation(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Task {
    Validate,
    Prop1,
    Thm2,
    Heisenberg,
    NilpotentIdeals,
    Nonexact,
    Lemma,
    Simplicity,
}

/// A fully resolved run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub task: Task,
    pub algebra: AlgebraSource,
    pub orbit: OrbitSpec,
    pub max_degree: Option<u32>,
    pub gens: Vec<String>,
    pub k: u32,
    pub samples: usize,
    pub seed: u64,
    pub json: bool,
    pub exec: Exec,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(message: impl Into<String>) -> Self {
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {}\n", message.into()),
        }
    }
}

const BUILTINS: [&str; 3] = ["sl2r", "so3", "heisenberg"];

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<Self, String> {
        let (task, o) = match cli.command {
            Command::Validate(o) => (Task::Validate, o),
            Command::Verify { claim } => match claim {
                Claim::Prop1(o) => (Task::Prop1, o),
                Claim::Thm2(o) => (Task::Thm2, o),
                Claim::Heisenberg(o) => (Task::Heisenberg, o),
                Claim::NilpotentIdeals(o) => (Task::NilpotentIdeals, o),
                Claim::Nonexact(o) => (Task::Nonexact, o),
                Claim::Lemma(o) => (Task::Lemma, o),
            },
            Command::Probe {
                probe: Probe::Simplicity(o),
            } => (Task::Simplicity, o),
        };
        let algebra = if BUILTINS.contains(&o.algebra.as_str()) {
            AlgebraSource::Builtin {
                name: o.algebra,
                n: o.n,
            }
        } else {
            if o.n.is_some() {
                return Err("--n applies only to built-in algebras".into());
            }
            AlgebraSource::File(PathBuf::from(o.algebra))
        };
        let orbit = match (o.casimir, o.relation) {
            (Some(c), None) => OrbitSpec::Casimir(
                parse_rational(&c)
                    .ok_or_else(|| format!("--casimir: '{c}' is not a rational p/q"))?,
            ),
            (None, Some(r)) => OrbitSpec::Relation(r),
            (None, None) => OrbitSpec::None,
            (Some(_), Some(_)) => {
                return Err("give either --casimir or --relation, not both".into())
            }
        };
        Ok(RunConfig {
            task,
            algebra,
            orbit,
            max_degree: o.max_degree,
            gens: o.gens,
            k: o.k,
            samples: o.samples,
            seed: o.seed,
            json: o.json,
            exec: if o.sequential {
                Exec::Sequential
            } else {
                Exec::default()
            },
        })
    }

    /// Parses a full argument list (program name first).
    pub fn parse_from<I, T>(args: I) -> Result<Self, String>
    where
        I: IntoIterator<Item = T>,
        T: Into<std::ffi::OsString> + Clone,
    {
        let cli = Cli::try_parse_from(args).map_err(|e| e.to_string())?;
        Self::from_cli(cli)
    }
}

fn load_algebra(source: &AlgebraSource) -> Result<LieAlgebra, String> {
    let alg = match source {
        AlgebraSource::Builtin { name, n } => {
            LieAlgebra::builtin(name, *n).map_err(|e| e.to_string())?
        }
        AlgebraSource::File(path) => {
            LieAlgebra::from_json_file(path).map_err(|e| format!("{}: {e}", path.display()))?
        }
    };
    Ok(alg)
}

fn load_orbit(alg: &LieAlgebra, spec: &OrbitSpec) -> Result<Option<OrbitDescriptor>, String> {
    let orbit = match spec {
        OrbitSpec::None => return Ok(None),
        OrbitSpec::Casimir(c) => casimir_orbit(alg.clone(), c.clone()),
        OrbitSpec::Relation(text) => {
            let rel = parse_poly(text, alg.names()).map_err(|e| format!("--relation: {e}"))?;
            make_orbit(alg.clone(), &rel)
        }
    };
    orbit.map(Some).map_err(|e| format!("invalid orbit: {e}"))
}

fn require_orbit(orbit: Option<OrbitDescriptor>, task: &str) -> Result<OrbitDescriptor, String> {
    orbit.ok_or_else(|| format!("{task} needs an orbit: pass --casimir or --relation"))
}

fn parse_gens(alg: &LieAlgebra, gens: &[String]) -> Result<Vec<Polynomial>, String> {
    gens.iter()
        .map(|g| parse_poly(g, alg.names()).map_err(|e| format!("--gen '{g}': {e}")))
        .collect()
}

fn render(reports: &[VerificationReport], json: bool) -> String {
    if json {
        if let [one] = reports {
            return one.to_json() + "\n";
        }
        let values: Vec<serde_json::Value> = reports
            .iter()
            .map(|r| serde_json::to_value(r).expect("report serializes"))
            .collect();
        return serde_json::to_string_pretty(&values).expect("reports serialize") + "\n";
    }
    reports
        .iter()
        .map(VerificationReport::to_text)
        .collect::<Vec<_>>()
        .join("\n")
}

fn structure_report(alg: &LieAlgebra) -> VerificationReport {
    let validation = alg.validate();
    let mut records = Vec::new();
    let mut rec = Record::new(1, Verdict::from_bool(validation.is_valid()))
        .label("antisymmetry and jacobi")
        .dim("dim", alg.dim())
        .dim("violations", validation.violations.len());
    if let Some(v) = validation.violations.first() {
        rec = rec.witness(v.display(alg.names()).to_string());
    }
    records.push(rec);
    let mut params = std::collections::BTreeMap::new();
    params.insert("algebra".to_string(), alg.name().to_string());
    if let Ok(s) = alg.is_semisimple() {
        params.insert("semisimple".to_string(), s.semisimple.to_string());
    }
    VerificationReport::new("structure constants define a Lie algebra", params, records)
}

fn execute(config: &RunConfig) -> Result<Vec<VerificationReport>, String> {
    let alg = load_algebra(&config.algebra)?;
    let orbit = load_orbit(&alg, &config.orbit)?;
    let exec = config.exec;
    if config.task == Task::Validate {
        let structure = structure_report(&alg);
        if !structure.passed() {
            return Ok(vec![structure]);
        }
        let degree = config.max_degree.unwrap_or(3);
        let mut reports = vec![structure];
        let ctx = match &orbit {
            Some(o) => o.context(),
            None => PoissonContext::free(alg.clone()),
        };
        reports.push(axiom_suite(
            &ctx.with_exec(exec),
            config.samples,
            degree,
            config.seed,
        ));
        if let Some(o) = &orbit {
            reports.push(quotient_compatibility(
                o,
                config.samples,
                degree,
                config.seed,
            ));
        }
        return Ok(reports);
    }
    if let Some(v) = alg.validate().violations.first() {
        return Err(format!("not a Lie algebra: {}", v.display(alg.names())));
    }
    let bound = |default: u32| config.max_degree.unwrap_or(default);
    let report = match config.task {
        Task::Validate => unreachable!(),
        Task::Prop1 => verify_prop1(&alg, bound(4), exec),
        Task::Thm2 => verify_thm2(&require_orbit(orbit, "thm2")?, bound(3), exec),
        Task::Heisenberg => {
            let orbit = match orbit {
                Some(o) => o,
                None if alg.names().last().is_some_and(|z| z == "z") => {
                    let rel = parse_poly("z - 1", alg.names()).expect("relation parses");
                    make_orbit(alg.clone(), &rel).map_err(|e| format!("invalid orbit: {e}"))?
                }
                None => return Err("heisenberg needs an orbit: pass --relation".into()),
            };
            verify_perfect(&orbit, bound(2), exec)
        }
        Task::NilpotentIdeals => verify_homogeneous_ideals(
            &require_orbit(orbit, "nilpotent-ideals")?,
            config.k,
            bound(4),
            exec,
        )
        .map_err(|e| e.to_string())?,
        Task::Nonexact => nonexactness_check(&require_orbit(orbit, "nonexact")?, bound(2), exec),
        Task::Lemma => {
            if config.gens.is_empty() {
                return Err("lemma needs at least one --gen".into());
            }
            let gens = parse_gens(&alg, &config.gens)?;
            let ctx = match &orbit {
                Some(o) => o.context(),
                None => PoissonContext::free(alg.clone()),
            }
            .with_exec(exec);
            ideal_square_check(&ctx, &gens, bound(4)).map_err(|e| e.to_string())?
        }
        Task::Simplicity => {
            let orbit = require_orbit(orbit, "simplicity")?;
            if config.gens.is_empty() {
                return Err("simplicity needs at least one --gen".into());
            }
            let gens = parse_gens(&alg, &config.gens)?;
            simplicity_probe(&orbit, &gens, bound(4), exec).map_err(|e| e.to_string())?
        }
    };
    Ok(vec![report])
}

/// Executes one run: exit 0 when every report passes, 1 when a claim fails,
/// 2 on bad input.
pub fn run(config: &RunConfig) -> Outcome {
    match execute(config) {
        Ok(reports) => Outcome {
            code: if reports.iter().all(VerificationReport::passed) {
                EXIT_PASS
            } else {
                EXIT_FAIL
            },
            stdout: render(&reports, config.json),
            stderr: String::new(),
        },
        Err(message) => Outcome::usage(message),
    }
}

/// Parses and runs; clap's help and version output exit 0.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => match RunConfig::from_cli(cli) {
            Ok(config) => run(&config),
            Err(message) => Outcome::usage(message),
        },
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            };
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            }
        }
    }
}
