//! Command-line driver: `verify` runs an identity suite over a polygon
//! sweep or an algebra file and emits a JSON report, `char` prints cluster
//! characters, `fpoly` prints submodule-counting polynomials.
//!
//! Exit codes: 0 when every checked identity holds, 1 when a check fails
//! or a point count is not polynomial, 2 on malformed input.

mod report;
mod suites;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use clusterchar::typea::Arc as PolygonArc;
use clusterchar::{
    algebra_from_triangulation, c_prime_with_ceiling, cluster_character_with_ceiling,
    f_polynomial_with_ceiling, CharacterError, GrassmannError, Representation, Triangulation,
    TypeAError, DEFAULT_F_CEILING, PROBE_PRIMES,
};

use report::{Environment, Report, Scope};

/// Characteristic for polygon-model algebras outside the fiber census.
/// Characters, g-vectors and mesh shapes do not depend on it; the census
/// builds its own models at each requested field size.
pub const MODEL_PRIME: u32 = 5;

pub enum CliError {
    /// Malformed or unusable input: exit 2.
    Input(String),
    /// A point count with no counting polynomial: exit 1, like any other
    /// verified-false statement.
    NotPolynomial(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "{m}"),
            CliError::NotPolynomial(m) => {
                write!(f, "point counts are not polynomial in q: {m}")
            }
        }
    }
}

#[derive(Parser)]
#[command(
    name = "clusterchar",
    version,
    about = "Exact identity checks for cluster characters of cluster-tilted algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one verification suite and emit a JSON report
    Verify(VerifyArgs),
    /// Print characters: C' of modules, or the decorated character of an arc
    Char(CharArgs),
    /// Print F-polynomials of modules declared in an algebra file
    Fpoly(FpolyArgs),
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Character product across each translation triangle (polygon scope);
    /// the plain product over each almost split sequence (algebra scope)
    Theorem,
    /// F-polynomial product identity over almost split sequences
    PropA,
    /// Projective F-polynomial against its radical
    PropB,
    /// Injective F-polynomial against its socle quotient
    PropC,
    /// Index identities across translation triangles (polygon scope);
    /// the translate g-vector sum (algebra scope)
    Ind,
    /// Submodule fiber census over almost split sequences
    LemmaFibers,
    /// Mesh case classification, cross-checked against the engine
    Remark,
}

fn suite_name(s: Suite) -> String {
    s.to_possible_value().expect("no skipped variants").get_name().to_string()
}

#[derive(Args)]
#[command(group = ArgGroup::new("scope").required(true).args(["type_a_rank", "algebra"]))]
struct VerifyArgs {
    /// Identity family to check
    #[arg(value_enum)]
    suite: Suite,
    /// Sweep every triangulation and arc of the (n+3)-gon
    #[arg(long = "typeA-rank", value_name = "n")]
    type_a_rank: Option<usize>,
    /// Algebra file; the suite runs over its module data
    #[arg(long, value_name = "path")]
    algebra: Option<PathBuf>,
    /// Field sizes for the fiber census, comma separated
    #[arg(long, value_name = "list", value_delimiter = ',', default_values_t = [2u32, 3])]
    q: Vec<u32>,
    /// Worker threads; 0 = all cores
    #[arg(long, value_name = "n", default_value_t = 0)]
    jobs: usize,
    /// Recorded in the report; every check is deterministic regardless
    #[arg(long, value_name = "u64", default_value_t = 0)]
    seed: u64,
    /// Write the JSON report here instead of stdout
    #[arg(long, value_name = "report.json")]
    out: Option<PathBuf>,
    /// Ceiling on total module dimension for submodule enumeration
    #[arg(long = "max-dim", value_name = "n", default_value_t = DEFAULT_F_CEILING)]
    max_dim: usize,
}

#[derive(Args)]
#[command(group = ArgGroup::new("scope").required(true).args(["type_a_rank", "algebra"]))]
struct CharArgs {
    /// Polygon scope: expects a triangulation and an arc as JSON
    #[arg(long = "typeA-rank", value_name = "n")]
    type_a_rank: Option<usize>,
    /// Algebra file scope: expects module names (default: all declared)
    #[arg(long, value_name = "path")]
    algebra: Option<PathBuf>,
    /// Module names, or a triangulation and an arc such as '[[1,3],[1,4]]' '[2,4]'
    #[arg(value_name = "ARG")]
    args: Vec<String>,
    /// Ceiling on total module dimension for submodule enumeration
    #[arg(long = "max-dim", value_name = "n", default_value_t = DEFAULT_F_CEILING)]
    max_dim: usize,
}

#[derive(Args)]
struct FpolyArgs {
    /// Algebra file with the modules to print
    #[arg(long, value_name = "path")]
    algebra: PathBuf,
    /// Module names (default: all declared)
    #[arg(value_name = "MODULE")]
    modules: Vec<String>,
    /// Ceiling on total module dimension for submodule enumeration
    #[arg(long = "max-dim", value_name = "n", default_value_t = DEFAULT_F_CEILING)]
    max_dim: usize,
}

fn grassmann_err(e: GrassmannError) -> CliError {
    match e {
        GrassmannError::NotPolynomialCount(m) => CliError::NotPolynomial(m),
        other => CliError::Input(other.to_string()),
    }
}

fn char_err(e: CharacterError) -> CliError {
    match e {
        CharacterError::Grassmann(g) => grassmann_err(g),
        other => CliError::Input(other.to_string()),
    }
}

fn typea_err(e: TypeAError) -> CliError {
    match e {
        TypeAError::Character(c) => char_err(c),
        TypeAError::Grassmann(g) => grassmann_err(g),
        other => CliError::Input(other.to_string()),
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn run_verify(a: VerifyArgs) -> Result<ExitCode, CliError> {
    if a.q.is_empty() {
        return Err(CliError::Input("--q needs at least one prime".into()));
    }
    for &q in &a.q {
        if !is_prime(q) {
            return Err(CliError::Input(format!("--q entries must be prime, got {q}")));
        }
    }
    let (jobs, scope, base_prime) = match (a.type_a_rank, &a.algebra) {
        (Some(n), None) => {
            let jobs = suites::typea_jobs(a.suite, n, &a.q, a.max_dim)?;
            let base =
                if a.suite == Suite::LemmaFibers { None } else { Some(MODEL_PRIME) };
            (jobs, Scope { type_a_rank: Some(n), algebra: None }, base)
        }
        (None, Some(path)) => {
            let (jobs, p) = suites::algebra_jobs(a.suite, path, &a.q, a.max_dim)?;
            let scope =
                Scope { type_a_rank: None, algebra: Some(path.display().to_string()) };
            (jobs, scope, Some(p))
        }
        _ => unreachable!("clap enforces exactly one scope"),
    };
    let instances = suites::run_jobs(jobs, a.jobs)?;
    let environment = Environment {
        base_prime,
        q: a.q.clone(),
        probe_primes: PROBE_PRIMES.to_vec(),
        f_ceiling: a.max_dim,
        seed: a.seed,
    };
    let report = Report::assemble(suite_name(a.suite), scope, environment, instances);
    let json = report.to_json();
    match &a.out {
        Some(path) => {
            std::fs::write(path, &json)
                .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            println!(
                "{}: {} instances, {} verdicts, {} passed, {} failed; report written to {}",
                report.suite,
                report.summary.instances,
                report.summary.verdicts,
                report.summary.passed,
                report.summary.failed,
                path.display()
            );
        }
        None => print!("{json}"),
    }
    Ok(if report.all_pass() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn parse_polygon_input(
    n: usize,
    args: &[String],
) -> Result<(Triangulation, PolygonArc), CliError> {
    if args.len() != 2 {
        return Err(CliError::Input(
            "give a triangulation and an arc as JSON, e.g. '[[1,3],[1,4]]' '[2,4]'".into(),
        ));
    }
    let pairs: Vec<(usize, usize)> = serde_json::from_str(&args[0])
        .map_err(|e| CliError::Input(format!("triangulation: {e}")))?;
    let mut arcs = Vec::new();
    for (i, j) in pairs {
        arcs.push(PolygonArc::new(i, j, n).map_err(typea_err)?);
    }
    let t = Triangulation::new(n, arcs).map_err(typea_err)?;
    let (zi, zj): (usize, usize) = serde_json::from_str(&args[1])
        .map_err(|e| CliError::Input(format!("arc: {e}")))?;
    let z = PolygonArc::new(zi, zj, n).map_err(typea_err)?;
    Ok((t, z))
}

fn choose_modules<'a>(
    modules: &'a BTreeMap<String, Representation>,
    names: &[String],
) -> Result<Vec<(&'a str, &'a Representation)>, CliError> {
    if names.is_empty() {
        if modules.is_empty() {
            return Err(CliError::Input("the file declares no modules".into()));
        }
        return Ok(modules.iter().map(|(k, v)| (k.as_str(), v)).collect());
    }
    names
        .iter()
        .map(|n| {
            modules
                .get_key_value(n)
                .map(|(k, v)| (k.as_str(), v))
                .ok_or_else(|| CliError::Input(format!("no module named {n} in the file")))
        })
        .collect()
}

fn run_char(a: CharArgs) -> Result<(), CliError> {
    if let Some(n) = a.type_a_rank {
        let (t, z) = parse_polygon_input(n, &a.args)?;
        let model = algebra_from_triangulation(&t, MODEL_PRIME).map_err(typea_err)?;
        let obj = model.e_module(&z).map_err(typea_err)?;
        let c = cluster_character_with_ceiling(&obj, a.max_dim).map_err(char_err)?;
        println!("{}", c.render());
    } else {
        let path = a.algebra.as_ref().expect("clap enforces one scope");
        let (_, modules) = suites::load_algebra_file(path)?;
        let chosen = choose_modules(&modules, &a.args)?;
        let bare = a.args.len() == 1;
        for (name, m) in chosen {
            let c = c_prime_with_ceiling(m, a.max_dim).map_err(char_err)?;
            if bare {
                println!("{}", c.render());
            } else {
                println!("{name}: {}", c.render());
            }
        }
    }
    Ok(())
}

fn run_fpoly(a: FpolyArgs) -> Result<(), CliError> {
    let (_, modules) = suites::load_algebra_file(&a.algebra)?;
    let chosen = choose_modules(&modules, &a.modules)?;
    let bare = a.modules.len() == 1;
    for (name, m) in chosen {
        let f = f_polynomial_with_ceiling(m, a.max_dim).map_err(grassmann_err)?;
        let rendered = f.value().render("y");
        if bare {
            println!("{rendered}");
        } else {
            println!("{name}: {rendered}");
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Verify(a) => run_verify(a),
        Command::Char(a) => run_char(a).map(|()| ExitCode::SUCCESS),
        Command::Fpoly(a) => run_fpoly(a).map(|()| ExitCode::SUCCESS),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            let code = match &e {
                CliError::Input(_) => 2,
                CliError::NotPolynomial(_) => 1,
            };
            eprintln!("error: {e}");
            ExitCode::from(code)
        }
    }
}
