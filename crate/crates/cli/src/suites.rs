//! Builds the work list for each verification suite and runs it on a
//! rayon pool. Jobs are closed over their own data, run in parallel, and
//! merge back in construction order, so a report never depends on thread
//! scheduling.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc as StdArc;

use rayon::prelude::*;

use clusterchar::algebra::{
    ar_sequence, indecomposable_universe, is_projective, load_algebra_str,
};
use clusterchar::typea::Arc as PolygonArc;
use clusterchar::{
    algebra_from_triangulation, all_arcs, ar_triangle, b_matrix, check_f_identities_with_ceiling,
    check_index_identities, check_undecorated_product_with_ceiling, crosscheck_remark,
    enumerate_triangulations, fiber_census, g_vector, verify_theorem_with_ceiling, Algebra,
    AlgebraError, CharacterError, FIdentity, FiberCensus, GrassmannError, Representation,
    ShortExactSeq, Triangulation, TypeAError, Verdict,
};

use crate::report::Instance;
use crate::{CliError, Suite, MODEL_PRIME};

/// How a job can go wrong. Non-polynomial point counts are a finding, not
/// a malfunction: they become a failing verdict and the run exits 1.
/// Everything else aborts the suite with an input-error message.
enum JobFailure {
    NotPolynomial(String),
    Fatal(String),
}

impl From<GrassmannError> for JobFailure {
    fn from(e: GrassmannError) -> JobFailure {
        match e {
            GrassmannError::NotPolynomialCount(m) => JobFailure::NotPolynomial(m),
            other => JobFailure::Fatal(other.to_string()),
        }
    }
}

impl From<CharacterError> for JobFailure {
    fn from(e: CharacterError) -> JobFailure {
        match e {
            CharacterError::Grassmann(g) => g.into(),
            other => JobFailure::Fatal(other.to_string()),
        }
    }
}

impl From<TypeAError> for JobFailure {
    fn from(e: TypeAError) -> JobFailure {
        match e {
            TypeAError::Character(c) => c.into(),
            TypeAError::Grassmann(g) => g.into(),
            other => JobFailure::Fatal(other.to_string()),
        }
    }
}

impl From<AlgebraError> for JobFailure {
    fn from(e: AlgebraError) -> JobFailure {
        JobFailure::Fatal(e.to_string())
    }
}

fn engine<T, E: Into<JobFailure>>(r: Result<T, E>) -> Result<T, JobFailure> {
    r.map_err(Into::into)
}

fn not_polynomial_verdict(msg: &str) -> Verdict {
    Verdict {
        pass: false,
        label: "counting polynomial existence".into(),
        lhs: format!("point counts refuse a single polynomial: {msg}"),
        rhs: "one polynomial matching every probe prime".into(),
    }
}

/// Runs a checker, turning a non-polynomial count into a failing verdict.
fn soften<E: Into<JobFailure>>(r: Result<Verdict, E>) -> Result<Verdict, JobFailure> {
    match r {
        Ok(v) => Ok(v),
        Err(e) => match e.into() {
            JobFailure::NotPolynomial(m) => Ok(not_polynomial_verdict(&m)),
            fatal => Err(fatal),
        },
    }
}

pub struct Job(Box<dyn Fn() -> Result<Vec<Instance>, JobFailure> + Send + Sync>);

impl Job {
    fn new(f: impl Fn() -> Result<Vec<Instance>, JobFailure> + Send + Sync + 'static) -> Job {
        Job(Box::new(f))
    }
}

/// Fans the jobs out over `threads` workers (0 = all cores) and merges the
/// instance batches back in job order.
pub fn run_jobs(jobs: Vec<Job>, threads: usize) -> Result<Vec<Instance>, CliError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| CliError::Input(format!("thread pool: {e}")))?;
    let results: Vec<Result<Vec<Instance>, JobFailure>> =
        pool.install(|| jobs.par_iter().map(|j| (j.0)()).collect());
    let mut instances = Vec::new();
    for r in results {
        match r {
            Ok(batch) => instances.extend(batch),
            Err(JobFailure::Fatal(m)) => return Err(CliError::Input(m)),
            Err(JobFailure::NotPolynomial(m)) => instances.push(Instance {
                descriptor: "counting polynomial interpolation".into(),
                verdicts: vec![not_polynomial_verdict(&m)],
            }),
        }
    }
    Ok(instances)
}

fn tri_desc(t: &Triangulation) -> String {
    serde_json::to_string(t.arcs()).expect("arcs serialize")
}

fn arc_desc(z: &PolygonArc) -> String {
    serde_json::to_string(z).expect("arc serializes")
}

fn seq_desc(s: &ShortExactSeq) -> String {
    format!(
        "sequence 0 -> {:?} -> {:?} -> {:?} -> 0",
        s.l.dims(),
        s.m.dims(),
        s.n.dims()
    )
}

/// The almost split sequences of the algebra, in the deterministic order
/// the indecomposables are discovered.
fn ar_sequences_of(
    alg: &StdArc<Algebra>,
    extras: &[Representation],
) -> Result<Vec<ShortExactSeq>, JobFailure> {
    let universe = engine(indecomposable_universe(alg, extras))?;
    let mut seqs = Vec::new();
    for m in &universe {
        if engine(is_projective(m))? {
            continue;
        }
        seqs.push(engine(ar_sequence(m, &universe))?);
    }
    Ok(seqs)
}

fn fatal_to_input(e: JobFailure) -> CliError {
    match e {
        JobFailure::Fatal(m) => CliError::Input(m),
        JobFailure::NotPolynomial(m) => {
            CliError::Input(format!("point counts are not polynomial in q: {m}"))
        }
    }
}

fn census_verdict(c: &FiberCensus) -> Verdict {
    let bad: Vec<String> = c
        .buckets
        .iter()
        .filter(|b| !b.ok)
        .map(|b| {
            format!(
                "(A {:?}, C {:?}): {} points, expected {}",
                b.a_dims, b.c_dims, b.count, b.expected
            )
        })
        .collect();
    let accounted: u64 = c.buckets.iter().map(|b| b.count).sum();
    let lhs = if !bad.is_empty() {
        bad.join("; ")
    } else if c.pass {
        format!(
            "{} submodules across {} buckets, all of the predicted size",
            c.total,
            c.buckets.len()
        )
    } else {
        format!("{} submodules, but the buckets account for {}", c.total, accounted)
    };
    Verdict {
        pass: c.pass,
        label: format!("fiber census at g={:?}, q={}", c.g, c.q),
        lhs,
        rhs: "each bucket holds q^dim Hom(C, L/A) points and the (0, N) bucket is empty"
            .into(),
    }
}

/// Census verdicts for every submodule dimension vector of the middle term.
fn census_verdicts(
    s: &ShortExactSeq,
    q: u32,
    max_dim: usize,
) -> Result<Vec<Verdict>, JobFailure> {
    if s.m.total_dim() > max_dim {
        return Err(JobFailure::Fatal(format!(
            "census middle term has total dimension {}, over the --max-dim ceiling {}",
            s.m.total_dim(),
            max_dim
        )));
    }
    let dims = s.m.dims().to_vec();
    let mut out = Vec::new();
    let mut g = vec![0usize; dims.len()];
    loop {
        out.push(census_verdict(&engine(fiber_census(s, &g, q))?));
        let mut v = 0;
        loop {
            if v == g.len() {
                return Ok(out);
            }
            g[v] += 1;
            if g[v] <= dims[v] {
                break;
            }
            g[v] = 0;
            v += 1;
        }
    }
}

/// Module-scope index check: the exchange matrix applied to the object's
/// dimension vector against the g-vector sum across the translate. The
/// middle-term identities need the polygon model, where the middle's
/// tilting summands are visible.
fn translate_sum_verdict(s: &ShortExactSeq) -> Result<Verdict, CharacterError> {
    let b = b_matrix(s.m.algebra())?;
    let lhs: Vec<i64> = b.apply_dims(s.n.dims()).iter().map(|&x| -x).collect();
    let gl = g_vector(&s.l)?;
    let gn = g_vector(&s.n)?;
    let rhs: Vec<i64> = gl.iter().zip(&gn).map(|(&a, &b)| a + b).collect();
    Ok(Verdict {
        pass: lhs == rhs,
        label: "index sum across the translate".into(),
        lhs: format!("-B*dim of the object: {lhs:?}"),
        rhs: format!("g(translate) + g(object): {rhs:?}"),
    })
}

/// Jobs for a polygon sweep: every triangulation of the (rank+3)-gon, and
/// for the per-arc suites every arc as well.
pub fn typea_jobs(
    suite: Suite,
    rank: usize,
    qs: &[u32],
    max_dim: usize,
) -> Result<Vec<Job>, CliError> {
    let ts = enumerate_triangulations(rank).map_err(|e| CliError::Input(e.to_string()))?;
    let arcs = all_arcs(rank);
    let mut jobs = Vec::new();
    match suite {
        Suite::Theorem | Suite::Ind | Suite::Remark => {
            for t in ts {
                let arcs = arcs.clone();
                jobs.push(Job::new(move || {
                    let model = engine(algebra_from_triangulation(&t, MODEL_PRIME))?;
                    let prefix = format!("triangulation {}", tri_desc(&t));
                    let mut out = Vec::new();
                    for z in &arcs {
                        let verdict = match suite {
                            Suite::Theorem => {
                                let tri = engine(ar_triangle(&model, z))?;
                                soften(verify_theorem_with_ceiling(&tri.decorated, max_dim))?
                            }
                            Suite::Ind => {
                                let tri = engine(ar_triangle(&model, z))?;
                                soften(check_index_identities(&tri.decorated))?
                            }
                            _ => soften(crosscheck_remark(&model, z))?,
                        };
                        out.push(Instance {
                            descriptor: format!("{prefix}, arc {}", arc_desc(z)),
                            verdicts: vec![verdict],
                        });
                    }
                    Ok(out)
                }));
            }
        }
        Suite::PropA => {
            for t in ts {
                jobs.push(Job::new(move || {
                    let model = engine(algebra_from_triangulation(&t, MODEL_PRIME))?;
                    let alg = model.algebra().clone();
                    let prefix = format!("triangulation {}", tri_desc(&t));
                    let mut out = Vec::new();
                    for s in ar_sequences_of(&alg, &[])? {
                        let verdict = soften(check_f_identities_with_ceiling(
                            &alg,
                            FIdentity::ArSequence(&s),
                            max_dim,
                        ))?;
                        out.push(Instance {
                            descriptor: format!("{prefix}, {}", seq_desc(&s)),
                            verdicts: vec![verdict],
                        });
                    }
                    Ok(out)
                }));
            }
        }
        Suite::PropB | Suite::PropC => {
            for t in ts {
                jobs.push(Job::new(move || {
                    let model = engine(algebra_from_triangulation(&t, MODEL_PRIME))?;
                    let alg = model.algebra().clone();
                    let prefix = format!("triangulation {}", tri_desc(&t));
                    let mut out = Vec::new();
                    for v in 0..alg.vertex_count() {
                        let (which, what) = if suite == Suite::PropB {
                            (FIdentity::Projective(v), "projective")
                        } else {
                            (FIdentity::Injective(v), "injective")
                        };
                        let verdict =
                            soften(check_f_identities_with_ceiling(&alg, which, max_dim))?;
                        out.push(Instance {
                            descriptor: format!(
                                "{prefix}, {what} at arc {}",
                                model.arc_of_label(v)
                            ),
                            verdicts: vec![verdict],
                        });
                    }
                    Ok(out)
                }));
            }
        }
        Suite::LemmaFibers => {
            for t in &ts {
                for &q in qs {
                    let t = t.clone();
                    jobs.push(Job::new(move || {
                        let model = engine(algebra_from_triangulation(&t, q))?;
                        let alg = model.algebra().clone();
                        let prefix = format!("triangulation {}, q={q}", tri_desc(&t));
                        let mut out = Vec::new();
                        for s in ar_sequences_of(&alg, &[])? {
                            let verdicts = census_verdicts(&s, q, max_dim)?;
                            out.push(Instance {
                                descriptor: format!("{prefix}, {}", seq_desc(&s)),
                                verdicts,
                            });
                        }
                        Ok(out)
                    }));
                }
            }
        }
    }
    Ok(jobs)
}

/// Reads and builds an algebra file, mapping every failure to an input
/// error with the path in the message.
pub fn load_algebra_file(
    path: &Path,
) -> Result<(StdArc<Algebra>, BTreeMap<String, Representation>), CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    load_algebra_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Jobs for the module-level checks of an algebra file. Returns the file's
/// characteristic alongside, for the report's environment block.
pub fn algebra_jobs(
    suite: Suite,
    path: &Path,
    qs: &[u32],
    max_dim: usize,
) -> Result<(Vec<Job>, u32), CliError> {
    let (alg, modules) = load_algebra_file(path)?;
    let p = alg.p();
    let extras: Vec<Representation> = modules.into_values().collect();
    let mut jobs = Vec::new();
    match suite {
        Suite::Remark => {
            return Err(CliError::Input(
                "the remark suite classifies polygon meshes; give --typeA-rank instead of --algebra"
                    .into(),
            ))
        }
        Suite::PropB | Suite::PropC => {
            for v in 0..alg.vertex_count() {
                let alg = alg.clone();
                jobs.push(Job::new(move || {
                    let (which, what) = if suite == Suite::PropB {
                        (FIdentity::Projective(v), "projective")
                    } else {
                        (FIdentity::Injective(v), "injective")
                    };
                    let verdict =
                        soften(check_f_identities_with_ceiling(&alg, which, max_dim))?;
                    Ok(vec![Instance {
                        descriptor: format!("{what} at vertex {}", v + 1),
                        verdicts: vec![verdict],
                    }])
                }));
            }
        }
        Suite::Theorem | Suite::PropA | Suite::Ind => {
            let seqs = ar_sequences_of(&alg, &extras).map_err(fatal_to_input)?;
            for s in seqs {
                let alg = alg.clone();
                jobs.push(Job::new(move || {
                    let verdict = match suite {
                        Suite::Theorem => {
                            soften(check_undecorated_product_with_ceiling(&s, max_dim))?
                        }
                        Suite::PropA => soften(check_f_identities_with_ceiling(
                            &alg,
                            FIdentity::ArSequence(&s),
                            max_dim,
                        ))?,
                        _ => soften(translate_sum_verdict(&s))?,
                    };
                    Ok(vec![Instance {
                        descriptor: seq_desc(&s),
                        verdicts: vec![verdict],
                    }])
                }));
            }
        }
        Suite::LemmaFibers => {
            for &q in qs {
                let alg_q =
                    alg.at_prime(q).map_err(|e| CliError::Input(e.to_string()))?;
                // The universe is re-derived at each field size; declared
                // modules live at the file's characteristic and stay out.
                let seqs = ar_sequences_of(&alg_q, &[]).map_err(fatal_to_input)?;
                for s in seqs {
                    jobs.push(Job::new(move || {
                        let verdicts = census_verdicts(&s, q, max_dim)?;
                        Ok(vec![Instance {
                            descriptor: format!("q={q}, {}", seq_desc(&s)),
                            verdicts,
                        }])
                    }));
                }
            }
        }
    }
    Ok((jobs, p))
}
