//! The JSON report emitted by `verify`: one record per checked instance,
//! an environment block, and a summary whose counts are recomputed from
//! the verdicts at assembly time.

use clusterchar::Verdict;
use serde::Serialize;

#[derive(Serialize)]
pub struct Report {
    pub schema: u32,
    pub suite: String,
    pub scope: Scope,
    pub environment: Environment,
    pub instances: Vec<Instance>,
    pub summary: Summary,
}

#[derive(Serialize)]
pub struct Scope {
    #[serde(rename = "typeA_rank", skip_serializing_if = "Option::is_none")]
    pub type_a_rank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub algebra: Option<String>,
}

/// Everything a reader needs to reproduce the run. `base_prime` is the
/// characteristic the algebras were built at (absent when each field size
/// in `q` gets its own build), `probe_primes` is the pool used for
/// counting-polynomial interpolation, and `f_ceiling` bounds the total
/// dimension of any module whose submodules are enumerated.
#[derive(Serialize)]
pub struct Environment {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub base_prime: Option<u32>,
    pub q: Vec<u32>,
    pub probe_primes: Vec<u32>,
    pub f_ceiling: usize,
    pub seed: u64,
}

#[derive(Serialize)]
pub struct Instance {
    pub descriptor: String,
    pub verdicts: Vec<Verdict>,
}

#[derive(Serialize)]
pub struct Summary {
    pub instances: usize,
    pub verdicts: usize,
    pub passed: usize,
    pub failed: usize,
}

impl Report {
    pub fn assemble(
        suite: String,
        scope: Scope,
        environment: Environment,
        instances: Vec<Instance>,
    ) -> Report {
        let verdicts: usize = instances.iter().map(|i| i.verdicts.len()).sum();
        let passed =
            instances.iter().flat_map(|i| &i.verdicts).filter(|v| v.pass).count();
        Report {
            schema: 1,
            suite,
            scope,
            environment,
            summary: Summary {
                instances: instances.len(),
                verdicts,
                passed,
                failed: verdicts - passed,
            },
            instances,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
