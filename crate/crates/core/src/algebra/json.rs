//! JSON interchange format for algebras and their modules.
//!
//! Vertices are numbered from 1 in files and from 0 internally. A module
//! map is a row-major matrix with `dims[tgt]` rows and `dims[src]` columns;
//! arrows without an entry act as zero. Integer entries of any sign are
//! reduced mod p. Unknown keys are rejected.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Deserialize;

use crate::field::Matrix;

use super::paths::Path;
use super::quiver::{Arrow, Quiver};
use super::rep::Representation;
use super::{Algebra, AlgebraError};

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub p: u32,
    pub vertices: usize,
    pub arrows: Vec<ArrowJson>,
    #[serde(default)]
    pub relations: Vec<Vec<RelTermJson>>,
    #[serde(default)]
    pub modules: BTreeMap<String, ModuleJson>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowJson {
    pub id: String,
    pub src: usize,
    pub tgt: usize,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelTermJson {
    pub coef: i64,
    pub path: Vec<String>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleJson {
    pub dims: Vec<usize>,
    #[serde(default)]
    pub maps: BTreeMap<String, Vec<Vec<i64>>>,
}

impl AlgebraFile {
    pub fn parse(text: &str) -> Result<AlgebraFile, AlgebraError> {
        serde_json::from_str(text).map_err(|e| AlgebraError::BadFile(e.to_string()))
    }

    pub fn build(&self) -> Result<(Arc<Algebra>, BTreeMap<String, Representation>), AlgebraError> {
        if self.vertices == 0 {
            return Err(AlgebraError::BadFile("an algebra needs at least one vertex".into()));
        }
        let mut arrows = Vec::new();
        for a in &self.arrows {
            if a.src == 0 || a.src > self.vertices || a.tgt == 0 || a.tgt > self.vertices {
                return Err(AlgebraError::BadFile(format!(
                    "arrow {} has endpoints outside 1..={}",
                    a.id, self.vertices
                )));
            }
            arrows.push(Arrow { id: a.id.clone(), src: a.src - 1, tgt: a.tgt - 1 });
        }
        let quiver = Quiver::new(self.vertices, arrows)?;
        let mut relations = Vec::new();
        for rel in &self.relations {
            let mut terms = Vec::new();
            for term in rel {
                let word = term
                    .path
                    .iter()
                    .map(|id| {
                        quiver.arrow_by_id(id).ok_or_else(|| {
                            AlgebraError::BadRelation(format!("unknown arrow id {id}"))
                        })
                    })
                    .collect::<Result<Vec<usize>, _>>()?;
                let path = Path::from_arrows(&quiver, word).ok_or_else(|| {
                    AlgebraError::BadRelation("relation path does not compose".into())
                })?;
                terms.push((term.coef, path));
            }
            relations.push(terms);
        }
        let alg = Algebra::build(quiver, relations, self.p)?;
        let mut modules = BTreeMap::new();
        for (name, m) in &self.modules {
            let rep = build_module(&alg, name, m)?;
            modules.insert(name.clone(), rep);
        }
        Ok((alg, modules))
    }
}

fn build_module(
    alg: &Arc<Algebra>,
    name: &str,
    m: &ModuleJson,
) -> Result<Representation, AlgebraError> {
    let bad = |msg: String| AlgebraError::BadModule(format!("module {name}: {msg}"));
    if m.dims.len() != alg.vertex_count() {
        return Err(bad(format!(
            "dims has {} entries, expected {}",
            m.dims.len(),
            alg.vertex_count()
        )));
    }
    for id in m.maps.keys() {
        if alg.quiver().arrow_by_id(id).is_none() {
            return Err(bad(format!("map for unknown arrow id {id}")));
        }
    }
    let mut maps = Vec::new();
    for arrow in alg.quiver().arrows() {
        let (rows, cols) = (m.dims[arrow.tgt], m.dims[arrow.src]);
        let mat = match m.maps.get(&arrow.id) {
            None => Matrix::zeros(alg.p(), rows, cols),
            Some(entries) => {
                let rows_ok = entries.len() == rows
                    || (rows == 0 && entries.is_empty())
                    || (cols == 0 && entries.iter().all(|r| r.is_empty()));
                if !(rows_ok && entries.iter().all(|r| r.len() == cols)) {
                    return Err(bad(format!(
                        "map for arrow {} must be {} x {}",
                        arrow.id, rows, cols
                    )));
                }
                let flat: Vec<i64> = entries.iter().flatten().copied().collect();
                Matrix::from_i64(alg.p(), rows, cols, &flat)
            }
        };
        maps.push(mat);
    }
    Representation::new(alg.clone(), m.dims.clone(), maps)
        .map_err(|e| bad(format!("{e}")))
}

/// Parses and builds an algebra plus its declared modules from JSON text.
pub fn load_algebra_str(
    text: &str,
) -> Result<(Arc<Algebra>, BTreeMap<String, Representation>), AlgebraError> {
    AlgebraFile::parse(text)?.build()
}
