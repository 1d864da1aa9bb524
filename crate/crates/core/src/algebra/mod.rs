//! Finite-dimensional quiver algebras over F_p and their module categories:
//! Hom and Ext computation, canonical modules, Krull-Schmidt decomposition,
//! the Auslander-Reiten translate and almost split sequences.

pub mod ar;
pub mod ext;
pub mod json;
pub mod paths;
pub mod quiver;
pub mod rep;

use std::collections::HashMap;
use std::sync::Arc;

use thiserror::Error;

use crate::field::{check_prime, Fp};

pub use ar::{
    ar_sequence, decompose, indecomposable_universe, is_almost_split, local_radical, tau,
    tau_inverse,
};
pub use ext::{ext1, ext1_dim, is_projective, proj_hom, projective_cover, ExtSpace};
pub use json::{load_algebra_str, AlgebraFile};
pub use paths::{Path, PathElement};
pub use quiver::{Arrow, Quiver};
pub use rep::{hom, hom_dim, Morphism, Representation, ShortExactSeq};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("malformed quiver: {0}")]
    BadQuiver(String),
    #[error("bad relation: {0}")]
    BadRelation(String),
    #[error("path closure exceeds the configured bound {0}")]
    InfiniteDimensional(usize),
    #[error("operands live over different algebras")]
    AlgebraMismatch,
    #[error("module is not indecomposable")]
    Decomposable,
    #[error("module is projective")]
    ProjectiveInput,
    #[error("endomorphism residue field is a proper extension of F_p: {0}")]
    NonSplitField(String),
    #[error("malformed module data: {0}")]
    BadModule(String),
    #[error("not a short exact sequence: {0}")]
    BadSequence(String),
    #[error("bad prime: {0}")]
    BadPrime(u32),
    #[error("malformed input file: {0}")]
    BadFile(String),
}

pub const DEFAULT_LEN_CAP: usize = 24;
pub const DEFAULT_DIM_CAP: usize = 4000;

/// A quiver with admissible relations over F_p, presented through a
/// completed rewriting system and the resulting finite basis of normal
/// paths.
#[derive(Debug)]
pub struct Algebra {
    p: u32,
    quiver: Quiver,
    /// Relations as given (integer coefficients), kept so the same algebra
    /// can be rebuilt over another prime.
    raw_relations: Vec<Vec<(i64, Path)>>,
    /// Input relations reduced mod p (used to validate representations).
    relations: Vec<PathElement>,
    /// Completed, interreduced rewriting system.
    gb: Vec<PathElement>,
    basis: Vec<Path>,
    index: HashMap<Path, usize>,
    /// basis indices grouped as [src][tgt], each list sorted by path order.
    by_src_tgt: Vec<Vec<Vec<usize>>>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.quiver == other.quiver && self.gb == other.gb
    }
}
impl Eq for Algebra {}

impl Algebra {
    pub fn build(
        quiver: Quiver,
        relations: Vec<Vec<(i64, Path)>>,
        p: u32,
    ) -> Result<Arc<Algebra>, AlgebraError> {
        Algebra::build_with_caps(quiver, relations, p, DEFAULT_LEN_CAP, DEFAULT_DIM_CAP)
    }

    pub fn build_with_caps(
        quiver: Quiver,
        relations: Vec<Vec<(i64, Path)>>,
        p: u32,
        len_cap: usize,
        dim_cap: usize,
    ) -> Result<Arc<Algebra>, AlgebraError> {
        check_prime(p).map_err(|_| AlgebraError::BadPrime(p))?;
        let fp = Fp::new(p);
        let mut reduced = Vec::new();
        for rel in &relations {
            let mut el = PathElement::zero(p);
            let mut ends: Option<(usize, usize)> = None;
            for (coef, path) in rel {
                if Path::from_arrows(&quiver, path.word.clone()).as_ref() != Some(path) {
                    return Err(AlgebraError::BadRelation(format!(
                        "word {:?} is not a composable path",
                        path.word
                    )));
                }
                if path.len() < 2 {
                    return Err(AlgebraError::BadRelation(
                        "relation paths must have length at least 2".into(),
                    ));
                }
                let here = (path.src, path.tgt(&quiver));
                if *ends.get_or_insert(here) != here {
                    return Err(AlgebraError::BadRelation(
                        "relation mixes non-parallel paths".into(),
                    ));
                }
                el.add_term(path.clone(), fp.reduce_i64(*coef));
            }
            if !el.is_zero() {
                reduced.push(el);
            }
        }
        let gb = paths::complete(reduced.clone(), &quiver, p, len_cap, dim_cap)?;
        let basis = paths::normal_paths(&quiver, &gb, len_cap, dim_cap)?;
        let index: HashMap<Path, usize> =
            basis.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        let n = quiver.vertex_count();
        let mut by_src_tgt = vec![vec![Vec::new(); n]; n];
        for (i, path) in basis.iter().enumerate() {
            by_src_tgt[path.src][path.tgt(&quiver)].push(i);
        }
        Ok(Arc::new(Algebra {
            p,
            quiver,
            raw_relations: relations,
            relations: reduced,
            gb,
            basis,
            index,
            by_src_tgt,
        }))
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn field(&self) -> Fp {
        Fp::new(self.p)
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn relations(&self) -> &[PathElement] {
        &self.relations
    }

    pub fn raw_relations(&self) -> &[Vec<(i64, Path)>] {
        &self.raw_relations
    }

    /// Normal-path basis indices of the span of paths from `src` to `tgt`.
    pub fn paths_between(&self, src: usize, tgt: usize) -> &[usize] {
        &self.by_src_tgt[src][tgt]
    }

    pub fn basis_path(&self, i: usize) -> &Path {
        &self.basis[i]
    }

    pub fn basis_index(&self, p: &Path) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Rewrites an arbitrary path into coordinates over normal paths.
    pub fn reduce_path(&self, path: &Path) -> Vec<(u32, Path)> {
        let el = PathElement::from_path(self.p, path.clone(), 1);
        paths::normal_form(&el, &self.gb).terms().map(|(p, c)| (c, p.clone())).collect()
    }

    /// Builds a path from arrow ids, e.g. `["a", "b"]` meaning a then b.
    pub fn path_from_ids(&self, ids: &[&str]) -> Result<Path, AlgebraError> {
        let word = ids
            .iter()
            .map(|id| {
                self.quiver
                    .arrow_by_id(id)
                    .ok_or_else(|| AlgebraError::BadRelation(format!("unknown arrow id {id}")))
            })
            .collect::<Result<Vec<usize>, _>>()?;
        Path::from_arrows(&self.quiver, word)
            .ok_or_else(|| AlgebraError::BadRelation("arrows do not compose".into()))
    }

    /// The opposite algebra: reversed quiver, reversed relation paths.
    /// Arrow indices and ids are preserved, so `Path::reversed` translates
    /// paths between the two.
    pub fn opposite(self: &Arc<Self>) -> Result<Arc<Algebra>, AlgebraError> {
        let raw = self
            .raw_relations
            .iter()
            .map(|rel| {
                rel.iter().map(|(c, path)| (*c, path.reversed(&self.quiver))).collect()
            })
            .collect();
        Algebra::build(self.quiver.opposite(), raw, self.p)
    }

    /// The same quiver and integer relations over another prime.
    pub fn at_prime(self: &Arc<Self>, q: u32) -> Result<Arc<Algebra>, AlgebraError> {
        Algebra::build(self.quiver.clone(), self.raw_relations.clone(), q)
    }
}
