//! Representations of a quiver algebra and morphisms between them.
//!
//! A representation assigns a space F_p^{d_v} to each vertex and a matrix
//! to each arrow (source space to target space, column convention). All
//! category-level operations (Hom spaces, kernels, images, quotients,
//! radical, socle) come down to exact linear algebra.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::Matrix;

use super::paths::Path;
use super::{Algebra, AlgebraError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    alg: Arc<Algebra>,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

/// Checks that two values live over equal algebras (pointer fast path).
pub(crate) fn same_algebra(a: &Arc<Algebra>, b: &Arc<Algebra>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

pub(crate) fn col_matrix(p: u32, v: &[u32]) -> Matrix {
    let mut m = Matrix::zeros(p, v.len(), 1);
    for (r, &x) in v.iter().enumerate() {
        m.set(r, 0, x);
    }
    m
}

pub(crate) fn flat_matrix(p: u32, rows: usize, cols: &[Vec<u32>]) -> Matrix {
    let mut m = Matrix::zeros(p, rows, cols.len());
    for (c, col) in cols.iter().enumerate() {
        for (r, &x) in col.iter().enumerate() {
            m.set(r, c, x);
        }
    }
    m
}

impl Representation {
    pub fn new(
        alg: Arc<Algebra>,
        dims: Vec<usize>,
        maps: Vec<Matrix>,
    ) -> Result<Representation, AlgebraError> {
        let rep = Representation { alg, dims, maps };
        rep.validate()?;
        Ok(rep)
    }

    pub(crate) fn new_unchecked(
        alg: Arc<Algebra>,
        dims: Vec<usize>,
        maps: Vec<Matrix>,
    ) -> Representation {
        let rep = Representation { alg, dims, maps };
        debug_assert!(rep.validate().is_ok(), "internal representation is invalid");
        rep
    }

    pub fn validate(&self) -> Result<(), AlgebraError> {
        let q = self.alg.quiver();
        if self.dims.len() != q.vertex_count() || self.maps.len() != q.arrows().len() {
            return Err(AlgebraError::BadModule("dimension or map count mismatch".into()));
        }
        for (idx, m) in self.maps.iter().enumerate() {
            let a = q.arrow(idx);
            if m.rows() != self.dims[a.tgt] || m.cols() != self.dims[a.src] || m.p() != self.alg.p()
            {
                return Err(AlgebraError::BadModule(format!(
                    "map for arrow {} has the wrong shape or modulus",
                    a.id
                )));
            }
        }
        for rel in self.alg.relations() {
            let Some((lead, _)) = rel.leading() else { continue };
            let (src, tgt) = (lead.src, lead.tgt(q));
            let mut acc = Matrix::zeros(self.alg.p(), self.dims[tgt], self.dims[src]);
            for (path, coef) in rel.terms() {
                acc = acc.add(&self.path_action(path).scale(coef));
            }
            if !acc.is_zero() {
                return Err(AlgebraError::BadModule(
                    "a relation acts as a nonzero map".into(),
                ));
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn p(&self) -> u32 {
        self.alg.p()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero_module(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn map(&self, arrow: usize) -> &Matrix {
        &self.maps[arrow]
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    /// Composite matrix of a path (identity for stationary paths).
    pub fn path_action(&self, path: &Path) -> Matrix {
        let q = self.alg.quiver();
        let mut acc = Matrix::identity(self.alg.p(), self.dims[path.src]);
        for &a in &path.word {
            acc = self.maps[a].mul(&acc);
        }
        debug_assert_eq!(acc.rows(), self.dims[path.tgt(q)]);
        acc
    }

    pub fn zero_module(alg: &Arc<Algebra>) -> Representation {
        let n = alg.vertex_count();
        let maps = alg
            .quiver()
            .arrows()
            .iter()
            .map(|_| Matrix::zeros(alg.p(), 0, 0))
            .collect();
        Representation { alg: alg.clone(), dims: vec![0; n], maps }
    }

    /// The simple module concentrated at `v`.
    pub fn simple(alg: &Arc<Algebra>, v: usize) -> Representation {
        let n = alg.vertex_count();
        let mut dims = vec![0; n];
        dims[v] = 1;
        let maps = alg
            .quiver()
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(alg.p(), dims[a.tgt], dims[a.src]))
            .collect();
        Representation { alg: alg.clone(), dims, maps }
    }

    /// The indecomposable projective with top S_v: basis at each vertex w is
    /// the set of normal paths v -> w, arrows act by appending and rewriting.
    pub fn projective(alg: &Arc<Algebra>, v: usize) -> Representation {
        let q = alg.quiver();
        let n = q.vertex_count();
        let dims: Vec<usize> = (0..n).map(|w| alg.paths_between(v, w).len()).collect();
        let mut maps = Vec::new();
        for a in 0..q.arrows().len() {
            let (s, t) = (q.arrow(a).src, q.arrow(a).tgt);
            let mut m = Matrix::zeros(alg.p(), dims[t], dims[s]);
            for (col, &bi) in alg.paths_between(v, s).iter().enumerate() {
                let mut word = alg.basis_path(bi).word.clone();
                word.push(a);
                let extended = Path { src: v, word };
                for (coef, npath) in alg.reduce_path(&extended) {
                    let gi = alg.basis_index(&npath).expect("normal form is in the basis");
                    let row = alg
                        .paths_between(v, t)
                        .iter()
                        .position(|&x| x == gi)
                        .expect("normal path lands at the arrow target");
                    m.set(row, col, coef);
                }
            }
            maps.push(m);
        }
        Representation::new_unchecked(alg.clone(), dims, maps)
    }

    /// The indecomposable injective with socle S_v, built as the dual of the
    /// projective over the opposite algebra.
    pub fn injective(alg: &Arc<Algebra>, v: usize) -> Result<Representation, AlgebraError> {
        let op = alg.opposite()?;
        Ok(Representation::projective(&op, v).dual(alg))
    }

    /// Linear dual: a representation of the opposite algebra with every
    /// arrow matrix transposed. `target` must be the opposite algebra.
    pub fn dual(&self, target: &Arc<Algebra>) -> Representation {
        let maps = self.maps.iter().map(|m| m.transpose()).collect();
        Representation::new_unchecked(target.clone(), self.dims.clone(), maps)
    }

    /// Rehomes the representation onto a structurally equal algebra handle.
    pub(crate) fn with_algebra(&self, alg: &Arc<Algebra>) -> Representation {
        debug_assert!(same_algebra(&self.alg, alg));
        Representation::new_unchecked(alg.clone(), self.dims.clone(), self.maps.clone())
    }

    pub fn direct_sum(parts: &[&Representation]) -> Representation {
        assert!(!parts.is_empty(), "direct_sum needs at least one part (use zero_module)");
        let alg = parts[0].alg.clone();
        assert!(parts.iter().all(|r| same_algebra(&r.alg, &alg)), "algebra mismatch in sum");
        let n = alg.vertex_count();
        let dims: Vec<usize> = (0..n).map(|v| parts.iter().map(|r| r.dims[v]).sum()).collect();
        let maps = (0..alg.quiver().arrows().len())
            .map(|a| {
                let blocks: Vec<&Matrix> = parts.iter().map(|r| &r.maps[a]).collect();
                Matrix::block_diag(alg.p(), &blocks)
            })
            .collect();
        Representation { alg, dims, maps }
    }

    /// Subrepresentation spanned by the given per-vertex columns. The spans
    /// must be closed under the arrow maps. Returns the subrepresentation on
    /// canonical bases together with its inclusion.
    pub fn subrep_from_spans(
        &self,
        spans: &[Matrix],
    ) -> Result<(Representation, Morphism), AlgebraError> {
        let q = self.alg.quiver();
        let bases: Vec<Matrix> = spans.iter().map(|s| s.column_span_canonical()).collect();
        let dims: Vec<usize> = bases.iter().map(|b| b.cols()).collect();
        let mut maps = Vec::new();
        for a in 0..q.arrows().len() {
            let (s, t) = (q.arrow(a).src, q.arrow(a).tgt);
            let pushed = self.maps[a].mul(&bases[s]);
            let restricted = bases[t]
                .solve(&pushed)
                .ok_or_else(|| AlgebraError::BadModule("spans are not arrow-closed".into()))?;
            maps.push(restricted);
        }
        let sub = Representation { alg: self.alg.clone(), dims, maps };
        let incl = Morphism::new(sub.clone(), self.clone(), bases)?;
        Ok((sub, incl))
    }

    /// Quotient by the subrepresentation spanned by the given columns.
    /// Returns the quotient, the projection, and per-vertex sections
    /// (projection . section = identity).
    pub fn quotient_by_spans(
        &self,
        spans: &[Matrix],
    ) -> Result<(Representation, Morphism, Vec<Matrix>), AlgebraError> {
        let q = self.alg.quiver();
        let mut projs = Vec::new();
        let mut sects = Vec::new();
        for (v, span) in spans.iter().enumerate() {
            assert_eq!(span.rows(), self.dims[v], "span has wrong ambient dimension");
            let (proj, sect) = span.quotient_maps();
            projs.push(proj);
            sects.push(sect);
        }
        let dims: Vec<usize> = projs.iter().map(|m| m.rows()).collect();
        let mut maps = Vec::new();
        for a in 0..q.arrows().len() {
            let (s, t) = (q.arrow(a).src, q.arrow(a).tgt);
            maps.push(projs[t].mul(&self.maps[a]).mul(&sects[s]));
        }
        let quot = Representation { alg: self.alg.clone(), dims, maps };
        quot.validate().map_err(|_| {
            AlgebraError::BadModule("quotient spans are not a subrepresentation".into())
        })?;
        let morphism = Morphism::new(self.clone(), quot.clone(), projs)?;
        Ok((quot, morphism, sects))
    }

    /// rad M: the span of all incoming arrow images at each vertex.
    pub fn radical(&self) -> Result<(Representation, Morphism), AlgebraError> {
        self.subrep_from_spans(&self.radical_spans())
    }

    pub(crate) fn radical_spans(&self) -> Vec<Matrix> {
        let q = self.alg.quiver();
        (0..q.vertex_count())
            .map(|w| {
                let mut acc = Matrix::zeros(self.alg.p(), self.dims[w], 0);
                for a in q.in_arrows(w) {
                    acc = acc.hstack(&self.maps[a]);
                }
                acc
            })
            .collect()
    }

    /// top M = M / rad M.
    pub fn top(&self) -> Result<(Representation, Morphism), AlgebraError> {
        let (t, proj, _) = self.quotient_by_spans(&self.radical_spans())?;
        Ok((t, proj))
    }

    /// soc M: at each vertex, the joint kernel of the outgoing arrows.
    pub fn socle(&self) -> Result<(Representation, Morphism), AlgebraError> {
        self.subrep_from_spans(&self.socle_spans())
    }

    pub(crate) fn socle_spans(&self) -> Vec<Matrix> {
        let q = self.alg.quiver();
        (0..q.vertex_count())
            .map(|v| {
                let out = q.out_arrows(v);
                if out.is_empty() {
                    return Matrix::identity(self.alg.p(), self.dims[v]);
                }
                let mut stacked = Matrix::zeros(self.alg.p(), 0, self.dims[v]);
                for a in out {
                    stacked = stacked.vstack(&self.maps[a]);
                }
                stacked.kernel_basis()
            })
            .collect()
    }

    /// M modulo the socle component at vertex `v` (e.g. I_v / S_v).
    pub fn socle_quotient_at(&self, v: usize) -> Result<Representation, AlgebraError> {
        let mut spans: Vec<Matrix> =
            (0..self.dims.len()).map(|w| Matrix::zeros(self.alg.p(), self.dims[w], 0)).collect();
        spans[v] = self.socle_spans()[v].clone();
        let (q, _, _) = self.quotient_by_spans(&spans)?;
        Ok(q)
    }

    /// Isomorphism test: searches Hom(M,N) for a combination that is
    /// invertible at every vertex. Exhaustive when the coefficient space is
    /// small, seeded random sampling beyond that (never a false positive).
    pub fn is_isomorphic(&self, other: &Representation) -> Result<bool, AlgebraError> {
        if !same_algebra(&self.alg, &other.alg) {
            return Err(AlgebraError::AlgebraMismatch);
        }
        if self.dims != other.dims {
            return Ok(false);
        }
        if self.total_dim() == 0 {
            return Ok(true);
        }
        let basis = hom(self, other)?;
        if basis.is_empty() {
            return Ok(false);
        }
        for f in &basis {
            if f.is_iso() {
                return Ok(true);
            }
        }
        let p = self.alg.p() as u64;
        let r = basis.len() as u32;
        const CAP: u64 = 200_000;
        let total = p.checked_pow(r).unwrap_or(u64::MAX);
        let check = |coeffs: &[u32]| -> bool {
            let mut blocks: Vec<Matrix> = (0..self.dims.len())
                .map(|v| Matrix::zeros(self.alg.p(), other.dims[v], self.dims[v]))
                .collect();
            for (f, &c) in basis.iter().zip(coeffs) {
                if c == 0 {
                    continue;
                }
                for (v, b) in blocks.iter_mut().enumerate() {
                    *b = b.add(&f.block(v).scale(c));
                }
            }
            blocks.iter().all(|b| b.is_invertible())
        };
        if total <= CAP {
            let mut coeffs = vec![0u32; r as usize];
            for idx in 1..total {
                let mut x = idx;
                for c in coeffs.iter_mut() {
                    *c = (x % p) as u32;
                    x /= p;
                }
                if check(&coeffs) {
                    return Ok(true);
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0xC1A5_5E7);
            for _ in 0..CAP {
                let coeffs: Vec<u32> =
                    (0..r).map(|_| rng.gen_range(0..p as u32)).collect();
                if coeffs.iter().all(|&c| c == 0) {
                    continue;
                }
                if check(&coeffs) {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }
}

/// A module morphism: one matrix per vertex, commuting with the arrow maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    from: Representation,
    to: Representation,
    blocks: Vec<Matrix>,
}

impl Morphism {
    pub fn new(
        from: Representation,
        to: Representation,
        blocks: Vec<Matrix>,
    ) -> Result<Morphism, AlgebraError> {
        let m = Morphism { from, to, blocks };
        m.validate()?;
        Ok(m)
    }

    pub fn validate(&self) -> Result<(), AlgebraError> {
        if !same_algebra(self.from.algebra(), self.to.algebra()) {
            return Err(AlgebraError::AlgebraMismatch);
        }
        let q = self.from.algebra().quiver();
        if self.blocks.len() != q.vertex_count() {
            return Err(AlgebraError::BadModule("block count mismatch".into()));
        }
        for (v, b) in self.blocks.iter().enumerate() {
            if b.rows() != self.to.dims()[v] || b.cols() != self.from.dims()[v] {
                return Err(AlgebraError::BadModule(format!("block at vertex {v} has wrong shape")));
            }
        }
        for a in 0..q.arrows().len() {
            let (s, t) = (q.arrow(a).src, q.arrow(a).tgt);
            let lhs = self.blocks[t].mul(self.from.map(a));
            let rhs = self.to.map(a).mul(&self.blocks[s]);
            if lhs != rhs {
                return Err(AlgebraError::BadModule(format!(
                    "blocks do not commute with arrow {}",
                    q.arrow(a).id
                )));
            }
        }
        Ok(())
    }

    pub fn identity(rep: &Representation) -> Morphism {
        let blocks =
            (0..rep.dims().len()).map(|v| Matrix::identity(rep.p(), rep.dims()[v])).collect();
        Morphism { from: rep.clone(), to: rep.clone(), blocks }
    }

    pub fn zero(from: &Representation, to: &Representation) -> Morphism {
        let blocks = (0..from.dims().len())
            .map(|v| Matrix::zeros(from.p(), to.dims()[v], from.dims()[v]))
            .collect();
        Morphism { from: from.clone(), to: to.clone(), blocks }
    }

    pub fn from_flat(
        from: &Representation,
        to: &Representation,
        flat: &[u32],
    ) -> Morphism {
        let mut blocks = Vec::new();
        let mut off = 0;
        for v in 0..from.dims().len() {
            let (rows, cols) = (to.dims()[v], from.dims()[v]);
            let mut b = Matrix::zeros(from.p(), rows, cols);
            for r in 0..rows {
                for c in 0..cols {
                    b.set(r, c, flat[off + r * cols + c]);
                }
            }
            off += rows * cols;
            blocks.push(b);
        }
        debug_assert_eq!(off, flat.len());
        Morphism { from: from.clone(), to: to.clone(), blocks }
    }

    pub fn flat(&self) -> Vec<u32> {
        let mut out = Vec::new();
        for b in &self.blocks {
            out.extend_from_slice(b.entries());
        }
        out
    }

    pub fn from(&self) -> &Representation {
        &self.from
    }

    pub fn to(&self) -> &Representation {
        &self.to
    }

    pub fn block(&self, v: usize) -> &Matrix {
        &self.blocks[v]
    }

    pub fn blocks(&self) -> &[Matrix] {
        &self.blocks
    }

    pub fn compose(&self, inner: &Morphism) -> Morphism {
        // self . inner : inner.from -> self.to
        assert_eq!(inner.to, self.from, "composition shape mismatch");
        let blocks =
            self.blocks.iter().zip(&inner.blocks).map(|(a, b)| a.mul(b)).collect();
        Morphism { from: inner.from.clone(), to: self.to.clone(), blocks }
    }

    pub fn add(&self, other: &Morphism) -> Morphism {
        assert_eq!(self.from, other.from);
        assert_eq!(self.to, other.to);
        let blocks = self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.add(b)).collect();
        Morphism { from: self.from.clone(), to: self.to.clone(), blocks }
    }

    pub fn scale(&self, c: u32) -> Morphism {
        let blocks = self.blocks.iter().map(|b| b.scale(c)).collect();
        Morphism { from: self.from.clone(), to: self.to.clone(), blocks }
    }

    pub fn sub(&self, other: &Morphism) -> Morphism {
        let f = self.from.algebra().field();
        self.add(&other.scale(f.neg(1)))
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(|b| b.is_zero())
    }

    pub fn is_injective(&self) -> bool {
        self.blocks.iter().enumerate().all(|(v, b)| b.rank() == self.from.dims()[v])
    }

    pub fn is_surjective(&self) -> bool {
        self.blocks.iter().enumerate().all(|(v, b)| b.rank() == self.to.dims()[v])
    }

    pub fn is_iso(&self) -> bool {
        self.from.dims() == self.to.dims() && self.blocks.iter().all(|b| b.is_invertible())
    }

    /// Kernel subrepresentation with its inclusion into the source.
    pub fn kernel(&self) -> Result<(Representation, Morphism), AlgebraError> {
        let spans: Vec<Matrix> = self.blocks.iter().map(|b| b.kernel_basis()).collect();
        self.from.subrep_from_spans(&spans)
    }

    /// Image subrepresentation with its inclusion into the target.
    pub fn image(&self) -> Result<(Representation, Morphism), AlgebraError> {
        self.to.subrep_from_spans(&self.blocks)
    }

    /// Cokernel quotient with the projection from the target.
    pub fn cokernel(&self) -> Result<(Representation, Morphism), AlgebraError> {
        let (q, proj, _) = self.to.quotient_by_spans(&self.blocks)?;
        Ok((q, proj))
    }
}

/// Basis of Hom(M, N): solves the intertwining system (one commuting-square
/// condition per arrow) with a single kernel computation. The basis order is
/// the canonical kernel basis of the stacked system, so results are
/// deterministic.
pub fn hom(m: &Representation, n: &Representation) -> Result<Vec<Morphism>, AlgebraError> {
    if !same_algebra(m.algebra(), n.algebra()) {
        return Err(AlgebraError::AlgebraMismatch);
    }
    let alg = m.algebra();
    let q = alg.quiver();
    let f = alg.field();
    let nv = q.vertex_count();
    let mut offsets = vec![0usize; nv + 1];
    for v in 0..nv {
        offsets[v + 1] = offsets[v] + m.dims()[v] * n.dims()[v];
    }
    let unknowns = offsets[nv];
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for a in 0..q.arrows().len() {
        let (i, j) = (q.arrow(a).src, q.arrow(a).tgt);
        let (ma, na) = (m.map(a), n.map(a));
        for r in 0..n.dims()[j] {
            for b in 0..m.dims()[i] {
                let mut row = vec![0u32; unknowns];
                // (f_j . M_a)[r,b] = sum_c f_j[r,c] M_a[c,b]
                for c in 0..m.dims()[j] {
                    let idx = offsets[j] + r * m.dims()[j] + c;
                    row[idx] = f.add(row[idx], ma.get(c, b));
                }
                // -(N_a . f_i)[r,b] = -sum_d N_a[r,d] f_i[d,b]
                for d in 0..n.dims()[i] {
                    let idx = offsets[i] + d * m.dims()[i] + b;
                    row[idx] = f.sub(row[idx], na.get(r, d));
                }
                rows.push(row);
            }
        }
    }
    let mut system = Matrix::zeros(alg.p(), rows.len(), unknowns);
    for (r, row) in rows.iter().enumerate() {
        for (c, &v) in row.iter().enumerate() {
            system.set(r, c, v);
        }
    }
    let kernel = system.kernel_basis();
    let mut out = Vec::new();
    for k in 0..kernel.cols() {
        let flat = kernel.column(k);
        let mor = Morphism::from_flat(m, n, &flat);
        debug_assert!(mor.validate().is_ok());
        out.push(mor);
    }
    Ok(out)
}

pub fn hom_dim(m: &Representation, n: &Representation) -> Result<usize, AlgebraError> {
    Ok(hom(m, n)?.len())
}

/// A short exact sequence 0 -> L -> M -> N -> 0 of representations.
#[derive(Clone, Debug)]
pub struct ShortExactSeq {
    pub l: Representation,
    pub m: Representation,
    pub n: Representation,
    pub inject: Morphism,
    pub project: Morphism,
}

impl ShortExactSeq {
    pub fn new(
        l: Representation,
        m: Representation,
        n: Representation,
        inject: Morphism,
        project: Morphism,
    ) -> Result<ShortExactSeq, AlgebraError> {
        let s = ShortExactSeq { l, m, n, inject, project };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<(), AlgebraError> {
        let err = |msg: &str| Err(AlgebraError::BadSequence(msg.into()));
        if self.inject.from() != &self.l
            || self.inject.to() != &self.m
            || self.project.from() != &self.m
            || self.project.to() != &self.n
        {
            return err("morphism endpoints do not match the three terms");
        }
        self.inject.validate()?;
        self.project.validate()?;
        if !self.inject.is_injective() {
            return err("left map is not injective");
        }
        if !self.project.is_surjective() {
            return err("right map is not surjective");
        }
        for v in 0..self.l.dims().len() {
            if self.l.dims()[v] + self.n.dims()[v] != self.m.dims()[v] {
                return err("dimension vectors are not additive");
            }
        }
        if !self.project.compose(&self.inject).is_zero() {
            return err("composite of the two maps is nonzero");
        }
        Ok(())
    }

    /// A sequence splits iff the identity of N factors through the
    /// projection, i.e. some morphism N -> M is a section.
    pub fn splits(&self) -> Result<bool, AlgebraError> {
        let candidates = hom(&self.n, &self.m)?;
        if candidates.is_empty() {
            return Ok(self.n.is_zero_module());
        }
        // Solve sum_i a_i (project . s_i) = id_N linearly.
        let composed: Vec<Vec<u32>> =
            candidates.iter().map(|s| self.project.compose(s).flat()).collect();
        let id_flat = Morphism::identity(&self.n).flat();
        let p = self.n.p();
        let mut system = Matrix::zeros(p, id_flat.len(), composed.len());
        for (c, col) in composed.iter().enumerate() {
            for (r, &v) in col.iter().enumerate() {
                system.set(r, c, v);
            }
        }
        let mut rhs = Matrix::zeros(p, id_flat.len(), 1);
        for (r, &v) in id_flat.iter().enumerate() {
            rhs.set(r, 0, v);
        }
        Ok(system.solve(&rhs).is_some())
    }
}
