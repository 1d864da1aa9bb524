//! Projective covers and first extension spaces.
//!
//! Ext^1(M, N) is computed from the canonical projective presentation
//! 0 -> K -> P_0 -> M -> 0 as the cokernel of the restriction map
//! Hom(P_0, N) -> Hom(K, N). The space carries explicit coordinates:
//! classes can be extracted from a short exact sequence and realised back
//! as one, and endomorphisms of M act on the right.

use std::sync::Arc;

use crate::field::Matrix;

use super::rep::{col_matrix, flat_matrix, hom, same_algebra, Morphism, Representation, ShortExactSeq};
use super::{Algebra, AlgebraError};

/// The module map P_v -> M sending the stationary generator to `gen`
/// (coordinates in M at vertex v). On the path basis of P_v the map is
/// forced: a path q goes to q acting on `gen`.
pub fn proj_hom(
    alg: &Arc<Algebra>,
    v: usize,
    m: &Representation,
    gen: &[u32],
) -> Morphism {
    assert_eq!(gen.len(), m.dims()[v], "generator has wrong length");
    let pv = Representation::projective(alg, v);
    let mut blocks = Vec::new();
    for w in 0..alg.vertex_count() {
        let paths = alg.paths_between(v, w);
        let mut b = Matrix::zeros(alg.p(), m.dims()[w], paths.len());
        for (c, &bi) in paths.iter().enumerate() {
            let col = m.path_action(alg.basis_path(bi)).apply(gen);
            for (r, &x) in col.iter().enumerate() {
                b.set(r, c, x);
            }
        }
        blocks.push(b);
    }
    Morphism::new(pv, m.clone(), blocks).expect("path action always defines a module map")
}

/// Projective cover P_0 ->> M: one summand P_v per basis vector of top(M)
/// at v. Returns the cover morphism and the vertex of each summand, in
/// summand order.
pub fn projective_cover(
    m: &Representation,
) -> Result<(Representation, Morphism, Vec<usize>), AlgebraError> {
    let alg = m.algebra().clone();
    let (_, _, sects) = m.quotient_by_spans(&m.radical_spans())?;
    let mut summands = Vec::new();
    let mut parts = Vec::new();
    let mut part_homs = Vec::new();
    for (v, sect) in sects.iter().enumerate() {
        for k in 0..sect.cols() {
            let h = proj_hom(&alg, v, m, &sect.column(k));
            parts.push(h.from().clone());
            part_homs.push(h);
            summands.push(v);
        }
    }
    if parts.is_empty() {
        let zero = Representation::zero_module(&alg);
        let cover = Morphism::zero(&zero, m);
        return Ok((zero, cover, summands));
    }
    let refs: Vec<&Representation> = parts.iter().collect();
    let p0 = Representation::direct_sum(&refs);
    let blocks: Vec<Matrix> = (0..alg.vertex_count())
        .map(|w| {
            let mut acc = Matrix::zeros(alg.p(), m.dims()[w], 0);
            for h in &part_homs {
                acc = acc.hstack(h.block(w));
            }
            acc
        })
        .collect();
    let cover = Morphism::new(p0.clone(), m.clone(), blocks)?;
    debug_assert!(cover.is_surjective());
    Ok((p0, cover, summands))
}

pub fn is_projective(m: &Representation) -> Result<bool, AlgebraError> {
    let (_, cover, _) = projective_cover(m)?;
    let (k, _) = cover.kernel()?;
    Ok(k.is_zero_module())
}

/// Ext^1(M, N) with explicit coordinates.
pub struct ExtSpace {
    m: Representation,
    n: Representation,
    k: Representation,
    incl: Morphism,
    p0: Representation,
    p0_summands: Vec<usize>,
    cover: Morphism,
    hom_k_n: Vec<Morphism>,
    hom_flat: Matrix,
    proj: Matrix,
    sect: Matrix,
}

pub fn ext1(m: &Representation, n: &Representation) -> Result<ExtSpace, AlgebraError> {
    if !same_algebra(m.algebra(), n.algebra()) {
        return Err(AlgebraError::AlgebraMismatch);
    }
    let p = m.p();
    let (p0, cover, p0_summands) = projective_cover(m)?;
    let (k, incl) = cover.kernel()?;
    let hom_k_n = hom(&k, n)?;
    let flat_dim: usize = (0..k.dims().len()).map(|v| k.dims()[v] * n.dims()[v]).sum();
    let hom_flat = flat_matrix(p, flat_dim, &hom_k_n.iter().map(|h| h.flat()).collect::<Vec<_>>());
    let restricted: Vec<Vec<u32>> = hom(&p0, n)?
        .iter()
        .map(|g| {
            let coords = hom_flat
                .solve(&col_matrix(p, &g.compose(&incl).flat()))
                .expect("a restricted morphism lies in the morphism space");
            coords.column(0)
        })
        .collect();
    let span = flat_matrix(p, hom_k_n.len(), &restricted);
    let (proj, sect) = span.quotient_maps();
    Ok(ExtSpace {
        m: m.clone(),
        n: n.clone(),
        k,
        incl,
        p0,
        p0_summands,
        cover,
        hom_k_n,
        hom_flat,
        proj,
        sect,
    })
}

pub fn ext1_dim(m: &Representation, n: &Representation) -> Result<usize, AlgebraError> {
    Ok(ext1(m, n)?.dim())
}

impl ExtSpace {
    pub fn dim(&self) -> usize {
        self.proj.rows()
    }

    pub fn m(&self) -> &Representation {
        &self.m
    }

    pub fn n(&self) -> &Representation {
        &self.n
    }

    pub fn syzygy(&self) -> &Representation {
        &self.k
    }

    pub fn cover(&self) -> &Morphism {
        &self.cover
    }

    pub fn p0_summands(&self) -> &[usize] {
        &self.p0_summands
    }

    /// Coordinates of the class of a morphism K -> N.
    fn coords_of_hom(&self, psi: &Morphism) -> Vec<u32> {
        if self.hom_k_n.is_empty() {
            debug_assert!(psi.is_zero());
            return Vec::new();
        }
        let coords = self
            .hom_flat
            .solve(&col_matrix(self.m.p(), &psi.flat()))
            .expect("morphism lies in the computed Hom space");
        self.proj.apply(&coords.column(0))
    }

    /// Morphism K -> N representing the given class coordinates.
    fn hom_of_coords(&self, class: &[u32]) -> Morphism {
        assert_eq!(class.len(), self.dim(), "class has wrong length");
        let mut psi = Morphism::zero(&self.k, &self.n);
        let lifted = self.sect.apply(class);
        for (h, &c) in self.hom_k_n.iter().zip(&lifted) {
            if c != 0 {
                psi = psi.add(&h.scale(c));
            }
        }
        psi
    }

    /// Class of a short exact sequence 0 -> N -> E -> M -> 0. The sequence
    /// must literally have `self.n` as its left and `self.m` as its right
    /// term.
    pub fn class_of(&self, ses: &ShortExactSeq) -> Result<Vec<u32>, AlgebraError> {
        if ses.l != self.n || ses.n != self.m {
            return Err(AlgebraError::BadSequence(
                "sequence terms do not match the Ext space".into(),
            ));
        }
        let p = self.m.p();
        // Lift the cover P_0 -> M through E ->> M, one summand at a time.
        let mut lifts = Vec::new();
        let mut col = 0;
        for &v in &self.p0_summands {
            let target = self.cover.block(v).column(col_index_at(&self.p0_summands, &self.p0, v, &mut col));
            let e = ses
                .project
                .block(v)
                .solve(&col_matrix(p, &target))
                .expect("projection is surjective");
            lifts.push(proj_hom(self.m.algebra(), v, &ses.m, &e.column(0)));
        }
        let phi0 = assemble(&self.p0, &ses.m, &lifts);
        debug_assert_eq!(ses.project.compose(&phi0), self.cover);
        // phi0 . incl lands in the image of N -> E; pull it back.
        let into_e = phi0.compose(&self.incl);
        let blocks: Vec<Matrix> = (0..self.k.dims().len())
            .map(|v| {
                ses.inject
                    .block(v)
                    .solve(into_e.block(v))
                    .expect("composite lands in the kernel of the projection")
            })
            .collect();
        let psi = Morphism::new(self.k.clone(), self.n.clone(), blocks)?;
        Ok(self.coords_of_hom(&psi))
    }

    /// Realises class coordinates as a short exact sequence via the pushout
    /// E = (N + P_0) / {(psi(x), -incl(x))}.
    pub fn representative(&self, class: &[u32]) -> Result<ShortExactSeq, AlgebraError> {
        let psi = self.hom_of_coords(class);
        let p = self.m.p();
        let nv = self.m.dims().len();
        let sum = Representation::direct_sum(&[&self.n, &self.p0]);
        let spans: Vec<Matrix> = (0..nv)
            .map(|v| psi.block(v).vstack(&self.incl.block(v).scale(p - 1)))
            .collect();
        let (e, proj_sum, sects) = sum.quotient_by_spans(&spans)?;
        let inject_blocks: Vec<Matrix> = (0..nv)
            .map(|v| {
                let cols: Vec<usize> = (0..self.n.dims()[v]).collect();
                proj_sum.block(v).submatrix_cols(&cols)
            })
            .collect();
        let inject = Morphism::new(self.n.clone(), e.clone(), inject_blocks)?;
        let project_blocks: Vec<Matrix> = (0..nv)
            .map(|v| {
                let zero = Matrix::zeros(p, self.m.dims()[v], self.n.dims()[v]);
                zero.hstack(self.cover.block(v)).mul(&sects[v])
            })
            .collect();
        let project = Morphism::new(e.clone(), self.m.clone(), project_blocks)?;
        ShortExactSeq::new(self.n.clone(), e, self.m.clone(), inject, project)
    }

    /// Matrix of the right action of an endomorphism of M on the class
    /// coordinates: [psi] . phi = [psi . phi_K] where phi_K is the
    /// restriction to the syzygy of a lift of phi.
    pub fn right_action(&self, phi: &Morphism) -> Result<Matrix, AlgebraError> {
        if phi.from() != &self.m || phi.to() != &self.m {
            return Err(AlgebraError::BadModule(
                "right action needs an endomorphism of M".into(),
            ));
        }
        let p = self.m.p();
        let mut lifts = Vec::new();
        let mut col = 0;
        for &v in &self.p0_summands {
            let gen = self.cover.block(v).column(col_index_at(&self.p0_summands, &self.p0, v, &mut col));
            let target = phi.block(v).apply(&gen);
            let x = self
                .cover
                .block(v)
                .solve(&col_matrix(p, &target))
                .expect("cover is surjective");
            lifts.push(proj_hom(self.m.algebra(), v, &self.p0, &x.column(0)));
        }
        let phi0 = assemble(&self.p0, &self.p0, &lifts);
        debug_assert_eq!(self.cover.compose(&phi0), phi.compose(&self.cover));
        let into_p0 = phi0.compose(&self.incl);
        let blocks: Vec<Matrix> = (0..self.k.dims().len())
            .map(|v| {
                self.incl
                    .block(v)
                    .solve(into_p0.block(v))
                    .expect("lift restricts to the syzygy")
            })
            .collect();
        let phi_k = Morphism::new(self.k.clone(), self.k.clone(), blocks)?;
        let d = self.dim();
        let mut action = Matrix::zeros(p, d, d);
        for c in 0..d {
            let mut class = vec![0u32; d];
            class[c] = 1;
            let psi = self.hom_of_coords(&class);
            let moved = self.coords_of_hom(&psi.compose(&phi_k));
            for (r, &x) in moved.iter().enumerate() {
                action.set(r, c, x);
            }
        }
        Ok(action)
    }
}

/// Column index of the generator of the summand currently at `*cursor`
/// inside the direct sum block at vertex `v`: the stationary path of each
/// projective sits first in its block at its own vertex.
fn col_index_at(
    summands: &[usize],
    p0: &Representation,
    v: usize,
    cursor: &mut usize,
) -> usize {
    let alg = p0.algebra();
    let mut offset = 0;
    for &w in summands.iter().take(*cursor) {
        offset += alg.paths_between(w, v).len();
    }
    debug_assert_eq!(summands[*cursor], v);
    *cursor += 1;
    offset
}

/// Glues per-summand morphisms P_{v_i} -> target into one morphism from the
/// direct sum.
fn assemble(p0: &Representation, target: &Representation, parts: &[Morphism]) -> Morphism {
    let p = p0.p();
    let blocks: Vec<Matrix> = (0..p0.dims().len())
        .map(|w| {
            let mut acc = Matrix::zeros(p, target.dims()[w], 0);
            for h in parts {
                acc = acc.hstack(h.block(w));
            }
            acc
        })
        .collect();
    Morphism::new(p0.clone(), target.clone(), blocks)
        .expect("summand morphisms assemble to a module map")
}

#[cfg(test)]
mod tests {
    use super::super::tests::{a2, cycle3};
    use super::*;

    #[test]
    fn projective_detection() {
        let a = a2(5);
        assert!(is_projective(&Representation::projective(&a, 0)).unwrap());
        assert!(is_projective(&Representation::simple(&a, 1)).unwrap());
        assert!(!is_projective(&Representation::simple(&a, 0)).unwrap());
        assert!(is_projective(&Representation::zero_module(&a)).unwrap());
    }

    #[test]
    fn cover_of_a_simple() {
        let a = a2(5);
        let s0 = Representation::simple(&a, 0);
        let (p0, cover, summands) = projective_cover(&s0).unwrap();
        assert_eq!(summands, vec![0]);
        assert_eq!(p0.dims(), &[1, 1]);
        assert!(cover.is_surjective());
        let (k, _) = cover.kernel().unwrap();
        assert!(k.is_isomorphic(&Representation::simple(&a, 1)).unwrap());
    }

    #[test]
    fn ext_dims_on_a2() {
        let a = a2(5);
        let s0 = Representation::simple(&a, 0);
        let s1 = Representation::simple(&a, 1);
        assert_eq!(ext1_dim(&s0, &s1).unwrap(), 1);
        assert_eq!(ext1_dim(&s1, &s0).unwrap(), 0);
        assert_eq!(ext1_dim(&s0, &s0).unwrap(), 0);
        assert_eq!(ext1_dim(&s1, &s1).unwrap(), 0);
    }

    #[test]
    fn ext_counts_arrows_between_simples_on_the_cycle() {
        let a = cycle3(7);
        for i in 0..3 {
            for j in 0..3 {
                let si = Representation::simple(&a, i);
                let sj = Representation::simple(&a, j);
                let expected = usize::from(j == (i + 1) % 3);
                assert_eq!(ext1_dim(&si, &sj).unwrap(), expected, "ext(S_{i}, S_{j})");
            }
        }
    }

    #[test]
    fn representative_round_trips_the_class() {
        let a = a2(5);
        let s0 = Representation::simple(&a, 0);
        let s1 = Representation::simple(&a, 1);
        let ext = ext1(&s0, &s1).unwrap();
        assert_eq!(ext.dim(), 1);
        for c in 0..5u32 {
            let ses = ext.representative(&[c]).unwrap();
            assert_eq!(ext.class_of(&ses).unwrap(), vec![c]);
            assert_eq!(ses.splits().unwrap(), c == 0);
        }
        let nonsplit = ext.representative(&[1]).unwrap();
        assert!(nonsplit.m.is_isomorphic(&Representation::projective(&a, 0)).unwrap());
    }

    #[test]
    fn euler_form_matches_hom_minus_ext_on_a2() {
        // A_2 is hereditary: dim Hom - dim Ext^1 = <dim M, dim N> with
        // <d, e> = sum_i d_i e_i - sum_{arrows i->j} d_i e_j.
        let a = a2(5);
        let mods = [
            Representation::simple(&a, 0),
            Representation::simple(&a, 1),
            Representation::projective(&a, 0),
        ];
        for m in &mods {
            for n in &mods {
                let lhs = super::super::rep::hom_dim(m, n).unwrap() as i64
                    - ext1_dim(m, n).unwrap() as i64;
                let d = m.dims();
                let e = n.dims();
                let euler =
                    (d[0] * e[0] + d[1] * e[1]) as i64 - (d[0] * e[1]) as i64;
                assert_eq!(lhs, euler);
            }
        }
    }

    #[test]
    fn right_action_by_identity_is_identity() {
        let a = cycle3(5);
        let s0 = Representation::simple(&a, 0);
        let s1 = Representation::simple(&a, 1);
        let ext = ext1(&s0, &s1).unwrap();
        assert_eq!(ext.dim(), 1);
        let id = Morphism::identity(&s0);
        let act = ext.right_action(&id).unwrap();
        assert_eq!(act, Matrix::identity(5, 1));
    }
}
