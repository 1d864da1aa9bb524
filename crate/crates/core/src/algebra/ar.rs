//! Direct sum decomposition, the AR translate, and almost split sequences.
//!
//! Decomposition works through the endomorphism algebra: an endomorphism
//! whose characteristic polynomial has two coprime factors splits the
//! module into generalised eigenspaces. When no split is found the ring is
//! certified local by exhibiting its radical as a nilpotent ideal; modules
//! whose endomorphism ring is local over a proper field extension are
//! reported rather than silently mishandled.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::{berkowitz_char_poly, FpPoly, Matrix};

use super::ext::{ext1, is_projective, proj_hom, projective_cover};
use super::rep::{col_matrix, flat_matrix, hom, Morphism, Representation, ShortExactSeq};
use super::{Algebra, AlgebraError};

const RANDOM_SPLIT_TRIES: usize = 128;
const UNIVERSE_CAP: usize = 512;

/// The endomorphism as one matrix on the total space.
fn flat_action(phi: &Morphism) -> Matrix {
    let blocks: Vec<&Matrix> = phi.blocks().iter().collect();
    Matrix::block_diag(phi.from().p(), &blocks)
}

fn eval_poly(g: &FpPoly, phi: &Morphism) -> Morphism {
    let m = phi.from();
    let id = Morphism::identity(m);
    let mut acc = Morphism::zero(m, m);
    for &c in g.coeffs().iter().rev() {
        acc = acc.compose(phi);
        if c != 0 {
            acc = acc.add(&id.scale(c));
        }
    }
    acc
}

fn morphism_power(phi: &Morphism, e: usize) -> Morphism {
    let mut acc = Morphism::identity(phi.from());
    for _ in 0..e {
        acc = acc.compose(phi);
    }
    acc
}

/// Splits M along the coprime factorization of the characteristic
/// polynomial of `phi`, if it has at least two distinct irreducible
/// factors. Each part is the kernel of g(phi)^mult, a submodule.
fn split_by(
    m: &Representation,
    phi: &Morphism,
) -> Result<Option<Vec<Representation>>, AlgebraError> {
    let cp = berkowitz_char_poly(&flat_action(phi));
    let factors = cp.factor(0);
    if factors.len() < 2 {
        return Ok(None);
    }
    let mut parts = Vec::new();
    let mut seen = 0;
    for (g, mult) in &factors {
        let killer = morphism_power(&eval_poly(g, phi), *mult);
        let spans: Vec<Matrix> = killer.blocks().iter().map(|b| b.kernel_basis()).collect();
        let (sub, _) = m.subrep_from_spans(&spans)?;
        seen += sub.total_dim();
        parts.push(sub);
    }
    debug_assert_eq!(seen, m.total_dim(), "generalised eigenspaces must fill the module");
    Ok(Some(parts))
}

/// Tries to certify that End(M) is local with residue field F_p. Returns
/// the canonical basis of the radical on success. The certificate: every
/// basis endomorphism is scalar + nilpotent, and the span R of the
/// nilpotent parts is closed under composition and nilpotent as a set.
/// Then every endomorphism is unit or nilpotent, R is a nilpotent maximal
/// ideal, and End(M) = F_p + R.
fn certify_local(m: &Representation, ends: &[Morphism]) -> Option<Vec<Morphism>> {
    let f = m.algebra().field();
    let flat_dim: usize = m.dims().iter().map(|d| d * d).sum();
    let id = Morphism::identity(m);
    let mut rad_flats = Vec::new();
    for phi in ends {
        let cp = berkowitz_char_poly(&flat_action(phi));
        let factors = cp.factor(0);
        if factors.len() != 1 {
            return None;
        }
        let (g, _) = &factors[0];
        if g.degree() != Some(1) {
            return None;
        }
        let c = f.neg(g.coeffs()[0]);
        let r = phi.sub(&id.scale(c));
        if !r.is_zero() {
            rad_flats.push(r.flat());
        }
    }
    let span = flat_matrix(m.p(), flat_dim, &rad_flats).column_span_canonical();
    let basis: Vec<Morphism> =
        (0..span.cols()).map(|c| Morphism::from_flat(m, m, &span.column(c))).collect();
    for a in &basis {
        for b in &basis {
            let prod = col_matrix(m.p(), &a.compose(b).flat());
            if !span.spans_containing(&prod) {
                return None;
            }
        }
    }
    // Nilpotency: powers of the span must shrink strictly to zero.
    let mut current = span.clone();
    while current.cols() > 0 {
        let mut next_cols = Vec::new();
        for a in &basis {
            for c in 0..current.cols() {
                let elem = Morphism::from_flat(m, m, &current.column(c));
                next_cols.push(a.compose(&elem).flat());
            }
        }
        let next = flat_matrix(m.p(), flat_dim, &next_cols).column_span_canonical();
        if next.cols() >= current.cols() {
            return None;
        }
        current = next;
    }
    Some(basis)
}

/// Indecomposable direct summands of M, with multiplicity. Deterministic:
/// the same module always decomposes in the same order.
pub fn decompose(m: &Representation) -> Result<Vec<Representation>, AlgebraError> {
    if m.is_zero_module() {
        return Ok(Vec::new());
    }
    let ends = hom(m, m)?;
    if ends.len() == 1 {
        return Ok(vec![m.clone()]);
    }
    for phi in &ends {
        if let Some(parts) = split_by(m, phi)? {
            let mut out = Vec::new();
            for part in parts {
                out.extend(decompose(&part)?);
            }
            return Ok(out);
        }
    }
    let p = m.p();
    let mut rng = ChaCha8Rng::seed_from_u64(0xA175_EED);
    for _ in 0..RANDOM_SPLIT_TRIES {
        let mut phi = Morphism::zero(m, m);
        for e in &ends {
            let c = rng.gen_range(0..p);
            if c != 0 {
                phi = phi.add(&e.scale(c));
            }
        }
        if let Some(parts) = split_by(m, &phi)? {
            let mut out = Vec::new();
            for part in parts {
                out.extend(decompose(&part)?);
            }
            return Ok(out);
        }
    }
    if certify_local(m, &ends).is_some() {
        return Ok(vec![m.clone()]);
    }
    Err(AlgebraError::NonSplitField(
        "endomorphism ring is local over a proper extension of the prime field".into(),
    ))
}

/// For indecomposable M: a canonical basis of rad End(M) and the dimension
/// of the residue division ring over F_p.
pub fn local_radical(
    m: &Representation,
) -> Result<(Vec<Morphism>, usize), AlgebraError> {
    if m.is_zero_module() {
        return Err(AlgebraError::BadModule("the zero module has no local endomorphism ring".into()));
    }
    let ends = hom(m, m)?;
    if let Some(basis) = certify_local(m, &ends) {
        let residue = ends.len() - basis.len();
        debug_assert_eq!(residue, 1);
        return Ok((basis, residue));
    }
    if decompose(m)?.len() > 1 {
        return Err(AlgebraError::Decomposable);
    }
    Err(AlgebraError::NonSplitField(
        "endomorphism ring is local over a proper extension of the prime field".into(),
    ))
}

/// Transpose over the opposite algebra, computed from the minimal
/// projective presentation P_1 -> P_0 -> M -> 0. Each component of the
/// presentation map is a combination of paths; reversing the paths gives
/// the presentation of Tr M over the opposite algebra.
fn transpose(m: &Representation) -> Result<Representation, AlgebraError> {
    let alg = m.algebra().clone();
    let op = alg.opposite()?;
    let (p0, cover, sum0) = projective_cover(m)?;
    let (k, incl) = cover.kernel()?;
    if k.is_zero_module() {
        return Ok(Representation::zero_module(&op));
    }
    let (_, cover1, sum1) = projective_cover(&k)?;
    let d = incl.compose(&cover1);
    let _ = p0;
    // Generator column of summand `idx` inside the vertex block of its own
    // vertex: earlier summands contribute their path counts, and the
    // stationary path sorts first within the summand.
    let gen_col = |summands: &[usize], idx: usize| -> usize {
        let v = summands[idx];
        summands[..idx].iter().map(|&w| alg.paths_between(w, v).len()).sum()
    };
    let op_parts: Vec<Representation> =
        sum1.iter().map(|&u| Representation::projective(&op, u)).collect();
    let refs: Vec<&Representation> = op_parts.iter().collect();
    let target = Representation::direct_sum(&refs);
    let mut part_homs = Vec::new();
    for (b, &vb) in sum0.iter().enumerate() {
        let mut gen = vec![0u32; target.dims()[vb]];
        let mut block_start = 0;
        for (a, &ua) in sum1.iter().enumerate() {
            let col = d.block(ua).column(gen_col(&sum1, a));
            // Rows of this column belonging to source summand b at vertex ua.
            let row_start: usize =
                sum0[..b].iter().map(|&w| alg.paths_between(w, ua).len()).sum();
            let paths_b = alg.paths_between(vb, ua);
            let op_paths = op.paths_between(ua, vb);
            for (i, &bi) in paths_b.iter().enumerate() {
                let coef = col[row_start + i];
                if coef == 0 {
                    continue;
                }
                let reversed = alg.basis_path(bi).reversed(alg.quiver());
                for (c2, npath) in op.reduce_path(&reversed) {
                    let gi = op.basis_index(&npath).expect("normal form is in the op basis");
                    let pos = op_paths
                        .iter()
                        .position(|&x| x == gi)
                        .expect("reversed path connects the same vertices");
                    let f = op.field();
                    gen[block_start + pos] = f.add(gen[block_start + pos], f.mul(coef, c2));
                }
            }
            block_start += op_paths.len();
        }
        part_homs.push(proj_hom(&op, vb, &target, &gen));
    }
    let blocks: Vec<Matrix> = (0..op.vertex_count())
        .map(|w| {
            let mut acc = Matrix::zeros(op.p(), target.dims()[w], 0);
            for h in &part_homs {
                acc = acc.hstack(h.block(w));
            }
            acc
        })
        .collect();
    let source_refs: Vec<Representation> =
        sum0.iter().map(|&v| Representation::projective(&op, v)).collect();
    let source = Representation::direct_sum(&source_refs.iter().collect::<Vec<_>>());
    let dt = Morphism::new(source, target, blocks)?;
    let (tr, _) = dt.cokernel()?;
    Ok(tr)
}

/// The AR translate DTr. Projective summands are annihilated, so the
/// result for an indecomposable projective is the zero module.
pub fn tau(m: &Representation) -> Result<Representation, AlgebraError> {
    let tr = transpose(m)?;
    Ok(tr.dual(m.algebra()))
}

/// The inverse translate TrD.
pub fn tau_inverse(m: &Representation) -> Result<Representation, AlgebraError> {
    let alg = m.algebra().clone();
    let op = alg.opposite()?;
    let t = transpose(&m.dual(&op))?;
    Ok(t.with_algebra(&alg))
}

/// Checks that a short exact sequence 0 -> L -> E -> N -> 0 is almost
/// split, testing against every indecomposable X in `family`: the image of
/// Hom(X, E) -> Hom(X, N) must be all of Hom(X, N), except for X isomorphic
/// to N where it must be the radical (codimension = residue degree of
/// End(N)). The family is the caller's census of indecomposables; an empty
/// family checks only the structural conditions.
pub fn is_almost_split(
    ses: &ShortExactSeq,
    family: &[Representation],
) -> Result<bool, AlgebraError> {
    ses.validate()?;
    if ses.l.is_zero_module() || ses.n.is_zero_module() {
        return Ok(false);
    }
    if ses.splits()? {
        return Ok(false);
    }
    let (_, residue) = local_radical(&ses.n)?;
    for x in family {
        let maps_to_e = hom(x, &ses.m)?;
        let maps_to_n = hom(x, &ses.n)?;
        let flat_dim: usize =
            (0..x.dims().len()).map(|v| x.dims()[v] * ses.n.dims()[v]).sum();
        let composed: Vec<Vec<u32>> =
            maps_to_e.iter().map(|h| ses.project.compose(h).flat()).collect();
        let rank = flat_matrix(x.p(), flat_dim, &composed).rank();
        let target =
            maps_to_n.len() - if x.is_isomorphic(&ses.n)? { residue } else { 0 };
        if rank != target {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The almost split sequence 0 -> tau M -> E -> M -> 0 for an
/// indecomposable non-projective M. The class is found in the socle of
/// Ext^1(M, tau M) under the right End(M)-action and verified against
/// `family`.
pub fn ar_sequence(
    m: &Representation,
    family: &[Representation],
) -> Result<ShortExactSeq, AlgebraError> {
    if is_projective(m)? {
        return Err(AlgebraError::ProjectiveInput);
    }
    let (rad_basis, _) = local_radical(m)?;
    let tm = tau(m)?;
    let ext = ext1(m, &tm)?;
    let d = ext.dim();
    if d == 0 {
        return Err(AlgebraError::BadSequence(
            "no extensions of M by its translate".into(),
        ));
    }
    let candidates = if rad_basis.is_empty() {
        Matrix::identity(m.p(), d)
    } else {
        let mut stacked = Matrix::zeros(m.p(), 0, d);
        for r in &rad_basis {
            stacked = stacked.vstack(&ext.right_action(r)?);
        }
        stacked.kernel_basis()
    };
    for c in 0..candidates.cols() {
        let ses = ext.representative(&candidates.column(c))?;
        if is_almost_split(&ses, family)? {
            return Ok(ses);
        }
    }
    Err(AlgebraError::BadSequence(
        "no class in the Ext socle is almost split".into(),
    ))
}

/// All indecomposables reachable from the simples, projectives, injectives
/// and the given extras by repeatedly applying the translate and its
/// inverse, up to isomorphism. Errors when the count exceeds a fixed
/// ceiling (the algebra is then treated as of infinite type).
pub fn indecomposable_universe(
    alg: &Arc<Algebra>,
    extras: &[Representation],
) -> Result<Vec<Representation>, AlgebraError> {
    let mut list: Vec<Representation> = Vec::new();
    let add = |r: Representation, list: &mut Vec<Representation>| -> Result<(), AlgebraError> {
        if r.is_zero_module() {
            return Ok(());
        }
        for have in list.iter() {
            if have.is_isomorphic(&r)? {
                return Ok(());
            }
        }
        if list.len() >= UNIVERSE_CAP {
            return Err(AlgebraError::InfiniteDimensional(UNIVERSE_CAP));
        }
        list.push(r);
        Ok(())
    };
    for v in 0..alg.vertex_count() {
        add(Representation::simple(alg, v), &mut list)?;
        add(Representation::projective(alg, v), &mut list)?;
        add(Representation::injective(alg, v)?, &mut list)?;
    }
    for extra in extras {
        for part in decompose(extra)? {
            add(part, &mut list)?;
        }
    }
    let mut i = 0;
    while i < list.len() {
        let t = tau(&list[i])?;
        add(t, &mut list)?;
        let ti = tau_inverse(&list[i])?;
        add(ti, &mut list)?;
        i += 1;
    }
    list.sort_by_key(|r| (r.total_dim(), r.dims().to_vec()));
    Ok(list)
}

#[cfg(test)]
mod tests {
    use super::super::tests::{a2, cycle3};
    use super::*;

    #[test]
    fn decompose_splits_a_direct_sum() {
        let a = a2(5);
        let s0 = Representation::simple(&a, 0);
        let s1 = Representation::simple(&a, 1);
        let p0 = Representation::projective(&a, 0);
        let sum = Representation::direct_sum(&[&s0, &p0, &s1, &s0]);
        let parts = decompose(&sum).unwrap();
        assert_eq!(parts.len(), 4);
        let count = |m: &Representation| {
            parts.iter().filter(|x| x.is_isomorphic(m).unwrap()).count()
        };
        assert_eq!(count(&s0), 2);
        assert_eq!(count(&s1), 1);
        assert_eq!(count(&p0), 1);
    }

    #[test]
    fn decompose_keeps_indecomposables_whole() {
        let a = cycle3(3);
        for v in 0..3 {
            let p = Representation::projective(&a, v);
            let parts = decompose(&p).unwrap();
            assert_eq!(parts.len(), 1);
        }
    }

    #[test]
    fn tau_on_a2() {
        let a = a2(5);
        let s0 = Representation::simple(&a, 0);
        let s1 = Representation::simple(&a, 1);
        let p0 = Representation::projective(&a, 0);
        assert!(tau(&s0).unwrap().is_isomorphic(&s1).unwrap());
        assert!(tau(&s1).unwrap().is_zero_module());
        assert!(tau(&p0).unwrap().is_zero_module());
        assert!(tau_inverse(&s1).unwrap().is_isomorphic(&s0).unwrap());
        assert!(tau_inverse(&s0).unwrap().is_zero_module());
    }

    #[test]
    fn tau_round_trips_on_the_cycle() {
        let a = cycle3(5);
        for v in 0..3 {
            let s = Representation::simple(&a, v);
            let t = tau(&s).unwrap();
            assert_eq!(t.total_dim(), 1);
            assert!(tau_inverse(&t).unwrap().is_isomorphic(&s).unwrap());
        }
        // The cycle algebra is self-injective: projectives are injective
        // and the translate kills exactly them.
        for v in 0..3 {
            let p = Representation::projective(&a, v);
            assert!(tau(&p).unwrap().is_zero_module());
        }
    }

    #[test]
    fn ar_sequence_on_a2() {
        let a = a2(5);
        let universe = indecomposable_universe(&a, &[]).unwrap();
        assert_eq!(universe.len(), 3);
        let s0 = Representation::simple(&a, 0);
        let ses = ar_sequence(&s0, &universe).unwrap();
        assert!(ses.l.is_isomorphic(&Representation::simple(&a, 1)).unwrap());
        assert!(ses.m.is_isomorphic(&Representation::projective(&a, 0)).unwrap());
        assert!(is_almost_split(&ses, &universe).unwrap());
        // Projectives have no almost split sequence ending in them.
        let p0 = Representation::projective(&a, 0);
        assert!(matches!(ar_sequence(&p0, &universe), Err(AlgebraError::ProjectiveInput)));
    }

    #[test]
    fn ar_sequence_on_the_cycle_has_projective_middle() {
        let a = cycle3(7);
        let universe = indecomposable_universe(&a, &[]).unwrap();
        assert_eq!(universe.len(), 6);
        let s0 = Representation::simple(&a, 0);
        let ses = ar_sequence(&s0, &universe).unwrap();
        assert!(ses.l.is_isomorphic(&Representation::simple(&a, 1)).unwrap());
        assert!(ses.m.is_isomorphic(&Representation::projective(&a, 0)).unwrap());
    }

    #[test]
    fn split_sequence_is_not_almost_split() {
        let a = a2(5);
        let s0 = Representation::simple(&a, 0);
        let s1 = Representation::simple(&a, 1);
        let ext = ext1(&s0, &s1).unwrap();
        let split = ext.representative(&[0]).unwrap();
        let universe = indecomposable_universe(&a, &[]).unwrap();
        assert!(!is_almost_split(&split, &universe).unwrap());
    }

    #[test]
    fn universe_of_a2_is_the_three_indecomposables() {
        let a = a2(7);
        let universe = indecomposable_universe(&a, &[]).unwrap();
        let dims: Vec<Vec<usize>> = universe.iter().map(|r| r.dims().to_vec()).collect();
        assert_eq!(dims, vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
    }
}
