//! Quiver Grassmannians over F_q: exact point counts, counting-polynomial
//! interpolation with a held-out prime check, Euler characteristics and
//! F-polynomials, plus the submodule fiber census for short exact
//! sequences.

pub mod strings;

use std::collections::HashMap;

use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{decompose, hom_dim, AlgebraError, Representation, ShortExactSeq};
use crate::field::{interpolate, Matrix, RationalPoly};
use crate::laurent::{ExpVec, LaurentPoly};

pub use strings::{enumerate_strings, string_euler_char, string_model, string_module, StringDescriptor};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GrassmannError {
    #[error("bad dimension vector: {0}")]
    BadDimensionVector(String),
    #[error("point counts are not polynomial in q: {0}")]
    NotPolynomialCount(String),
    #[error("the sequence splits, so the fiber statement does not apply")]
    SplitSequence,
    #[error("not a string: {0}")]
    NotAString(String),
    #[error("total dimension {0} exceeds the enumeration ceiling {1}")]
    DimensionCeiling(usize, usize),
    #[error("expected the module's characteristic {expected}, got {got}")]
    PrimeMismatch { expected: u32, got: u32 },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Probe characteristics for counting-polynomial interpolation.
pub const PROBE_PRIMES: [u32; 15] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47];

/// Ceiling on total dimension for full F-polynomial sweeps.
pub const DEFAULT_F_CEILING: usize = 10;

fn check_dim_vector(dims: &[usize], e: &[usize]) -> Result<(), GrassmannError> {
    if e.len() != dims.len() {
        return Err(GrassmannError::BadDimensionVector(format!(
            "length {} does not match {} vertices",
            e.len(),
            dims.len()
        )));
    }
    for (v, (&ev, &dv)) in e.iter().zip(dims).enumerate() {
        if ev > dv {
            return Err(GrassmannError::BadDimensionVector(format!(
                "entry {ev} at vertex {v} exceeds the module dimension {dv}"
            )));
        }
    }
    Ok(())
}

/// All k-dimensional subspaces of F_p^d, one canonical column basis each
/// (reduced echelon rows of the transpose, matching
/// `Matrix::column_span_canonical`). Lexicographic in the pivot set, then
/// in the free entries.
fn subspaces(p: u32, d: usize, k: usize) -> Vec<Matrix> {
    if k > d {
        return Vec::new();
    }
    if k == 0 {
        return vec![Matrix::zeros(p, d, 0)];
    }
    let mut out = Vec::new();
    let mut pivots: Vec<usize> = (0..k).collect();
    loop {
        // Free slots: (row, col) with col right of the row's pivot and not
        // itself a pivot column.
        let mut slots = Vec::new();
        for (i, &pc) in pivots.iter().enumerate() {
            for c in pc + 1..d {
                if !pivots.contains(&c) {
                    slots.push((i, c));
                }
            }
        }
        let mut values = vec![0u32; slots.len()];
        loop {
            let mut m = Matrix::zeros(p, d, k);
            for (i, &pc) in pivots.iter().enumerate() {
                m.set(pc, i, 1);
            }
            for (&(i, c), &v) in slots.iter().zip(&values) {
                m.set(c, i, v);
            }
            out.push(m);
            // Odometer over the free entries.
            let mut pos = 0;
            loop {
                if pos == values.len() {
                    break;
                }
                values[pos] += 1;
                if values[pos] < p {
                    break;
                }
                values[pos] = 0;
                pos += 1;
            }
            if pos == values.len() {
                break;
            }
        }
        // Next pivot combination.
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if pivots[i] < d - (k - i) {
                pivots[i] += 1;
                for j in i + 1..k {
                    pivots[j] = pivots[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Runs `visit` on every subrepresentation of `m` with dimension vector
/// `e`, presented as canonical per-vertex column bases. Vertices are fixed
/// in decreasing out-degree order; branches die as soon as the span forced
/// by already-fixed neighbours cannot fit.
fn for_each_subrep<F: FnMut(&[Matrix])>(m: &Representation, e: &[usize], mut visit: F) {
    let alg = m.algebra();
    let quiver = alg.quiver();
    let p = m.p();
    let n = alg.vertex_count();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(quiver.out_arrows(v).len()));
    let lists: Vec<Vec<Matrix>> = (0..n).map(|v| subspaces(p, m.dims()[v], e[v])).collect();
    let mut chosen: Vec<Option<Matrix>> = vec![None; n];
    fn rec<F: FnMut(&[Matrix])>(
        step: usize,
        order: &[usize],
        lists: &[Vec<Matrix>],
        chosen: &mut Vec<Option<Matrix>>,
        m: &Representation,
        e: &[usize],
        visit: &mut F,
    ) {
        if step == order.len() {
            let fixed: Vec<Matrix> =
                chosen.iter().map(|c| c.clone().expect("all vertices fixed")).collect();
            visit(&fixed);
            return;
        }
        let v = order[step];
        let quiver = m.algebra().quiver();
        let mut forced = Matrix::zeros(m.p(), m.dims()[v], 0);
        for a in quiver.in_arrows(v) {
            let src = quiver.arrow(a).src;
            if src == v {
                continue;
            }
            if let Some(u) = &chosen[src] {
                forced = forced.hstack(&m.map(a).mul(u));
            }
        }
        if forced.rank() > e[v] {
            return;
        }
        'cands: for cand in &lists[v] {
            if !cand.spans_containing(&forced) {
                continue;
            }
            for a in quiver.out_arrows(v) {
                let tgt = quiver.arrow(a).tgt;
                let target = if tgt == v { Some(cand) } else { chosen[tgt].as_ref() };
                if let Some(u) = target {
                    if !u.spans_containing(&m.map(a).mul(cand)) {
                        continue 'cands;
                    }
                }
            }
            chosen[v] = Some(cand.clone());
            rec(step + 1, order, lists, chosen, m, e, visit);
            chosen[v] = None;
        }
    }
    rec(0, &order, &lists, &mut chosen, m, e, &mut visit);
}

/// Number of subrepresentations of `m` with dimension vector `e`, counted
/// over the module's own base field (of which `q` is a restatement).
pub fn count_subreps(m: &Representation, e: &[usize], q: u32) -> Result<u64, GrassmannError> {
    if q != m.p() {
        return Err(GrassmannError::PrimeMismatch { expected: m.p(), got: q });
    }
    check_dim_vector(m.dims(), e)?;
    let mut count = 0u64;
    for_each_subrep(m, e, |_| count += 1);
    Ok(count)
}

fn collect_subreps(m: &Representation, e: &[usize]) -> Vec<Vec<Matrix>> {
    let mut out = Vec::new();
    for_each_subrep(m, e, |u| out.push(u.to_vec()));
    out
}

/// Whether the symmetric integer lift of the arrow matrices satisfies the
/// raw relations exactly over the integers (then the module reduces
/// soundly to every characteristic).
fn has_integer_form(m: &Representation) -> bool {
    let alg = m.algebra();
    let lifted: Vec<Vec<i64>> = m.maps().iter().map(|mat| mat.lift_symmetric()).collect();
    let shape = |a: usize| {
        let arrow = alg.quiver().arrow(a);
        (m.dims()[arrow.tgt], m.dims()[arrow.src])
    };
    let path_product = |path: &crate::algebra::Path| -> Vec<Vec<i128>> {
        let d = m.dims()[path.src];
        let mut acc: Vec<Vec<i128>> =
            (0..d).map(|i| (0..d).map(|j| i128::from(i == j)).collect()).collect();
        for &a in &path.word {
            let (rows, cols) = shape(a);
            let flat = &lifted[a];
            let mut next = vec![vec![0i128; d]; rows];
            for r in 0..rows {
                for (k, arow) in acc.iter().enumerate() {
                    let coef = i128::from(flat[r * cols + k]);
                    if coef == 0 {
                        continue;
                    }
                    for (c, &x) in arow.iter().enumerate() {
                        next[r][c] += coef * x;
                    }
                }
            }
            acc = next;
        }
        acc
    };
    for rel in alg.raw_relations() {
        let Some((_, first)) = rel.first() else { continue };
        let rows = m.dims()[first.tgt(alg.quiver())];
        let cols = m.dims()[first.src];
        let mut acc = vec![vec![0i128; cols]; rows];
        for (coef, path) in rel {
            let prod = path_product(path);
            for r in 0..rows {
                for c in 0..cols {
                    acc[r][c] += i128::from(*coef) * prod[r][c];
                }
            }
        }
        if acc.iter().flatten().any(|&x| x != 0) {
            return false;
        }
    }
    true
}

/// The same module over F_q. Works through an exact integer form when one
/// exists and its reduction keeps the endomorphism ring dimension (so the
/// module did not degenerate), and otherwise by replacing each
/// indecomposable summand with an isomorphic string module, whose 0/1
/// matrices transfer verbatim.
pub fn transfer_to_prime(
    m: &Representation,
    q: u32,
) -> Result<Representation, GrassmannError> {
    if q == m.p() {
        return Ok(m.clone());
    }
    let alg = m.algebra();
    let alg_q = alg.at_prime(q)?;
    if has_integer_form(m) {
        let maps: Vec<Matrix> = m.maps().iter().map(|mat| mat.transfer(q)).collect();
        if let Ok(candidate) = Representation::new(alg_q.clone(), m.dims().to_vec(), maps) {
            if hom_dim(&candidate, &candidate)? == hom_dim(m, m)? {
                return Ok(candidate);
            }
        }
    }
    let parts = decompose(m)?;
    let mut transferred: Vec<Representation> = Vec::new();
    for part in &parts {
        let (desc, _) = string_model(part).map_err(|_| {
            GrassmannError::NotPolynomialCount(format!(
                "the module has no exact model over characteristic {q}"
            ))
        })?;
        transferred.push(string_module(&alg_q, &desc)?);
    }
    if transferred.is_empty() {
        return Ok(Representation::zero_module(&alg_q));
    }
    let refs: Vec<&Representation> = transferred.iter().collect();
    Ok(Representation::direct_sum(&refs))
}

/// The record behind one Euler characteristic: counts at the probe
/// characteristics, the interpolated counting polynomial, and its value at
/// q = 1.
#[derive(Debug, Clone)]
pub struct GrCount {
    pub dims: Vec<usize>,
    pub e: Vec<usize>,
    pub counts: Vec<(u32, u64)>,
    pub counting_poly: RationalPoly,
    pub euler: i64,
}

/// Counts points of Gr_e(m) over enough characteristics to pin down the
/// counting polynomial (degree bound: the ambient product dimension),
/// verifies it at one held-out characteristic, and evaluates at 1.
pub fn gr_count(m: &Representation, e: &[usize]) -> Result<GrCount, GrassmannError> {
    check_dim_vector(m.dims(), e)?;
    let bound: usize = e.iter().zip(m.dims()).map(|(&ev, &dv)| ev * (dv - ev)).sum();
    let needed = bound + 2;
    if needed > PROBE_PRIMES.len() {
        return Err(GrassmannError::NotPolynomialCount(format!(
            "degree bound {bound} exceeds the probe budget"
        )));
    }
    let mut counts = Vec::new();
    for &q in PROBE_PRIMES.iter().take(needed) {
        let mq = transfer_to_prime(m, q)?;
        counts.push((q, count_subreps(&mq, e, q)?));
    }
    let points: Vec<(i64, BigInt)> =
        counts[..bound + 1].iter().map(|&(q, c)| (i64::from(q), BigInt::from(c))).collect();
    let poly = interpolate(&points)
        .map_err(|err| GrassmannError::NotPolynomialCount(format!("{err}")))?;
    for &(q, c) in &counts {
        if poly.eval_integer(i64::from(q)) != Some(BigInt::from(c)) {
            return Err(GrassmannError::NotPolynomialCount(format!(
                "held-out characteristic {q} disagrees with the interpolant"
            )));
        }
    }
    let euler_big = poly.eval_integer(1).ok_or_else(|| {
        GrassmannError::NotPolynomialCount("value at 1 is not an integer".into())
    })?;
    let euler = i64::try_from(euler_big)
        .map_err(|_| GrassmannError::NotPolynomialCount("Euler number overflows i64".into()))?;
    Ok(GrCount { dims: m.dims().to_vec(), e: e.to_vec(), counts, counting_poly: poly, euler })
}

/// Euler characteristic of Gr_e(m).
pub fn euler_char(m: &Representation, e: &[usize]) -> Result<i64, GrassmannError> {
    Ok(gr_count(m, e)?.euler)
}

/// Generating function of Euler characteristics over all dimension
/// vectors. Constant term 1, top term y^{dim m} with coefficient 1.
#[derive(Debug, Clone, PartialEq)]
pub struct FPolynomial {
    value: LaurentPoly,
}

impl FPolynomial {
    fn new(value: LaurentPoly, dims: &[usize]) -> FPolynomial {
        assert_eq!(
            value.coeff(&ExpVec::zero(value.arity())),
            BigInt::from(1),
            "F-polynomial must have constant term 1"
        );
        assert_eq!(
            value.coeff(&ExpVec::from_usize(dims)),
            BigInt::from(1),
            "F-polynomial must have top coefficient 1"
        );
        FPolynomial { value }
    }

    pub fn value(&self) -> &LaurentPoly {
        &self.value
    }

    pub fn into_value(self) -> LaurentPoly {
        self.value
    }
}

impl std::fmt::Display for FPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.value.render("y"))
    }
}

pub fn f_polynomial(m: &Representation) -> Result<FPolynomial, GrassmannError> {
    f_polynomial_with_ceiling(m, DEFAULT_F_CEILING)
}

pub fn f_polynomial_with_ceiling(
    m: &Representation,
    ceiling: usize,
) -> Result<FPolynomial, GrassmannError> {
    if m.total_dim() > ceiling {
        return Err(GrassmannError::DimensionCeiling(m.total_dim(), ceiling));
    }
    let n = m.dims().len();
    let mut value = LaurentPoly::zero(n);
    let mut e = vec![0usize; n];
    loop {
        let chi = euler_char(m, &e)?;
        if chi != 0 {
            let term = LaurentPoly::monomial(ExpVec::from_usize(&e), BigInt::from(chi));
            value = value.add(&term).expect("arities agree");
        }
        // Odometer over 0..=dims componentwise.
        let mut v = 0;
        loop {
            if v == n {
                return Ok(FPolynomial::new(value, m.dims()));
            }
            e[v] += 1;
            if e[v] <= m.dims()[v] {
                break;
            }
            e[v] = 0;
            v += 1;
        }
    }
}

/// One fiber of the map U -> (preimage in L, image in N) on Gr_g(M).
#[derive(Debug, Clone, Serialize)]
pub struct FiberBucket {
    pub a_dims: Vec<usize>,
    pub c_dims: Vec<usize>,
    pub count: u64,
    pub expected: u64,
    pub ok: bool,
}

/// Full census of Gr_g(M) for a short exact sequence 0 -> L -> M -> N -> 0:
/// every submodule pair (A in L, C in N) with complementary dimensions gets
/// a bucket; the fiber over (A, C) must have exactly q^{dim Hom(C, L/A)}
/// points, except over (0, N) where it must be empty.
#[derive(Debug, Clone, Serialize)]
pub struct FiberCensus {
    pub q: u32,
    pub g: Vec<usize>,
    pub total: u64,
    pub buckets: Vec<FiberBucket>,
    pub pass: bool,
}

pub fn fiber_census(
    s: &ShortExactSeq,
    g: &[usize],
    q: u32,
) -> Result<FiberCensus, GrassmannError> {
    let p = s.m.p();
    if q != p {
        return Err(GrassmannError::PrimeMismatch { expected: p, got: q });
    }
    check_dim_vector(s.m.dims(), g)?;
    s.validate()?;
    if s.splits()? {
        return Err(GrassmannError::SplitSequence);
    }
    let nv = s.m.dims().len();
    // Observed fibers, keyed by the canonical bases of (preimage, image).
    let mut observed: HashMap<(Vec<Matrix>, Vec<Matrix>), u64> = HashMap::new();
    let mut total = 0u64;
    for_each_subrep(&s.m, g, |u| {
        total += 1;
        let mut a_key = Vec::with_capacity(nv);
        let mut c_key = Vec::with_capacity(nv);
        for v in 0..nv {
            let (proj_u, _) = u[v].quotient_maps();
            let pre = proj_u.mul(s.inject.block(v)).kernel_basis().column_span_canonical();
            a_key.push(pre);
            c_key.push(s.project.block(v).mul(&u[v]).column_span_canonical());
        }
        *observed.entry((a_key, c_key)).or_insert(0) += 1;
    });
    // Expected buckets: all submodule pairs with complementary dimensions.
    let mut buckets = Vec::new();
    let mut covered = 0u64;
    let mut pass = true;
    let mut a_dims = vec![0usize; nv];
    'splits: loop {
        let mut c_dims = Vec::with_capacity(nv);
        let mut feasible = true;
        for v in 0..nv {
            if a_dims[v] > g[v] {
                feasible = false;
                break;
            }
            let c = g[v] - a_dims[v];
            if c > s.n.dims()[v] {
                feasible = false;
                break;
            }
            c_dims.push(c);
        }
        if feasible {
            for a_span in collect_subreps(&s.l, &a_dims) {
                let (quot, _, _) = s.l.quotient_by_spans(&a_span).map_err(GrassmannError::from)?;
                for c_span in collect_subreps(&s.n, &c_dims) {
                    let (c_rep, _) = s.n.subrep_from_spans(&c_span).map_err(GrassmannError::from)?;
                    let is_zero_full = a_dims.iter().all(|&x| x == 0)
                        && c_dims == s.n.dims();
                    let expected = if is_zero_full {
                        0
                    } else {
                        let h = hom_dim(&c_rep, &quot)?;
                        u64::from(q)
                            .checked_pow(u32::try_from(h).expect("hom dimension fits"))
                            .expect("fiber size fits in u64")
                    };
                    let count = observed
                        .get(&(a_span.clone(), c_span.clone()))
                        .copied()
                        .unwrap_or(0);
                    covered += count;
                    let ok = count == expected;
                    pass &= ok;
                    buckets.push(FiberBucket {
                        a_dims: a_dims.clone(),
                        c_dims: c_dims.clone(),
                        count,
                        expected,
                        ok,
                    });
                }
            }
        }
        // Odometer over a_dims <= min(g, dims L) componentwise.
        let mut v = 0;
        loop {
            if v == nv {
                break 'splits;
            }
            a_dims[v] += 1;
            if a_dims[v] <= g[v].min(s.l.dims()[v]) {
                break;
            }
            a_dims[v] = 0;
            v += 1;
        }
    }
    // Every observed fiber must land in an enumerated bucket.
    pass &= covered == total;
    Ok(FiberCensus { q, g: g.to_vec(), total, buckets, pass })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::tests::{a2, cycle3};
    use crate::algebra::{ar_sequence, ext1, indecomposable_universe};

    #[test]
    fn subspace_counts_are_gaussian() {
        assert_eq!(subspaces(2, 2, 1).len(), 3);
        assert_eq!(subspaces(3, 2, 1).len(), 4);
        assert_eq!(subspaces(2, 4, 2).len(), 35);
        assert_eq!(subspaces(5, 3, 3).len(), 1);
        assert_eq!(subspaces(5, 3, 0).len(), 1);
    }

    #[test]
    fn subspaces_are_canonical_and_distinct() {
        let all = subspaces(3, 3, 2);
        for s in &all {
            assert_eq!(s, &s.column_span_canonical());
        }
        for i in 0..all.len() {
            for j in i + 1..all.len() {
                assert_ne!(all[i], all[j]);
            }
        }
    }

    #[test]
    fn count_on_one_vertex_square() {
        // One vertex, no arrows, k^2: lines are counted by q + 1.
        let alg = crate::algebra::Algebra::build(
            crate::algebra::Quiver::new(1, vec![]).unwrap(),
            vec![],
            2,
        )
        .unwrap();
        let m = Representation::new(alg, vec![2], vec![]).unwrap();
        assert_eq!(count_subreps(&m, &[1], 2).unwrap(), 3);
        let m3 = transfer_to_prime(&m, 3).unwrap();
        assert_eq!(count_subreps(&m3, &[1], 3).unwrap(), 4);
        assert_eq!(count_subreps(&m, &[0], 2).unwrap(), 1);
        assert_eq!(count_subreps(&m, &[2], 2).unwrap(), 1);
        let gc = gr_count(&m, &[1]).unwrap();
        assert_eq!(gc.euler, 2);
        assert_eq!(gc.counting_poly.render(), "q + 1");
    }

    #[test]
    fn prime_mismatch_is_rejected() {
        let a = a2(5);
        let m = Representation::projective(&a, 0);
        assert!(matches!(
            count_subreps(&m, &[1, 1], 3),
            Err(GrassmannError::PrimeMismatch { expected: 5, got: 3 })
        ));
    }

    #[test]
    fn a2_projective_grassmannians() {
        let a = a2(5);
        let m = Representation::projective(&a, 0);
        // (1,0) is not arrow-closed; (0,1) is the socle.
        assert_eq!(count_subreps(&m, &[1, 0], 5).unwrap(), 0);
        assert_eq!(count_subreps(&m, &[0, 1], 5).unwrap(), 1);
        assert_eq!(euler_char(&m, &[1, 0]).unwrap(), 0);
        assert_eq!(euler_char(&m, &[0, 1]).unwrap(), 1);
        let f = f_polynomial(&m).unwrap();
        assert_eq!(f.to_string(), "1 + y2 + y1*y2");
    }

    #[test]
    fn f_polynomial_of_zero_and_simple() {
        let a = a2(5);
        let zero = Representation::zero_module(&a);
        assert_eq!(f_polynomial(&zero).unwrap().to_string(), "1");
        let s0 = Representation::simple(&a, 0);
        assert_eq!(f_polynomial(&s0).unwrap().to_string(), "1 + y1");
    }

    #[test]
    fn f_polynomial_is_multiplicative_on_sums() {
        let a = cycle3(3);
        let p0 = Representation::projective(&a, 0);
        let s2 = Representation::simple(&a, 2);
        let sum = Representation::direct_sum(&[&p0, &s2]);
        let lhs = f_polynomial(&sum).unwrap();
        let rhs = f_polynomial(&p0)
            .unwrap()
            .value()
            .mul(f_polynomial(&s2).unwrap().value())
            .unwrap();
        assert_eq!(lhs.value(), &rhs);
    }

    #[test]
    fn dimension_ceiling_is_enforced() {
        let a = a2(5);
        let p0 = Representation::projective(&a, 0);
        assert!(matches!(
            f_polynomial_with_ceiling(&p0, 1),
            Err(GrassmannError::DimensionCeiling(2, 1))
        ));
    }

    #[test]
    fn census_on_the_a2_ar_sequence() {
        let a = a2(5);
        let universe = indecomposable_universe(&a, &[]).unwrap();
        let s0 = Representation::simple(&a, 0);
        let ses = ar_sequence(&s0, &universe).unwrap();
        // g = dims(L): only U = image of L.
        let census = fiber_census(&ses, &[0, 1], 5).unwrap();
        assert!(census.pass);
        assert_eq!(census.total, 1);
        // g = dims(N): the (0, N) bucket must be empty, so no points at all.
        let census = fiber_census(&ses, &[1, 0], 5).unwrap();
        assert!(census.pass);
        assert_eq!(census.total, 0);
        // g = dims(M): one point, the whole module.
        let census = fiber_census(&ses, &[1, 1], 5).unwrap();
        assert!(census.pass);
        assert_eq!(census.total, 1);
    }

    #[test]
    fn census_totals_partition_the_grassmannian() {
        let a = cycle3(3);
        let universe = indecomposable_universe(&a, &[]).unwrap();
        let s0 = Representation::simple(&a, 0);
        let ses = ar_sequence(&s0, &universe).unwrap();
        let dims = ses.m.dims().to_vec();
        let mut g = vec![0usize; dims.len()];
        loop {
            let census = fiber_census(&ses, &g, 3).unwrap();
            assert!(census.pass, "census fails at g = {g:?}");
            assert_eq!(census.total, count_subreps(&ses.m, &g, 3).unwrap());
            let mut v = 0;
            loop {
                if v == dims.len() {
                    return;
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

    #[test]
    fn split_sequences_are_rejected_by_the_census() {
        let a = a2(5);
        let s0 = Representation::simple(&a, 0);
        let s1 = Representation::simple(&a, 1);
        let ext = ext1(&s0, &s1).unwrap();
        let split = ext.representative(&[0]).unwrap();
        assert!(matches!(
            fiber_census(&split, &[1, 0], 5),
            Err(GrassmannError::SplitSequence)
        ));
    }

    #[test]
    fn transfer_by_string_model_kicks_in() {
        // A module whose matrices are not an exact integer form: entry 3
        // over F_5 lifts to 3, but the string model transfers it as 1.
        let a = a2(5);
        let m = Representation::new(
            a.clone(),
            vec![1, 1],
            vec![Matrix::from_i64(5, 1, 1, &[3])],
        )
        .unwrap();
        let m2 = transfer_to_prime(&m, 2).unwrap();
        assert_eq!(m2.p(), 2);
        assert_eq!(m2.map(0).get(0, 0), 1);
        let gc = gr_count(&m, &[1, 1]).unwrap();
        assert_eq!(gc.euler, 1);
    }
}
