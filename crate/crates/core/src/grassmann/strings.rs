//! String modules: walks in the quiver with 0/1 arrow matrices, the
//! combinatorial Euler-characteristic count for them, and a catalog used
//! to rebuild modules over other characteristics.

use std::sync::Arc;

use crate::algebra::{Algebra, Representation};
use crate::field::Matrix;

use super::GrassmannError;

/// A reduced walk: `vertices` lists the positions in order, and
/// `letters[i]` joins position `i` to position `i + 1`. A direct letter
/// `(a, true)` is the arrow `a` run from position `i` to position `i + 1`;
/// an inverse letter `(a, false)` runs it the other way.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct StringDescriptor {
    pub vertices: Vec<usize>,
    pub letters: Vec<(usize, bool)>,
}

impl StringDescriptor {
    pub fn reversed(&self) -> StringDescriptor {
        StringDescriptor {
            vertices: self.vertices.iter().rev().copied().collect(),
            letters: self.letters.iter().rev().map(|&(a, d)| (a, !d)).collect(),
        }
    }

    /// Position count, which is also the total dimension of the module.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

fn check_walk(alg: &Algebra, desc: &StringDescriptor) -> Result<(), GrassmannError> {
    let q = alg.quiver();
    if desc.vertices.is_empty() || desc.vertices.len() != desc.letters.len() + 1 {
        return Err(GrassmannError::NotAString(
            "a walk needs one more position than letters".into(),
        ));
    }
    if let Some(&v) = desc.vertices.iter().find(|&&v| v >= q.vertex_count()) {
        return Err(GrassmannError::NotAString(format!("vertex {v} out of range")));
    }
    for (i, &(a, direct)) in desc.letters.iter().enumerate() {
        if a >= q.arrows().len() {
            return Err(GrassmannError::NotAString(format!("arrow {a} out of range")));
        }
        let arrow = q.arrow(a);
        let (from, to) =
            if direct { (desc.vertices[i], desc.vertices[i + 1]) } else { (desc.vertices[i + 1], desc.vertices[i]) };
        if arrow.src != from || arrow.tgt != to {
            return Err(GrassmannError::NotAString(format!(
                "letter {i} does not match the endpoints of arrow {}",
                arrow.id
            )));
        }
        if i > 0 {
            let (b, bd) = desc.letters[i - 1];
            if b == a && bd != direct {
                return Err(GrassmannError::NotAString(format!(
                    "letters {} and {i} retrace arrow {}",
                    i - 1,
                    arrow.id
                )));
            }
        }
    }
    Ok(())
}

/// The module of a walk: one basis vector per position, each letter a 1 in
/// its arrow's matrix. Fails with `NotAString` when the walk is malformed,
/// retraces an arrow, or violates the relations.
pub fn string_module(
    alg: &Arc<Algebra>,
    desc: &StringDescriptor,
) -> Result<Representation, GrassmannError> {
    check_walk(alg, desc)?;
    let q = alg.quiver();
    let n = q.vertex_count();
    let mut dims = vec![0usize; n];
    // Basis index of each position inside its vertex: earlier positions at
    // the same vertex come first.
    let index: Vec<usize> = desc
        .vertices
        .iter()
        .map(|&v| {
            let i = dims[v];
            dims[v] += 1;
            i
        })
        .collect();
    let mut maps: Vec<Matrix> = q
        .arrows()
        .iter()
        .map(|a| Matrix::zeros(alg.p(), dims[a.tgt], dims[a.src]))
        .collect();
    for (i, &(a, direct)) in desc.letters.iter().enumerate() {
        let (src_pos, tgt_pos) = if direct { (i, i + 1) } else { (i + 1, i) };
        maps[a].set(index[tgt_pos], index[src_pos], 1);
    }
    Representation::new(alg.clone(), dims, maps)
        .map_err(|err| GrassmannError::NotAString(format!("walk violates the relations: {err}")))
}

/// Euler characteristic of Gr_e of a string module, counted directly:
/// subsets of the positions that are closed under the letter actions
/// (direct letters push membership rightward, inverse letters leftward)
/// with `e_v` positions at each vertex `v`.
pub fn string_euler_char(desc: &StringDescriptor, e: &[usize]) -> Result<i64, GrassmannError> {
    if desc.vertices.is_empty() || desc.vertices.len() != desc.letters.len() + 1 {
        return Err(GrassmannError::NotAString(
            "a walk needs one more position than letters".into(),
        ));
    }
    if let Some(&v) = desc.vertices.iter().find(|&&v| v >= e.len()) {
        return Err(GrassmannError::BadDimensionVector(format!(
            "vertex {v} has no entry in a length-{} dimension vector",
            e.len()
        )));
    }
    let n = desc.vertices.len();
    assert!(n <= 24, "combinatorial count is for desk-scale strings");
    let mut count = 0i64;
    'subsets: for mask in 0u32..(1u32 << n) {
        for (i, &(_, direct)) in desc.letters.iter().enumerate() {
            let (from, to) = if direct { (i, i + 1) } else { (i + 1, i) };
            if mask >> from & 1 == 1 && mask >> to & 1 == 0 {
                continue 'subsets;
            }
        }
        let mut type_of = vec![0usize; e.len()];
        for (i, &v) in desc.vertices.iter().enumerate() {
            type_of[v] += mask as usize >> i & 1;
        }
        if type_of == e {
            count += 1;
        }
    }
    Ok(count)
}

/// All strings of the algebra with at most `max_positions` positions, one
/// representative per reversal pair. Walks are grown rightward from every
/// vertex; a walk is kept when its module satisfies the relations.
pub fn enumerate_strings(alg: &Arc<Algebra>, max_positions: usize) -> Vec<StringDescriptor> {
    let q = alg.quiver();
    let mut out = Vec::new();
    let mut stack: Vec<StringDescriptor> = (0..q.vertex_count())
        .map(|v| StringDescriptor { vertices: vec![v], letters: vec![] })
        .collect();
    while let Some(desc) = stack.pop() {
        if string_module(alg, &desc).is_ok() && desc <= desc.reversed() {
            out.push(desc.clone());
        }
        if desc.len() == max_positions {
            continue;
        }
        let end = *desc.vertices.last().expect("walks are nonempty");
        let last = desc.letters.last().copied();
        for a in 0..q.arrows().len() {
            let arrow = q.arrow(a);
            if arrow.src == end && last != Some((a, false)) {
                let mut next = desc.clone();
                next.vertices.push(arrow.tgt);
                next.letters.push((a, true));
                stack.push(next);
            }
            if arrow.tgt == end && last != Some((a, true)) {
                let mut next = desc.clone();
                next.vertices.push(arrow.src);
                next.letters.push((a, false));
                stack.push(next);
            }
        }
    }
    out.sort();
    out
}

/// Finds a string presentation of an indecomposable module: a descriptor
/// whose module is isomorphic to `m`, together with that module.
pub fn string_model(
    m: &Representation,
) -> Result<(StringDescriptor, Representation), GrassmannError> {
    let alg = m.algebra();
    if m.is_zero_module() {
        return Err(GrassmannError::NotAString("the zero module is not a walk".into()));
    }
    for desc in enumerate_strings(alg, m.total_dim()) {
        if desc.len() != m.total_dim() {
            continue;
        }
        let candidate = string_module(alg, &desc)?;
        if candidate.dims() == m.dims() && m.is_isomorphic(&candidate)? {
            return Ok((desc, candidate));
        }
    }
    Err(GrassmannError::NotAString(format!(
        "no string of dimension vector {:?} is isomorphic to the module",
        m.dims()
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::tests::{a2, cycle3};
    use crate::grassmann::euler_char;

    fn a2_walk() -> StringDescriptor {
        StringDescriptor { vertices: vec![0, 1], letters: vec![(0, true)] }
    }

    #[test]
    fn simple_walks_have_one_point_each() {
        let desc = StringDescriptor { vertices: vec![0], letters: vec![] };
        assert_eq!(string_euler_char(&desc, &[1, 0]).unwrap(), 1);
        assert_eq!(string_euler_char(&desc, &[0, 0]).unwrap(), 1);
        assert_eq!(string_euler_char(&desc, &[0, 1]).unwrap(), 0);
    }

    #[test]
    fn a2_walk_counts() {
        let desc = a2_walk();
        assert_eq!(string_euler_char(&desc, &[1, 0]).unwrap(), 0);
        assert_eq!(string_euler_char(&desc, &[0, 1]).unwrap(), 1);
        assert_eq!(string_euler_char(&desc, &[1, 1]).unwrap(), 1);
        assert_eq!(string_euler_char(&desc, &[0, 0]).unwrap(), 1);
    }

    #[test]
    fn walk_module_is_the_projective() {
        let a = a2(5);
        let m = string_module(&a, &a2_walk()).unwrap();
        let p0 = Representation::projective(&a, 0);
        assert!(m.is_isomorphic(&p0).unwrap());
    }

    #[test]
    fn malformed_walks_are_rejected() {
        let a = a2(5);
        let bad_end = StringDescriptor { vertices: vec![0, 0], letters: vec![(0, true)] };
        assert!(matches!(string_module(&a, &bad_end), Err(GrassmannError::NotAString(_))));
        let backtrack = StringDescriptor {
            vertices: vec![0, 1, 0],
            letters: vec![(0, true), (0, false)],
        };
        assert!(matches!(string_module(&a, &backtrack), Err(GrassmannError::NotAString(_))));
        let c = cycle3(3);
        let through_relation = StringDescriptor {
            vertices: vec![0, 1, 2],
            letters: vec![(0, true), (1, true)],
        };
        assert!(matches!(string_module(&c, &through_relation), Err(GrassmannError::NotAString(_))));
    }

    #[test]
    fn enumeration_counts_on_small_quivers() {
        let a = a2(5);
        let strings = enumerate_strings(&a, 2);
        assert_eq!(strings.len(), 3);
        let c = cycle3(3);
        let strings = enumerate_strings(&c, 2);
        assert_eq!(strings.len(), 6);
        for s in &strings {
            assert!(s <= &s.reversed());
        }
    }

    #[test]
    fn model_recovers_a_walk_presentation() {
        let c = cycle3(3);
        let p0 = Representation::projective(&c, 0);
        let (desc, witness) = string_model(&p0).unwrap();
        assert_eq!(desc.len(), 2);
        assert!(witness.is_isomorphic(&p0).unwrap());
    }

    #[test]
    fn combinatorial_count_matches_point_count_interpolation() {
        let c = cycle3(3);
        for desc in enumerate_strings(&c, 3) {
            let m = string_module(&c, &desc).unwrap();
            let dims = m.dims().to_vec();
            let mut e = vec![0usize; dims.len()];
            'sweep: loop {
                assert_eq!(
                    string_euler_char(&desc, &e).unwrap(),
                    euler_char(&m, &e).unwrap(),
                    "mismatch on {desc:?} at e = {e:?}"
                );
                let mut v = 0;
                loop {
                    if v == dims.len() {
                        break 'sweep;
                    }
                    e[v] += 1;
                    if e[v] <= dims[v] {
                        break;
                    }
                    e[v] = 0;
                    v += 1;
                }
            }
        }
    }
}
