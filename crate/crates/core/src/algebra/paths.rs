//! Paths in a quiver and rewriting modulo relations.
//!
//! A relation ideal is handled through a completed rewriting system: each
//! relation is stored monic with respect to the length-lexicographic order
//! on paths, reduction replaces leading-term subwords, and completion adds
//! resolved overlap ambiguities until every consequence of the relations is
//! reachable by rewriting. For monomial relations (the cluster-tilted
//! fixtures) the input is already complete; the general machinery exists so
//! arbitrary admissible relations are handled correctly.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::collections::VecDeque;

use crate::field::Fp;

use super::quiver::Quiver;
use super::AlgebraError;

/// A path: a start vertex plus a word of arrow indices in traversal order
/// (`word[0]` is applied first). The empty word is the stationary path.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub src: usize,
    pub word: Vec<usize>,
}

impl Path {
    pub fn stationary(v: usize) -> Path {
        Path { src: v, word: Vec::new() }
    }

    /// Builds a path from consecutive arrows, checking composability.
    pub fn from_arrows(q: &Quiver, word: Vec<usize>) -> Option<Path> {
        let first = *word.first()?;
        let src = q.arrow(first).src;
        let mut at = src;
        for &a in &word {
            if q.arrow(a).src != at {
                return None;
            }
            at = q.arrow(a).tgt;
        }
        Some(Path { src, word })
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn tgt(&self, q: &Quiver) -> usize {
        self.word.last().map_or(self.src, |&a| q.arrow(a).tgt)
    }

    pub fn concat(&self, other: &Path, q: &Quiver) -> Option<Path> {
        if self.tgt(q) != other.src {
            return None;
        }
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        Some(Path { src: self.src, word })
    }

    /// The same walk read backwards, a path of the opposite quiver.
    pub fn reversed(&self, q: &Quiver) -> Path {
        let mut word = self.word.clone();
        word.reverse();
        Path { src: self.tgt(q), word }
    }
}

/// Length-lexicographic order (admissible: compatible with concatenation).
impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.word
            .len()
            .cmp(&other.word.len())
            .then_with(|| self.word.cmp(&other.word))
            .then_with(|| self.src.cmp(&other.src))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// F_p-linear combination of parallel paths. The map is ordered, so the
/// leading (largest) term is the last entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathElement {
    p: u32,
    terms: BTreeMap<Path, u32>,
}

impl PathElement {
    pub fn zero(p: u32) -> PathElement {
        PathElement { p, terms: BTreeMap::new() }
    }

    pub fn from_path(p: u32, path: Path, coef: u32) -> PathElement {
        let mut el = PathElement::zero(p);
        el.add_term(path, coef);
        el
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Path, u32)> {
        self.terms.iter().map(|(k, &v)| (k, v))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn leading(&self) -> Option<(&Path, u32)> {
        self.terms.iter().next_back().map(|(k, &v)| (k, v))
    }

    pub fn add_term(&mut self, path: Path, coef: u32) {
        let f = Fp::new(self.p);
        let c = coef % self.p;
        if c == 0 {
            return;
        }
        let cur = self.terms.remove(&path).unwrap_or(0);
        let sum = f.add(cur, c);
        if sum != 0 {
            self.terms.insert(path, sum);
        }
    }

    /// self -= c * (prefix . g . suffix), where the concatenation is applied
    /// to every term of g.
    fn sub_framed(&mut self, c: u32, prefix: &[usize], g: &PathElement, suffix: &[usize], src: usize) {
        let f = Fp::new(self.p);
        for (path, coef) in g.terms() {
            let mut word = prefix.to_vec();
            word.extend_from_slice(&path.word);
            word.extend_from_slice(suffix);
            self.add_term(Path { src, word }, f.neg(f.mul(c, coef)));
        }
    }

    pub fn monic(&self) -> PathElement {
        let f = Fp::new(self.p);
        let Some((_, lead)) = self.leading() else { return self.clone() };
        let inv = f.inv(lead);
        PathElement {
            p: self.p,
            terms: self.terms.iter().map(|(k, &v)| (k.clone(), f.mul(inv, v))).collect(),
        }
    }
}

/// Finds the first position where `lt` occurs as a contiguous subword.
fn find_subword(word: &[usize], lt: &[usize]) -> Option<usize> {
    if lt.len() > word.len() {
        return None;
    }
    (0..=word.len() - lt.len()).find(|&k| &word[k..k + lt.len()] == lt)
}

/// Fully reduces `x` by the (monic) rewriting system `gb`.
pub fn normal_form(x: &PathElement, gb: &[PathElement]) -> PathElement {
    let mut x = x.clone();
    'outer: loop {
        // Scan terms from the largest down for a reducible one.
        let terms: Vec<(Path, u32)> =
            x.terms.iter().rev().map(|(k, &v)| (k.clone(), v)).collect();
        for (path, coef) in terms {
            for g in gb {
                let lt = &g.leading().expect("relations are nonzero").0.word;
                if let Some(k) = find_subword(&path.word, lt) {
                    let prefix = path.word[..k].to_vec();
                    let suffix = path.word[k + lt.len()..].to_vec();
                    // Subtracting coef * (prefix . g . suffix) cancels the
                    // term exactly (g is monic) and leaves smaller terms.
                    x.sub_framed(coef, &prefix, g, &suffix, path.src);
                    continue 'outer;
                }
            }
        }
        return x;
    }
}

/// Proper overlaps: a proper suffix of `f`'s leading word equals a proper
/// prefix of `g`'s leading word. Returns the resolved S-elements.
fn s_elements(f: &PathElement, g: &PathElement, quiver: &Quiver, p: u32) -> Vec<PathElement> {
    let fw = &f.leading().unwrap().0.word;
    let gw = &g.leading().unwrap().0.word;
    let f_src = f.leading().unwrap().0.src;
    let mut out = Vec::new();
    for l in 1..fw.len().min(gw.len()) {
        if fw[fw.len() - l..] != gw[..l] {
            continue;
        }
        // Ambiguity word W = fw + gw[l..]; S = f.suffix - prefix.g.
        let suffix = &gw[l..];
        let prefix = &fw[..fw.len() - l];
        let mut s = PathElement::zero(p);
        for (path, coef) in f.terms() {
            let mut word = path.word.clone();
            word.extend_from_slice(suffix);
            s.add_term(Path { src: f_src, word }, coef);
        }
        let fp = Fp::new(p);
        for (path, coef) in g.terms() {
            let mut word = prefix.to_vec();
            word.extend_from_slice(&path.word);
            s.add_term(Path { src: f_src, word }, fp.neg(coef));
        }
        debug_assert!(
            s.terms().all(|(t, _)| Path::from_arrows(quiver, t.word.clone()).is_some()),
            "S-element contains a non-composable word"
        );
        out.push(s);
    }
    out
}

/// Completes a relation set into a confluent rewriting system and returns
/// it fully interreduced (canonical for the ideal and the path order).
pub fn complete(
    gens: Vec<PathElement>,
    quiver: &Quiver,
    p: u32,
    len_cap: usize,
    size_cap: usize,
) -> Result<Vec<PathElement>, AlgebraError> {
    let mut basis: Vec<PathElement> = Vec::new();
    let mut queue: VecDeque<PathElement> = gens.into();
    while let Some(x) = queue.pop_front() {
        let r = normal_form(&x, &basis);
        if r.is_zero() {
            continue;
        }
        let r = r.monic();
        let lt = r.leading().unwrap().0.clone();
        if lt.len() > len_cap || basis.len() >= size_cap {
            return Err(AlgebraError::InfiniteDimensional(size_cap));
        }
        // Recycle basis elements whose leading word became reducible.
        let mut kept = Vec::new();
        for b in basis.drain(..) {
            let bw = &b.leading().unwrap().0.word;
            if find_subword(bw, &lt.word).is_some() {
                queue.push_back(b);
            } else {
                kept.push(b);
            }
        }
        basis = kept;
        for b in &basis {
            for s in s_elements(&r, b, quiver, p) {
                queue.push_back(s);
            }
            for s in s_elements(b, &r, quiver, p) {
                queue.push_back(s);
            }
        }
        for s in s_elements(&r, &r, quiver, p) {
            queue.push_back(s);
        }
        basis.push(r);
    }
    // Tail-reduce for a canonical reduced system.
    loop {
        let mut changed = false;
        for i in 0..basis.len() {
            let others: Vec<PathElement> =
                basis.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, b)| b.clone()).collect();
            let r = normal_form(&basis[i], &others).monic();
            if r != basis[i] {
                basis[i] = r;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    basis.sort_by(|a, b| a.leading().unwrap().0.cmp(b.leading().unwrap().0));
    Ok(basis)
}

/// Enumerates all paths irreducible with respect to `gb`, breadth-first.
/// Prefix closure: every prefix of a normal path is normal, so extending
/// only normal paths and checking the new suffix is complete.
pub fn normal_paths(
    quiver: &Quiver,
    gb: &[PathElement],
    len_cap: usize,
    dim_cap: usize,
) -> Result<Vec<Path>, AlgebraError> {
    let lts: Vec<&Path> = gb.iter().map(|g| g.leading().unwrap().0).collect();
    let mut out: Vec<Path> = (0..quiver.vertex_count()).map(Path::stationary).collect();
    let mut frontier = out.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for path in &frontier {
            let at = path.tgt(quiver);
            for a in quiver.out_arrows(at) {
                let mut word = path.word.clone();
                word.push(a);
                let reducible = lts.iter().any(|lt| {
                    word.len() >= lt.word.len() && word[word.len() - lt.word.len()..] == lt.word[..]
                });
                if reducible {
                    continue;
                }
                if word.len() > len_cap || out.len() + next.len() >= dim_cap {
                    return Err(AlgebraError::InfiniteDimensional(dim_cap));
                }
                next.push(Path { src: path.src, word });
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out.sort_by(|a, b| (a.src, a.len(), &a.word).cmp(&(b.src, b.len(), &b.word)));
    Ok(out)
}
