//! Finite quivers: directed multigraphs with named arrows.

use std::collections::HashMap;

use super::AlgebraError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub id: String,
    pub src: usize,
    pub tgt: usize,
}

/// A quiver on vertices `0..n` (callers facing JSON translate from 1-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    n: usize,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(n: usize, arrows: Vec<Arrow>) -> Result<Quiver, AlgebraError> {
        let mut seen = HashMap::new();
        for (idx, a) in arrows.iter().enumerate() {
            if a.src >= n || a.tgt >= n {
                return Err(AlgebraError::BadQuiver(format!(
                    "arrow {} endpoints out of range for {} vertices",
                    a.id, n
                )));
            }
            if seen.insert(a.id.clone(), idx).is_some() {
                return Err(AlgebraError::BadQuiver(format!("duplicate arrow id {}", a.id)));
            }
        }
        Ok(Quiver { n, arrows })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, idx: usize) -> &Arrow {
        &self.arrows[idx]
    }

    pub fn arrow_by_id(&self, id: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.id == id)
    }

    pub fn out_arrows(&self, v: usize) -> Vec<usize> {
        (0..self.arrows.len()).filter(|&i| self.arrows[i].src == v).collect()
    }

    pub fn in_arrows(&self, v: usize) -> Vec<usize> {
        (0..self.arrows.len()).filter(|&i| self.arrows[i].tgt == v).collect()
    }

    /// The opposite quiver: every arrow reversed, same ids and indices.
    pub fn opposite(&self) -> Quiver {
        Quiver {
            n: self.n,
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow { id: a.id.clone(), src: a.tgt, tgt: a.src })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arrow(id: &str, src: usize, tgt: usize) -> Arrow {
        Arrow { id: id.to_string(), src, tgt }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Quiver::new(2, vec![arrow("a", 0, 2)]).is_err());
        assert!(Quiver::new(2, vec![arrow("a", 0, 1), arrow("a", 1, 0)]).is_err());
    }

    #[test]
    fn opposite_reverses() {
        let q = Quiver::new(3, vec![arrow("a", 0, 1), arrow("b", 1, 2)]).unwrap();
        let op = q.opposite();
        assert_eq!(op.arrow(0).src, 1);
        assert_eq!(op.arrow(0).tgt, 0);
        assert_eq!(op.arrow_by_id("b"), Some(1));
        assert_eq!(q.out_arrows(1), vec![1]);
        assert_eq!(op.in_arrows(1), vec![1]);
    }
}
