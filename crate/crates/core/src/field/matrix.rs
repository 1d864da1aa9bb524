//! Dense matrices over a prime field F_p.
//!
//! Entries are stored row-major as canonical residues in `0..p`. All
//! elimination is plain Gauss-Jordan with exact modular arithmetic, so
//! ranks, kernels and solutions are exact and deterministic.

use super::{Fp, FieldError};

/// Dense matrix over F_p. The modulus travels with the matrix; mixing
/// matrices over different primes panics, mixing shapes panics.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    p: u32,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} mod {}", self.rows, self.cols, self.p)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[r * self.cols..(r + 1) * self.cols])?;
        }
        Ok(())
    }
}

/// Result of row reduction: the reduced row echelon form, the pivot
/// columns in increasing order, and the rank.
pub struct Rref {
    pub mat: Matrix,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(p: u32, rows: usize, cols: usize) -> Self {
        Fp::new(p);
        Matrix { p, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(p: u32, n: usize) -> Self {
        let mut m = Matrix::zeros(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from row-major integer entries, reduced mod p.
    pub fn from_i64(p: u32, rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        let f = Fp::new(p);
        Matrix { p, rows, cols, data: entries.iter().map(|&e| f.reduce_i64(e)).collect() }
    }

    pub fn from_rows(p: u32, rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
        }
        let flat: Vec<i64> = rows.iter().flatten().copied().collect();
        Matrix::from_i64(p, r, c, &flat)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Fp {
        Fp::new(self.p)
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        assert!(r < self.rows && c < self.cols, "index out of range");
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        assert!(r < self.rows && c < self.cols, "index out of range");
        assert!(v < self.p);
        self.data[r * self.cols + c] = v;
    }

    pub fn set_i64(&mut self, r: usize, c: usize, v: i64) {
        let v = self.field().reduce_i64(v);
        self.set(r, c, v);
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&e| e == 0)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.p, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    fn check_same_shape(&self, other: &Matrix) {
        assert_eq!(self.p, other.p, "modulus mismatch");
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        self.check_same_shape(other);
        let f = self.field();
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        Matrix { p: self.p, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.check_same_shape(other);
        let f = self.field();
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect();
        Matrix { p: self.p, rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> Matrix {
        let f = self.field();
        let data = self.data.iter().map(|&a| f.neg(a)).collect();
        Matrix { p: self.p, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: u32) -> Matrix {
        let f = self.field();
        let data = self.data.iter().map(|&a| f.mul(a, s)).collect();
        Matrix { p: self.p, rows: self.rows, cols: self.cols, data }
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.p, other.p, "modulus mismatch");
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let f = self.field();
        let mut out = Matrix::zeros(self.p, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let cur = out.get(r, c);
                    out.set(r, c, f.add(cur, f.mul(a, other.get(k, c))));
                }
            }
        }
        out
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols);
        let f = self.field();
        (0..self.rows)
            .map(|r| {
                let mut acc = 0;
                for c in 0..self.cols {
                    acc = f.add(acc, f.mul(self.get(r, c), v[c]));
                }
                acc
            })
            .collect()
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.p, other.p, "modulus mismatch");
        assert_eq!(self.rows, other.rows, "row mismatch in hstack");
        let mut out = Matrix::zeros(self.p, self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c));
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.get(r, c));
            }
        }
        out
    }

    /// Vertical concatenation, `self` on top.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.p, other.p, "modulus mismatch");
        assert_eq!(self.cols, other.cols, "column mismatch in vstack");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix { p: self.p, rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn block_diag(p: u32, blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(p, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            assert_eq!(b.p, p, "modulus mismatch");
            for r in 0..b.rows {
                for c in 0..b.cols {
                    out.set(r0 + r, c0 + c, b.get(r, c));
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn submatrix_cols(&self, cols: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.p, self.rows, cols.len());
        for (j, &c) in cols.iter().enumerate() {
            for r in 0..self.rows {
                out.set(r, j, self.get(r, c));
            }
        }
        out
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> Rref {
        let f = self.field();
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            // Find a pivot in this column at or below `row`.
            let Some(pr) = (row..m.rows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            if pr != row {
                for c in 0..m.cols {
                    let (a, b) = (m.get(row, c), m.get(pr, c));
                    m.set(row, c, b);
                    m.set(pr, c, a);
                }
            }
            let inv = f.inv(m.get(row, col));
            for c in 0..m.cols {
                m.set(row, c, f.mul(inv, m.get(row, c)));
            }
            for r in 0..m.rows {
                if r != row && m.get(r, col) != 0 {
                    let factor = m.get(r, col);
                    for c in 0..m.cols {
                        let v = f.sub(m.get(r, c), f.mul(factor, m.get(row, c)));
                        m.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        Rref { mat: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of the right kernel, returned as the columns of a matrix with
    /// `cols() - rank()` columns. The basis is the standard one read off the
    /// reduced echelon form: each free column contributes one vector with a 1
    /// in its own coordinate, so the result is canonical.
    pub fn kernel_basis(&self) -> Matrix {
        let Rref { mat, pivots } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let f = self.field();
        let mut out = Matrix::zeros(self.p, self.cols, free.len());
        for (j, &fc) in free.iter().enumerate() {
            out.set(fc, j, 1);
            for (i, &pc) in pivots.iter().enumerate() {
                out.set(pc, j, f.neg(mat.get(i, fc)));
            }
        }
        out
    }

    /// Solves `self * x = rhs` column by column. Returns `None` when any
    /// column is unsolvable. When the solution is not unique the free
    /// coordinates are set to zero, which makes the answer deterministic.
    pub fn solve(&self, rhs: &Matrix) -> Option<Matrix> {
        assert_eq!(self.p, rhs.p, "modulus mismatch");
        assert_eq!(self.rows, rhs.rows, "row mismatch in solve");
        let aug = self.hstack(rhs);
        let Rref { mat, pivots } = aug.rref();
        // A pivot in the rhs block means an inconsistent column.
        if pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = Matrix::zeros(self.p, self.cols, rhs.cols);
        for (i, &pc) in pivots.iter().enumerate() {
            for c in 0..rhs.cols {
                x.set(pc, c, mat.get(i, self.cols + c));
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let sol = self.solve(&Matrix::identity(self.p, self.rows))?;
        if self.mul(&sol) == Matrix::identity(self.p, self.rows) {
            Some(sol)
        } else {
            None
        }
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Canonical basis for the column span: the nonzero rows of the RREF of
    /// the transpose, returned as columns. Two matrices have equal column
    /// span iff this agrees.
    pub fn column_span_canonical(&self) -> Matrix {
        let Rref { mat, pivots } = self.transpose().rref();
        let rank = pivots.len();
        let mut out = Matrix::zeros(self.p, self.rows, rank);
        for i in 0..rank {
            for r in 0..self.rows {
                out.set(r, i, mat.get(i, r));
            }
        }
        out
    }

    /// Does the column span of `other` lie inside the column span of `self`?
    pub fn spans_containing(&self, other: &Matrix) -> bool {
        assert_eq!(self.rows, other.rows, "ambient dimension mismatch");
        self.rank() == self.hstack(other).rank()
    }

    /// For the subspace U spanned by the columns of `self` inside F^rows,
    /// returns `(proj, sect)` with `proj: F^rows -> F^q` surjective of kernel
    /// exactly U, and `sect` a right inverse of `proj` (q = rows - rank).
    /// Coordinates on the quotient are indexed by the non-pivot rows of U,
    /// so the pair is canonical.
    pub fn quotient_maps(&self) -> (Matrix, Matrix) {
        let f = self.field();
        let Rref { mat, pivots } = self.transpose().rref();
        let free: Vec<usize> = (0..self.rows).filter(|r| !pivots.contains(r)).collect();
        let mut proj = Matrix::zeros(self.p, free.len(), self.rows);
        let mut sect = Matrix::zeros(self.p, self.rows, free.len());
        for (k, &fc) in free.iter().enumerate() {
            proj.set(k, fc, 1);
            sect.set(fc, k, 1);
            for (i, &pc) in pivots.iter().enumerate() {
                proj.set(k, pc, f.neg(mat.get(i, fc)));
            }
        }
        (proj, sect)
    }

    /// Symmetric integer lift: residues above p/2 become negative.
    pub fn lift_symmetric(&self) -> Vec<i64> {
        self.data
            .iter()
            .map(|&v| if v as u64 * 2 > self.p as u64 { v as i64 - self.p as i64 } else { v as i64 })
            .collect()
    }

    /// Reinterprets the matrix over another prime via the symmetric lift.
    pub fn transfer(&self, q: u32) -> Matrix {
        Matrix::from_i64(q, self.rows, self.cols, &self.lift_symmetric())
    }

    pub fn entries(&self) -> &[u32] {
        &self.data
    }
}

/// Validates that `p` is prime, for the small moduli used throughout.
pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p as u64 {
        if p as u64 % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub fn check_prime(p: u32) -> Result<(), FieldError> {
    if !is_prime(p) || p >= (1 << 31) {
        return Err(FieldError::BadPrime(p));
    }
    Ok(())
}
