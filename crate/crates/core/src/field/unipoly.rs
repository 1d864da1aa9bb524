//! Univariate polynomials over F_p: arithmetic, characteristic polynomials
//! (Berkowitz, division-free), and factorization (Berlekamp for small p,
//! distinct-degree plus Cantor-Zassenhaus for large p).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Fp, Matrix};

/// Coefficients lowest degree first, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct FpPoly {
    p: u32,
    coeffs: Vec<u32>,
}

/// Primes up to this bound use the deterministic constant sweep when
/// splitting the Berlekamp subalgebra; larger primes fall back to seeded
/// Cantor-Zassenhaus.
const SMALL_PRIME_SWEEP: u32 = 4096;

impl FpPoly {
    pub fn new(p: u32, mut coeffs: Vec<u32>) -> Self {
        for c in &coeffs {
            assert!(*c < p);
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPoly { p, coeffs }
    }

    pub fn from_i64(p: u32, coeffs: &[i64]) -> Self {
        let f = Fp::new(p);
        FpPoly::new(p, coeffs.iter().map(|&c| f.reduce_i64(c)).collect())
    }

    pub fn zero(p: u32) -> Self {
        FpPoly { p, coeffs: Vec::new() }
    }

    pub fn one(p: u32) -> Self {
        FpPoly { p, coeffs: vec![1] }
    }

    pub fn x(p: u32) -> Self {
        FpPoly { p, coeffs: vec![0, 1] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn leading(&self) -> u32 {
        *self.coeffs.last().expect("leading coefficient of zero polynomial")
    }

    fn fp(&self) -> Fp {
        Fp::new(self.p)
    }

    pub fn add(&self, other: &FpPoly) -> FpPoly {
        assert_eq!(self.p, other.p);
        let f = self.fp();
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0; n];
        for i in 0..n {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            out[i] = f.add(a, b);
        }
        FpPoly::new(self.p, out)
    }

    pub fn sub(&self, other: &FpPoly) -> FpPoly {
        self.add(&other.scale(self.fp().neg(1)))
    }

    pub fn scale(&self, s: u32) -> FpPoly {
        let f = self.fp();
        FpPoly::new(self.p, self.coeffs.iter().map(|&c| f.mul(c, s)).collect())
    }

    pub fn mul(&self, other: &FpPoly) -> FpPoly {
        assert_eq!(self.p, other.p);
        if self.is_zero() || other.is_zero() {
            return FpPoly::zero(self.p);
        }
        let f = self.fp();
        let mut out = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        FpPoly::new(self.p, out)
    }

    pub fn monic(&self) -> FpPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(self.fp().inv(self.leading()))
    }

    /// Quotient and remainder of division by a nonzero polynomial.
    pub fn divmod(&self, d: &FpPoly) -> (FpPoly, FpPoly) {
        assert_eq!(self.p, d.p);
        assert!(!d.is_zero(), "division by zero polynomial");
        let f = self.fp();
        let dd = d.degree().unwrap();
        let lead_inv = f.inv(d.leading());
        let mut rem = self.coeffs.clone();
        if rem.len() < d.coeffs.len() {
            return (FpPoly::zero(self.p), self.clone());
        }
        let mut quot = vec![0; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = f.mul(rem[i], lead_inv);
            if c != 0 {
                quot[i - dd] = c;
                for j in 0..=dd {
                    rem[i - dd + j] = f.sub(rem[i - dd + j], f.mul(c, d.coeffs[j]));
                }
            }
        }
        (FpPoly::new(self.p, quot), FpPoly::new(self.p, rem))
    }

    pub fn rem(&self, d: &FpPoly) -> FpPoly {
        self.divmod(d).1
    }

    pub fn divides(&self, other: &FpPoly) -> bool {
        other.rem(self).is_zero()
    }

    pub fn gcd(&self, other: &FpPoly) -> FpPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn deriv(&self) -> FpPoly {
        let f = self.fp();
        let mut out = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().skip(1) {
            out.push(f.mul(c, (i as u64 % self.p as u64) as u32));
        }
        FpPoly::new(self.p, out)
    }

    pub fn eval(&self, x: u32) -> u32 {
        let f = self.fp();
        let mut acc = 0;
        for &c in self.coeffs.iter().rev() {
            acc = f.add(f.mul(acc, x), c);
        }
        acc
    }

    /// self^e mod m by square-and-multiply.
    pub fn pow_mod(&self, mut e: u64, m: &FpPoly) -> FpPoly {
        let mut base = self.rem(m);
        let mut acc = FpPoly::one(self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }

    /// For f with f' = 0 every exponent is a multiple of p; this extracts
    /// g with g(x^p) = f(x), using c^(1/p) = c in F_p.
    fn pth_root(&self) -> FpPoly {
        let step = self.p as usize;
        let out: Vec<u32> = self.coeffs.iter().step_by(step).copied().collect();
        FpPoly::new(self.p, out)
    }

    /// Distinct monic irreducible factors, sorted for determinism.
    pub fn distinct_irreducible_factors(&self, seed: u64) -> Vec<FpPoly> {
        assert!(!self.is_zero(), "factoring the zero polynomial");
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out: Vec<FpPoly> = Vec::new();
        let mut g = self.monic();
        while g.degree().unwrap_or(0) > 0 {
            let d = g.deriv();
            if d.is_zero() {
                g = g.pth_root();
                continue;
            }
            let sq = g.divmod(&g.gcd(&d)).0;
            for h in factor_squarefree(&sq, &mut rng) {
                if !out.contains(&h) {
                    out.push(h);
                }
            }
            for h in &out {
                while h.divides(&g) {
                    g = g.divmod(h).0;
                }
            }
        }
        out.sort_by(|a, b| (a.coeffs.len(), &a.coeffs).cmp(&(b.coeffs.len(), &b.coeffs)));
        out
    }

    /// Full factorization as (irreducible, multiplicity) pairs.
    pub fn factor(&self, seed: u64) -> Vec<(FpPoly, usize)> {
        let distinct = self.distinct_irreducible_factors(seed);
        let mut rem = self.monic();
        let mut out = Vec::new();
        for h in distinct {
            let mut mult = 0;
            while h.divides(&rem) {
                rem = rem.divmod(&h).0;
                mult += 1;
            }
            out.push((h, mult));
        }
        debug_assert_eq!(rem, FpPoly::one(self.p));
        out
    }
}

/// Splits a monic squarefree polynomial into its irreducible factors.
fn factor_squarefree(f: &FpPoly, rng: &mut ChaCha8Rng) -> Vec<FpPoly> {
    let deg = match f.degree() {
        None | Some(0) => return Vec::new(),
        Some(1) => return vec![f.monic()],
        Some(d) => d,
    };
    let p = f.p;
    // Berlekamp subalgebra: kernel of (Frobenius - id) on F_p[x]/f.
    let fp = Fp::new(p);
    let xp = FpPoly::x(p).pow_mod(p as u64, f);
    let mut frob = Matrix::zeros(p, deg, deg);
    let mut power = FpPoly::one(p);
    for j in 0..deg {
        for (i, &c) in power.coeffs.iter().enumerate() {
            frob.set(i, j, c);
        }
        power = power.mul(&xp).rem(f);
    }
    let b = frob.sub(&Matrix::identity(p, deg));
    let kernel = b.kernel_basis();
    let r = kernel.cols();
    if r == 1 {
        return vec![f.monic()];
    }
    let mut pieces = vec![f.monic()];
    for j in 0..kernel.cols() {
        if pieces.len() == r {
            break;
        }
        let v = FpPoly::new(p, kernel.column(j));
        if v.degree().unwrap_or(0) == 0 {
            continue;
        }
        pieces = split_with(pieces, &v, fp, rng);
    }
    // Random subalgebra elements finish the job when basis vectors alone
    // do not separate all factors (only possible for large p).
    let kernel_cols: Vec<FpPoly> = (0..kernel.cols()).map(|j| FpPoly::new(p, kernel.column(j))).collect();
    let mut attempts = 0;
    while pieces.len() < r && attempts < 256 {
        attempts += 1;
        let mut v = FpPoly::zero(p);
        for basis in &kernel_cols {
            v = v.add(&basis.scale(rng.gen_range(0..p)));
        }
        if v.degree().unwrap_or(0) == 0 {
            continue;
        }
        pieces = split_with(pieces, &v, fp, rng);
    }
    assert_eq!(pieces.len(), r, "Berlekamp split did not converge");
    pieces.into_iter().map(|g| g.monic()).collect()
}

fn split_with(pieces: Vec<FpPoly>, v: &FpPoly, fp: Fp, rng: &mut ChaCha8Rng) -> Vec<FpPoly> {
    let p = fp.p();
    let mut out = Vec::new();
    for piece in pieces {
        if piece.degree().unwrap_or(0) <= 1 {
            out.push(piece);
            continue;
        }
        let mut fragments = Vec::new();
        if p <= SMALL_PRIME_SWEEP {
            let mut rest = piece.clone();
            for c in 0..p {
                if rest.degree().unwrap_or(0) == 0 {
                    break;
                }
                let shifted = v.sub(&FpPoly::new(p, vec![c]));
                let g = rest.gcd(&shifted);
                if g.degree().unwrap_or(0) > 0 {
                    fragments.push(g.clone());
                    rest = rest.divmod(&g).0;
                }
            }
            if rest.degree().unwrap_or(0) > 0 {
                fragments.push(rest);
            }
        } else {
            // Cantor-Zassenhaus style probe for odd large p.
            let c = rng.gen_range(0..p);
            let w = v.add(&FpPoly::new(p, vec![c]));
            let probe = w.pow_mod((p as u64 - 1) / 2, &piece).sub(&FpPoly::one(p));
            let g = piece.gcd(&probe);
            if g.degree().unwrap_or(0) > 0 && g.degree() < piece.degree() {
                fragments.push(g.clone());
                fragments.push(piece.divmod(&g).0);
            } else {
                fragments.push(piece);
            }
        }
        out.extend(fragments);
    }
    out
}

/// Characteristic polynomial det(xI - A) by the Berkowitz algorithm.
/// Division-free, so it works uniformly over any F_p. Coefficients are
/// returned lowest degree first (monic).
pub fn berkowitz_char_poly(a: &Matrix) -> FpPoly {
    assert_eq!(a.rows(), a.cols(), "characteristic polynomial of a non-square matrix");
    let n = a.rows();
    let p = a.p();
    let f = Fp::new(p);
    // c holds the char poly of the leading k x k principal submatrix,
    // highest degree first.
    let mut c: Vec<u32> = vec![1];
    for k in 1..=n {
        // The Toeplitz column: [1, -a_kk, -(R C), -(R M C), ...]
        let akk = a.get(k - 1, k - 1);
        let mut col = vec![1u32, f.neg(akk)];
        if k >= 2 {
            // R = row k-1 of the leading block, C = column k-1, M = block.
            let mut vec_c: Vec<u32> = (0..k - 1).map(|i| a.get(i, k - 1)).collect();
            for _ in 0..k - 1 {
                let mut s = 0u32;
                for i in 0..k - 1 {
                    s = f.add(s, f.mul(a.get(k - 1, i), vec_c[i]));
                }
                col.push(f.neg(s));
                // advance C <- M * C
                let mut next = vec![0u32; k - 1];
                for r in 0..k - 1 {
                    for i in 0..k - 1 {
                        next[r] = f.add(next[r], f.mul(a.get(r, i), vec_c[i]));
                    }
                }
                vec_c = next;
            }
        }
        // Multiply the (k+1) x k lower triangular Toeplitz matrix by c.
        let mut next = vec![0u32; k + 1];
        for i in 0..k + 1 {
            for j in 0..k {
                if i >= j && i - j < col.len() {
                    next[i] = f.add(next[i], f.mul(col[i - j], c[j]));
                }
            }
        }
        c = next;
    }
    c.reverse();
    FpPoly::new(p, c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn char_poly_of_diagonal() {
        let m = Matrix::from_rows(7, &[vec![2, 0], vec![0, 3]]);
        let cp = berkowitz_char_poly(&m);
        // (x-2)(x-3) = x^2 - 5x + 6 = x^2 + 2x + 6 mod 7
        assert_eq!(cp, FpPoly::from_i64(7, &[6, -5, 1]));
    }

    #[test]
    fn char_poly_matches_trace_det_2x2() {
        let m = Matrix::from_rows(5, &[vec![1, 2], vec![3, 4]]);
        // x^2 - 5x + (4 - 6) = x^2 - 2 mod 5 -> [3, 0, 1]
        assert_eq!(berkowitz_char_poly(&m), FpPoly::from_i64(5, &[-2, 0, 1]));
    }

    #[test]
    fn factor_splits_distinct_roots() {
        // x^2 - 1 = (x-1)(x+1) over F_5
        let f = FpPoly::from_i64(5, &[-1, 0, 1]);
        let factors = f.factor(0);
        assert_eq!(factors.len(), 2);
        assert!(factors.iter().all(|(_, m)| *m == 1));
    }

    #[test]
    fn factor_detects_irreducible() {
        // x^2 + 1 is irreducible over F_3
        let f = FpPoly::from_i64(3, &[1, 0, 1]);
        let factors = f.factor(0);
        assert_eq!(factors.len(), 1);
        assert_eq!(factors[0].1, 1);
        assert_eq!(factors[0].0, f);
    }

    #[test]
    fn factor_handles_p_power_multiplicities() {
        // (x-1)^4 over F_2: derivative vanishes
        let x_minus_1 = FpPoly::from_i64(2, &[1, 1]);
        let f = x_minus_1.mul(&x_minus_1).mul(&x_minus_1).mul(&x_minus_1);
        let factors = f.factor(0);
        assert_eq!(factors, vec![(x_minus_1, 4)]);
    }

    #[test]
    fn factor_mixed_multiplicities() {
        // x^2 (x+1)^3 (x^2+x+1) over F_2
        let x = FpPoly::x(2);
        let x1 = FpPoly::from_i64(2, &[1, 1]);
        let quad = FpPoly::from_i64(2, &[1, 1, 1]);
        let f = x.mul(&x).mul(&x1).mul(&x1).mul(&x1).mul(&quad);
        let factors = f.factor(0);
        assert_eq!(factors.len(), 3);
        let find = |g: &FpPoly| factors.iter().find(|(h, _)| h == g).map(|(_, m)| *m);
        assert_eq!(find(&x), Some(2));
        assert_eq!(find(&x1), Some(3));
        assert_eq!(find(&quad), Some(1));
    }
}
