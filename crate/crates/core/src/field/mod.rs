//! Exact arithmetic kernel: prime fields, dense matrices, univariate
//! polynomials over F_p, and rational interpolation.

mod matrix;
mod rational;
mod unipoly;

pub use matrix::{check_prime, is_prime, Matrix, Rref};
pub use rational::{interpolate, RationalPoly};
pub use unipoly::{berkowitz_char_poly, FpPoly};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("abscissa {0} appears more than once")]
    DuplicateAbscissa(i64),
    #[error("{0} is not a prime below 2^31")]
    BadPrime(u32),
}

/// Arithmetic context for F_p. Elements are canonical residues in `0..p`
/// carried as plain `u32`; all intermediates fit in `u64` since p < 2^31.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fp {
    p: u32,
}

impl Fp {
    pub fn new(p: u32) -> Self {
        assert!(is_prime(p) && p < (1 << 31), "{p} is not a prime below 2^31");
        Fp { p }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        if s >= self.p as u64 {
            (s - self.p as u64) as u32
        } else {
            s as u32
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(&self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1u32;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse by Fermat; panics on zero.
    pub fn inv(&self, a: u32) -> u32 {
        assert!(a % self.p != 0, "inverse of zero");
        self.pow(a, self.p as u64 - 2)
    }

    pub fn reduce_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }
}
