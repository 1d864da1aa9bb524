//! Exact polynomial interpolation over the rationals.
//!
//! Counting polynomials are recovered from finitely many (prime, count)
//! points by Lagrange interpolation with arbitrary-precision rationals, so
//! re-evaluating at the abscissas reproduces the inputs exactly.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::FieldError;

/// Polynomial with exact rational coefficients, lowest degree first.
/// Trailing zero coefficients are trimmed, so the representation is
/// canonical and equality is structural.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPoly {
    coeffs: Vec<BigRational>,
}

impl RationalPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        RationalPoly { coeffs }
    }

    pub fn zero() -> Self {
        RationalPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        RationalPoly::new(vec![c])
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        RationalPoly::new(coeffs.iter().map(|&c| BigRational::from(BigInt::from(c))).collect())
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_i64(&self, x: i64) -> BigRational {
        self.eval(&BigRational::from(BigInt::from(x)))
    }

    /// Value at an integer point when that value is an integer.
    pub fn eval_integer(&self, x: i64) -> Option<BigInt> {
        let v = self.eval_i64(x);
        if v.denom().is_one() || v.denom() == &BigInt::from(-1) {
            Some(v.to_integer())
        } else {
            None
        }
    }

    pub fn add(&self, other: &RationalPoly) -> RationalPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigRational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        RationalPoly::new(out)
    }

    pub fn scale(&self, s: &BigRational) -> RationalPoly {
        RationalPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, other: &RationalPoly) -> RationalPoly {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return RationalPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPoly::new(out)
    }

    /// Renders in the variable `q`, highest degree first, e.g. `q^2 + q + 1`.
    pub fn render(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            let var = match i {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{i}"),
            };
            let body = if var.is_empty() {
                format!("{abs}")
            } else if abs.is_one() {
                var
            } else {
                format!("{abs}*{var}")
            };
            if parts.is_empty() {
                parts.push(if c.is_negative() { format!("-{body}") } else { body });
            } else {
                parts.push(format!("{} {}", if c.is_negative() { "-" } else { "+" }, body));
            }
        }
        parts.join(" ")
    }
}

/// Lagrange interpolation through `(x, y)` points with distinct abscissas.
/// The result is the unique polynomial of degree < points.len().
pub fn interpolate(points: &[(i64, BigInt)]) -> Result<RationalPoly, FieldError> {
    for (i, (x, _)) in points.iter().enumerate() {
        if points[i + 1..].iter().any(|(x2, _)| x2 == x) {
            return Err(FieldError::DuplicateAbscissa(*x));
        }
    }
    let mut acc = RationalPoly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut basis = RationalPoly::constant(BigRational::one());
        let mut denom = BigRational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            // factor (x - xj)
            basis = basis.mul(&RationalPoly::from_i64(&[-xj, 1]));
            denom *= BigRational::from(BigInt::from(xi - xj));
        }
        let weight = BigRational::from(yi.clone()) / denom;
        acc = acc.add(&basis.scale(&weight));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interpolation_recovers_counting_polynomial() {
        // Points of q^2 + q + 1 (lines plus planes in F_q^3... really the
        // q-analogue of 3) at q = 2, 3, 5.
        let pts = vec![
            (2, BigInt::from(7)),
            (3, BigInt::from(13)),
            (5, BigInt::from(31)),
        ];
        let p = interpolate(&pts).unwrap();
        assert_eq!(p, RationalPoly::from_i64(&[1, 1, 1]));
        assert_eq!(p.eval_integer(7), Some(BigInt::from(57)));
        assert_eq!(p.render(), "q^2 + q + 1");
    }

    #[test]
    fn duplicate_abscissa_is_an_error() {
        let pts = vec![(2, BigInt::from(1)), (2, BigInt::from(3))];
        assert_eq!(interpolate(&pts), Err(FieldError::DuplicateAbscissa(2)));
    }

    #[test]
    fn eval_integer_rejects_fractions() {
        // x/2 at x = 3 is not an integer.
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let p = RationalPoly::new(vec![BigRational::zero(), half]);
        assert_eq!(p.eval_integer(3), None);
        assert_eq!(p.eval_integer(4), Some(BigInt::from(2)));
    }

    #[test]
    fn render_handles_signs_and_zero() {
        assert_eq!(RationalPoly::zero().render(), "0");
        assert_eq!(RationalPoly::from_i64(&[-1, 0, 2]).render(), "2*q^2 - 1");
    }

    #[test]
    fn constant_interpolation() {
        let pts = vec![(2, BigInt::from(4)), (3, BigInt::from(4))];
        let p = interpolate(&pts).unwrap();
        assert_eq!(p.degree(), Some(0));
        assert_eq!(p.eval_integer(100), Some(BigInt::from(4)));
    }
}
