//! Sparse multivariate Laurent polynomials with integer coefficients.
//!
//! Terms live in a BTreeMap keyed by exponent vectors, so iteration order,
//! equality and rendering are all canonical (lexicographic on exponents).
//! Coefficients are arbitrary-precision integers and zero coefficients are
//! never stored.

use std::collections::BTreeMap;
use std::fmt;

pub use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LaurentError {
    #[error("arity mismatch: {0} vs {1} variables")]
    ArityMismatch(usize, usize),
}

/// Fixed-length vector of integer exponents, one slot per variable.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ExpVec(pub Vec<i64>);

impl ExpVec {
    pub fn zero(n: usize) -> Self {
        ExpVec(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        ExpVec(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, other: &ExpVec) -> ExpVec {
        assert_eq!(self.len(), other.len(), "exponent arity mismatch");
        ExpVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn neg(&self) -> ExpVec {
        ExpVec(self.0.iter().map(|a| -a).collect())
    }

    pub fn from_usize(v: &[usize]) -> ExpVec {
        ExpVec(v.iter().map(|&a| a as i64).collect())
    }
}

/// Laurent polynomial in a fixed number of variables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentPoly {
    arity: usize,
    terms: BTreeMap<ExpVec, BigInt>,
}

impl LaurentPoly {
    pub fn zero(arity: usize) -> Self {
        LaurentPoly { arity, terms: BTreeMap::new() }
    }

    pub fn one(arity: usize) -> Self {
        LaurentPoly::monomial(ExpVec::zero(arity), BigInt::one())
    }

    pub fn constant(arity: usize, c: i64) -> Self {
        LaurentPoly::monomial(ExpVec::zero(arity), BigInt::from(c))
    }

    /// Single term c * v^e; the zero coefficient gives the zero polynomial.
    pub fn monomial(e: ExpVec, c: BigInt) -> Self {
        let arity = e.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentPoly { arity, terms }
    }

    pub fn var(arity: usize, i: usize) -> Self {
        LaurentPoly::monomial(ExpVec::unit(arity, i), BigInt::one())
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&ExpVec::zero(self.arity))
                .map_or(false, |c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExpVec, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: &ExpVec) -> BigInt {
        self.terms.get(e).cloned().unwrap_or_else(BigInt::zero)
    }

    fn insert_term(terms: &mut BTreeMap<ExpVec, BigInt>, e: ExpVec, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        if self.arity != other.arity {
            return Err(LaurentError::ArityMismatch(self.arity, other.arity));
        }
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            Self::insert_term(&mut terms, e.clone(), c.clone());
        }
        Ok(LaurentPoly { arity: self.arity, terms })
    }

    pub fn sub(&self, other: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        if self.arity != other.arity {
            return Err(LaurentError::ArityMismatch(self.arity, other.arity));
        }
        let mut terms = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                Self::insert_term(&mut terms, e1.add(e2), c1 * c2);
            }
        }
        Ok(LaurentPoly { arity: self.arity, terms })
    }

    /// Substitutes y_j -> prod_i x_i^(B[i][j]), i.e. sends the term y^e to
    /// x^(B e). Input must be an honest polynomial (non-negative exponents);
    /// the output is a Laurent polynomial in the x variables.
    pub fn substitute_yhat(&self, b: &[Vec<i64>]) -> Result<LaurentPoly, LaurentError> {
        let n = b.len();
        if self.arity != n || b.iter().any(|row| row.len() != n) {
            return Err(LaurentError::ArityMismatch(self.arity, n));
        }
        debug_assert!(
            self.terms.keys().all(|e| e.0.iter().all(|&x| x >= 0)),
            "substitute_yhat expects non-negative exponents"
        );
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let image = ExpVec((0..n).map(|i| (0..n).map(|j| b[i][j] * e.0[j]).sum()).collect());
            Self::insert_term(&mut terms, image, c.clone());
        }
        Ok(LaurentPoly { arity: n, terms })
    }

    /// Canonical text rendering with 1-based variable names, e.g.
    /// `1 + y2 + y1*y2` or `x1^-1 + x1^-1*x2`.
    pub fn render(&self, var: &str) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let mono: Vec<String> = e
                .0
                .iter()
                .enumerate()
                .filter(|(_, &exp)| exp != 0)
                .map(|(j, &exp)| {
                    if exp == 1 {
                        format!("{var}{}", j + 1)
                    } else {
                        format!("{var}{}^{}", j + 1, exp)
                    }
                })
                .collect();
            let abs = c.abs();
            let body = if mono.is_empty() {
                format!("{abs}")
            } else if abs.is_one() {
                mono.join("*")
            } else {
                format!("{abs}*{}", mono.join("*"))
            };
            if i == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            out.push_str(&body);
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(arity: usize, terms: &[(&[i64], i64)]) -> LaurentPoly {
        let mut acc = LaurentPoly::zero(arity);
        for (e, c) in terms {
            acc = acc
                .add(&LaurentPoly::monomial(ExpVec(e.to_vec()), BigInt::from(*c)))
                .unwrap();
        }
        acc
    }

    #[test]
    fn monomial_product_adds_exponents() {
        let a = LaurentPoly::monomial(ExpVec(vec![1, -2]), BigInt::from(3));
        let b = LaurentPoly::monomial(ExpVec(vec![0, 5]), BigInt::from(2));
        let ab = a.mul(&b).unwrap();
        assert_eq!(ab, LaurentPoly::monomial(ExpVec(vec![1, 3]), BigInt::from(6)));
    }

    #[test]
    fn product_example_two_vars() {
        // (1 + y1) * (1 + y2) = 1 + y1 + y2 + y1*y2
        let a = poly(2, &[(&[0, 0], 1), (&[1, 0], 1)]);
        let b = poly(2, &[(&[0, 0], 1), (&[0, 1], 1)]);
        let expect = poly(2, &[(&[0, 0], 1), (&[1, 0], 1), (&[0, 1], 1), (&[1, 1], 1)]);
        assert_eq!(a.mul(&b).unwrap(), expect);
    }

    #[test]
    fn arity_mismatch_is_an_error() {
        let a = LaurentPoly::one(2);
        let b = LaurentPoly::one(3);
        assert_eq!(a.mul(&b), Err(LaurentError::ArityMismatch(2, 3)));
    }

    #[test]
    fn substitute_yhat_single_variable() {
        // B = [[0,1],[-1,0]]: y1 -> x2^-1
        let b = vec![vec![0, 1], vec![-1, 0]];
        let f = LaurentPoly::var(2, 0);
        let image = f.substitute_yhat(&b).unwrap();
        assert_eq!(image, LaurentPoly::monomial(ExpVec(vec![0, -1]), BigInt::one()));
        assert_eq!(image.render("x"), "x2^-1");
    }

    #[test]
    fn substitute_yhat_full_term() {
        // B = [[0,1],[-1,0]]: y1*y2 -> x^(B(1,1)) = x1 * x2^-1
        let b = vec![vec![0, 1], vec![-1, 0]];
        let f = LaurentPoly::monomial(ExpVec(vec![1, 1]), BigInt::one());
        let image = f.substitute_yhat(&b).unwrap();
        assert_eq!(image, LaurentPoly::monomial(ExpVec(vec![1, -1]), BigInt::one()));
    }

    #[test]
    fn render_is_canonical() {
        let f = poly(2, &[(&[1, 1], 1), (&[0, 0], 1), (&[0, 1], 1)]);
        assert_eq!(f.render("y"), "1 + y2 + y1*y2");
        assert_eq!(LaurentPoly::zero(2).render("x"), "0");
        let g = poly(1, &[(&[-1], 1)]);
        assert_eq!(g.render("x"), "x1^-1");
        let h = poly(1, &[(&[0], 1), (&[1], -2)]);
        assert_eq!(h.render("x"), "1 - 2*x1");
    }

    #[test]
    fn cancellation_drops_terms() {
        let a = poly(1, &[(&[0], 1), (&[1], 1)]);
        let b = poly(1, &[(&[1], -1)]);
        let sum = a.add(&b).unwrap();
        assert_eq!(sum, LaurentPoly::one(1));
        assert!(sum.is_one());
    }

    mod ring_axioms {
        use super::*;
        use proptest::prelude::*;

        fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
            proptest::collection::vec(((-3i64..=3, -3i64..=3), -5i64..=5), 0..6).prop_map(|ts| {
                let mut acc = LaurentPoly::zero(2);
                for ((e1, e2), c) in ts {
                    let m = LaurentPoly::monomial(ExpVec(vec![e1, e2]), BigInt::from(c));
                    acc = acc.add(&m).unwrap();
                }
                acc
            })
        }

        proptest! {
            #[test]
            fn add_commutes(a in arb_poly(), b in arb_poly()) {
                prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
            }

            #[test]
            fn mul_commutes(a in arb_poly(), b in arb_poly()) {
                prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            }

            #[test]
            fn mul_associates(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
                let lhs = a.mul(&b).unwrap().mul(&c).unwrap();
                let rhs = a.mul(&b.mul(&c).unwrap()).unwrap();
                prop_assert_eq!(lhs, rhs);
            }

            #[test]
            fn mul_distributes(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
                let lhs = a.mul(&b.add(&c).unwrap()).unwrap();
                let rhs = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
                prop_assert_eq!(lhs, rhs);
            }

            #[test]
            fn one_is_neutral(a in arb_poly()) {
                prop_assert_eq!(a.mul(&LaurentPoly::one(2)).unwrap(), a.clone());
                prop_assert_eq!(a.add(&LaurentPoly::zero(2)).unwrap(), a.clone());
                prop_assert!(a.sub(&a).unwrap().is_zero());
            }
        }
    }
}
