//! Sparse multivariate Laurent polynomials with exact rational coefficients.
//!
//! A `LaurentPoly` is a finite map from exponent vectors (components may be
//! negative) to nonzero rationals. Invariants:
//! - no stored zero coefficients;
//! - every stored exponent has the polynomial's dimension.
//!
//! Terms are kept in a `BTreeMap` keyed by graded-lexicographic order, so
//! iteration, display, and serialization are deterministic.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use super::multi_index::MultiIndex;
use super::rational::{format_rational, Rational};

#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    dim: usize,
    terms: BTreeMap<MultiIndex, Rational>,
}

impl LaurentPoly {
    pub fn zero(dim: usize) -> Self {
        LaurentPoly {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(dim: usize, value: Rational) -> Self {
        Self::monomial(MultiIndex::zeros(dim), value)
    }

    pub fn one(dim: usize) -> Self {
        Self::constant(dim, Rational::from_integer(1.into()))
    }

    /// Single variable `z_axis`.
    pub fn var(dim: usize, axis: usize) -> Self {
        Self::monomial(
            MultiIndex::unit(dim, axis),
            Rational::from_integer(1.into()),
        )
    }

    /// The term `coeff · z^exponent`; zero coefficients give the zero polynomial.
    pub fn monomial(exponent: MultiIndex, coeff: Rational) -> Self {
        let dim = exponent.dim();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exponent, coeff);
        }
        LaurentPoly { dim, terms }
    }

    pub fn from_terms<I>(dim: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (MultiIndex, Rational)>,
    {
        let mut poly = Self::zero(dim);
        for (exp, coeff) in terms {
            poly.add_term(exp, coeff);
        }
        poly
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in graded-lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exponent: &MultiIndex) -> Rational {
        self.terms.get(exponent).cloned().unwrap_or_else(Rational::zero)
    }

    /// Accumulate one term, dropping the entry if it cancels to zero.
    pub fn add_term(&mut self, exponent: MultiIndex, coeff: Rational) {
        assert_eq!(exponent.dim(), self.dim, "dimension mismatch");
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exponent) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = &*e.get() + &coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zero(self.dim);
        }
        LaurentPoly {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c * factor))
                .collect(),
        }
    }

    /// Multiply by the monomial `z^shift`.
    pub fn shift(&self, shift: &MultiIndex) -> Self {
        assert_eq!(shift.dim(), self.dim, "dimension mismatch");
        LaurentPoly {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e + shift, c.clone()))
                .collect(),
        }
    }

    /// Substitute `z_j ↦ 1/z_j` on every axis (negate all exponents).
    pub fn reciprocal(&self) -> Self {
        LaurentPoly {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.negated(), c.clone()))
                .collect(),
        }
    }

    /// Componentwise minimum exponent over the support; `None` for zero.
    pub fn min_exponents(&self) -> Option<MultiIndex> {
        self.terms
            .keys()
            .fold(None, |acc: Option<MultiIndex>, e| match acc {
                None => Some(e.clone()),
                Some(m) => Some(m.componentwise_min(e)),
            })
    }

    /// Componentwise maximum exponent over the support; `None` for zero.
    pub fn max_exponents(&self) -> Option<MultiIndex> {
        self.terms
            .keys()
            .fold(None, |acc: Option<MultiIndex>, e| match acc {
                None => Some(e.clone()),
                Some(m) => Some(m.componentwise_max(e)),
            })
    }

    /// Leading term under graded-lexicographic order.
    pub fn leading_term(&self) -> Option<(&MultiIndex, &Rational)> {
        self.terms.iter().next_back()
    }

    /// True when every exponent is componentwise nonnegative.
    pub fn is_ordinary(&self) -> bool {
        self.terms.keys().all(|e| e.is_nonneg())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let mut out = LaurentPoly::zero(self.dim);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            dim: self.dim,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // highest term first reads like handwritten polynomials
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}", format_rational(c))?;
            for (axis, p) in e.iter().enumerate() {
                if p != 0 {
                    write!(f, "*z{}^{}", axis + 1, p)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{rat, rat_int};

    fn mi(c: &[i64]) -> MultiIndex {
        MultiIndex::from_slice(c)
    }

    // z - 1 in one variable
    fn z_minus_1() -> LaurentPoly {
        LaurentPoly::from_terms(1, [(mi(&[1]), rat_int(1)), (mi(&[0]), rat_int(-1))])
    }

    #[test]
    fn difference_of_squares() {
        let z_plus_1 =
            LaurentPoly::from_terms(1, [(mi(&[1]), rat_int(1)), (mi(&[0]), rat_int(1))]);
        let product = &z_minus_1() * &z_plus_1;
        let expected =
            LaurentPoly::from_terms(1, [(mi(&[2]), rat_int(1)), (mi(&[0]), rat_int(-1))]);
        assert_eq!(product, expected);
    }

    #[test]
    fn additive_inverse_cancels() {
        let p = LaurentPoly::from_terms(
            2,
            [
                (mi(&[2, 1]), rat_int(1)),
                (mi(&[0, -3]), rat(5, 7)),
                (mi(&[-1, 0]), rat_int(2)),
            ],
        );
        assert!((&p + &(-&p)).is_zero());
    }

    #[test]
    fn negative_exponents_multiply() {
        // z^-1 * z^-1 = z^-2
        let inv = LaurentPoly::monomial(mi(&[-1]), rat_int(1));
        let sq = &inv * &inv;
        assert_eq!(sq.coeff(&mi(&[-2])), rat_int(1));
        assert_eq!(sq.num_terms(), 1);
    }

    #[test]
    fn min_max_exponents() {
        let p = LaurentPoly::from_terms(
            2,
            [(mi(&[2, -1]), rat_int(1)), (mi(&[-3, 4]), rat_int(1))],
        );
        assert_eq!(p.min_exponents().unwrap(), mi(&[-3, -1]));
        assert_eq!(p.max_exponents().unwrap(), mi(&[2, 4]));
        assert!(LaurentPoly::zero(2).min_exponents().is_none());
    }

    #[test]
    fn leading_term_is_grlex_max() {
        // z^2*w and z*w^2 have equal total degree; lex breaks the tie.
        let p = LaurentPoly::from_terms(
            2,
            [(mi(&[2, 1]), rat_int(3)), (mi(&[1, 2]), rat_int(5))],
        );
        let (e, c) = p.leading_term().unwrap();
        assert_eq!(e, &mi(&[2, 1]));
        assert_eq!(c, &rat_int(3));
    }

    #[test]
    fn display_reads_naturally() {
        assert_eq!(z_minus_1().to_string(), "1*z1^1 + -1");
        assert_eq!(LaurentPoly::zero(1).to_string(), "0");
    }
}
