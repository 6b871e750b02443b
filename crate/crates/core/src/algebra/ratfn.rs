//! Rational functions as quotients of Laurent polynomials, kept in a
//! canonical form.
//!
//! Canonical form:
//! - the zero function is `0/1`;
//! - numerator and denominator are shifted by a common monomial so both are
//!   ordinary polynomials (all exponents ≥ 0) sharing no monomial factor:
//!   on every axis at least one of the two touches exponent 0;
//! - the denominator has integer coefficients with content 1 and a positive
//!   leading coefficient under graded-lexicographic order.
//!
//! No polynomial gcd is computed: common non-monomial factors stay. Two
//! values are compared with [`RationalFn::eq_cross`], exact cross
//! multiplication, which is immune to missed cancellation. The derived
//! `PartialEq` is representation equality of canonical forms, which is finer.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::laurent::LaurentPoly;
use super::multi_index::MultiIndex;
use super::rational::Rational;

#[derive(Clone, PartialEq, Eq)]
pub struct RationalFn {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFn {
    /// Build `num/den` and canonicalize. Panics if `den` is zero.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert_eq!(num.dim(), den.dim(), "dimension mismatch");
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RationalFn {
                num: LaurentPoly::zero(den.dim()),
                den: LaurentPoly::one(den.dim()),
            };
        }

        // Common monomial shift: move both to ordinary polynomials with no
        // shared monomial factor.
        let g = num
            .min_exponents()
            .unwrap()
            .componentwise_min(&den.min_exponents().unwrap());
        let num = num.shift(&g.negated());
        let den = den.shift(&g.negated());

        // Scale so the denominator is integer with content 1 and positive
        // leading coefficient.
        let mut l = BigInt::one();
        for (_, c) in den.terms() {
            l = l.lcm(c.denom());
        }
        let mut content = BigInt::zero();
        for (_, c) in den.terms() {
            content = content.gcd(&(c.numer() * &l / c.denom()));
        }
        let mut sigma = Rational::new(l, content);
        if den.leading_term().unwrap().1.is_negative() {
            sigma = -sigma;
        }
        RationalFn {
            num: num.scale(&sigma),
            den: den.scale(&sigma),
        }
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        let dim = p.dim();
        Self::new(p, LaurentPoly::one(dim))
    }

    pub fn zero(dim: usize) -> Self {
        Self::from_poly(LaurentPoly::zero(dim))
    }

    pub fn one(dim: usize) -> Self {
        Self::from_poly(LaurentPoly::one(dim))
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn dim(&self) -> usize {
        self.num.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Exact equality as rational functions: `num·den' = num'·den`.
    pub fn eq_cross(&self, other: &RationalFn) -> bool {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        &self.num * &other.den == &other.num * &self.den
    }

    /// Multiply by a polynomial.
    pub fn mul_poly(&self, p: &LaurentPoly) -> RationalFn {
        RationalFn::new(&self.num * p, self.den.clone())
    }

    /// Multiply by a scalar.
    pub fn scale(&self, c: &Rational) -> RationalFn {
        RationalFn::new(self.num.scale(c), self.den.clone())
    }

    /// Divide; panics when `other` is the zero function.
    pub fn div(&self, other: &RationalFn) -> RationalFn {
        assert!(!other.is_zero(), "division by zero function");
        RationalFn::new(&self.num * &other.den, &self.den * &other.num)
    }

    /// 1/self; panics on zero.
    pub fn recip(&self) -> RationalFn {
        assert!(!self.is_zero(), "division by zero function");
        RationalFn::new(self.den.clone(), self.num.clone())
    }
}

impl Add for &RationalFn {
    type Output = RationalFn;
    fn add(self, rhs: &RationalFn) -> RationalFn {
        // cross-denominator sum; no gcd, canonicalization trims monomials
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFn::new(num, &self.den * &rhs.den)
    }
}

impl Sub for &RationalFn {
    type Output = RationalFn;
    fn sub(self, rhs: &RationalFn) -> RationalFn {
        self + &(-rhs)
    }
}

impl Mul for &RationalFn {
    type Output = RationalFn;
    fn mul(self, rhs: &RationalFn) -> RationalFn {
        RationalFn::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        RationalFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

impl fmt::Debug for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Monomial `z^exponent` as a rational function.
pub fn monomial_fn(exponent: MultiIndex, coeff: Rational) -> RationalFn {
    RationalFn::from_poly(LaurentPoly::monomial(exponent, coeff))
}
