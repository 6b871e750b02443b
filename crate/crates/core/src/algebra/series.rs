//! Laurent expansion of a rational function at infinity.
//!
//! The expansion of `F(z)` in negative powers writes `F = Σ f(x)·z^{-x-I}`
//! plus finitely many terms with some nonnegative exponent (the polynomial
//! part). [`expand_at_infinity`] computes every coefficient on z-exponents
//! `e ≥ -(d+1)·I`, i.e. all solution values `f(x)` with `x` in the box
//! `[0, d]^n` together with the polynomial-part terms inside that window.
//!
//! A [`CoeffTable`] answers queries only inside its window; asking outside is
//! an error, never a silent zero.

use std::collections::BTreeMap;

use num_traits::Zero;
use thiserror::Error;

use super::multi_index::{box_points, MultiIndex};
use super::rational::Rational;
use super::ratfn::RationalFn;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExpandError {
    /// After substituting `z_j ↦ 1/w_j` and clearing monomials the
    /// denominator has no constant term, so no expansion in negative powers
    /// exists. A valid characteristic polynomial never triggers this: its
    /// dominant-corner coefficient becomes the constant term.
    #[error("denominator has a zero dominant corner: not expandable at infinity")]
    NotExpandableAtInfinity,
}

impl ExpandError {
    /// Stable machine-readable name, part of the diagnostic contract.
    pub fn code(&self) -> &'static str {
        match self {
            ExpandError::NotExpandableAtInfinity => "NotExpandableAtInfinity",
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("exponent {exponent} is outside the truncation window of order {order}")]
pub struct OutOfWindow {
    pub exponent: MultiIndex,
    pub order: i64,
}

/// Truncated Laurent expansion: finitely many exact coefficients keyed by
/// z-exponent, complete on the window `e ≥ -(order+1)·I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffTable {
    dim: usize,
    order: i64,
    entries: BTreeMap<MultiIndex, Rational>,
}

impl CoeffTable {
    pub fn new(dim: usize, order: i64) -> Self {
        assert!(order >= 0, "order must be nonnegative");
        CoeffTable {
            dim,
            order,
            entries: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn in_window(&self, exponent: &MultiIndex) -> bool {
        exponent.geq(&MultiIndex::splat(self.dim, -(self.order + 1)))
    }

    /// Accumulate a term; silently drops exact zeros and anything outside the
    /// window (outside terms are not represented, not asserted complete).
    pub fn add_term(&mut self, exponent: MultiIndex, coeff: Rational) {
        assert_eq!(exponent.dim(), self.dim, "dimension mismatch");
        if coeff.is_zero() || !self.in_window(&exponent) {
            return;
        }
        match self.entries.entry(exponent) {
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

    /// Coefficient at a z-exponent inside the window.
    pub fn coeff(&self, exponent: &MultiIndex) -> Result<Rational, OutOfWindow> {
        if !self.in_window(exponent) {
            return Err(OutOfWindow {
                exponent: exponent.clone(),
                order: self.order,
            });
        }
        Ok(self
            .entries
            .get(exponent)
            .cloned()
            .unwrap_or_else(Rational::zero))
    }

    /// Solution value `f(x)`, the coefficient of `z^{-x-I}`; valid for
    /// `0 ≤ x ≤ (order, ..., order)`.
    pub fn solution_value(&self, x: &MultiIndex) -> Result<Rational, OutOfWindow> {
        assert!(x.is_nonneg(), "solution index must be nonnegative");
        let e = (&x.negated()) - &MultiIndex::ones(self.dim);
        self.coeff(&e)
    }

    /// Nonzero terms in graded-lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &Rational)> {
        self.entries.iter()
    }

    /// Nonzero terms of the form `z^{-x-I}` as `(x, coefficient)`.
    pub fn solution_terms(&self) -> impl Iterator<Item = (MultiIndex, &Rational)> {
        let ones = MultiIndex::ones(self.dim);
        self.entries.iter().filter_map(move |(e, c)| {
            if e.leq(&ones.negated()) {
                Some(((&e.negated()) - &ones, c))
            } else {
                None
            }
        })
    }

    /// Terms with some nonnegative exponent component (the polynomial part).
    pub fn extra_terms(&self) -> impl Iterator<Item = (&MultiIndex, &Rational)> {
        let minus_ones = MultiIndex::splat(self.dim, -1);
        self.entries
            .iter()
            .filter(move |(e, _)| !e.leq(&minus_ones))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Expand `F(z)` at infinity to the given order.
///
/// Substituting `z_j ↦ 1/w_j` and clearing per-axis degrees turns `F` into
/// `w^s · Ñ(w)/D̃(w)` with ordinary `Ñ, D̃`; when `D̃(0) ≠ 0` the quotient is a
/// formal power series, computed by exact long division in graded order. The
/// coefficient of `w^g` is the coefficient of `z^{-g}` of `F` at infinity.
pub fn expand_at_infinity(f: &RationalFn, order: i64) -> Result<CoeffTable, ExpandError> {
    assert!(order >= 0, "order must be nonnegative");
    let dim = f.dim();
    let mut table = CoeffTable::new(dim, order);
    if f.is_zero() {
        return Ok(table);
    }

    let u = f.num().max_exponents().unwrap();
    let v = f.den().max_exponents().unwrap();
    let n_tilde = f.num().reciprocal().shift(&u);
    let d_tilde = f.den().reciprocal().shift(&v);
    let d0 = d_tilde.coeff(&MultiIndex::zeros(dim));
    if d0.is_zero() {
        return Err(ExpandError::NotExpandableAtInfinity);
    }

    let s = &v - &u;
    let window_corner = MultiIndex::splat(dim, order + 1);
    let k_bound = MultiIndex::new(
        (0..dim)
            .map(|j| (order + 1 - s[j]).max(0))
            .collect::<Vec<_>>(),
    );

    // h = Ñ/D̃ by long division; row-major order visits every k after all of
    // its componentwise predecessors.
    let mut h: BTreeMap<MultiIndex, Rational> = BTreeMap::new();
    for k in box_points(&k_bound) {
        let mut acc = n_tilde.coeff(&k);
        for (j, dj) in d_tilde.terms() {
            if j.total() == 0 || !j.leq(&k) {
                continue;
            }
            let prev = &h[&(&k - j)];
            acc -= dj * prev;
        }
        acc /= &d0;
        h.insert(k, acc);
    }

    for (k, c) in h {
        let g = &s + &k;
        if g.leq(&window_corner) {
            table.add_term(g.negated(), c);
        }
    }
    Ok(table)
}

/// Single coefficient `f(x)` of `z^{-x-I}`; `x` must be nonnegative.
pub fn coeff_at(f: &RationalFn, x: &MultiIndex) -> Result<Rational, ExpandError> {
    assert!(x.is_nonneg(), "solution index must be nonnegative");
    let order = x.iter().max().unwrap_or(0);
    let table = expand_at_infinity(f, order)?;
    Ok(table.solution_value(x).expect("inside window by choice of order"))
}
