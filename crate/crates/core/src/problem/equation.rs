//! The difference equation `Σ_{0 ≤ α ≤ m} c_α f(x+α) = 0`.
//!
//! The coefficient set must fit in the box `[0, m]` and contain the dominant
//! corner `m` with `c_m ≠ 0`; this is what makes the forward sweep
//! `f(x+m) = -(1/c_m) Σ_{α≠m} c_α f(x+α)` well defined and the Cauchy problem
//! on `X₀` uniquely solvable.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::algebra::{LaurentPoly, MultiIndex, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EquationIssue {
    #[error("coefficient exponent {alpha} has dimension {got}, expected {expected}")]
    DimensionMismatch {
        alpha: MultiIndex,
        got: usize,
        expected: usize,
    },
    #[error("coefficient exponent {alpha} lies outside the box [0, {m}]")]
    ExponentOutOfBox { alpha: MultiIndex, m: MultiIndex },
    #[error("dominant corner coefficient c_{m} is missing or zero")]
    MissingDominantCorner { m: MultiIndex },
    #[error("equation has fewer than two nonzero terms")]
    TooFewTerms,
}

impl EquationIssue {
    /// Stable machine-readable name, part of the diagnostic contract.
    pub fn code(&self) -> &'static str {
        match self {
            EquationIssue::DimensionMismatch { .. } => "DimensionMismatch",
            EquationIssue::ExponentOutOfBox { .. } => "ExponentOutOfBox",
            EquationIssue::MissingDominantCorner { .. } => "MissingDominantCorner",
            EquationIssue::TooFewTerms => "DegenerateEquation",
        }
    }
}

/// A validated constant-coefficient difference equation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferenceEquation {
    m: MultiIndex,
    coeffs: BTreeMap<MultiIndex, Rational>,
}

impl DifferenceEquation {
    /// Validate and build; diagnostics name every violation, not just the
    /// first. Zero coefficients are dropped before validation.
    pub fn new<I>(m: MultiIndex, coeffs: I) -> Result<Self, Vec<EquationIssue>>
    where
        I: IntoIterator<Item = (MultiIndex, Rational)>,
    {
        let dim = m.dim();
        let mut issues = Vec::new();
        let mut table = BTreeMap::new();
        for (alpha, c) in coeffs {
            if c.is_zero() {
                continue;
            }
            if alpha.dim() != dim {
                issues.push(EquationIssue::DimensionMismatch {
                    got: alpha.dim(),
                    expected: dim,
                    alpha,
                });
                continue;
            }
            if !alpha.is_nonneg() || !alpha.leq(&m) {
                issues.push(EquationIssue::ExponentOutOfBox {
                    alpha,
                    m: m.clone(),
                });
                continue;
            }
            table.insert(alpha, c);
        }
        if !table.contains_key(&m) {
            issues.push(EquationIssue::MissingDominantCorner { m: m.clone() });
        }
        if table.len() < 2 {
            issues.push(EquationIssue::TooFewTerms);
        }
        if issues.is_empty() {
            Ok(DifferenceEquation { m, coeffs: table })
        } else {
            Err(issues)
        }
    }

    pub fn dim(&self) -> usize {
        self.m.dim()
    }

    /// The dominant corner `m`.
    pub fn corner(&self) -> &MultiIndex {
        &self.m
    }

    pub fn corner_coeff(&self) -> &Rational {
        &self.coeffs[&self.m]
    }

    pub fn coeff(&self, alpha: &MultiIndex) -> Rational {
        self.coeffs
            .get(alpha)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Nonzero coefficients in graded-lexicographic exponent order.
    pub fn coeffs(&self) -> impl Iterator<Item = (&MultiIndex, &Rational)> {
        self.coeffs.iter()
    }

    /// Characteristic polynomial `P(z) = Σ c_α z^α`.
    pub fn char_poly(&self) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.dim(),
            self.coeffs.iter().map(|(a, c)| (a.clone(), c.clone())),
        )
    }

    /// Boundary polynomial `P_τ(z) = Σ_{α ≰ τ} c_α z^α`.
    ///
    /// Constant along face rays: `P_{τ+Jy} = P_τ` whenever τ pins the J-axes
    /// at the corner, which is what makes the face assembly finite.
    pub fn boundary_poly(&self, tau: &MultiIndex) -> LaurentPoly {
        assert_eq!(tau.dim(), self.dim(), "dimension mismatch");
        LaurentPoly::from_terms(
            self.dim(),
            self.coeffs
                .iter()
                .filter(|(a, _)| !a.leq(tau))
                .map(|(a, c)| (a.clone(), c.clone())),
        )
    }
}

impl fmt::Display for DifferenceEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P(δ) f = 0 with P = {}", self.char_poly())
    }
}
