//! Exact engine for n-dimensional linear difference equations with constant
//! coefficients.
//!
//! Given an equation `Σ c_α f(x+α) = 0` whose coefficient set has a dominant
//! corner `m`, and Cauchy data `φ` on the boundary set `X₀ = {τ ≥ 0 : τ ≱ m}`,
//! the crate computes the unique solution two independent ways:
//!
//! - [`solver`] fills a finite box by exact dynamic programming;
//! - [`genfun`] assembles the closed-form rational generating function
//!   `F(z) = Σ f(x) z^{-x-I}` from per-face data series and boundary
//!   polynomials, and expands it back into coefficients.
//!
//! Everything is exact: coefficients and data are arbitrary-precision
//! rationals, and the two routes are required to agree coefficient by
//! coefficient ([`genfun::verify`]).

pub mod algebra;
pub mod genfun;
pub mod problem;
pub mod solver;
