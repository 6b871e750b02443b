//! Arithmetic substrate: exact rationals, multivariate Laurent polynomials,
//! canonical rational functions, and Laurent expansion at infinity.
//!
//! Every value is immutable after construction and every operation is a pure
//! function, so everything here is safe to use from multiple threads.

pub mod laurent;
pub mod multi_index;
pub mod ratfn;
pub mod rational;
pub mod series;

pub use laurent::LaurentPoly;
pub use multi_index::{box_points, box_points_between, MultiIndex};
pub use ratfn::{monomial_fn, RationalFn};
pub use rational::{format_rational, parse_rational, rat, rat_int, ParseRationalError, Rational};
pub use series::{coeff_at, expand_at_infinity, CoeffTable, ExpandError, OutOfWindow};
