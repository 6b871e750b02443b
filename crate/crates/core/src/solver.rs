//! Exact dynamic-programming solution of the Cauchy problem on a finite box.
//!
//! This is the brute-force reference the generating-function machinery is
//! checked against: fill `X₀ ∩ box` from the data, then sweep the remaining
//! points in graded order computing
//! `f(x+m) = -(1/c_m) Σ_{α ≤ m, α ≠ m} c_α f(x+α)`.
//! Any order compatible with the componentwise dependencies yields the same
//! table (the solution is unique); the graded sweep with lexicographic
//! tie-break is fixed for reproducibility.

use thiserror::Error;

use crate::algebra::{box_points, MultiIndex, Rational};
use crate::problem::{in_x0, CauchyData, DifferenceEquation};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error("box bound {bound} does not dominate the corner {m}")]
    BoxTooSmall { bound: MultiIndex, m: MultiIndex },
    #[error("{tau0} is not in X₀")]
    Tau0NotInX0 { tau0: MultiIndex },
}

impl SolveError {
    /// Stable machine-readable name, part of the diagnostic contract.
    pub fn code(&self) -> &'static str {
        match self {
            SolveError::BoxTooSmall { .. } => "BoxTooSmall",
            SolveError::Tau0NotInX0 { .. } => "Tau0NotInX0",
        }
    }
}

/// Dense table of exact solution values over `{0 ≤ x ≤ bound}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionTable {
    bound: MultiIndex,
    strides: Vec<usize>,
    values: Vec<Rational>,
}

impl SolutionTable {
    fn flat_index(&self, x: &MultiIndex) -> usize {
        debug_assert!(x.is_nonneg() && x.leq(&self.bound), "index out of box");
        (0..x.dim()).map(|j| x[j] as usize * self.strides[j]).sum()
    }

    pub fn dim(&self) -> usize {
        self.bound.dim()
    }

    pub fn bound(&self) -> &MultiIndex {
        &self.bound
    }

    pub fn value(&self, x: &MultiIndex) -> &Rational {
        &self.values[self.flat_index(x)]
    }

    /// Box points in row-major order.
    pub fn points(&self) -> Vec<MultiIndex> {
        box_points(&self.bound)
    }
}

/// Solve the Cauchy problem on `{0 ≤ x ≤ bound}`. The bound must dominate the
/// corner so at least one interior point exists.
pub fn solve_box(
    eq: &DifferenceEquation,
    data: &CauchyData,
    bound: &MultiIndex,
) -> Result<SolutionTable, SolveError> {
    assert_eq!(eq.dim(), data.dim(), "dimension mismatch");
    assert_eq!(eq.dim(), bound.dim(), "dimension mismatch");
    let m = eq.corner();
    if !bound.geq(m) {
        return Err(SolveError::BoxTooSmall {
            bound: bound.clone(),
            m: m.clone(),
        });
    }

    let dim = eq.dim();
    let mut strides = vec![0usize; dim];
    let mut acc = 1usize;
    for j in (0..dim).rev() {
        strides[j] = acc;
        acc *= (bound[j] + 1) as usize;
    }
    let mut table = SolutionTable {
        bound: bound.clone(),
        strides,
        values: vec![Rational::from_integer(0.into()); acc],
    };

    let mut order = box_points(bound);
    order.sort(); // graded lexicographic sweep

    let c_m = eq.corner_coeff().clone();
    for x in order {
        let idx = table.flat_index(&x);
        if in_x0(&x, m) {
            table.values[idx] = data.eval(&x);
        } else {
            // x ≥ m here, so every stencil point x - m + α is in the box and
            // strictly below x in graded order: already filled.
            let base = &x - m;
            let mut acc = Rational::from_integer(0.into());
            for (alpha, c) in eq.coeffs() {
                if alpha == m {
                    continue;
                }
                acc += c * table.value(&(&base + alpha));
            }
            table.values[idx] = -(acc / &c_m);
        }
    }
    Ok(table)
}

/// Discrete Green's function on a box: the solution with point-mass data at
/// `tau0 ∈ X₀`.
pub fn green_box(
    eq: &DifferenceEquation,
    tau0: &MultiIndex,
    bound: &MultiIndex,
) -> Result<SolutionTable, SolveError> {
    if !in_x0(tau0, eq.corner()) {
        return Err(SolveError::Tau0NotInX0 {
            tau0: tau0.clone(),
        });
    }
    solve_box(eq, &CauchyData::delta(eq.dim(), tau0.clone()), bound)
}
