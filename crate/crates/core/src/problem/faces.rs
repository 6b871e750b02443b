//! Face geometry of the integer box `Π_m = {0 ≤ x ≤ m}`.
//!
//! Every 0/1 flag vector `J` carves out the face
//! `Γ_J = {x ∈ Π_m : x_k = m_k if j_k = 1, x_k < m_k if j_k = 0}`.
//! The 2^n faces are pairwise disjoint and cover `Π_m`, and the rays
//! `τ + Jy` (`τ ∈ Γ_J`, `y ≥ 0` supported on the flagged axes) tile the whole
//! positive octant: [`decompose_point`] inverts that tiling.

use crate::algebra::{box_points_between, MultiIndex};

/// One face `Γ_J` with its points enumerated in row-major order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    flags: MultiIndex,
    points: Vec<MultiIndex>,
}

impl Face {
    /// The 0/1 flag vector `J`.
    pub fn flags(&self) -> &MultiIndex {
        &self.flags
    }

    /// Points of `Γ_J`; empty when some unflagged axis has `m_k = 0`.
    pub fn points(&self) -> &[MultiIndex] {
        &self.points
    }

    pub fn active_axes(&self) -> Vec<usize> {
        (0..self.flags.dim()).filter(|&k| self.flags[k] == 1).collect()
    }

    pub fn is_full(&self) -> bool {
        (0..self.flags.dim()).all(|k| self.flags[k] == 1)
    }
}

/// All `2^n` faces of `Π_m`, flags in binary-counter order
/// `(0,...,0), (0,...,1), ..., (1,...,1)`.
pub fn faces(m: &MultiIndex) -> Vec<Face> {
    assert!(m.is_nonneg(), "corner must be nonnegative");
    let dim = m.dim();
    let mut out = Vec::with_capacity(1 << dim);
    for mask in 0..(1u64 << dim) {
        let flags = MultiIndex::new(
            (0..dim)
                .map(|k| ((mask >> (dim - 1 - k)) & 1) as i64)
                .collect(),
        );
        let lo = MultiIndex::new(
            (0..dim)
                .map(|k| if flags[k] == 1 { m[k] } else { 0 })
                .collect(),
        );
        let hi = MultiIndex::new(
            (0..dim)
                .map(|k| if flags[k] == 1 { m[k] } else { m[k] - 1 })
                .collect(),
        );
        out.push(Face {
            flags,
            points: box_points_between(&lo, &hi),
        });
    }
    out
}

/// Is `τ` in the initial data set `X₀ = {τ ≥ 0 : τ ≱ m}`?
pub fn in_x0(tau: &MultiIndex, m: &MultiIndex) -> bool {
    assert_eq!(tau.dim(), m.dim(), "dimension mismatch");
    tau.is_nonneg() && !tau.geq(m)
}

/// Unique face-ray coordinates of `x ≥ 0`: flags `J`, base point `τ ∈ Γ_J`,
/// and offset `y` supported on the flagged axes, with `x = τ + y`.
pub fn decompose_point(x: &MultiIndex, m: &MultiIndex) -> (MultiIndex, MultiIndex, MultiIndex) {
    assert_eq!(x.dim(), m.dim(), "dimension mismatch");
    assert!(x.is_nonneg(), "point must be nonnegative");
    let dim = x.dim();
    let flags = MultiIndex::new(
        (0..dim)
            .map(|k| if x[k] >= m[k] { 1 } else { 0 })
            .collect(),
    );
    let tau = MultiIndex::new((0..dim).map(|k| x[k].min(m[k])).collect());
    let y = x - &tau;
    (flags, tau, y)
}
