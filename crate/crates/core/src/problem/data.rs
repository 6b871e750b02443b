//! Cauchy data `φ` on the boundary set `X₀`.
//!
//! Data comes in two kinds:
//! - explicit entries, a finite map `X₀ → Q`;
//! - recurrent rays: along `{anchor + y·e_k}` the values satisfy a 1-D linear
//!   recurrence `Σ_j d_j a_{y+j} = 0` (`d_s ≠ 0`) started from `s` initial
//!   values.
//!
//! Points of `X₀` covered by neither default to 0, and `φ` extends by zero
//! beyond `X₀` as well. Rays must stay inside `X₀`, which needs a deficient
//! coordinate on some other axis; in one dimension no ray is legal.
//!
//! Where entries and rays overlap their values must agree; the overlap set is
//! finite up to recurrence theory (two rays on the same line agree everywhere
//! once they agree on `s₁+s₂` consecutive points, because their difference
//! satisfies the product recurrence, whose leading coefficient `d_{s₁}·d_{s₂}`
//! is nonzero).

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use super::faces::{faces, in_x0};
use crate::algebra::{format_rational, MultiIndex, Rational};

/// Recurrent values along the axis-aligned ray `{anchor + y·e_axis : y ≥ 0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RaySpec {
    pub anchor: MultiIndex,
    pub axis: usize,
    /// Recurrence coefficients `d_0, ..., d_s`: `Σ_j d_j a_{y+j} = 0` for all
    /// `y ≥ 0`, with `d_s ≠ 0`.
    pub rec: Vec<Rational>,
    /// Initial values `a_0, ..., a_{s-1}`.
    pub initial: Vec<Rational>,
}

impl RaySpec {
    /// Recurrence order `s`.
    pub fn order(&self) -> usize {
        self.rec.len().saturating_sub(1)
    }

    /// Value `a_y`; runs the recurrence forward. `y` must be nonnegative.
    pub fn value_at(&self, y: i64) -> Rational {
        assert!(y >= 0, "ray index must be nonnegative");
        let s = self.order();
        let y = y as usize;
        if y < s {
            return self.initial[y].clone();
        }
        if s == 0 {
            return Rational::zero();
        }
        let mut window = self.initial.clone();
        let d_s = &self.rec[s];
        for _ in s..=y {
            let mut acc = Rational::zero();
            for (j, d_j) in self.rec.iter().take(s).enumerate() {
                acc += d_j * &window[j];
            }
            let next = -(acc / d_s);
            window.rotate_left(1);
            window[s - 1] = next;
        }
        window[s - 1].clone()
    }

    /// First `count` values `a_0, ..., a_{count-1}`.
    pub fn values_up_to(&self, count: usize) -> Vec<Rational> {
        (0..count as i64).map(|y| self.value_at(y)).collect()
    }

    /// Local index of `x` on this ray, if covered.
    pub fn covers(&self, x: &MultiIndex) -> Option<i64> {
        if x.dim() != self.anchor.dim() {
            return None;
        }
        for j in 0..x.dim() {
            if j != self.axis && x[j] != self.anchor[j] {
                return None;
            }
        }
        let y = x[self.axis] - self.anchor[self.axis];
        (y >= 0).then_some(y)
    }

    /// Point at local index `y`.
    pub fn point_at(&self, y: i64) -> MultiIndex {
        self.anchor
            .with_component(self.axis, self.anchor[self.axis] + y)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DataIssue {
    #[error("data entry at {x} has dimension {got}, expected {expected}")]
    EntryDimensionMismatch {
        x: MultiIndex,
        got: usize,
        expected: usize,
    },
    #[error("data entry at {x} lies outside X₀")]
    EntryOutsideX0 { x: MultiIndex },
    #[error("ray #{index}: {reason}")]
    InvalidRay { index: usize, reason: String },
    #[error("ray #{index} leaves X₀ (no axis other than {axis} stays below the corner)")]
    RayEscapesX0 { index: usize, axis: usize },
    #[error("inconsistent coverage at {point}: {left} vs {right} ({sources})")]
    InconsistentCoverage {
        point: MultiIndex,
        left: String,
        right: String,
        sources: String,
    },
}

impl DataIssue {
    /// Stable machine-readable name, part of the diagnostic contract.
    pub fn code(&self) -> &'static str {
        match self {
            DataIssue::EntryDimensionMismatch { .. } => "DimensionMismatch",
            DataIssue::EntryOutsideX0 { .. } => "EntryOutsideX0",
            DataIssue::InvalidRay { .. } => "InvalidRay",
            DataIssue::RayEscapesX0 { .. } => "RayEscapesX0",
            DataIssue::InconsistentCoverage { .. } => "InconsistentCoverage",
        }
    }
}

/// Cauchy data: explicit entries plus recurrent rays, zero elsewhere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CauchyData {
    dim: usize,
    entries: BTreeMap<MultiIndex, Rational>,
    rays: Vec<RaySpec>,
}

impl CauchyData {
    /// Raw constructor; call [`CauchyData::validate`] against the equation's
    /// corner before trusting the data. Zero-valued entries are kept: they
    /// still pin overlap checks.
    pub fn new<I>(dim: usize, entries: I, rays: Vec<RaySpec>) -> Self
    where
        I: IntoIterator<Item = (MultiIndex, Rational)>,
    {
        CauchyData {
            dim,
            entries: entries.into_iter().collect(),
            rays,
        }
    }

    pub fn finite_support<I>(dim: usize, entries: I) -> Self
    where
        I: IntoIterator<Item = (MultiIndex, Rational)>,
    {
        Self::new(dim, entries, Vec::new())
    }

    /// Point mass: 1 at `tau0`, 0 elsewhere (Green's function data).
    pub fn delta(dim: usize, tau0: MultiIndex) -> Self {
        Self::finite_support(dim, [(tau0, Rational::from_integer(1.into()))])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> impl Iterator<Item = (&MultiIndex, &Rational)> {
        self.entries.iter()
    }

    pub fn rays(&self) -> &[RaySpec] {
        &self.rays
    }

    /// Data value at `x`: explicit entry first, then the first covering ray,
    /// else the zero extension. Callers decide whether `x ∈ X₀` matters;
    /// see [`in_x0`](super::faces::in_x0).
    pub fn eval(&self, x: &MultiIndex) -> Rational {
        assert_eq!(x.dim(), self.dim, "dimension mismatch");
        if let Some(v) = self.entries.get(x) {
            return v.clone();
        }
        for ray in &self.rays {
            if let Some(y) = ray.covers(x) {
                return ray.value_at(y);
            }
        }
        Rational::zero()
    }

    /// Structural problems: entries off `X₀`, malformed or escaping rays.
    pub fn structural_issues(&self, m: &MultiIndex) -> Vec<DataIssue> {
        let mut issues = Vec::new();
        for (x, _) in &self.entries {
            if x.dim() != self.dim {
                issues.push(DataIssue::EntryDimensionMismatch {
                    x: x.clone(),
                    got: x.dim(),
                    expected: self.dim,
                });
            } else if !in_x0(x, m) {
                issues.push(DataIssue::EntryOutsideX0 { x: x.clone() });
            }
        }
        for (i, ray) in self.rays.iter().enumerate() {
            if ray.anchor.dim() != self.dim {
                issues.push(DataIssue::InvalidRay {
                    index: i,
                    reason: format!(
                        "anchor {} has dimension {}, expected {}",
                        ray.anchor,
                        ray.anchor.dim(),
                        self.dim
                    ),
                });
                continue;
            }
            if ray.axis >= self.dim {
                issues.push(DataIssue::InvalidRay {
                    index: i,
                    reason: format!("axis {} out of range", ray.axis),
                });
                continue;
            }
            if ray.rec.is_empty() || ray.rec.last().unwrap().is_zero() {
                issues.push(DataIssue::InvalidRay {
                    index: i,
                    reason: "leading recurrence coefficient must be nonzero".into(),
                });
                continue;
            }
            if ray.initial.len() != ray.order() {
                issues.push(DataIssue::InvalidRay {
                    index: i,
                    reason: format!(
                        "{} initial values for a recurrence of order {}",
                        ray.initial.len(),
                        ray.order()
                    ),
                });
                continue;
            }
            if !ray.anchor.is_nonneg() {
                issues.push(DataIssue::InvalidRay {
                    index: i,
                    reason: format!("anchor {} has negative components", ray.anchor),
                });
                continue;
            }
            // the whole ray stays in X₀ iff a non-ray axis is deficient
            let deficient = (0..self.dim).any(|j| j != ray.axis && ray.anchor[j] < m[j]);
            if !deficient {
                issues.push(DataIssue::RayEscapesX0 {
                    index: i,
                    axis: ray.axis,
                });
            }
        }
        issues
    }

    /// Every point covered twice must carry one value; checked exhaustively
    /// on the finite overlap sets.
    pub fn consistency_issues(&self, _m: &MultiIndex) -> Vec<DataIssue> {
        let mut issues = Vec::new();
        // entries against rays
        for (x, v) in &self.entries {
            for (i, ray) in self.rays.iter().enumerate() {
                if let Some(y) = ray.covers(x) {
                    let rv = ray.value_at(y);
                    if &rv != v {
                        issues.push(DataIssue::InconsistentCoverage {
                            point: x.clone(),
                            left: format_rational(v),
                            right: format_rational(&rv),
                            sources: format!("entry vs ray #{i}"),
                        });
                    }
                }
            }
        }
        // rays pairwise
        for i in 0..self.rays.len() {
            for j in i + 1..self.rays.len() {
                let (a, b) = (&self.rays[i], &self.rays[j]);
                if a.anchor.dim() != self.dim || b.anchor.dim() != self.dim {
                    continue; // structural issue already reported
                }
                if a.axis == b.axis {
                    let same_line = (0..self.dim)
                        .all(|l| l == a.axis || a.anchor[l] == b.anchor[l]);
                    if !same_line {
                        continue;
                    }
                    // agreement on s_a + s_b consecutive points of the common
                    // tail forces agreement everywhere on it
                    let start = a.anchor[a.axis].max(b.anchor[b.axis]);
                    let len = a.order() + b.order();
                    for t in 0..len as i64 {
                        let coord = start + t;
                        let va = a.value_at(coord - a.anchor[a.axis]);
                        let vb = b.value_at(coord - b.anchor[b.axis]);
                        if va != vb {
                            issues.push(DataIssue::InconsistentCoverage {
                                point: a.anchor.with_component(a.axis, coord),
                                left: format_rational(&va),
                                right: format_rational(&vb),
                                sources: format!("ray #{i} vs ray #{j}"),
                            });
                            break;
                        }
                    }
                } else {
                    // crossing rays meet in at most one point
                    let compatible = (0..self.dim)
                        .all(|l| l == a.axis || l == b.axis || a.anchor[l] == b.anchor[l]);
                    if !compatible {
                        continue;
                    }
                    let ya = b.anchor[a.axis] - a.anchor[a.axis];
                    let yb = a.anchor[b.axis] - b.anchor[b.axis];
                    if ya < 0 || yb < 0 {
                        continue;
                    }
                    let va = a.value_at(ya);
                    let vb = b.value_at(yb);
                    if va != vb {
                        let point = a
                            .anchor
                            .with_component(a.axis, b.anchor[a.axis])
                            .with_component(b.axis, a.anchor[b.axis]);
                        issues.push(DataIssue::InconsistentCoverage {
                            point,
                            left: format_rational(&va),
                            right: format_rational(&vb),
                            sources: format!("ray #{i} vs ray #{j}"),
                        });
                    }
                }
            }
        }
        issues
    }

    /// Full validation: structure plus overlap consistency.
    pub fn validate(&self, m: &MultiIndex) -> Result<(), Vec<DataIssue>> {
        let mut issues = self.structural_issues(m);
        issues.extend(self.consistency_issues(m));
        if issues.is_empty() {
            Ok(())
        } else {
            Err(issues)
        }
    }

    /// Notices for faces whose ray cones carry no data source at all: those
    /// regions silently default to zero. Not an error.
    pub fn coverage_notices(&self, m: &MultiIndex) -> Vec<String> {
        let mut notes = Vec::new();
        for face in faces(m) {
            if face.is_full() || face.points().is_empty() {
                continue;
            }
            let active = face.active_axes();
            let mut touched = false;
            'scan: for tau in face.points() {
                for (x, _) in &self.entries {
                    if cone_contains(tau, &active, x) {
                        touched = true;
                        break 'scan;
                    }
                }
                for ray in &self.rays {
                    if ray_meets_cone(ray, tau, &active) {
                        touched = true;
                        break 'scan;
                    }
                }
            }
            if !touched {
                notes.push(format!(
                    "face Γ_{} carries no explicit data; its values default to 0",
                    face.flags()
                ));
            }
        }
        notes
    }
}

/// Is `x` in the cone `{τ + y : y ≥ 0 supported on `active`}`?
pub(crate) fn cone_contains(tau: &MultiIndex, active: &[usize], x: &MultiIndex) -> bool {
    if x.dim() != tau.dim() {
        return false;
    }
    (0..tau.dim()).all(|k| {
        if active.contains(&k) {
            x[k] >= tau[k]
        } else {
            x[k] == tau[k]
        }
    })
}

/// Does the ray intersect the cone at all?
pub(crate) fn ray_meets_cone(ray: &RaySpec, tau: &MultiIndex, active: &[usize]) -> bool {
    if ray.anchor.dim() != tau.dim() {
        return false;
    }
    (0..tau.dim()).all(|k| {
        if k == ray.axis {
            if active.contains(&k) {
                true // both extend along k
            } else {
                // the ray meets the hyperplane x_k = tau_k
                tau[k] >= ray.anchor[k]
            }
        } else if active.contains(&k) {
            ray.anchor[k] >= tau[k]
        } else {
            ray.anchor[k] == tau[k]
        }
    })
}

impl fmt::Display for RaySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ray at {} along axis {}", self.anchor, self.axis)
    }
}
