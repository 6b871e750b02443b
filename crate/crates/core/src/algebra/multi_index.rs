//! Points of the integer lattice `Z^n`, used for exponent vectors, lattice
//! arguments, and shifts.
//!
//! Two orders coexist:
//! - the componentwise partial order ([`MultiIndex::leq`], [`MultiIndex::geq`]),
//!   which is what lattice geometry speaks (`α ≤ m`, `τ ≱ m`, ...);
//! - graded lexicographic order (the `Ord` impl): a total order used for
//!   deterministic term ordering and canonical forms. `Ord` is *not* the
//!   componentwise order.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Index, Sub};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiIndex(Vec<i64>);

impl MultiIndex {
    pub fn new(components: Vec<i64>) -> Self {
        MultiIndex(components)
    }

    pub fn from_slice(components: &[i64]) -> Self {
        MultiIndex(components.to_vec())
    }

    /// All components equal to `value`.
    pub fn splat(dim: usize, value: i64) -> Self {
        MultiIndex(vec![value; dim])
    }

    pub fn zeros(dim: usize) -> Self {
        Self::splat(dim, 0)
    }

    /// The vector `I = (1, 1, ..., 1)`.
    pub fn ones(dim: usize) -> Self {
        Self::splat(dim, 1)
    }

    /// Standard basis vector `e_axis`.
    pub fn unit(dim: usize, axis: usize) -> Self {
        assert!(axis < dim, "axis {axis} out of range for dimension {dim}");
        let mut c = vec![0; dim];
        c[axis] = 1;
        MultiIndex(c)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn components(&self) -> &[i64] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> + '_ {
        self.0.iter().copied()
    }

    /// Sum of components, the grading used by graded-lexicographic order.
    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Componentwise `self ≤ other`.
    pub fn leq(&self, other: &Self) -> bool {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Componentwise `self ≥ other`.
    pub fn geq(&self, other: &Self) -> bool {
        other.leq(self)
    }

    pub fn is_nonneg(&self) -> bool {
        self.0.iter().all(|&a| a >= 0)
    }

    pub fn componentwise_min(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        MultiIndex(self.0.iter().zip(&other.0).map(|(&a, &b)| a.min(b)).collect())
    }

    pub fn componentwise_max(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        MultiIndex(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn negated(&self) -> Self {
        MultiIndex(self.0.iter().map(|&a| -a).collect())
    }

    pub fn with_component(&self, axis: usize, value: i64) -> Self {
        let mut c = self.0.clone();
        c[axis] = value;
        MultiIndex(c)
    }
}

impl Index<usize> for MultiIndex {
    type Output = i64;
    fn index(&self, axis: usize) -> &i64 {
        &self.0[axis]
    }
}

impl Add for &MultiIndex {
    type Output = MultiIndex;
    fn add(self, rhs: &MultiIndex) -> MultiIndex {
        assert_eq!(self.dim(), rhs.dim(), "dimension mismatch");
        MultiIndex(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &MultiIndex {
    type Output = MultiIndex;
    fn sub(self, rhs: &MultiIndex) -> MultiIndex {
        assert_eq!(self.dim(), rhs.dim(), "dimension mismatch");
        MultiIndex(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

/// Graded lexicographic: compare total degree first, then lexicographically.
impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        self.total()
            .cmp(&other.total())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Iterate the box `{0 ≤ x ≤ bound}` in row-major (odometer) order.
///
/// Row-major order is a linear extension of the componentwise order, so a
/// consumer always sees `y` before `x` whenever `y ≤ x`, `y ≠ x`.
pub fn box_points(bound: &MultiIndex) -> Vec<MultiIndex> {
    if !bound.is_nonneg() {
        return Vec::new();
    }
    box_points_between(&MultiIndex::zeros(bound.dim()), bound)
}

/// Iterate the box `{lo ≤ x ≤ hi}` in row-major order; empty when `lo ≰ hi`.
pub fn box_points_between(lo: &MultiIndex, hi: &MultiIndex) -> Vec<MultiIndex> {
    assert_eq!(lo.dim(), hi.dim(), "dimension mismatch");
    if !lo.leq(hi) {
        return Vec::new();
    }
    let dim = lo.dim();
    let mut out = Vec::new();
    let mut cur = lo.components().to_vec();
    'outer: loop {
        out.push(MultiIndex::from_slice(&cur));
        let mut axis = dim;
        loop {
            if axis == 0 {
                break 'outer;
            }
            axis -= 1;
            if cur[axis] < hi[axis] {
                cur[axis] += 1;
                for j in axis + 1..dim {
                    cur[j] = lo[j];
                }
                continue 'outer;
            }
        }
    }
    out
}
