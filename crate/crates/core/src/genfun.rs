//! Closed-form generating functions of Cauchy problems.
//!
//! For the solution `f` of `Σ c_α f(x+α) = 0` with data `φ` on `X₀`, the
//! generating function `F(z) = Σ f(x) z^{-x-I}` satisfies
//!
//! `P(z)·F(z) = Σ_J Σ_{τ∈Γ_J} Φ_{τ,J}(z)·P_τ(z)`
//!
//! where `Φ_{τ,J} = Σ_y φ(τ+Jy) z^{-(τ+Jy+I)}` is the series of data values
//! along one face ray and `P_τ` the boundary polynomial, constant along the
//! ray. Each `Φ_{τ,J}` is rational under this crate's data model:
//!
//! - a single point for the all-zero flag;
//! - for one active axis, the classical Moivre construction: a sequence
//!   satisfying a linear recurrence has generating function
//!   `A(t) = N(t)/R(t)` with `R` the reversed recurrence polynomial and `N`
//!   the truncated product of `R` with the initial values;
//! - for two or more active axes the data must be finitely supported there.
//!
//! So `F` is rational whenever the data is recurrent: [`assemble_gf`] builds
//! it exactly. [`char_product_series`] expands `P·F` straight from the data
//! by four equivalent summation routes, and [`verify`] cross-checks the whole
//! pipeline against the dynamic-programming solver.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::algebra::{
    box_points, box_points_between, expand_at_infinity, format_rational, monomial_fn, CoeffTable,
    LaurentPoly, MultiIndex, Rational, RationalFn,
};
use crate::problem::{faces, in_x0, CauchyData, DifferenceEquation, RaySpec};
use crate::solver::solve_box;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenfunError {
    /// A face with two or more active axes carries infinitely many nonzero
    /// data values; only finite support is representable there.
    #[error("face at τ={tau}, flags {flags}: data has infinitely many nonzero values")]
    UnsupportedFaceData { tau: MultiIndex, flags: MultiIndex },
    #[error("{tau0} is not in X₀")]
    Tau0NotInX0 { tau0: MultiIndex },
}

impl GenfunError {
    /// Stable machine-readable name, part of the diagnostic contract.
    pub fn code(&self) -> &'static str {
        match self {
            GenfunError::UnsupportedFaceData { .. } => "UnsupportedFaceData",
            GenfunError::Tau0NotInX0 { .. } => "Tau0NotInX0",
        }
    }
}

/// The rational series of data values along one face ray.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceSeries {
    pub tau: MultiIndex,
    pub flags: MultiIndex,
    pub gf: RationalFn,
}

fn mi1(p: i64) -> MultiIndex {
    MultiIndex::new(vec![p])
}

/// Generating function of the ray's values from local index `shift` on:
/// `Σ_{y≥0} a_{shift+y} t^y` as a univariate `num/den` pair.
///
/// Moivre: `R(t) = Σ_j d_j t^{s-j}` kills the tail of `R·A`, so
/// `A = N/R` with `N` the degree-< s part of `R` times the initial values.
/// The tail subtracts the explicit prefix and divides by `t^shift`; the low
/// coefficients cancel exactly, so the division is a plain exponent shift.
fn ray_tail_gf(ray: &RaySpec, shift: i64) -> (LaurentPoly, LaurentPoly) {
    assert!(shift >= 0);
    let s = ray.order();
    let r_poly = LaurentPoly::from_terms(
        1,
        ray.rec
            .iter()
            .enumerate()
            .map(|(j, d)| (mi1((s - j) as i64), d.clone())),
    );
    let prefix = LaurentPoly::from_terms(
        1,
        ray.initial
            .iter()
            .enumerate()
            .map(|(p, a)| (mi1(p as i64), a.clone())),
    );
    let n_poly = LaurentPoly::from_terms(
        1,
        (&r_poly * &prefix)
            .terms()
            .filter(|(e, _)| e[0] < s as i64)
            .map(|(e, c)| (e.clone(), c.clone())),
    );
    if shift == 0 {
        return (n_poly, r_poly);
    }
    let low_prefix = LaurentPoly::from_terms(1, (0..shift).map(|p| (mi1(p), ray.value_at(p))));
    let num = (&n_poly - &(&r_poly * &low_prefix)).shift(&mi1(-shift));
    assert!(num.is_ordinary(), "prefix must cancel exactly");
    (num, r_poly)
}

/// Substitute `t = 1/z_axis` into a univariate polynomial.
fn into_axis_reciprocal(p: &LaurentPoly, dim: usize, axis: usize) -> LaurentPoly {
    LaurentPoly::from_terms(
        dim,
        p.terms().map(|(e, c)| {
            (
                MultiIndex::zeros(dim).with_component(axis, -e[0]),
                c.clone(),
            )
        }),
    )
}

/// The face series `Φ_{τ,J}` as an exact rational function.
///
/// Errors with [`GenfunError::UnsupportedFaceData`] when a face with two or
/// more active axes meets a ray whose values there are not eventually zero.
pub fn face_series(
    data: &CauchyData,
    tau: &MultiIndex,
    flags: &MultiIndex,
    m: &MultiIndex,
) -> Result<FaceSeries, GenfunError> {
    let dim = m.dim();
    assert_eq!(tau.dim(), dim, "dimension mismatch");
    assert_eq!(flags.dim(), dim, "dimension mismatch");
    for k in 0..dim {
        assert!(flags[k] == 0 || flags[k] == 1, "flags must be 0/1");
        assert!(
            if flags[k] == 1 { tau[k] == m[k] } else { (0..m[k]).contains(&tau[k]) },
            "τ must lie on the face"
        );
    }
    let active: Vec<usize> = (0..dim).filter(|&k| flags[k] == 1).collect();
    let shift_full = (&tau.negated()) - &MultiIndex::ones(dim);

    let gf = match active.len() {
        0 => monomial_fn(shift_full, data.eval(tau)),
        1 => {
            let axis = active[0];
            let (num_t, den_t) = line_series(data, tau, axis);
            let num = into_axis_reciprocal(&num_t, dim, axis).shift(&shift_full);
            let den = into_axis_reciprocal(&den_t, dim, axis);
            RationalFn::new(num, den)
        }
        _ => {
            let points = cone_support(data, tau, &active).ok_or_else(|| {
                GenfunError::UnsupportedFaceData {
                    tau: tau.clone(),
                    flags: flags.clone(),
                }
            })?;
            let mut num = LaurentPoly::zero(dim);
            for x in points {
                num.add_term(
                    (&x.negated()) - &MultiIndex::ones(dim),
                    data.eval(&x),
                );
            }
            RationalFn::from_poly(num)
        }
    };
    Ok(FaceSeries {
        tau: tau.clone(),
        flags: flags.clone(),
        gf,
    })
}

/// Data series along the line `{τ + y·e_axis : y ≥ 0}` as `num(t)/den(t)`
/// with `t` the local variable.
fn line_series(data: &CauchyData, tau: &MultiIndex, axis: usize) -> (LaurentPoly, LaurentPoly) {
    let dim = tau.dim();
    // covering rays run along the same axis through the same off-axis point;
    // the one anchored lowest covers every other's domain
    let covering = data
        .rays()
        .iter()
        .filter(|r| {
            r.anchor.dim() == dim
                && r.axis == axis
                && (0..dim).all(|j| j == axis || r.anchor[j] == tau[j])
        })
        .min_by_key(|r| r.anchor[axis]);

    match covering {
        Some(ray) if ray.anchor[axis] <= tau[axis] => ray_tail_gf(ray, tau[axis] - ray.anchor[axis]),
        Some(ray) => {
            // explicit values fill the gap before the ray starts
            let gap = ray.anchor[axis] - tau[axis];
            let prefix = LaurentPoly::from_terms(
                1,
                (0..gap).map(|y| (mi1(y), data.eval(&tau.with_component(axis, tau[axis] + y)))),
            );
            let (tail_num, den) = ray_tail_gf(ray, 0);
            let num = &(&prefix * &den) + &tail_num.shift(&mi1(gap));
            (num, den)
        }
        None => {
            // finite support: entries on the line plus single crossing-ray hits
            let mut offsets: BTreeSet<i64> = BTreeSet::new();
            for (x, _) in data.entries() {
                if x.dim() == dim
                    && (0..dim).all(|j| j == axis || x[j] == tau[j])
                    && x[axis] >= tau[axis]
                {
                    offsets.insert(x[axis] - tau[axis]);
                }
            }
            for ray in data.rays() {
                if ray.anchor.dim() != dim || ray.axis == axis {
                    continue;
                }
                let off_axis_match = (0..dim)
                    .all(|j| j == axis || j == ray.axis || ray.anchor[j] == tau[j]);
                if off_axis_match
                    && ray.anchor[axis] >= tau[axis]
                    && tau[ray.axis] >= ray.anchor[ray.axis]
                {
                    offsets.insert(ray.anchor[axis] - tau[axis]);
                }
            }
            let num = LaurentPoly::from_terms(
                1,
                offsets
                    .into_iter()
                    .map(|y| (mi1(y), data.eval(&tau.with_component(axis, tau[axis] + y)))),
            );
            (num, LaurentPoly::one(1))
        }
    }
}

/// Points of the cone `{τ + y supported on active}` that may carry nonzero
/// data; `None` when a ray makes the support infinite.
fn cone_support(
    data: &CauchyData,
    tau: &MultiIndex,
    active: &[usize],
) -> Option<BTreeSet<MultiIndex>> {
    let dim = tau.dim();
    let mut points: BTreeSet<MultiIndex> = BTreeSet::new();
    for (x, _) in data.entries() {
        if crate::problem::data::cone_contains(tau, active, x) {
            points.insert(x.clone());
        }
    }
    for ray in data.rays() {
        if ray.anchor.dim() != dim {
            continue;
        }
        if active.contains(&ray.axis) {
            // the ray runs along an active axis: if its other coordinates fit
            // the cone, the intersection is an infinite sub-ray
            let fits = (0..dim).all(|j| {
                if j == ray.axis {
                    true
                } else if active.contains(&j) {
                    ray.anchor[j] >= tau[j]
                } else {
                    ray.anchor[j] == tau[j]
                }
            });
            if !fits {
                continue;
            }
            let start = (tau[ray.axis] - ray.anchor[ray.axis]).max(0);
            let s = ray.order() as i64;
            // an eventually-zero recurrent sequence dies by index s, so a
            // window of s zeros at max(start, s) decides the whole tail
            let window_start = start.max(s);
            let tail_dead = (window_start..window_start + s)
                .all(|y| ray.value_at(y).is_zero());
            if !tail_dead {
                return None;
            }
            for y in start..window_start {
                points.insert(ray.point_at(y));
            }
        } else {
            // inactive axis: the cone pins it, at most one meeting point
            let fits = (0..dim).all(|j| {
                if j == ray.axis {
                    tau[j] >= ray.anchor[j]
                } else if active.contains(&j) {
                    ray.anchor[j] >= tau[j]
                } else {
                    ray.anchor[j] == tau[j]
                }
            });
            if fits {
                let mut x = ray.anchor.clone();
                x = x.with_component(ray.axis, tau[ray.axis]);
                points.insert(x);
            }
        }
    }
    Some(points)
}

/// Generating function `Φ(z) = Σ_J Σ_{τ∈Γ_J} Φ_{τ,J}(z)` of the data.
pub fn data_gf(data: &CauchyData, m: &MultiIndex) -> Result<RationalFn, GenfunError> {
    let mut acc = RationalFn::zero(m.dim());
    for face in faces(m) {
        for tau in face.points() {
            let fs = face_series(data, tau, face.flags(), m)?;
            if !fs.gf.is_zero() {
                acc = &acc + &fs.gf;
            }
        }
    }
    Ok(acc)
}

/// The generating function of the solution:
/// `F = (Σ_J Σ_{τ∈Γ_J} Φ_{τ,J}·P_τ) / P`, in canonical form.
pub fn assemble_gf(
    eq: &DifferenceEquation,
    data: &CauchyData,
) -> Result<RationalFn, GenfunError> {
    assert_eq!(eq.dim(), data.dim(), "dimension mismatch");
    let m = eq.corner();
    let mut sum = RationalFn::zero(eq.dim());
    for face in faces(m) {
        for tau in face.points() {
            let fs = face_series(data, tau, face.flags(), m)?;
            if fs.gf.is_zero() {
                continue;
            }
            sum = &sum + &fs.gf.mul_poly(&eq.boundary_poly(tau));
        }
    }
    Ok(sum.div(&RationalFn::from_poly(eq.char_poly())))
}

/// Green's generating function: the solution for point-mass data at `τ0` is
/// `F_{τ0}(z) = P_{τ0}(z)·z^{-τ0-I} / P(z)`.
pub fn green_gf(eq: &DifferenceEquation, tau0: &MultiIndex) -> Result<RationalFn, GenfunError> {
    if !in_x0(tau0, eq.corner()) {
        return Err(GenfunError::Tau0NotInX0 {
            tau0: tau0.clone(),
        });
    }
    let shift = (&tau0.negated()) - &MultiIndex::ones(eq.dim());
    Ok(RationalFn::new(
        eq.boundary_poly(tau0).shift(&shift),
        eq.char_poly(),
    ))
}

/// The four equivalent ways to sum `P(z)·F(z)` straight from the data.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductRoute {
    /// `Σ_α c_α Σ_{τ≥0, τ≱α} φ(τ) z^{α-τ-I}`: each equation term shifts the
    /// data series.
    ShiftedData,
    /// Collect the same double sum by output exponent: coefficient of
    /// `z^{τ-I}` is `Σ_{τ≤α≤m} c_α φ(α-τ)` over `τ ≤ m, τ ≰ 0`.
    GroupedExponents,
    /// `P·Φ - Σ_τ (Σ_{α≤τ} c_α z^α) φ(τ) z^{-τ-I}`: full characteristic
    /// polynomial minus its lower part at every data point.
    LowerPartial,
    /// `Σ_τ P_τ(z) φ(τ) z^{-τ-I}`: boundary polynomials directly.
    BoundaryWeighted,
}

impl ProductRoute {
    pub const ALL: [ProductRoute; 4] = [
        ProductRoute::ShiftedData,
        ProductRoute::GroupedExponents,
        ProductRoute::LowerPartial,
        ProductRoute::BoundaryWeighted,
    ];
}

impl fmt::Display for ProductRoute {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            ProductRoute::ShiftedData => "shifted-data",
            ProductRoute::GroupedExponents => "grouped-exponents",
            ProductRoute::LowerPartial => "lower-partial",
            ProductRoute::BoundaryWeighted => "boundary-weighted",
        };
        f.write_str(name)
    }
}

/// Truncated expansion of `P(z)·F(z)` computed from the data alone, complete
/// on the window `e ≥ -(order+1)·I`. All four routes return identical tables.
///
/// Only data points with `τ ≤ m + order·I` can touch the window, which makes
/// every route a finite sum; rays contribute through their recurrences.
pub fn char_product_series(
    eq: &DifferenceEquation,
    data: &CauchyData,
    route: ProductRoute,
    order: i64,
) -> CoeffTable {
    assert_eq!(eq.dim(), data.dim(), "dimension mismatch");
    assert!(order >= 0, "order must be nonnegative");
    let dim = eq.dim();
    let m = eq.corner();
    let ones = MultiIndex::ones(dim);
    let mut table = CoeffTable::new(dim, order);

    match route {
        ProductRoute::ShiftedData => {
            for (alpha, c) in eq.coeffs() {
                let reach = alpha + &MultiIndex::splat(dim, order);
                for tau in box_points(&reach) {
                    if tau.geq(alpha) {
                        continue; // τ ≱ α required
                    }
                    let phi = data.eval(&tau);
                    if phi.is_zero() {
                        continue;
                    }
                    table.add_term(&(alpha - &tau) - &ones, c * &phi);
                }
            }
        }
        ProductRoute::GroupedExponents => {
            let lo = MultiIndex::splat(dim, -order);
            let zero = MultiIndex::zeros(dim);
            for tau in box_points_between(&lo, m) {
                if tau.leq(&zero) {
                    continue; // τ ≰ 0 required
                }
                let mut inner = Rational::zero();
                for (alpha, c) in eq.coeffs() {
                    if alpha.geq(&tau) {
                        inner += c * &data.eval(&(alpha - &tau));
                    }
                }
                table.add_term(&tau - &ones, inner);
            }
        }
        ProductRoute::LowerPartial => {
            let p = eq.char_poly();
            let reach = m + &MultiIndex::splat(dim, order);
            for tau in box_points(&reach) {
                if !in_x0(&tau, m) {
                    continue;
                }
                let phi = data.eval(&tau);
                if phi.is_zero() {
                    continue;
                }
                for (alpha, c) in p.terms() {
                    table.add_term(&(alpha - &tau) - &ones, c * &phi);
                }
                for (alpha, c) in eq.coeffs() {
                    if alpha.leq(&tau) {
                        table.add_term(&(alpha - &tau) - &ones, -(c * &phi));
                    }
                }
            }
        }
        ProductRoute::BoundaryWeighted => {
            let reach = m + &MultiIndex::splat(dim, order);
            for tau in box_points(&reach) {
                if !in_x0(&tau, m) {
                    continue;
                }
                let phi = data.eval(&tau);
                if phi.is_zero() {
                    continue;
                }
                for (alpha, c) in eq.coeffs() {
                    if !alpha.leq(&tau) {
                        table.add_term(&(alpha - &tau) - &ones, c * &phi);
                    }
                }
            }
        }
    }
    table
}

/// One verification check with a human-readable outcome.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Structured cross-verification report; failures are entries, not aborts.
#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            if c.passed {
                writeln!(f, "PASS {}", c.name)?;
            } else {
                writeln!(f, "FAIL {}: {}", c.name, c.detail)?;
            }
        }
        Ok(())
    }
}

/// Cross-verify the generating-function pipeline against the solver on the
/// box `[0, bound]`:
///
/// 1. data overlap consistency;
/// 2. expansion of the assembled `F` equals the dynamic-programming table,
///    exactly, entry by entry;
/// 3. the four [`char_product_series`] routes agree;
/// 4. `P·F - Σ Φ_{τ,J}·P_τ = 0` as rational functions.
pub fn verify(eq: &DifferenceEquation, data: &CauchyData, bound: &MultiIndex) -> VerifyReport {
    let mut checks = Vec::new();
    let m = eq.corner();

    // 1: data consistency (reported, not fatal: the remaining checks expose
    // what an inconsistency does to the two pipelines)
    let issues = data.consistency_issues(m);
    checks.push(Check {
        name: "data-consistency",
        passed: issues.is_empty(),
        detail: issues
            .iter()
            .map(|i| i.to_string())
            .collect::<Vec<_>>()
            .join("; "),
    });

    // assembled generating function, shared by checks 2 and 4
    let assembled = assemble_gf(eq, data);

    // 2: oracle equivalence
    let oracle = (|| -> Result<Check, String> {
        let f = assembled.as_ref().map_err(|e| e.to_string())?;
        let table = solve_box(eq, data, bound).map_err(|e| e.to_string())?;
        let order = (0..bound.dim()).map(|j| bound[j]).max().unwrap_or(0);
        let series = expand_at_infinity(f, order).map_err(|e| e.to_string())?;
        for x in box_points(bound) {
            let dp = table.value(&x).clone();
            let gf = series.solution_value(&x).expect("inside window");
            if dp != gf {
                return Ok(Check {
                    name: "oracle-equivalence",
                    passed: false,
                    detail: format!(
                        "first mismatch at {x}: solver {} vs series {}",
                        format_rational(&dp),
                        format_rational(&gf)
                    ),
                });
            }
        }
        Ok(Check {
            name: "oracle-equivalence",
            passed: true,
            detail: String::new(),
        })
    })();
    checks.push(oracle.unwrap_or_else(|e| Check {
        name: "oracle-equivalence",
        passed: false,
        detail: e,
    }));

    // 3: route agreement
    let order = (0..bound.dim()).map(|j| bound[j]).max().unwrap_or(0);
    let reference = char_product_series(eq, data, ProductRoute::ShiftedData, order);
    let mut route_detail = String::new();
    for route in &ProductRoute::ALL[1..] {
        let t = char_product_series(eq, data, *route, order);
        if t != reference {
            route_detail = format!("route {route} disagrees with route shifted-data");
            break;
        }
    }
    checks.push(Check {
        name: "route-agreement",
        passed: route_detail.is_empty(),
        detail: route_detail,
    });

    // 4: assembly identity
    let identity = match &assembled {
        Ok(f) => {
            let pf = f.mul_poly(&eq.char_poly());
            let mut sum = RationalFn::zero(eq.dim());
            let mut face_err = None;
            for face in faces(m) {
                for tau in face.points() {
                    match face_series(data, tau, face.flags(), m) {
                        Ok(fs) if !fs.gf.is_zero() => {
                            sum = &sum + &fs.gf.mul_poly(&eq.boundary_poly(tau));
                        }
                        Ok(_) => {}
                        Err(e) => face_err = Some(e.to_string()),
                    }
                }
            }
            match face_err {
                Some(e) => Check {
                    name: "assembly-identity",
                    passed: false,
                    detail: e,
                },
                None => {
                    let diff = &pf - &sum;
                    Check {
                        name: "assembly-identity",
                        passed: diff.is_zero(),
                        detail: if diff.is_zero() {
                            String::new()
                        } else {
                            format!("P·F - Σ Φ·P_τ = {diff}")
                        },
                    }
                }
            }
        }
        Err(e) => Check {
            name: "assembly-identity",
            passed: false,
            detail: e.to_string(),
        },
    };
    checks.push(identity);

    VerifyReport { checks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, rat_int};
    use crate::solver::green_box;

    fn mi(c: &[i64]) -> MultiIndex {
        MultiIndex::from_slice(c)
    }

    fn upoly(dim: usize, coeffs: &[(&[i64], i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(
            dim,
            coeffs.iter().map(|&(e, c)| (mi(e), rat_int(c))),
        )
    }

    /// r(x+2,y+1) - r(x+1,y+1) - r(x+1,y) - r(x,y+1) + r(x,y) = 0
    fn isolated_elements_eq() -> DifferenceEquation {
        DifferenceEquation::new(
            mi(&[2, 1]),
            [
                (mi(&[2, 1]), rat_int(1)),
                (mi(&[1, 1]), rat_int(-1)),
                (mi(&[1, 0]), rat_int(-1)),
                (mi(&[0, 1]), rat_int(-1)),
                (mi(&[0, 0]), rat_int(1)),
            ],
        )
        .unwrap()
    }

    /// φ(0,0)=1, φ(1,0)=0, φ(x,0)=φ(x-1,0)+φ(x-2,0), φ(1,1)=1, zero elsewhere.
    fn isolated_elements_data() -> CauchyData {
        CauchyData::new(
            2,
            [(mi(&[1, 1]), rat_int(1))],
            vec![RaySpec {
                anchor: mi(&[0, 0]),
                axis: 0,
                rec: vec![rat_int(-1), rat_int(-1), rat_int(1)],
                initial: vec![rat_int(1), rat_int(0)],
            }],
        )
    }

    fn fib_eq() -> DifferenceEquation {
        DifferenceEquation::new(
            mi(&[2]),
            [
                (mi(&[2]), rat_int(1)),
                (mi(&[1]), rat_int(-1)),
                (mi(&[0]), rat_int(-1)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn moivre_numerator_for_fibonacci_values() {
        // values 1, 0, 1, 1, 2, ... => A(t) = (1-t)/(1-t-t^2)
        let ray = RaySpec {
            anchor: mi(&[0, 0]),
            axis: 0,
            rec: vec![rat_int(-1), rat_int(-1), rat_int(1)],
            initial: vec![rat_int(1), rat_int(0)],
        };
        let (num, den) = ray_tail_gf(&ray, 0);
        assert_eq!(num, upoly(1, &[(&[0], 1), (&[1], -1)]));
        assert_eq!(den, upoly(1, &[(&[2], -1), (&[1], -1), (&[0], 1)]));
        // tail from index 2: (A - 1)/t^2 = 1/(1-t-t^2)
        let (num2, den2) = ray_tail_gf(&ray, 2);
        assert_eq!(num2, LaurentPoly::one(1));
        assert_eq!(den2, den);
    }

    #[test]
    fn face_series_matches_worked_example() {
        let m = mi(&[2, 1]);
        let data = isolated_elements_data();

        // Φ_{(0,0)} = 1/(zw)
        let f00 = face_series(&data, &mi(&[0, 0]), &mi(&[0, 0]), &m).unwrap();
        assert_eq!(
            f00.gf,
            RationalFn::new(LaurentPoly::one(2), upoly(2, &[(&[1, 1], 1)]))
        );

        // Φ_{(1,0)} = 0
        let f10 = face_series(&data, &mi(&[1, 0]), &mi(&[0, 0]), &m).unwrap();
        assert!(f10.gf.is_zero());

        // Φ_{(0,1)} = 0
        let f01 = face_series(&data, &mi(&[0, 1]), &mi(&[0, 1]), &m).unwrap();
        assert!(f01.gf.is_zero());

        // Φ_{(1,1)} = 1/(z^2 w^2)
        let f11 = face_series(&data, &mi(&[1, 1]), &mi(&[0, 1]), &m).unwrap();
        assert_eq!(
            f11.gf,
            RationalFn::new(LaurentPoly::one(2), upoly(2, &[(&[2, 2], 1)]))
        );

        // Φ_{(2,0)} = 1/(zw(z^2-z-1))
        let f20 = face_series(&data, &mi(&[2, 0]), &mi(&[1, 0]), &m).unwrap();
        let zw = upoly(2, &[(&[1, 1], 1)]);
        let zz = upoly(2, &[(&[2, 0], 1), (&[1, 0], -1), (&[0, 0], -1)]);
        assert_eq!(f20.gf, RationalFn::new(LaurentPoly::one(2), &zw * &zz));

        // corner face carries only the zero extension
        let fm = face_series(&data, &mi(&[2, 1]), &mi(&[1, 1]), &m).unwrap();
        assert!(fm.gf.is_zero());
    }

    #[test]
    fn face_series_expansion_agrees_with_data_values() {
        // each Φ_{τ,J} must expand to φ(τ+Jy) along its ray
        let m = mi(&[2, 1]);
        let data = isolated_elements_data();
        for face in faces(&m) {
            for tau in face.points() {
                let fs = face_series(&data, tau, face.flags(), &m).unwrap();
                let table = expand_at_infinity(&fs.gf, 8).unwrap();
                for x in box_points(&mi(&[8, 8])) {
                    let expected = if crate::problem::data::cone_contains(
                        tau,
                        &face.active_axes(),
                        &x,
                    ) && in_x0(&x, &m)
                    {
                        data.eval(&x)
                    } else {
                        rat_int(0)
                    };
                    assert_eq!(
                        table.solution_value(&x).unwrap(),
                        expected,
                        "Φ at τ={tau} J={} point {x}",
                        face.flags()
                    );
                }
            }
        }
    }

    #[test]
    fn data_gf_of_worked_example() {
        let m = mi(&[2, 1]);
        let phi = data_gf(&isolated_elements_data(), &m).unwrap();
        // 1/(zw) + 1/(z^2 w^2) + 1/(zw(z^2-z-1))
        let zw = upoly(2, &[(&[1, 1], 1)]);
        let z2w2 = upoly(2, &[(&[2, 2], 1)]);
        let zz = upoly(2, &[(&[2, 0], 1), (&[1, 0], -1), (&[0, 0], -1)]);
        let expected = &(&RationalFn::new(LaurentPoly::one(2), zw.clone())
            + &RationalFn::new(LaurentPoly::one(2), z2w2))
            + &RationalFn::new(LaurentPoly::one(2), &zw * &zz);
        assert!(phi.eq_cross(&expected));
    }

    #[test]
    fn data_gf_of_delta_and_zero() {
        let m = mi(&[2, 1]);
        let delta = CauchyData::delta(2, mi(&[0, 0]));
        let gf = data_gf(&delta, &m).unwrap();
        assert_eq!(
            gf,
            RationalFn::new(LaurentPoly::one(2), upoly(2, &[(&[1, 1], 1)]))
        );
        let zero = CauchyData::finite_support(2, []);
        assert!(data_gf(&zero, &m).unwrap().is_zero());
    }

    #[test]
    fn assembled_gf_of_worked_example() {
        let f = assemble_gf(&isolated_elements_eq(), &isolated_elements_data()).unwrap();
        // (z-1)/(z^2 w - z w - w - z + 1)
        let expected = RationalFn::new(
            upoly(2, &[(&[1, 0], 1), (&[0, 0], -1)]),
            upoly(
                2,
                &[
                    (&[2, 1], 1),
                    (&[1, 1], -1),
                    (&[0, 1], -1),
                    (&[1, 0], -1),
                    (&[0, 0], 1),
                ],
            ),
        );
        assert!(f.eq_cross(&expected));
    }

    #[test]
    fn assembled_gf_of_fibonacci_is_exact() {
        let data = CauchyData::finite_support(1, [(mi(&[1]), rat_int(1))]);
        let f = assemble_gf(&fib_eq(), &data).unwrap();
        let expected = RationalFn::new(
            LaurentPoly::one(1),
            upoly(1, &[(&[2], 1), (&[1], -1), (&[0], -1)]),
        );
        assert_eq!(f, expected); // canonical forms coincide, not just eq_cross
    }

    #[test]
    fn constant_solution_has_geometric_gf() {
        // f(x+1) - f(x) = 0 with φ(0) = c gives c/(z-1)
        let eq = DifferenceEquation::new(
            mi(&[1]),
            [(mi(&[1]), rat_int(1)), (mi(&[0]), rat_int(-1))],
        )
        .unwrap();
        let c = rat(5, 3);
        let data = CauchyData::finite_support(1, [(mi(&[0]), c.clone())]);
        let f = assemble_gf(&eq, &data).unwrap();
        let expected = RationalFn::new(
            LaurentPoly::constant(1, c),
            upoly(1, &[(&[1], 1), (&[0], -1)]),
        );
        assert!(f.eq_cross(&expected));
    }

    #[test]
    fn green_gf_examples() {
        // shift equation: τ0 = 0 gives 1/(z-1)
        let shift = DifferenceEquation::new(
            mi(&[1]),
            [(mi(&[1]), rat_int(1)), (mi(&[0]), rat_int(-1))],
        )
        .unwrap();
        let g = green_gf(&shift, &mi(&[0])).unwrap();
        assert_eq!(
            g,
            RationalFn::new(LaurentPoly::one(1), upoly(1, &[(&[1], 1), (&[0], -1)]))
        );

        // worked example at (0,0): (z^2 w - z w - z - w)/(zw·P)
        let eq = isolated_elements_eq();
        let g = green_gf(&eq, &mi(&[0, 0])).unwrap();
        let num = upoly(
            2,
            &[(&[2, 1], 1), (&[1, 1], -1), (&[1, 0], -1), (&[0, 1], -1)],
        );
        let den = &upoly(2, &[(&[1, 1], 1)]) * &eq.char_poly();
        assert_eq!(g, RationalFn::new(num, den));

        // m itself is not in X₀
        assert!(matches!(
            green_gf(&eq, &mi(&[2, 1])),
            Err(GenfunError::Tau0NotInX0 { .. })
        ));
    }

    #[test]
    fn green_gf_expansion_matches_green_box() {
        let g = green_gf(&fib_eq(), &mi(&[1])).unwrap();
        let series = expand_at_infinity(&g, 8).unwrap();
        let table = green_box(&fib_eq(), &mi(&[1]), &mi(&[8])).unwrap();
        for x in table.points() {
            assert_eq!(&series.solution_value(&x).unwrap(), table.value(&x));
        }
        // 0, 1, 1, 2, 3, ...
        assert_eq!(series.solution_value(&mi(&[0])).unwrap(), rat_int(0));
        assert_eq!(series.solution_value(&mi(&[4])).unwrap(), rat_int(3));
    }

    #[test]
    fn green_gf_equals_assembled_delta() {
        let eq = isolated_elements_eq();
        for tau0 in box_points(&mi(&[3, 3])) {
            if !in_x0(&tau0, eq.corner()) {
                continue;
            }
            let g = green_gf(&eq, &tau0).unwrap();
            let via_delta =
                assemble_gf(&eq, &CauchyData::delta(2, tau0.clone())).unwrap();
            assert!(g.eq_cross(&via_delta), "τ0 = {tau0}");
        }
    }

    #[test]
    fn product_routes_on_fibonacci() {
        let data = CauchyData::finite_support(1, [(mi(&[1]), rat_int(1))]);
        let t = char_product_series(&fib_eq(), &data, ProductRoute::GroupedExponents, 6);
        // P·F = 1: a single constant term
        let terms: Vec<_> = t.terms().collect();
        assert_eq!(terms, vec![(&mi(&[0]), &rat_int(1))]);
    }

    #[test]
    fn product_routes_on_worked_example() {
        let eq = isolated_elements_eq();
        let data = isolated_elements_data();
        // P·F = z - 1 on every route at any order
        for route in ProductRoute::ALL {
            let t = char_product_series(&eq, &data, route, 4);
            let terms: Vec<_> = t.terms().collect();
            assert_eq!(
                terms,
                vec![(&mi(&[0, 0]), &rat_int(-1)), (&mi(&[1, 0]), &rat_int(1))],
                "route {route}"
            );
        }
    }

    #[test]
    fn product_routes_agree_pairwise() {
        let eq = isolated_elements_eq();
        let data = isolated_elements_data();
        let reference = char_product_series(&eq, &data, ProductRoute::ShiftedData, 7);
        for route in &ProductRoute::ALL[1..] {
            assert_eq!(char_product_series(&eq, &data, *route, 7), reference);
        }
    }

    #[test]
    fn product_series_of_zero_data_is_zero() {
        let eq = isolated_elements_eq();
        let data = CauchyData::finite_support(2, []);
        let t = char_product_series(&eq, &data, ProductRoute::LowerPartial, 5);
        assert!(t.is_empty());
    }

    #[test]
    fn unsupported_face_data_is_detected() {
        // 3-D: a live ray runs inside the two-axis face cone
        let m = mi(&[1, 1, 1]);
        let ray = RaySpec {
            anchor: mi(&[0, 1, 0]),
            axis: 0,
            rec: vec![rat_int(-1), rat_int(1)],
            initial: vec![rat_int(1)],
        }; // constant ones along (y, 1, 0)
        let data = CauchyData::new(3, [], vec![ray]);
        let err = face_series(&data, &mi(&[1, 1, 0]), &mi(&[1, 1, 0]), &m).unwrap_err();
        assert!(matches!(err, GenfunError::UnsupportedFaceData { .. }));
    }

    #[test]
    fn eventually_zero_ray_in_cone_is_fine() {
        // same geometry, but the ray dies after its first value
        let m = mi(&[1, 1, 1]);
        let ray = RaySpec {
            anchor: mi(&[0, 1, 0]),
            axis: 0,
            rec: vec![rat_int(0), rat_int(1)],
            initial: vec![rat_int(7)],
        }; // values 7, 0, 0, ...
        let data = CauchyData::new(3, [], vec![ray]);
        // cone from (1,1,0): the ray's nonzero value sits outside (index 0)
        let fs = face_series(&data, &mi(&[1, 1, 0]), &mi(&[1, 1, 0]), &m).unwrap();
        assert!(fs.gf.is_zero());
        // cone from (0,...) via the J=(1,1,0) face needs τ on the face; use
        // the face point (1,1,0) only — the nonzero value is caught through
        // the (0,1,0) singleton face instead
        let f0 = face_series(&data, &mi(&[0, 1, 0]), &mi(&[0, 1, 0]), &m).unwrap();
        assert_eq!(
            f0.gf,
            monomial_fn(mi(&[-1, -2, -1]), rat_int(7))
        );
    }

    #[test]
    fn verify_passes_on_worked_example() {
        let report = verify(
            &isolated_elements_eq(),
            &isolated_elements_data(),
            &mi(&[10, 6]),
        );
        assert!(report.all_passed(), "{report}");
    }

    #[test]
    fn verify_passes_on_fibonacci() {
        let data = CauchyData::finite_support(1, [(mi(&[1]), rat_int(1))]);
        let report = verify(&fib_eq(), &data, &mi(&[12]));
        assert!(report.all_passed(), "{report}");
    }

    #[test]
    fn verify_report_prints_one_line_per_check() {
        let data = CauchyData::finite_support(1, [(mi(&[1]), rat_int(1))]);
        let report = verify(&fib_eq(), &data, &mi(&[6]));
        let text = report.to_string();
        assert_eq!(text.lines().count(), report.checks.len());
        assert!(text.lines().all(|l| l.starts_with("PASS")));
    }

    #[test]
    fn superposition_of_assembled_gfs() {
        // F(d1 + d2) equals F(d1) + F(d2) under cross multiplication
        let eq = isolated_elements_eq();
        let d1 = CauchyData::finite_support(2, [(mi(&[0, 0]), rat_int(2))]);
        let d2 = CauchyData::finite_support(2, [(mi(&[1, 1]), rat(1, 3))]);
        let sum_data = CauchyData::finite_support(
            2,
            [(mi(&[0, 0]), rat_int(2)), (mi(&[1, 1]), rat(1, 3))],
        );
        let f1 = assemble_gf(&eq, &d1).unwrap();
        let f2 = assemble_gf(&eq, &d2).unwrap();
        let fs = assemble_gf(&eq, &sum_data).unwrap();
        assert!(fs.eq_cross(&(&f1 + &f2)));
    }
}
