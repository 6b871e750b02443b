//! JSON schemas for problems, generating functions, and coefficient tables.
//!
//! All rationals travel as strings `"p"` or `"p/q"`; no floating point crosses
//! the I/O boundary. Term lists are sorted by graded-lexicographic exponent
//! order, so identical inputs serialize to identical bytes.

use serde::{Deserialize, Serialize};

use recgf::algebra::{
    box_points, format_rational, parse_rational, CoeffTable, LaurentPoly, MultiIndex, RationalFn,
};
use recgf::problem::{CauchyData, DifferenceEquation, RaySpec};
use recgf::solver::SolutionTable;

use crate::error::CliError;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct TermEntry {
    pub alpha: Vec<i64>,
    pub c: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct DataEntry {
    pub x: Vec<i64>,
    pub value: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct RayEntry {
    pub anchor: Vec<i64>,
    pub direction: usize,
    pub rec_coeffs: Vec<String>,
    pub initial: Vec<String>,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize, PartialEq, Eq)]
pub struct DataSection {
    #[serde(default)]
    pub entries: Vec<DataEntry>,
    #[serde(default)]
    pub rays: Vec<RayEntry>,
}

/// A Cauchy problem: equation plus data.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ProblemFile {
    pub dim: usize,
    pub m: Vec<i64>,
    pub coeffs: Vec<TermEntry>,
    #[serde(default)]
    pub data: DataSection,
}

/// A rational function with named variables.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct GfFile {
    pub variables: Vec<String>,
    pub numerator: Vec<TermEntry>,
    pub denominator: Vec<TermEntry>,
}

/// Dense table of exact values over a box, plus any terms of a Laurent
/// expansion that fall outside the solution window.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct TableFile {
    pub dim: usize,
    pub bounds: Vec<i64>,
    pub values: Vec<DataEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub extra_terms: Vec<TermEntry>,
}

fn parse_at(location: String, s: &str) -> Result<recgf::algebra::Rational, CliError> {
    parse_rational(s).map_err(|e| CliError::BadRational {
        location,
        message: e.to_string(),
    })
}

impl ProblemFile {
    /// Validate structure and build the domain pair. Overlap consistency is
    /// a separate, command-dependent step.
    pub fn into_parts(self) -> Result<(DifferenceEquation, CauchyData), CliError> {
        if self.m.len() != self.dim {
            return Err(CliError::BadInput(format!(
                "`m` has {} components but `dim` is {}",
                self.m.len(),
                self.dim
            )));
        }
        let m = MultiIndex::new(self.m);

        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for (i, t) in self.coeffs.iter().enumerate() {
            coeffs.push((
                MultiIndex::from_slice(&t.alpha),
                parse_at(format!("coeffs[{i}].c"), &t.c)?,
            ));
        }
        let eq = DifferenceEquation::new(m, coeffs).map_err(CliError::Equation)?;

        let mut entries = Vec::with_capacity(self.data.entries.len());
        for (i, e) in self.data.entries.iter().enumerate() {
            entries.push((
                MultiIndex::from_slice(&e.x),
                parse_at(format!("data.entries[{i}].value"), &e.value)?,
            ));
        }
        let mut rays = Vec::with_capacity(self.data.rays.len());
        for (i, r) in self.data.rays.iter().enumerate() {
            let rec = r
                .rec_coeffs
                .iter()
                .enumerate()
                .map(|(j, s)| parse_at(format!("data.rays[{i}].rec_coeffs[{j}]"), s))
                .collect::<Result<Vec<_>, _>>()?;
            let initial = r
                .initial
                .iter()
                .enumerate()
                .map(|(j, s)| parse_at(format!("data.rays[{i}].initial[{j}]"), s))
                .collect::<Result<Vec<_>, _>>()?;
            rays.push(RaySpec {
                anchor: MultiIndex::from_slice(&r.anchor),
                axis: r.direction,
                rec,
                initial,
            });
        }
        let data = CauchyData::new(self.dim, entries, rays);
        let issues = data.structural_issues(eq.corner());
        if !issues.is_empty() {
            return Err(CliError::Data(issues));
        }
        Ok((eq, data))
    }
}

fn terms_of(poly: &LaurentPoly) -> Vec<TermEntry> {
    poly.terms()
        .map(|(e, c)| TermEntry {
            alpha: e.components().to_vec(),
            c: format_rational(c),
        })
        .collect()
}

impl GfFile {
    pub fn from_ratfn(f: &RationalFn, variables: Vec<String>) -> Self {
        assert_eq!(variables.len(), f.dim(), "one variable name per axis");
        GfFile {
            variables,
            numerator: terms_of(f.num()),
            denominator: terms_of(f.den()),
        }
    }

    pub fn into_ratfn(self) -> Result<RationalFn, CliError> {
        let dim = self.variables.len();
        let read = |which: &str, terms: &[TermEntry]| -> Result<LaurentPoly, CliError> {
            let mut poly = LaurentPoly::zero(dim);
            for (i, t) in terms.iter().enumerate() {
                if t.alpha.len() != dim {
                    return Err(CliError::BadInput(format!(
                        "{which}[{i}].alpha has {} components but there are {} variables",
                        t.alpha.len(),
                        dim
                    )));
                }
                poly.add_term(
                    MultiIndex::from_slice(&t.alpha),
                    parse_at(format!("{which}[{i}].c"), &t.c)?,
                );
            }
            Ok(poly)
        };
        let num = read("numerator", &self.numerator)?;
        let den = read("denominator", &self.denominator)?;
        if den.is_zero() {
            return Err(CliError::BadInput(
                "denominator is the zero polynomial".into(),
            ));
        }
        Ok(RationalFn::new(num, den))
    }
}

impl TableFile {
    pub fn from_solution(table: &SolutionTable) -> Self {
        let mut points = table.points();
        points.sort(); // graded-lexicographic output order
        TableFile {
            dim: table.dim(),
            bounds: table.bound().components().to_vec(),
            values: points
                .into_iter()
                .map(|x| DataEntry {
                    value: format_rational(table.value(&x)),
                    x: x.components().to_vec(),
                })
                .collect(),
            extra_terms: Vec::new(),
        }
    }

    pub fn from_coeff_table(table: &CoeffTable) -> Self {
        let bound = MultiIndex::splat(table.dim(), table.order());
        let mut points = box_points(&bound);
        points.sort();
        TableFile {
            dim: table.dim(),
            bounds: bound.components().to_vec(),
            values: points
                .into_iter()
                .map(|x| DataEntry {
                    value: format_rational(&table.solution_value(&x).expect("inside window")),
                    x: x.components().to_vec(),
                })
                .collect(),
            extra_terms: table
                .extra_terms()
                .map(|(e, c)| TermEntry {
                    alpha: e.components().to_vec(),
                    c: format_rational(c),
                })
                .collect(),
        }
    }
}

/// Default axis names `z1, ..., zn`; an explicit comma-separated list (for
/// example `z,w` in two dimensions) overrides them.
pub fn variable_names(spec: Option<&str>, dim: usize) -> Result<Vec<String>, CliError> {
    match spec {
        None => Ok((1..=dim).map(|i| format!("z{i}")).collect()),
        Some(s) => {
            let names: Vec<String> = s.split(',').map(|p| p.trim().to_string()).collect();
            if names.len() != dim || names.iter().any(|n| n.is_empty()) {
                return Err(CliError::BadInput(format!(
                    "expected {dim} comma-separated variable names, got `{s}`"
                )));
            }
            Ok(names)
        }
    }
}

/// Comma-separated integers as a lattice point of the given dimension.
pub fn parse_index_list(s: &str, dim: usize, what: &str) -> Result<MultiIndex, CliError> {
    let parts: Vec<&str> = s.split(',').map(|p| p.trim()).collect();
    if parts.len() != dim {
        return Err(CliError::BadInput(format!(
            "{what} `{s}` has {} components, expected {dim}",
            parts.len()
        )));
    }
    let mut c = Vec::with_capacity(dim);
    for p in parts {
        c.push(p.parse::<i64>().map_err(|_| {
            CliError::BadInput(format!("{what} `{s}`: `{p}` is not an integer"))
        })?);
    }
    Ok(MultiIndex::new(c))
}
