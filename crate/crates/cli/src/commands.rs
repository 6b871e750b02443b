//! The five batch commands behind the `recgf` binary.
//!
//! Each command reads UTF-8 JSON, computes exactly, and writes deterministic
//! JSON (stable field order, terms sorted graded-lexicographically) to the
//! `--out` path or standard output.

use std::fs;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::Serialize;

use recgf::algebra::expand_at_infinity;
use recgf::genfun::{assemble_gf, green_gf, verify};
use recgf::problem::{CauchyData, DifferenceEquation};
use recgf::solver::solve_box;

use crate::error::CliError;
use crate::schema::{parse_index_list, variable_names, GfFile, ProblemFile, TableFile};

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.to_path_buf(),
        message: e.to_string(),
    })?;
    serde_json::from_str(&text).map_err(|e| CliError::Json {
        path: path.to_path_buf(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

fn write_json<T: Serialize>(out: Option<&Path>, value: &T) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(value).expect("serializable");
    text.push('\n');
    match out {
        Some(path) => fs::write(path, text).map_err(|e| CliError::Io {
            path: path.to_path_buf(),
            message: e.to_string(),
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

pub fn load_problem(path: &Path) -> Result<(DifferenceEquation, CauchyData), CliError> {
    read_json::<ProblemFile>(path)?.into_parts()
}

/// Overlap consistency is a hard input error for the computing commands;
/// `verify` instead reports it and keeps going.
fn require_consistent(eq: &DifferenceEquation, data: &CauchyData) -> Result<(), CliError> {
    let issues = data.consistency_issues(eq.corner());
    if issues.is_empty() {
        Ok(())
    } else {
        Err(CliError::Data(issues))
    }
}

/// Assemble the closed-form generating function of the problem's solution.
pub fn cmd_genfunc(
    problem: &Path,
    out: Option<&Path>,
    vars: Option<&str>,
) -> Result<(), CliError> {
    let (eq, data) = load_problem(problem)?;
    require_consistent(&eq, &data)?;
    let f = assemble_gf(&eq, &data).map_err(CliError::from_genfun)?;
    let names = variable_names(vars, eq.dim())?;
    write_json(out, &GfFile::from_ratfn(&f, names))
}

/// Solve on the box `[0, bound]` by exact dynamic programming.
pub fn cmd_solve(problem: &Path, box_spec: &str, out: Option<&Path>) -> Result<(), CliError> {
    let (eq, data) = load_problem(problem)?;
    require_consistent(&eq, &data)?;
    let bound = parse_index_list(box_spec, eq.dim(), "--box")?;
    let table = solve_box(&eq, &data, &bound)?;
    write_json(out, &TableFile::from_solution(&table))
}

/// Green's-function generating function for point-mass data at `--tau`.
pub fn cmd_green(
    problem: &Path,
    tau: &str,
    out: Option<&Path>,
    vars: Option<&str>,
) -> Result<(), CliError> {
    let (eq, _data) = load_problem(problem)?;
    let tau0 = parse_index_list(tau, eq.dim(), "--tau")?;
    let f = green_gf(&eq, &tau0).map_err(CliError::from_genfun)?;
    let names = variable_names(vars, eq.dim())?;
    write_json(out, &GfFile::from_ratfn(&f, names))
}

/// Expand a generating-function file into exact coefficients.
pub fn cmd_expand(gf: &Path, order: i64, out: Option<&Path>) -> Result<(), CliError> {
    if order < 0 {
        return Err(CliError::BadInput(format!(
            "--order must be nonnegative, got {order}"
        )));
    }
    let f = read_json::<GfFile>(gf)?.into_ratfn()?;
    let table = expand_at_infinity(&f, order).map_err(CliError::from_expand)?;
    write_json(out, &TableFile::from_coeff_table(&table))
}

/// Cross-verify the solver and the generating-function pipeline; prints the
/// report, one line per check. Data inconsistency shows up in the report
/// rather than aborting, so corrupted inputs are localized, not rejected.
pub fn cmd_verify(problem: &Path, box_spec: &str) -> Result<(), CliError> {
    let (eq, data) = load_problem(problem)?;
    let bound = parse_index_list(box_spec, eq.dim(), "--box")?;
    if !bound.geq(eq.corner()) {
        return Err(CliError::Solve(recgf::solver::SolveError::BoxTooSmall {
            bound,
            m: eq.corner().clone(),
        }));
    }
    let report = verify(&eq, &data, &bound);
    print!("{report}");
    if report.all_passed() {
        Ok(())
    } else {
        Err(CliError::VerificationFailed)
    }
}
