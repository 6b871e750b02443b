//! End-to-end tests of the `recgf` binary: exit codes, file formats, and
//! output determinism.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use recgf::algebra::{rat_int, LaurentPoly, MultiIndex, RationalFn};
use recgf_cli::schema::{GfFile, ProblemFile, TableFile};

fn samples() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../samples")
}

fn recgf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_recgf"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn mi(c: &[i64]) -> MultiIndex {
    MultiIndex::from_slice(c)
}

fn upoly(dim: usize, coeffs: &[(&[i64], i64)]) -> LaurentPoly {
    LaurentPoly::from_terms(dim, coeffs.iter().map(|&(e, c)| (mi(e), rat_int(c))))
}

fn isolated_elements() -> String {
    samples().join("isolated_elements.json").display().to_string()
}

fn worked_example_gf() -> RationalFn {
    RationalFn::new(
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
    )
}

#[test]
fn genfunc_reproduces_the_worked_example() {
    let out = recgf(&["genfunc", &isolated_elements(), "--vars", "z,w"]);
    assert!(out.status.success());
    let gf: GfFile = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(gf.variables, vec!["z", "w"]);
    let f = gf.into_ratfn().unwrap();
    assert!(f.eq_cross(&worked_example_gf()));
}

#[test]
fn genfunc_of_fibonacci() {
    let path = samples().join("fibonacci.json");
    let out = recgf(&["genfunc", path.to_str().unwrap()]);
    assert!(out.status.success());
    let f: GfFile = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(f.variables, vec!["z1"]);
    let f = f.into_ratfn().unwrap();
    let expected = RationalFn::new(
        LaurentPoly::one(1),
        upoly(1, &[(&[2], 1), (&[1], -1), (&[0], -1)]),
    );
    assert_eq!(f, expected);
}

#[test]
fn genfunc_rejects_missing_dominant_corner() {
    let mut problem: ProblemFile =
        serde_json::from_str(&std::fs::read_to_string(isolated_elements()).unwrap()).unwrap();
    problem.coeffs.retain(|t| t.alpha != vec![2, 1]);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(&path, serde_json::to_string(&problem).unwrap()).unwrap();

    let out = recgf(&["genfunc", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("MissingDominantCorner"), "{stderr}");
}

#[test]
fn solve_writes_a_dense_table() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.json");
    let out = recgf(&[
        "solve",
        &isolated_elements(),
        "--box",
        "3,2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let table: TableFile = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(table.bounds, vec![3, 2]);
    assert_eq!(table.values.len(), 4 * 3); // dense, zeros included
    let at_31 = table.values.iter().find(|e| e.x == vec![3, 1]).unwrap();
    assert_eq!(at_31.value, "2");
}

#[test]
fn solve_rejects_small_box() {
    let out = recgf(&["solve", &isolated_elements(), "--box", "1,3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("BoxTooSmall"));
}

#[test]
fn green_of_the_worked_example() {
    let out = recgf(&["green", &isolated_elements(), "--tau", "0,0", "--vars", "z,w"]);
    assert!(out.status.success());
    let f: GfFile = serde_json::from_slice(&out.stdout).unwrap();
    let f = f.into_ratfn().unwrap();
    // (z^2 w - z w - z - w) / (zw · P)
    let num = upoly(
        2,
        &[(&[2, 1], 1), (&[1, 1], -1), (&[1, 0], -1), (&[0, 1], -1)],
    );
    let den = &upoly(2, &[(&[1, 1], 1)]) * &worked_example_gf().den().clone();
    assert_eq!(f, RationalFn::new(num, den));
}

#[test]
fn green_of_the_shift_equation() {
    let path = samples().join("shift.json");
    let out = recgf(&["green", path.to_str().unwrap(), "--tau", "0"]);
    assert!(out.status.success());
    let f: GfFile = serde_json::from_slice(&out.stdout).unwrap();
    let f = f.into_ratfn().unwrap();
    assert_eq!(
        f,
        RationalFn::new(LaurentPoly::one(1), upoly(1, &[(&[1], 1), (&[0], -1)]))
    );
}

#[test]
fn green_rejects_tau_outside_x0() {
    let out = recgf(&["green", &isolated_elements(), "--tau", "2,1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Tau0NotInX0"));
}

#[test]
fn expand_recovers_solution_values() {
    let dir = tempfile::tempdir().unwrap();
    let gf_path = dir.path().join("gf.json");
    let out = recgf(&[
        "genfunc",
        &isolated_elements(),
        "--out",
        gf_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let out = recgf(&["expand", gf_path.to_str().unwrap(), "--order", "3"]);
    assert!(out.status.success());
    let table: TableFile = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(table.bounds, vec![3, 3]);
    let at_31 = table.values.iter().find(|e| e.x == vec![3, 1]).unwrap();
    assert_eq!(at_31.value, "2");
}

#[test]
fn expand_of_a_geometric_series() {
    let dir = tempfile::tempdir().unwrap();
    let gf_path = dir.path().join("geom.json");
    let gf = GfFile::from_ratfn(
        &RationalFn::new(LaurentPoly::one(1), upoly(1, &[(&[1], 1), (&[0], -1)])),
        vec!["z".into()],
    );
    std::fs::write(&gf_path, serde_json::to_string(&gf).unwrap()).unwrap();
    let out = recgf(&["expand", gf_path.to_str().unwrap(), "--order", "4"]);
    assert!(out.status.success());
    let table: TableFile = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(table.values.len(), 5);
    assert!(table.values.iter().all(|e| e.value == "1"));
}

#[test]
fn expand_rejects_zero_dominant_corner() {
    // 1/(z+w) has no expansion in negative powers
    let dir = tempfile::tempdir().unwrap();
    let gf_path = dir.path().join("bad.json");
    let gf = GfFile::from_ratfn(
        &RationalFn::new(
            LaurentPoly::one(2),
            upoly(2, &[(&[1, 0], 1), (&[0, 1], 1)]),
        ),
        vec!["z".into(), "w".into()],
    );
    std::fs::write(&gf_path, serde_json::to_string(&gf).unwrap()).unwrap();
    let out = recgf(&["expand", gf_path.to_str().unwrap(), "--order", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("NotExpandableAtInfinity"));
}

#[test]
fn genfunc_reports_unsupported_face_data() {
    // a live ray inside a two-axis face cone cannot be represented
    let problem = serde_json::json!({
        "dim": 3,
        "m": [1, 1, 1],
        "coeffs": [
            {"alpha": [0, 0, 0], "c": "1"},
            {"alpha": [1, 1, 1], "c": "1"}
        ],
        "data": {
            "entries": [],
            "rays": [
                {"anchor": [0, 1, 0], "direction": 0, "rec_coeffs": ["-1", "1"], "initial": ["1"]}
            ]
        }
    });
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cone.json");
    std::fs::write(&path, problem.to_string()).unwrap();
    let out = recgf(&["genfunc", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("UnsupportedFaceData"));
}

#[test]
fn verify_passes_on_the_worked_example() {
    let out = recgf(&["verify", &isolated_elements(), "--box", "10,6"]);
    assert!(out.status.success());
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert_eq!(stdout.lines().count(), 4);
    assert!(stdout.lines().all(|l| l.starts_with("PASS")));
}

#[test]
fn verify_localizes_a_corrupted_value() {
    let mut problem: ProblemFile =
        serde_json::from_str(&std::fs::read_to_string(isolated_elements()).unwrap()).unwrap();
    for e in &mut problem.data.entries {
        if e.x == vec![4, 0] {
            e.value = "9".into();
        }
    }
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("corrupt.json");
    std::fs::write(&path, serde_json::to_string(&problem).unwrap()).unwrap();
    let out = recgf(&["verify", path.to_str().unwrap(), "--box", "8,5"]);
    assert_eq!(out.status.code(), Some(3));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("FAIL oracle-equivalence: first mismatch at (4, 0)"), "{stdout}");
}

#[test]
fn output_bytes_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for path in [&a, &b] {
        let out = recgf(&[
            "genfunc",
            &isolated_elements(),
            "--out",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
}

#[test]
fn gf_file_round_trips_canonical_forms() {
    let f = worked_example_gf();
    let gf = GfFile::from_ratfn(&f, vec!["z".into(), "w".into()]);
    let text = serde_json::to_string(&gf).unwrap();
    let back: GfFile = serde_json::from_str(&text).unwrap();
    assert_eq!(back.clone().into_ratfn().unwrap(), f);
    assert_eq!(back, gf);
}

#[test]
fn problem_file_round_trips() {
    let text = std::fs::read_to_string(isolated_elements()).unwrap();
    let problem: ProblemFile = serde_json::from_str(&text).unwrap();
    let again: ProblemFile =
        serde_json::from_str(&serde_json::to_string(&problem).unwrap()).unwrap();
    assert_eq!(problem, again);
}

#[test]
fn json_errors_are_positioned() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("syntax.json");
    std::fs::write(&path, "{\n  \"dim\": 2,\n  oops\n}").unwrap();
    let out = recgf(&["genfunc", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains(":3:"), "{stderr}");
}

#[test]
fn usage_errors_exit_one_and_help_exits_zero() {
    let out = recgf(&["solve", "missing-the-box-flag.json"]);
    assert_eq!(out.status.code(), Some(1));
    let out = recgf(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn vars_flag_must_match_dimension() {
    let out = recgf(&["genfunc", &isolated_elements(), "--vars", "z"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn inconsistent_data_is_an_input_error_for_computing_commands() {
    let mut problem: ProblemFile =
        serde_json::from_str(&std::fs::read_to_string(isolated_elements()).unwrap()).unwrap();
    for e in &mut problem.data.entries {
        if e.x == vec![2, 0] {
            e.value = "5".into();
        }
    }
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("conflict.json");
    std::fs::write(&path, serde_json::to_string(&problem).unwrap()).unwrap();
    let out = recgf(&["genfunc", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("InconsistentCoverage"));
}
