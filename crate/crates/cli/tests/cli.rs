mod common;

use common::{check_output, golden_cases, golden_dir, prime_of, run_cli, Workspace};
use rtorsion::catalog;
use rtorsion::group::parse_presentation;
use rtorsion::rep::parse_representation;

/// Prime of the representation argument of a golden case, if any.
fn case_prime(args: &[String]) -> Option<u64> {
    args.iter().find_map(|a| a.strip_prefix('@')?.split_once('/').and_then(|(k, r)| prime_of(k, r)))
}

#[test]
fn golden_outputs() {
    let ws = Workspace::new();
    let bless = std::env::var_os("RTORSION_BLESS").is_some();
    let mut failures = Vec::new();
    for (stem, args) in golden_cases() {
        let refs: Vec<&str> = args.iter().map(String::as_str).collect();
        let (code, out, err) = ws.run(&refs);
        assert_eq!(code, 0, "{stem}: {err}");
        let path = golden_dir().join(format!("{stem}.txt"));
        if bless {
            std::fs::write(&path, &out).unwrap();
            continue;
        }
        let expected =
            std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
        if expected != out {
            failures.push(format!("{stem}:\n--- expected\n{expected}--- actual\n{out}"));
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn golden_files_follow_the_rendering_grammar() {
    let mut checked = 0;
    for (stem, args) in golden_cases() {
        let text = std::fs::read_to_string(golden_dir().join(format!("{stem}.txt"))).unwrap();
        checked += check_output(&text, case_prime(&args)).unwrap_or_else(|e| panic!("{stem}: {e}"));
    }
    assert!(checked >= 40, "only {checked} polynomial lines");
}

#[test]
fn rendering_checker_rejects_malformed_text() {
    use common::check_polynomial;
    assert!(check_polynomial("t^2 - 4*t + 1", None).is_ok());
    assert!(check_polynomial("4*t^6 + 2*t^4 + t^3 + 2*t^2 + 4", Some(5)).is_ok());
    assert!(check_polynomial("t^2 - 6*t + 10 - 6*t^-1 + t^-2", None).is_ok());
    assert!(check_polynomial("-t + (w + 1)*t^-1", None).is_ok());
    for bad in ["1*t^2", "t^1", "t + t^2", "4*t^0", "t^2 + -1", "t^2 -1", "0*t"] {
        assert!(check_polynomial(bad, None).is_err(), "{bad}");
    }
    assert!(check_polynomial("t - 1", Some(5)).is_err());
    assert!(check_polynomial("7*t", Some(5)).is_err());
}

#[test]
fn example_output_round_trips() {
    for entry in catalog::catalog() {
        let (_, text, _) = run_cli(&["example", entry.name]);
        let p = parse_presentation(&text).unwrap();
        assert_eq!(p, entry.presentation, "{}", entry.name);
        for (i, (name, rho)) in entry.representations.iter().enumerate() {
            let (_, by_name, _) = run_cli(&["example", entry.name, "--rep", name]);
            let (_, by_index, _) = run_cli(&["example", entry.name, "--rep", &(i + 1).to_string()]);
            assert_eq!(by_name, by_index);
            assert_eq!(&parse_representation(&by_name, &p).unwrap(), rho, "{}/{name}", entry.name);
        }
    }
}

#[test]
fn known_values_in_command_output() {
    let ws = Workspace::new();
    let (code, out, _) = ws.run(&["fiber-check", "@kinoshita-terasaka", "@kinoshita-terasaka/f5"]);
    assert_eq!(code, 0);
    assert!(out.contains("4*t^6 + 2*t^4 + t^3 + 2*t^2 + 4"));
    assert!(out.contains("verdict: NOT FIBERED"));
    let (_, out, _) = ws.run(&["torsion", "@figure-eight", "@figure-eight/omega"]);
    assert!(out.lines().any(|l| l == "reduced: t^2 - 4*t + 1"), "{out}");
    let (_, out, _) = ws.run(&["fiber-check", "@figure-eight", "@figure-eight/omega"]);
    assert!(out.contains("verdict: no obstruction"));
}

fn assert_error(result: (i32, String, String), needles: &[&str]) {
    let (code, out, err) = result;
    assert_eq!(code, 2, "stdout: {out}");
    assert!(out.is_empty(), "stdout: {out}");
    assert_eq!(err.lines().count(), 1, "{err}");
    assert!(err.starts_with("error: "), "{err}");
    for n in needles {
        assert!(err.contains(n), "`{n}` not in {err}");
    }
}

#[test]
fn errors_are_single_positioned_lines() {
    let ws = Workspace::new();
    let write = |name: &str, text: &str| {
        let path = ws.path(name);
        std::fs::write(&path, text).unwrap();
        path.to_str().unwrap().to_string()
    };
    let syntax = write("syntax.pres", "gens x y\nrel x y = \nrel x ^ y\n");
    assert_error(run_cli(&["alexander", &syntax]), &["syntax.pres:", "syntax error"]);
    let unknown = write("unknown.pres", "gens x y\nrel x y x = y q y\n");
    assert_error(run_cli(&["alexander", &unknown]), &["unknown.pres:2:15", "UnknownGenerator", "`q`"]);
    let z2 = write("z2.pres", "gens x y\nrel x^2 = y^2\n");
    assert_error(run_cli(&["alexander", &z2]), &["NotInfiniteCyclic"]);
    let bad_rep = write("bad.rep", "field p=5\ndim 2\nmat x = [[1, 1], [0, 1]]\nmat y = [[1, 0], [3, 1]]\n");
    assert_error(ws.run(&["torsion", "@figure-eight", &bad_rep]), &["InvalidRepresentation", "relation 1"]);
    assert_error(ws.run(&["torsion", "@figure-eight", "@figure-eight/omega", "--column", "z"]), &["`z`"]);
    assert_error(run_cli(&["alexander", "/nonexistent/file.pres"]), &["/nonexistent/file.pres"]);
    assert_error(ws.run(&["find-reps", "@trefoil", "--p", "4"]), &["4"]);
    assert_error(ws.run(&["find-reps", "@trefoil", "--p", "101"]), &["101"]);
    assert_error(run_cli(&["example", "unknot"]), &["unknown example", "figure-eight"]);
    assert_error(run_cli(&["example", "trefoil", "--rep", "7"]), &["unknown representation"]);
    assert_error(run_cli(&["torsion"]), &["required"]);
    assert_error(run_cli(&["frobnicate"]), &["frobnicate"]);
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = run_cli(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("fiber-check"));
}

#[test]
fn binary_uses_the_same_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_rtorsion");
    let ok = std::process::Command::new(bin).args(["example", "trefoil"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("gens x y"));
    let bad = std::process::Command::new(bin).args(["example", "nope"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).starts_with("error: "));
}
