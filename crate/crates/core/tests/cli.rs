use std::io::Write;
use std::process::{Command, Stdio};

use ecci::cli::{
    run, EXIT_BAD_PARAMS, EXIT_CAP, EXIT_COUNTEREXAMPLE, EXIT_NOT_STRONG, EXIT_OK, EXIT_PARSE,
};
use ecci::io::{parse_edge_list, JsonReport, ReportKind};

struct Outcome {
    code: i32,
    stdout: String,
    stderr: String,
}

fn ecci(args: &[&str], stdin: &str) -> Outcome {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("ecci").chain(args.iter().copied());
    let code = run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    Outcome {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

const FIG1: &str = "3 5\n0 1\n1 0\n1 2\n2 1\n0 2\n";

#[test]
fn compute_table_and_json() {
    let o = ecci(&["compute", "-"], FIG1);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    assert!(o
        .stdout
        .lines()
        .any(|l| l.split_whitespace().collect::<Vec<_>>() == ["xi", "8", "(doubled", "16)"]));

    let o = ecci(&["compute", "-", "--json", "--md-matrix"], FIG1);
    assert_eq!(o.code, EXIT_OK);
    let report = JsonReport::from_json(&o.stdout).unwrap();
    assert_eq!(report.kind, ReportKind::Index);
    assert_eq!(report.payload["index"]["xi"]["doubled"], 16);
    assert_eq!(report.payload["md_matrix"][0], serde_json::json!([0, 1, 2]));
}

#[test]
fn compute_reads_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fig1.txt");
    std::fs::write(&path, FIG1).unwrap();
    let o = ecci(&["compute", path.to_str().unwrap(), "--json"], "");
    assert_eq!(o.code, EXIT_OK);
    let missing = dir.path().join("missing.txt");
    assert_eq!(
        ecci(&["compute", missing.to_str().unwrap()], "").code,
        EXIT_PARSE
    );
}

#[test]
fn compute_errors_write_nothing_to_stdout() {
    for (input, code) in [
        ("3 2\n0 1\n1 2\n", EXIT_NOT_STRONG),
        ("3 1\n0 0\n", EXIT_PARSE),
        ("3 2\n0 1\n", EXIT_PARSE),
        ("3 1\n0 7\n", EXIT_PARSE),
        ("x y\n", EXIT_PARSE),
    ] {
        let o = ecci(&["compute", "-", "--json"], input);
        assert_eq!(o.code, code, "{input:?}");
        assert!(o.stdout.is_empty());
        assert!(o.stderr.starts_with("error: "));
    }
    assert!(ecci(&["compute", "-"], "3 1\n0 0\n")
        .stderr
        .contains("line 2"));
}

#[test]
fn generate_round_trips_through_compute() {
    let o = ecci(&["generate", "kn-orientation", "--n", "7"], "");
    assert_eq!(o.code, EXIT_OK);
    let d = parse_edge_list(&o.stdout).unwrap();
    assert_eq!(d.arc_count(), 21);
    let c = ecci(&["compute", "-", "--json"], &o.stdout);
    let report = JsonReport::from_json(&c.stdout).unwrap();
    assert_eq!(report.payload["index"]["xi"]["display"], "42");
}

#[test]
fn generate_parameters() {
    assert_eq!(
        ecci(&["generate", "circulant", "--n", "4", "--set", "2"], "").code,
        EXIT_BAD_PARAMS
    );
    assert_eq!(
        ecci(&["generate", "directed-cycle", "--n", "2"], "").code,
        EXIT_BAD_PARAMS
    );
    assert_eq!(
        ecci(&["generate", "no-such-family", "--n", "5"], "").code,
        EXIT_BAD_PARAMS
    );
    assert_eq!(
        ecci(
            &["generate", "pn-star", "--n", "5", "--direction", "up"],
            ""
        )
        .code,
        EXIT_BAD_PARAMS
    );
    let fwd = ecci(
        &["generate", "pn-star", "--n", "5", "--direction", "fwd"],
        "",
    )
    .stdout;
    let bwd = ecci(
        &["generate", "pn-star", "--n", "5", "--direction", "bwd"],
        "",
    )
    .stdout;
    assert!(fwd.contains("\n0 4\n") && bwd.contains("\n4 0\n"));
    assert_eq!(
        ecci(&["generate", "t1"], "").stdout,
        ecci(&["generate", "circulant", "--n", "5", "--set", "1,2"], "").stdout
    );

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c5.txt");
    let o = ecci(
        &[
            "generate",
            "directed-cycle",
            "--n",
            "5",
            "-o",
            path.to_str().unwrap(),
        ],
        "",
    );
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.is_empty());
    assert_eq!(
        std::fs::read_to_string(path).unwrap(),
        "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n"
    );
}

#[test]
fn verify_exit_codes() {
    let o = ecci(&["verify", "star-min", "--n", "4", "--json"], "");
    assert_eq!(o.code, EXIT_OK);
    let report = JsonReport::from_json(&o.stdout).unwrap();
    assert_eq!(report.kind, ReportKind::Verify);
    assert_eq!(report.payload["pass"], true);

    // No orientation of K_4 has every vertex at md-eccentricity 2.
    let o = ecci(&["verify", "kn-construction", "--n", "4"], "");
    assert_eq!(o.code, EXIT_COUNTEREXAMPLE);
    assert!(o.stdout.contains("counterexample"));

    assert_eq!(
        ecci(&["verify", "no-such-theorem"], "").code,
        EXIT_BAD_PARAMS
    );
    assert_eq!(
        ecci(&["verify", "reverse", "--n-range", "5-9"], "").code,
        EXIT_BAD_PARAMS
    );
    assert_eq!(ecci(&["verify", "star-min", "--n", "6"], "").code, EXIT_CAP);
}

#[test]
fn verify_is_seed_deterministic() {
    let args = [
        "verify",
        "reverse",
        "--n-range",
        "3..8",
        "--samples",
        "40",
        "--seed",
        "11",
        "--json",
    ];
    let a = ecci(&args, "");
    assert_eq!(a.code, EXIT_OK);
    assert_eq!(a.stdout, ecci(&args, "").stdout);
}

#[test]
fn enumerate_and_cap() {
    let o = ecci(
        &[
            "enumerate",
            "--class",
            "tournaments",
            "--n",
            "3",
            "--stat",
            "min",
            "--json",
        ],
        "",
    );
    assert_eq!(o.code, EXIT_OK);
    let r = JsonReport::from_json(&o.stdout).unwrap();
    assert_eq!(r.payload["extremal_value"]["display"], "6");
    assert_eq!(r.payload["strong_count"], 2);

    let o = ecci(
        &[
            "enumerate",
            "--class",
            "strong-digraphs",
            "--n",
            "6",
            "--stat",
            "min",
        ],
        "",
    );
    assert_eq!(o.code, EXIT_CAP);
    assert!(o.stdout.is_empty());
    assert_eq!(
        ecci(
            &[
                "enumerate",
                "--class",
                "tournaments",
                "--n",
                "2",
                "--stat",
                "min"
            ],
            ""
        )
        .code,
        EXIT_BAD_PARAMS
    );
    assert_eq!(
        ecci(
            &[
                "enumerate",
                "--class",
                "graphs",
                "--n",
                "4",
                "--stat",
                "min"
            ],
            ""
        )
        .code,
        EXIT_BAD_PARAMS
    );
}

#[test]
fn thread_count_does_not_change_output() {
    let base = [
        "enumerate",
        "--class",
        "strong-digraphs",
        "--n",
        "4",
        "--stat",
        "max",
        "--json",
    ];
    let one = ecci(&[&["--threads", "1"][..], &base[..]].concat(), "").stdout;
    let four = ecci(&[&["--threads", "4"][..], &base[..]].concat(), "").stdout;
    assert_eq!(one, four);
}

#[test]
fn bench_prints_a_table() {
    let o = ecci(&["bench", "--n", "200", "--seed", "3"], "");
    assert_eq!(o.code, EXIT_OK);
    for phase in ["generate", "profile", "index"] {
        assert!(o.stdout.lines().any(|l| l.starts_with(phase)));
    }
    assert_eq!(
        ecci(&["bench", "--density", "1.5"], "").code,
        EXIT_BAD_PARAMS
    );
}

#[test]
fn binary_is_a_thin_wrapper() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ecci"))
        .args(["compute", "-", "--json"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(FIG1.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        ecci(&["compute", "-", "--json"], FIG1).stdout
    );

    let status = Command::new(env!("CARGO_BIN_EXE_ecci"))
        .args([
            "enumerate",
            "--class",
            "tournaments",
            "--n",
            "12",
            "--stat",
            "min",
        ])
        .stderr(Stdio::null())
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(EXIT_CAP));
}
