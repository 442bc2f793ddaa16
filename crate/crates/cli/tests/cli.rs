use std::process::{Command, Output};

use serde_json::Value;

fn foulkes(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_foulkes"))
        .args(args)
        .env_remove("FOULKES_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited")
}

#[test]
fn verify_theorem_3_up_to_8() {
    let o = foulkes(&["verify", "theorem-3", "--n-max", "8"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let out = stdout(&o);
    for (n, count) in [(3, 2), (4, 3), (5, 24), (6, 10), (8, 315)] {
        assert!(out.contains(&format!("PASS  theorem-3  n={n}  domain-count  {count}\n")), "{out}");
    }
    assert!(!out.contains("FAIL"));
}

#[test]
fn verify_theorem_1_witnesses_are_non_integral() {
    let o = foulkes(&["verify", "--suite", "theorem-1", "--n-max", "10", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let report: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    let checks = report["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 14);
    let values: Vec<&str> = checks
        .iter()
        .filter(|c| c["name"] == "witness-non-integral")
        .map(|c| c["detail"].as_str().unwrap())
        .collect();
    assert_eq!(values, ["1/3", "1/2", "3/5", "2/3", "5/7", "3/4", "7/9"]);
}

#[test]
fn verify_prop_gcd_up_to_20() {
    let o = foulkes(&["verify", "prop-gcd", "--n-max", "20"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).ends_with("prop-gcd: 20 of 20 checks passed (n=1..20)\n"));
}

#[test]
fn verify_small_suites_pass() {
    for suite in ["properties-a-h", "theorem-2", "theorem-4", "lemma-special"] {
        let o = foulkes(&["verify", suite, "--n-max", "5"]);
        assert_eq!(code(&o), 0, "{suite}: {}", stdout(&o));
    }
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["verify", "theorem-5"][..],
        &["verify"],
        &["export", "--table", "chi", "--n", "3"],
        &["export", "--table", "irr", "--n", "0"],
        &["export", "--table", "phi", "--n", "3", "--format", "xml"],
        &["param", "to-theta", "--a", "0,x,0"],
        &["param", "to-theta", "--n", "4", "--a", "0,1,0"],
        &["param", "from-theta", "--coords", "1/0,1,1"],
        &["enumerate"],
        &["frobnicate"],
    ] {
        assert_eq!(code(&foulkes(args)), 2, "{args:?}");
    }
}

#[test]
fn threads_from_environment() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_foulkes"))
            .args(["verify", "theorem-3", "--n-max", "5"])
            .env("FOULKES_THREADS", threads)
            .output()
            .unwrap()
    };
    let one = run("1");
    assert_eq!(code(&one), 0);
    assert_eq!(one.stdout, run("3").stdout);
    assert_eq!(code(&run("0")), 2);
    assert_eq!(code(&run("many")), 2);
}

#[test]
fn cap_override_warns() {
    let o = foulkes(&["verify", "properties-a-h", "--n-max", "4", "--cap-brute", "2"]);
    assert_eq!(code(&o), 0);
    assert!(stderr(&o).starts_with("warning: brute-force caps overridden to n <= 2"));
    assert!(!stdout(&o).contains("n=3  product-brute-force"));
    assert!(stdout(&o).contains("n=2  product-brute-force"));
}

#[test]
fn to_theta_example() {
    let o = foulkes(&["param", "to-theta", "--n", "3", "--a", "[0,1,0]"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["phi_coords"], serde_json::json!(["0", "1/2", "0"]));
}

#[test]
fn from_theta_examples() {
    let o = foulkes(&["param", "from-theta", "--n", "3", "--coords", r#"["1","1","1"]"#]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["a"], serde_json::json!([1, 2, 1]));

    let o = foulkes(&["param", "from-theta", "--coords", r#"["1/3","0","0"]"#]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).is_empty());
    assert_eq!(stderr(&o), "error: not a character: multiplicity of chi_(3) is 1/3\n");
}

#[test]
fn parametrization_roundtrips_through_the_binary() {
    let o = foulkes(&["param", "to-theta", "--a", "3,0,5,2,0"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let coords: Vec<&str> = v["phi_coords"].as_array().unwrap().iter().map(|c| c.as_str().unwrap()).collect();
    let back = foulkes(&["param", "from-theta", "--coords", &coords.join(",")]);
    assert_eq!(code(&back), 0);
    let w: Value = serde_json::from_str(&stdout(&back)).unwrap();
    assert_eq!(w["a"], serde_json::json!([3, 0, 5, 2, 0]));
    assert_eq!(w["multiplicities"], v["multiplicities"]);
}

#[test]
fn enumerate_line_counts() {
    for (n, lines) in [(1, 1), (3, 2), (4, 3), (5, 24), (6, 10)] {
        let o = foulkes(&["enumerate", "--n", &n.to_string()]);
        assert_eq!(code(&o), 0);
        let out = stdout(&o);
        assert_eq!(out.lines().count(), lines, "n={n}");
        assert_eq!(stderr(&o), format!("count: {lines}\n"));
        for line in out.lines() {
            let v: Value = serde_json::from_str(line).unwrap();
            assert!(v["multiplicities"].as_object().unwrap().values().all(|m| m.as_u64().is_some()));
        }
    }
}

#[test]
fn enumerate_n3_content() {
    let o = foulkes(&["enumerate", "--n", "3"]);
    assert_eq!(
        stdout(&o),
        concat!(
            r#"{"a":[0,0,0],"phi_coords":["0","0","0"],"length_values":["0","0","0"],"multiplicities":{"(3)":0,"(2,1)":0,"(1,1,1)":0}}"#,
            "\n",
            r#"{"a":[0,1,0],"phi_coords":["0","1/2","0"],"length_values":["-1","0","2"],"multiplicities":{"(3)":0,"(2,1)":1,"(1,1,1)":0}}"#,
            "\n"
        )
    );
}

#[test]
fn export_examples() {
    let phi = foulkes(&["export", "--table", "phi", "--n", "3", "--format", "csv"]);
    assert_eq!(stdout(&phi), "vector,l=1,l=2,l=3\nphi_0,1,1,1\nphi_1,-2,0,4\nphi_2,1,-1,1\n");

    let irr = foulkes(&["export", "--table", "irr", "--n", "4", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&irr)).unwrap();
    assert_eq!(
        v["partitions"],
        serde_json::json!(["(4)", "(3,1)", "(2,2)", "(2,1,1)", "(1,1,1,1)"])
    );
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 5);
    assert!(rows.iter().all(|r| r.as_array().unwrap().iter().all(|x| x.is_i64())));

    let c = foulkes(&["export", "--table", "c-tensor", "--n", "2"]);
    let v: Value = serde_json::from_str(&stdout(&c)).unwrap();
    assert_eq!(v["c"][0][0][0], 1);

    let omega = foulkes(&["export", "--table", "omega", "--n", "4", "--format", "csv"]);
    assert!(stdout(&omega).lines().all(|l| !l.contains('.')));
}

#[test]
fn export_to_file_matches_stdout() {
    let dir = std::env::temp_dir().join(format!("foulkes-export-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("psi.csv");
    let o = foulkes(&["export", "--table", "psi", "--n", "6", "--format", "csv", "--output", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let direct = foulkes(&["export", "--table", "psi", "--n", "6", "--format", "csv"]);
    assert_eq!(std::fs::read(&path).unwrap(), direct.stdout);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        &["export", "--table", "irr", "--n", "7", "--format", "csv"][..],
        &["export", "--table", "c-tensor", "--n", "6"],
        &["export", "--table", "gamma", "--n", "9"],
        &["enumerate", "--n", "6"],
        &["verify", "all", "--n-max", "5", "--format", "json"],
    ] {
        let first = foulkes(args);
        let second = foulkes(args);
        assert_eq!(code(&first), 0, "{args:?}");
        assert_eq!(first.stdout, second.stdout, "{args:?}");
    }
}
