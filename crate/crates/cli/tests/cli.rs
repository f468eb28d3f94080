use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn greenfn(args: &[&str], cache: Option<&Path>) -> Output {
    let mut c = Command::new(env!("CARGO_BIN_EXE_greenfn"));
    c.args(args).env_remove("GREENFN_CACHE_DIR");
    match cache {
        Some(d) => c.env("GREENFN_CACHE_DIR", d),
        // keep test runs from writing next to the binary
        None => c.env(
            "GREENFN_DATA_DIR",
            std::env::temp_dir().join("greenfn-cli-tests"),
        ),
    };
    c.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

/// Compares with the golden file; `UPDATE_GOLDEN=1` rewrites it.
fn assert_golden(args: &[&str], name: &str) {
    let o = greenfn(args, None);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let out = stdout(&o);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(golden(name), &out).unwrap();
    }
    assert_eq!(
        out,
        std::fs::read_to_string(golden(name)).unwrap(),
        "{name}"
    );
}

fn json(args: &[&str], cache: Option<&Path>) -> (Value, i32) {
    let o = greenfn(args, cache);
    (
        serde_json::from_str(&stdout(&o)).unwrap(),
        o.status.code().unwrap(),
    )
}

#[test]
fn golden_outputs() {
    assert_golden(
        &["block", "--gl", "2", "--format", "json"],
        "block_gl2.json",
    );
    assert_golden(
        &["block", "--sl", "4", "--d", "2", "--format", "json"],
        "block_sl4_d2.json",
    );
    assert_golden(
        &[
            "restrict", "--gl", "2", "--levi", "1,1", "--ggg", "2", "--format", "json",
        ],
        "restrict_gl2_torus_ggg.json",
    );
    assert_golden(&["block", "--gl", "3"], "block_gl3.txt");
}

#[test]
fn block_sizes() {
    let (v, code) = json(&["block", "--gl", "3", "--format", "json"], None);
    assert_eq!(code, 0);
    assert_eq!(v["schema"], "greenfn/1");
    assert_eq!(v["pairs"].as_array().unwrap().len(), 3);
    assert_eq!(v["ptilde"]["rows"], 3);
    let (v, _) = json(
        &["block", "--sl", "4", "--d", "2", "--format", "json"],
        None,
    );
    let ids: Vec<&str> = v["pairs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| p["id"].as_str().unwrap())
        .collect();
    assert_eq!(ids, ["2+2", "4"]);
}

#[test]
fn load_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("gl3.block");
    let b = greenfn::blocks::gl_principal_block(3).unwrap();
    std::fs::write(&path, greenfn::blocks::block_to_json(&b).to_string()).unwrap();
    let (loaded, code) = json(
        &[
            "block",
            "--load",
            path.to_str().unwrap(),
            "--format",
            "json",
        ],
        None,
    );
    assert_eq!(code, 0);
    let (built, _) = json(&["block", "--gl", "3", "--format", "json"], None);
    assert_eq!(loaded["ptilde"], built["ptilde"]);
    std::fs::write(&path, "{ not json").unwrap();
    assert_eq!(
        greenfn(&["block", "--load", path.to_str().unwrap()], None)
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn regular_ggg_restricts_to_torus_pair() {
    let (v, _) = json(
        &[
            "restrict", "--gl", "2", "--levi", "1,1", "--ggg", "2", "--format", "json",
        ],
        None,
    );
    let c = v["ggg"]["coefficients"].as_array().unwrap();
    assert_eq!(c.len(), 1);
    assert_eq!(c[0]["value"]["exponents"], serde_json::json!([0]));
    assert_eq!(c[0]["value"]["coefficients"], serde_json::json!(["1"]));
}

#[test]
fn subregular_report() {
    let (v, code) = json(
        &[
            "restrict",
            "--gl",
            "6",
            "--levi",
            "4,2",
            "--subregular",
            "--format",
            "json",
        ],
        None,
    );
    assert_eq!(code, 0);
    let s = &v["subregular"];
    assert_eq!(s["k"], 2);
    assert_eq!(s["coefficient_equal"], true);
    assert_eq!(s["row_equal"], true);
    assert_eq!(s["gamma_equal"], true);
    // 1 - q^-1
    assert_eq!(s["closed_form"]["exponents"], serde_json::json!([-1, 0]));
    assert_eq!(
        s["closed_form"]["coefficients"],
        serde_json::json!(["-1", "1"])
    );
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["verify", "--suite", "nonsense"],
        vec!["block"],
        vec!["block", "--gl", "3", "--sl", "4", "--d", "2"],
        vec!["block", "--sl", "4"],
        vec!["restrict", "--gl", "5", "--levi", "3,3"],
        vec!["restrict", "--gl", "3", "--levi", "2,1", "--ggg", "9"],
        vec!["verify", "--suite", "oracle", "--q", "4"],
    ] {
        assert_eq!(greenfn(&args, None).status.code(), Some(2), "{args:?}");
    }
    assert_eq!(greenfn(&["--help"], None).status.code(), Some(0));
}

#[test]
fn verify_suites_pass() {
    for args in [
        vec!["verify", "--suite", "sln", "--n", "8"],
        vec!["verify", "--suite", "factorization", "--n", "4"],
        vec!["verify", "--suite", "orthogonality", "--n", "3"],
        vec!["verify", "--suite", "duality", "--n", "4"],
        vec!["verify", "--suite", "ggg", "--n", "2"],
        vec!["verify", "--suite", "subregular", "--n", "5"],
    ] {
        let mut a = args.clone();
        a.extend(["--format", "json"]);
        let (v, code) = json(&a, None);
        assert_eq!(code, 0, "{args:?}");
        assert_eq!(v["passed"], true);
        assert!(v["failures"].as_array().unwrap().is_empty());
    }
}

#[test]
fn subregular_suite_reports_coefficient() {
    let (v, _) = json(
        &[
            "verify",
            "--suite",
            "subregular",
            "--n",
            "4",
            "--format",
            "json",
        ],
        None,
    );
    let c = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["locus"] == "GL4 -> [2, 2]")
        .unwrap();
    assert_eq!(c["detail"], "closed form = pipeline = 1 - q^-1 (k = 2)");
}

#[test]
fn oracle_suite_uses_cache() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "verify", "--suite", "oracle", "--q", "3", "--n", "2", "--format", "json",
    ];
    let (first, code) = json(&args, Some(dir.path()));
    assert_eq!(code, 0);
    assert_eq!(first["cache"]["hits"], 0);
    let (second, _) = json(&args, Some(dir.path()));
    assert_eq!(second["cache"]["hits"], first["cache"]["misses"]);
    assert_eq!(second["cache"]["misses"], 0);
    let mut no_cache = args.to_vec();
    no_cache.push("--no-cache");
    let (third, _) = json(&no_cache, Some(dir.path()));
    assert_eq!(third["cache"]["hits"], 0);
    assert_eq!(third["cache"]["dir"], Value::Null);
    assert_eq!(third["passed"], true);
}

#[test]
fn tsv_has_one_section_per_table() {
    let out = stdout(&greenfn(&["block", "--gl", "2", "--format", "tsv"], None));
    assert_eq!(out.lines().filter(|l| l.starts_with("# ")).count(), 5);
    assert!(out.contains("1+1\t1\tq^-1"));
}
