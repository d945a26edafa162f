use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn lgvx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lgvx"))
        .args(args)
        .env_remove("LGVX_LIMIT")
        .output()
        .expect("run lgvx")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

/// Report lines with the timing field dropped.
fn stable(o: &Output) -> Vec<String> {
    stdout(o)
        .lines()
        .filter(|l| !l.starts_with("time_ms"))
        .map(str::to_string)
        .collect()
}

fn value(o: &Output, key: &str) -> String {
    stdout(o)
        .lines()
        .find_map(|l| l.strip_prefix(&format!("{key} = ")))
        .unwrap_or_else(|| panic!("no `{key}` in {}", stdout(o)))
        .to_string()
}

#[test]
fn count_worked_example() {
    let f = fixture("worked_example.graph");
    let o = lgvx(&["count", f.to_str().unwrap(), "--brute", "--lgv"]);
    assert!(o.status.success());
    assert_eq!(value(&o, "count"), "40*x^5*y^5");
    assert_eq!(value(&o, "brute"), "40*x^5*y^5");
    assert_eq!(value(&o, "agree"), "true");
    assert_eq!(value(&o, "det M"), "-40*x^5*y^5");
    assert_eq!(value(&o, "det h"), "0");
    let again = lgvx(&["count", f.to_str().unwrap(), "--brute", "--lgv"]);
    assert_eq!(stable(&o), stable(&again));
}

#[test]
fn count_single_pair_and_compatible() {
    let dir = std::env::temp_dir().join(format!("lgvx-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let one = dir.join("one.graph");
    let text = stdout(&lgvx(&["emit", "grid", "2", "2", "--starts", "v0_0", "--ends", "v2_1"]));
    std::fs::write(&one, text).unwrap();
    let o = lgvx(&["count", one.to_str().unwrap(), "--eval", "x=2", "y=3"]);
    assert!(o.status.success());
    assert_eq!(value(&o, "count"), "3*x^2*y");
    assert_eq!(value(&o, "count at x=2 y=3"), "36");

    let two = dir.join("two.graph");
    let text = stdout(&lgvx(&[
        "emit", "grid", "3", "3", "--starts", "v1_0", "v0_1", "--ends", "v3_2", "v2_3",
    ]));
    std::fs::write(&two, text).unwrap();
    let o = lgvx(&["count", two.to_str().unwrap(), "--lgv", "--brute"]);
    assert!(o.status.success());
    assert_eq!(value(&o, "count"), value(&o, "det h"));
    assert_eq!(value(&o, "count"), "20*x^4*y^4");
}

#[test]
fn formulas() {
    let o = lgvx(&["delannoy", "2", "2", "--eval", "x=1", "y=1", "z=1"]);
    assert_eq!(value(&o, "delannoy at x=1 y=1 z=1"), "13");
    let o = lgvx(&["schroder", "3", "--eval", "x=1", "y=1", "z=1"]);
    assert_eq!(value(&o, "schroder at x=1 y=1 z=1"), "22");
    let o = lgvx(&["aztec", "1", "1", "1"]);
    assert_eq!(stdout(&o).trim(), "36");
    let o = lgvx(&["thm51", "1", "1", "1", "--eval", "x=1", "y=1", "z=1"]);
    assert_eq!(value(&o, "thm51 at x=1 y=1 z=1"), "36");
    let o = lgvx(&["cor52", "1", "1", "1", "--eval", "x=1", "y=1"]);
    assert_eq!(value(&o, "cor52 at x=1 y=1"), "8");
    let o = lgvx(&["thm51", "0", "1", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn tile_fixtures() {
    let o = lgvx(&["tile", fixture("mr_3_5.region").to_str().unwrap(), "--both"]);
    assert!(o.status.success());
    assert_eq!(
        (value(&o, "brute"), value(&o, "paths"), value(&o, "agree")),
        ("1".into(), "1".into(), "true".into())
    );
    let o = lgvx(&["tile", fixture("diamond_2.region").to_str().unwrap(), "--brute"]);
    assert_eq!(value(&o, "brute"), "8");
    let o = lgvx(&["tile", fixture("one_hole.region").to_str().unwrap()]);
    assert_eq!(value(&o, "paths"), "0");
    assert_eq!(value(&o, "brute"), "0");
}

#[test]
fn emit_round_trips() {
    assert_eq!(
        stdout(&lgvx(&["emit", "aztec", "3", "5"])),
        std::fs::read_to_string(fixture("mr_3_5.region")).unwrap()
    );
    let thm = stdout(&lgvx(&["emit", "thm51", "1", "1", "1"]));
    assert_eq!(thm, std::fs::read_to_string(fixture("thm51_1_1_1.graph")).unwrap());
    let (d, m) = lgvx::format::parse_graph_file(&thm).unwrap();
    assert_eq!(lgvx::format::emit_graph_file(&d, &m), thm);
    assert!(thm.contains("starts t0_0 t1_1") && thm.contains("ends t2_2 t3_3"));
    let o = lgvx(&["emit", "aztec", "2", "2", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn validate_and_input_errors() {
    let o = lgvx(&["validate", fixture("worked_example.graph").to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("valid"));
    let dir = std::env::temp_dir().join(format!("lgvx-bad-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("down.graph");
    std::fs::write(
        &bad,
        "variables x\nvertex s 0 1\nvertex t 0 0\nedge s t x\nsource s\nsink t\nstarts\nends\n",
    )
    .unwrap();
    let o = lgvx(&["validate", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("upward"));
    let o = lgvx(&["count", dir.join("missing.graph").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn limit_from_env() {
    let f = fixture("worked_example.graph");
    let o = Command::new(env!("CARGO_BIN_EXE_lgvx"))
        .args(["count", f.to_str().unwrap()])
        .env("LGVX_LIMIT", "3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("limit"));
}

#[test]
fn selftest_exit_codes() {
    let o = lgvx(&["selftest", "--seed", "3", "--instances", "15"]);
    assert!(o.status.success(), "{}", stdout(&o));
    for suite in [
        "main-theorem",
        "lgv",
        "involution",
        "intersection-lemmas",
        "bijection",
        "translation",
    ] {
        assert!(stdout(&o).contains(&format!("PASS {suite}: 15 instances")));
    }
    assert_eq!(
        stdout(&o),
        stdout(&lgvx(&["selftest", "--seed", "3", "--instances", "15"]))
    );
    let o = lgvx(&["selftest", "--instances", "0"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("0 instances"));
    let o = lgvx(&["selftest", "--instances", "20", "--inject-fault", "sign-flip"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL main-theorem"));
}
