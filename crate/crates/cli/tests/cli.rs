use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_realgrass")).args(args).output().expect("binary runs")
}

fn spec_file(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("realgrass-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn numbers() {
    let o = run(&["dmp", "3", "4"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "462");
    assert_eq!(stdout(&run(&["dnum", "4", "2", "J2^4"])).trim(), "3");
    assert_eq!(stdout(&run(&["bezout", "2", "3"])).trim(), "81");
    assert_eq!(run(&["dnum", "2", "2", "J1^3"]).status.code(), Some(2));
}

#[test]
fn verdict_exit_codes() {
    let all_real = spec_file("a.toml", "family = \"hypersurface\"\nm = 2\np = 2\npoints = [\"1\", \"2\", \"3\", \"4\"]\n");
    let o = run(&["verify", all_real.to_str().unwrap(), "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], "ALL_REAL");
    assert_eq!(v["real_roots"], 2);

    let fc = spec_file("fc.toml", "family = \"flag-counterexample\"\nm = 2\np = 2\n");
    assert_eq!(run(&["verify", fc.to_str().unwrap()]).status.code(), Some(1));

    let repeated = spec_file("r.toml", "family = \"hypersurface\"\nm = 2\np = 2\npoints = [\"1\", \"1\", \"2\", \"3\"]\n");
    assert_eq!(run(&["verify", repeated.to_str().unwrap()]).status.code(), Some(2));

    let bad = spec_file("b.toml", "family = \"hypersurface\"\nm = 2\np = 2\nbogus = 1\n");
    let o = run(&["verify", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("bogus"));
}

#[test]
fn build_and_suite() {
    let s = spec_file("m.toml", "family = \"hypersurface\"\nm = 2\np = 2\npoints = [\"1\", \"2\", \"3\", \"4\"]\n");
    let o = run(&["build", s.to_str().unwrap()]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("# vars: x11 x12 x21 x22"), "{}", text);
    assert_eq!(text.lines().count(), 5);

    let cfg = spec_file("suite.toml", "[[recipes]]\nkind = \"tp22\"\ncount = 3\nseed = 1\n");
    let o = run(&["suite", cfg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let csv = stdout(&o);
    assert_eq!(csv.lines().count(), 4);
    assert!(csv.lines().skip(1).all(|l| l.contains("ALL REAL")));
}

#[test]
fn reproduce_targets() {
    let o = run(&["reproduce", "list"]);
    assert!(stdout(&o).contains("flag-counterexample"));
    assert_eq!(run(&["reproduce", "bezout-table"]).status.code(), Some(0));
    assert_eq!(run(&["reproduce", "nope"]).status.code(), Some(2));
    let o = run(&["reproduce", "flag-counterexample", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["target"], "flag-counterexample");
}

#[test]
fn shipped_specs_run() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../specs");
    let mut seen = 0;
    for entry in std::fs::read_dir(&dir).unwrap() {
        let path = entry.unwrap().path();
        let name = path.file_name().unwrap().to_string_lossy().into_owned();
        if !name.ends_with(".toml") {
            continue;
        }
        let o = if name == "suite.toml" { run(&["suite", path.to_str().unwrap()]) } else { run(&["verify", path.to_str().unwrap()]) };
        let want = if name == "flag-counterexample.toml" { 1 } else { 0 };
        assert_eq!(o.status.code(), Some(want), "{}", name);
        seen += 1;
    }
    assert!(seen >= 6);
}
