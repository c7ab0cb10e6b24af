use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coxsigns")).args(args).env_remove("COXSIGNS_JOBS").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn first_line(o: &Output) -> String {
    stdout(o).lines().next().unwrap_or_default().to_string()
}

#[test]
fn eps_examples() {
    let o = run(&["eps", "--type", "A3", "-n", "3", "--tuple", "1 2 3 1 2 3, 1 2 3, 1 2 3 1 2 3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(first_line(&o), "1");
    assert!(stdout(&o).contains("agree"));
    assert_eq!(first_line(&run(&["eps", "--type", "B2", "-n", "2", "--tuple", "1, 2"])), "0");
    assert_eq!(first_line(&run(&["eps", "--type", "A2", "-n", "1", "--tuple", "1 2 1"])), "1");
    let o = run(&["eps", "--type", "A2", "-n", "1", "--tuple", "s1s2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn diagnostics_name_the_fault() {
    let o = run(&["eps", "--type", "A3", "-n", "2", "--tuple", "1, x"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("`x`"));
    let o = run(&["eps", "--type", "A3", "-n", "3", "--tuple", "1, 2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--tuple"));
    let o = run(&["eps", "--type", "Q9", "-n", "1", "--tuple", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--type"));
    let o = run(&["verify", "cocycles", "--type", "A2"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["omega", "--type", "H3"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["eps", "--type", "A2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_examples() {
    let o = run(&["verify", "cocycle", "--type", "A3", "-n", "3", "--exhaustive"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("331776 exhaustive tuples"));
    let o = run(&["verify", "all", "--type", "B3", "-n", "3", "--samples", "2000", "--seed", "42"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = run(&["verify", "collapsing", "--type", "I2(7)", "-n", "4", "--exhaustive"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "all", "--type", "A3", "-n", "3", "--samples", "500", "--seed", "9", "--format", "json"];
    let a = run(&args);
    let mut single = args.to_vec();
    single.extend(["--jobs", "1"]);
    let b = run(&single);
    assert_eq!(a.stdout, b.stdout);
    let c = run(&["omega", "--type", "D4", "--format", "json", "--with-cochains"]);
    let d = run(&["omega", "--type", "D4", "--format", "json", "--with-cochains"]);
    assert_eq!(c.stdout, d.stdout);
    let v: serde_json::Value = serde_json::from_slice(&c.stdout).unwrap();
    assert_eq!(v["omega_cochain"].as_object().unwrap().len(), 64);
}

#[test]
fn omega_examples() {
    let o = run(&["omega", "--type", "C4", "--against-paper"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("Omega (order 2, index 1): trivial"));
    assert!(stdout(&o).contains("matches"));
    let o = run(&["omega", "--type", "D6", "--against-paper", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["expectation"]["matches"], true);
    let verdict = |label: &str| {
        v["subgroups"].as_array().unwrap().iter().find(|s| s["label"] == label).unwrap()["verdict"].clone()
    };
    assert_eq!(verdict("Omega"), "nontrivial");
    assert_eq!(verdict("<omega1>"), "nontrivial");
    assert_eq!(verdict("<omega3>"), "nontrivial");
    assert_eq!(verdict("<omega2>"), "trivial");
    let o = run(&["omega", "--type", "G2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("nothing to classify"));
}

#[test]
fn csv_has_header_and_lf() {
    let o = run(&["omega", "--type", "A3", "--format", "csv"]);
    let text = stdout(&o);
    assert!(text.starts_with("type,omega_shape,subgroup,order,index,verdict,coordinates\n"));
    assert!(!text.contains('\r'));
    assert_eq!(text.lines().count(), 4);
}

#[test]
fn extension_square_of_simple_reflection() {
    let o = run(&["extension", "--type", "B2", "--tuple", "1, 1"]);
    assert_eq!(first_line(&o), "(-1[H [1,0]], e)");
}

#[test]
fn output_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("coxsigns-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("zn.json");
    let o = run(&["zn", "--type", "A2", "-n", "2", "--tuple", "1, 1", "--format", "json", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["walls"][0]["plus"], -1);
    assert_eq!(v["walls"][0]["minus"], -1);
    std::fs::remove_dir_all(&dir).unwrap();
}
