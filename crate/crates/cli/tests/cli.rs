use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_anyoncodec"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let o = run(&full);
    (
        o.status.code().unwrap(),
        serde_json::from_slice(&o.stdout).unwrap(),
    )
}

struct Dir(PathBuf);

impl Dir {
    fn new(tag: &str) -> Self {
        let p = std::env::temp_dir().join(format!("anyoncodec-cli-{tag}-{}", std::process::id()));
        std::fs::create_dir_all(&p).unwrap();
        Dir(p)
    }

    fn file(&self, name: &str, contents: &str) -> String {
        let p = self.0.join(name);
        std::fs::write(&p, contents).unwrap();
        p.to_str().unwrap().to_string()
    }

    fn path(&self, name: &str) -> String {
        self.0.join(name).to_str().unwrap().to_string()
    }
}

impl Drop for Dir {
    fn drop(&mut self) {
        let _ = std::fs::remove_dir_all(&self.0);
    }
}

#[test]
fn classify_examples() {
    let d = Dir::new("classify");
    let o = run(&["classify", &d.file("a", "4 1\n1111\n")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("AllEven, dim 1"));

    let o = run(&["classify", &d.file("b", "3 1\n100\n")]);
    let out = stdout(&o);
    assert!(
        out.contains("MixedParity") && out.contains("u=100"),
        "{out}"
    );

    let h = d.path("h3");
    run(&["hamming", "3", "-o", &h]);
    let o = run(&["classify", &h]);
    assert!(stdout(&o).starts_with("MixedParity, dim 4, even_dim 3"));

    let (code, r) = json(&[
        "classify",
        &d.file("c", "4 2 # not isotropic\n1000\n0100\n"),
    ]);
    assert_eq!(code, 2);
    assert_eq!(r["isotropic"], false);
    assert_eq!(r["witnesses"], serde_json::json!(["1000", "0100"]));
}

#[test]
fn parse_errors_report_position() {
    let d = Dir::new("parse");
    let o = run(&["classify", &d.file("bad", "# header\n4 1\n10x1\n")]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 3, column 3"), "{err}");
    let o = run(&["classify", &d.path("missing")]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn convert_round_trip() {
    let d = Dir::new("convert");
    let src = d.file("s", "6 2\n111000\n000110\n");
    let canon = d.path("canon");
    let ext = d.path("ext");
    let back = d.path("back");
    // canonicalize by a round trip, then check the second pass is byte-identical
    run(&["convert", "extend", &src, "-o", &ext]);
    run(&["convert", "puncture", &ext, "-o", &canon]);
    run(&["convert", "extend", &canon, "-o", &ext]);
    let o = run(&["convert", "puncture", &ext, "-o", &back]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        std::fs::read(&canon).unwrap(),
        std::fs::read(&back).unwrap()
    );
    assert_eq!(
        std::fs::read_to_string(&ext).unwrap(),
        "7 2\n1110001\n0001100\n"
    );

    let o = run(&["convert", "extend", &d.file("x", "3 1\n100\n")]);
    assert_eq!(stdout(&o), "4 1\n1001\n");
    let o = run(&[
        "convert",
        "puncture",
        &d.file("y", "4 1\n1100\n"),
        "--coordinate",
        "0",
    ]);
    assert_eq!(stdout(&o), "3 1\n100\n");
}

#[test]
fn convert_preconditions() {
    let d = Dir::new("pre");
    let o = run(&["convert", "puncture", &d.file("odd", "3 1\n100\n")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8(o.stderr).unwrap().contains("100"));
    let o = run(&["convert", "puncture", &d.file("nso", "4 2\n1100\n0110\n")]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["convert", "extend", &d.file("niso", "4 2\n1000\n0100\n")]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn hamming_parameters() {
    let (code, r) = json(&["hamming", "3"]);
    assert_eq!(code, 0);
    assert_eq!(r["parameters"], "[[7,3]]_Cl");
    assert_eq!(r["clifford_distance"], 3);
    assert_eq!(r["verdict_census"]["stabilizer"], 16);

    let (_, r) = json(&["hamming", "4"]);
    assert_eq!(r["parameters"], "[[15,10]]_Cl");
    assert_eq!(r["clifford_distance"], 3);

    let (_, r) = json(&["hamming", "5"]);
    assert_eq!(r["parameters"], "[[31,25]]_Cl");
    assert_eq!(r["distance_method"], "certificate");
    assert_eq!(
        r["clifford_distance"],
        serde_json::json!({"lower_bound": 3})
    );
    assert!(r["distance_certificate"]
        .as_str()
        .unwrap()
        .contains("dual distance 3"));

    let out = run(&["--format", "json", "hamming", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
    let r: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r["parameters"], "[[3,0]]_Cl");
    assert_eq!(run(&["hamming", "1"]).status.code(), Some(2));
    assert_eq!(run(&["hamming", "11"]).status.code(), Some(3));
}

#[test]
fn verify_levels_and_signs() {
    let d = Dir::new("verify");
    let h = d.path("h3");
    run(&["hamming", "3", "-o", &h]);
    let (code, plain) = json(&["verify", &h]);
    assert_eq!(code, 0);
    let (code, flipped) = json(&["verify", &h, "--signs=-1,1,-1,1"]);
    assert_eq!(code, 0);
    assert_eq!(plain["verdict_census"], flipped["verdict_census"]);
    let idem = |v: &Value| {
        v["checks"]
            .as_array()
            .unwrap()
            .iter()
            .find(|c| c["name"] == "projector-idempotent")
            .unwrap()["passed"]
            .clone()
    };
    assert_eq!(idem(&flipped), true);

    let o = run(&["verify", &d.file("n", "4 2\n1000\n0100\n")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("[FAIL] commutation"));
    assert!(String::from_utf8(o.stderr)
        .unwrap()
        .contains("x=1000 y=0100"));

    assert_eq!(
        run(&["verify", &h, "--signs", "1,2,1,1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["verify", &h, "--signs", "1,1"]).status.code(),
        Some(2)
    );
    let (code, _) = json(&["hamming", "4", "-o", &d.path("h4")]);
    assert_eq!(code, 0);
    assert_eq!(
        run(&["verify", &d.path("h4"), "--level", "dense"])
            .status
            .code(),
        Some(3)
    );
    let small = d.file("s", "8 2\n11110000\n00001111\n");
    let (code, r) = json(&["verify", &small, "--level", "dense"]);
    assert_eq!(code, 0);
    assert_eq!(r["checks"].as_array().unwrap().len(), 13);
    assert_eq!(
        run(&[
            "--max-dense-qubits",
            "3",
            "verify",
            &small,
            "--level",
            "dense"
        ])
        .status
        .code(),
        Some(3)
    );
}

#[test]
fn metric_reports() {
    let (code, r) = json(&["metric", "full-clifford", "4"]);
    assert_eq!(code, 0);
    assert_eq!(r["dims"], serde_json::json!([1, 5, 11, 15, 16]));
    assert_eq!(r["saturation_level"], 4);
    let (_, r) = json(&["metric", "quantum-hamming", "2"]);
    assert_eq!(r["dims"], serde_json::json!([1, 7, 16]));
    let (_, r) = json(&["metric", "spinorial", "5", "1"]);
    assert_eq!(r["dims"], serde_json::json!([1, 11]));
    let (_, r) = json(&["metric", "semispinorial", "4"]);
    assert_eq!(r["dims"], serde_json::json!([1, 4]));
    assert_eq!(
        run(&["metric", "quantum-hamming", "7"]).status.code(),
        Some(3)
    );
    assert_eq!(
        run(&["metric", "semispinorial", "5"]).status.code(),
        Some(2)
    );
}

#[test]
fn search_outputs_verify() {
    let d = Dir::new("search");
    let out = d.path("found");
    let (code, r) = json(&["search", "14", "3", "1000", "--seed", "7", "-o", &out]);
    assert_eq!(code, 0);
    assert_eq!(r["found"], true);
    assert_eq!(run(&["classify", &out]).status.code(), Some(0));
    assert_eq!(run(&["verify", &out]).status.code(), Some(0));
    assert_eq!(
        std::fs::read_to_string(&out).unwrap(),
        r["code_file"].as_str().unwrap()
    );

    let o = run(&["search", "4", "6", "100"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "not found\n");
    assert_eq!(run(&["search", "1", "3", "10"]).status.code(), Some(2));
}

#[test]
fn seed_from_environment() {
    let flag = run(&[
        "--format", "json", "search", "12", "3", "500", "--seed", "9",
    ]);
    let env = bin()
        .args(["--format", "json", "search", "12", "3", "500"])
        .env("ANYONCODEC_SEED", "9")
        .output()
        .unwrap();
    assert_eq!(flag.stdout, env.stdout);
}
