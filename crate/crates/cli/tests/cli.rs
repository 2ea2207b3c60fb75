use std::process::{Command, Output};

use serde_json::Value;

fn calogero(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_calogero")).args(args).env_remove("CM_PROFILE").env_remove("CM_CONFIG").output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited")
}

#[test]
fn verify_quick_passes_with_manifest() {
    let out = calogero(&["verify", "--seed", "7"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["report"]["passed"], true);
    assert_eq!(v["manifest"]["seed"], 7);
    assert_eq!(v["manifest"]["command"], "verify");
    assert!(v["manifest"]["checks"].as_object().unwrap().len() >= 17);
}

#[test]
fn mutated_weight_is_caught() {
    let ok = calogero(&["dunkl-check", "--group", "B2", "--degree", "3"]);
    assert_eq!(code(&ok), 0);
    let bad = calogero(&["dunkl-check", "--group", "B2", "--degree", "3", "--perturb"]);
    assert_eq!(code(&bad), 1);
    assert_eq!(json(&bad)["manifest"]["checks"]["dunkl-commute B2"], false);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&calogero(&["verify", "--profile", "nope"])), 2);
    assert_eq!(code(&calogero(&["dunkl-check", "--group", "Q7"])), 2);
    assert_eq!(code(&calogero(&["support", "--n", "4", "--r", "2", "--point", "1,2"])), 2);
    assert_eq!(code(&calogero(&["no-such-verb"])), 2);
    assert_eq!(code(&calogero(&["trig", "--x", "1,-1", "--p", "0,0"])), 2);
}

#[test]
fn output_is_deterministic() {
    let a = json(&calogero(&["necklace", "--trials", "3", "--seed", "11"]));
    let b = json(&calogero(&["necklace", "--trials", "3", "--seed", "11"]));
    assert_eq!(a["checks"], b["checks"]);
    assert_eq!(a["result"], b["result"]);
}

#[test]
fn support_letters() {
    let inside = json(&calogero(&["support", "--n", "4", "--r", "2", "--point", "a,a,b,b"]));
    assert_eq!(inside["result"]["in_support"], true);
    let outside = json(&calogero(&["support", "--n", "4", "--r", "2", "--point", "a,b,c,d"]));
    assert_eq!(outside["result"]["in_support"], false);
    let mixed = json(&calogero(&["support", "--n", "4", "--r", "1", "--point", "a,a,a,a"]));
    assert_eq!(mixed["result"]["in_support"], true);
}

#[test]
fn finite_dim_and_character() {
    let v = json(&calogero(&["finite-dim", "--n", "3", "--r", "2"]));
    assert_eq!(v["result"]["total"], 4);
    let c = calogero(&["character", "--group", "Z2", "--tau", "triv", "--deg", "3"]);
    assert_eq!(code(&c), 0);
    let c = calogero(&["character", "--group", "H3"]);
    assert_eq!(code(&c), 2);
}

#[test]
fn flow_csv_schema() {
    let out = calogero(&["flow", "--n", "2", "--t-max", "0.004", "--dt", "0.002"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("t,x_1,x_2,p_1,p_2,H_1,H_2,method"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 6);
    assert!(rows[..3].iter().all(|r| r.ends_with(",eigen")) && rows[3..].iter().all(|r| r.ends_with(",ode")));
}

#[test]
fn flow_collision_reported() {
    let out = calogero(&["flow", "--x", "0,1", "--p", "0,0", "--t-max", "0.3", "--dt", "0.01", "--method", "ode"]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("collision"));
}

#[test]
fn config_presets_and_override() {
    let dir = std::env::temp_dir().join(format!("calogero-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("preset.toml");
    std::fs::write(&cfg, "seed = 5\ngroup = \"B2\"\ndegree = 2\n").unwrap();
    let v = json(&calogero(&["--config", cfg.to_str().unwrap(), "dunkl-check"]));
    assert_eq!(v["manifest"]["seed"], 5);
    assert_eq!(v["result"]["group"], "B2");
    assert_eq!(v["result"]["degree"], 2);
    let v = json(&calogero(&["--config", cfg.to_str().unwrap(), "dunkl-check", "--group", "S3", "--seed", "9"]));
    assert_eq!(v["manifest"]["seed"], 9);
    assert_eq!(v["result"]["group"], "S3");
    std::fs::write(&cfg, "bogus = 1\n").unwrap();
    assert_eq!(code(&calogero(&["--config", cfg.to_str().unwrap(), "dunkl-check"])), 2);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn out_file_and_paper_ref() {
    let path = std::env::temp_dir().join(format!("calogero-out-{}.json", std::process::id()));
    let out = calogero(&["singular", "--n", "2", "--r", "1", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["result"]["k"], "1/2");
    std::fs::remove_file(&path).unwrap();
    let refs = calogero(&["necklace", "--paper-ref"]);
    assert_eq!(code(&refs), 0);
    assert!(String::from_utf8_lossy(&refs.stdout).contains("necklace"));
}
