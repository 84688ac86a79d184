use std::process::Command;

use twisted_n2_cli::run;

fn cli(args: &str) -> twisted_n2_cli::Outcome {
    run(std::iter::once("tn2lab").chain(args.split_whitespace()).map(std::ffi::OsString::from))
}

fn json(args: &str) -> serde_json::Value {
    let out = cli(args);
    serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{args}: {e}\n{}", out.stdout))
}

#[test]
fn symbolic_sweep_command() {
    let out = cli("verify-axioms --family Aab --a sym --b sym --gen-window 2 --basis-window 4");
    assert_eq!(out.code, 0, "{}", out.stderr);
    let v = json("verify-axioms --family Aab --a sym --b sym --gen-window 2 --basis-window 4 --format json");
    assert_eq!(v["params"]["gen-window"], "2");
    assert_eq!(v["params"]["basis-window"], "4");
}

#[test]
fn delta_one_json() {
    let out = cli("delta --which 1 --format json");
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("\"equal\": true"));
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    let detail = &v["details"][0];
    assert!(detail["stated_factored_form"].as_str().unwrap().contains("m^6"));
}

#[test]
fn excluded_weight_is_a_usage_error() {
    let out = cli("verify-axioms --family Bab --a 1/2 --b 0 --bprime -3/2");
    assert_eq!(out.code, 2);
    assert!(!out.stderr.is_empty());
}

#[test]
fn usage_errors() {
    assert_eq!(cli("frobnicate").code, 2);
    assert_eq!(cli("delta --which 7").code, 2);
    assert_eq!(cli("jacobi --family Aab").code, 2);
    assert_eq!(cli("verify-axioms --family Aab --a x/y").code, 2);
    assert_eq!(cli("verify-axioms --family Bab --a 1/3 --b 1 --bprime 2").code, 2);
    assert_eq!(cli("nonexist-b0 --a 1/2").code, 2);
    assert_eq!(cli("verify-axioms --inject-fault no-such-fault").code, 2);
    assert_eq!(cli("--help").code, 0);
}

#[test]
fn injected_fault_fails_with_witness() {
    let out = cli("verify-axioms --inject-fault T-sign --format json");
    assert_eq!(out.code, 1);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    let failing: Vec<&serde_json::Value> =
        v["checks"].as_array().unwrap().iter().filter(|c| c["status"] == "fail").collect();
    assert!(!failing.is_empty());
    assert!(failing.iter().all(|c| c["witness"].is_string()));
}

#[test]
fn json_output_is_deterministic() {
    for args in ["delta --format json", "roots --format json", "deform --format json", "submodule --format json"] {
        let a = cli(args);
        let b = cli(args);
        assert_eq!(a.code, 0, "{args}");
        assert_eq!(a.stdout, b.stdout, "{args}");
    }
}

#[test]
fn report_envelope() {
    let v = json("jacobi --gen-window 1 --format json");
    assert_eq!(v["command"], "jacobi");
    assert_eq!(v["summary"]["failed"], 0);
    let c = &v["checks"][0];
    for key in ["name", "paperRef", "status"] {
        assert!(c.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn deform_fit_from_e() {
    let v = json("deform --e1 -3 --e2 -8 --format json");
    let text = v.to_string();
    assert!(text.contains("alpha = 2"), "{text}");
}

#[test]
fn submodule_candidate_on_family() {
    let out = cli("submodule --family Aab --a 0 --b -1 --except x_0");
    assert_eq!(out.code, 0, "{}{}", out.stdout, out.stderr);
    let out = cli("submodule --family Aab --a 1/3 --b 2/5 --only x_0 --format json");
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("L(1)"));
}

#[test]
fn intersection_a_is_reported_as_failing() {
    let out = cli("roots --which intersection-a");
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("b = -3/2"));
    assert_eq!(cli("roots --which intersection-b").code, 0);
}

#[test]
fn out_file_matches_stdout() {
    let dir = std::env::temp_dir().join(format!("tn2lab-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("r.json");
    let out = cli(&format!("delta --which 2 --format json --out {}", path.display()));
    assert_eq!(out.code, 0);
    let saved = std::fs::read_to_string(&path).unwrap();
    assert_eq!(saved.trim(), cli("delta --which 2 --format json").stdout.trim());
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_tn2lab");
    let ok = Command::new(bin).args(["delta", "--which", "1"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let bad = Command::new(bin).args(["verify-axioms", "--inject-fault", "T-sign"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(1));
    let usage = Command::new(bin).arg("nonsense").output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
}
