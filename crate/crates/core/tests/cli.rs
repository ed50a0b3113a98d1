use std::path::PathBuf;
use std::process::{Command, Output};

fn corpus(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus").join(name)
}

fn qweyl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qweyl"))
        .args(args)
        .output()
        .expect("qweyl runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path(name: &str) -> String {
    corpus(name).display().to_string()
}

#[test]
fn nf_golden() {
    let o = qweyl(&["nf", &path("w3.pres"), "x3 x2 x1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "-x1*x2*x3 + x3 - x2 + x1\n");
}

#[test]
fn mul_golden() {
    let o = qweyl(&["mul", &path("w2.pres"), "x2", "x1"]);
    assert_eq!(stdout(&o), "-x1*x2 + 1\n");
}

#[test]
fn aut_w4_lists_48_elements() {
    let o = qweyl(&["aut", &path("w4.pres")]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("order: 48\n"), "{text}");
    assert_eq!(text.lines().filter(|l| l.starts_with("  g(")).count(), 48);
}

#[test]
fn aut_q_powers_reports_closure_image() {
    let o = qweyl(&["--json", "aut", &path("q_powers.pres")]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let g = &v["payload"]["group"];
    assert_eq!(g["closure_order"], 8);
    assert_eq!(g["needs_quadratic_extension"].as_array().unwrap().len(), 2);
}

#[test]
fn iso_identical_files_gives_identity() {
    let w = path("w4.pres");
    let o = qweyl(&["iso", &w, &w]);
    assert_eq!(stdout(&o), "isomorphic\nwitness: sigma = id, lambda = (1,1,1,1)\n");
}

#[test]
fn json_payload_is_deterministic() {
    let run = || {
        let o = qweyl(&["--json", "aut", &path("sixth_root.pres"), "--certificate"]);
        let mut v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        v.as_object_mut().unwrap().remove("elapsed_ms");
        serde_json::to_string(&v).unwrap()
    };
    assert_eq!(run(), run());
}

#[test]
fn threads_env_is_respected() {
    let o = Command::new(env!("CARGO_BIN_EXE_qweyl"))
        .args(["aut", &path("w4.pres")])
        .env("QWEYL_THREADS", "1")
        .output()
        .unwrap();
    assert!(stdout(&o).starts_with("order: 48\n"));
    let o = Command::new(env!("CARGO_BIN_EXE_qweyl"))
        .args(["aut", &path("w4.pres")])
        .env("QWEYL_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn exit_codes() {
    let dir = std::env::temp_dir().join(format!("qweyl-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let lower = dir.join("lower.pres");
    std::fs::write(&lower, "n = 2\na[2,1] = 1\n").unwrap();
    let o = qweyl(&["nf", lower.to_str().unwrap(), "x1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));

    // Omega generators need an odd number of generators.
    let o = qweyl(&["free", &path("w4.pres"), "g h"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(qweyl(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(qweyl(&["aut"]).status.code(), Some(1));
    assert_eq!(qweyl(&["--help"]).status.code(), Some(0));
}

#[test]
fn every_subcommand_runs_on_the_corpus() {
    let cases: Vec<Vec<String>> = vec![
        vec!["disc".into(), path("w2.pres")],
        vec!["inv".into(), path("w2.pres"), "--group".into(), "S2".into(), "--degree".into(), "3".into()],
        vec!["free".into(), path("w3.pres"), "g^2 h^-1 g".into(), "--tau".into()],
        vec!["skew".into(), path("skew_z4.pres"), "ts".into(), "--s".into(), "2".into()],
        vec!["skew".into(), path("comm4.pres"), "cor28".into(), "--d".into(), "1,1,0".into(), "--dp".into(), "1,1,0".into()],
        vec!["skew".into(), path("skew_z4.pres"), "nf".into(), "x2 x1".into()],
        vec!["omega".into(), path("w3.pres"), "1".into(), "2".into()],
    ];
    for args in cases {
        let refs: Vec<&str> = args.iter().map(String::as_str).collect();
        let o = qweyl(&refs);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        let mut json = vec!["--json"];
        json.extend(&refs);
        let o = qweyl(&json);
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(v["digest"][0]["sha256"].as_str().unwrap().len(), 64);
    }
}

#[test]
fn corpus_round_trips() {
    for entry in std::fs::read_dir(corpus("")).unwrap() {
        let text = std::fs::read_to_string(entry.unwrap().path()).unwrap();
        let parsed = qweyl::presfile::parse_presentation(&text).unwrap();
        let again = match &parsed {
            qweyl::presfile::ParsedFile::Weyl(p) => qweyl::presfile::write_presentation(p),
            qweyl::presfile::ParsedFile::Skew(s) => qweyl::presfile::write_skew(s),
        };
        assert_eq!(qweyl::presfile::parse_presentation(&again).unwrap(), parsed);
    }
}
