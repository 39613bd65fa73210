use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_primefree"))
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("primefree-it-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    fs::write(&path, contents).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn decide_exit_codes_and_json() {
    let p4 = scratch("p4.g6", ">>graph6<<Ch\n");
    let o = run(&["decide", "-f", p4.to_str().unwrap(), "--json"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(
        stdout(&o),
        "{\"outcome\":\"FINITE\",\"n\":4,\"certificate\":null,\"bounds\":{\"chain_length\":1792}}\n"
    );

    let claw = scratch("claw.g6", "# claw\nCs\n");
    let o = run(&["decide", "-f", claw.to_str().unwrap(), "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "{\"outcome\":\"INFINITE\",\"n\":4,\"certificate\":{\"type\":\"family\",\"kind\":\"subdivided-star-complement\",\"n\":4},\"bounds\":null}\n"
    );
}

#[test]
fn json_is_stable_across_runs_and_threads() {
    let c4 = scratch("c4.g6", "Cr\n");
    let outputs: Vec<String> = ["1", "2", "4"]
        .iter()
        .map(|t| stdout(&run(&["decide", "-f", c4.to_str().unwrap(), "--json", "--threads", t])))
        .collect();
    assert!(outputs.windows(2).all(|w| w[0] == w[1]));
}

#[test]
fn verify_round_trip() {
    let claw = scratch("claw2.g6", "Cs\n");
    let o = run(&["decide", "-f", claw.to_str().unwrap(), "--json"]);
    let cert = scratch("cert.json", &stdout(&o));
    let o = run(&["verify", "-f", claw.to_str().unwrap(), cert.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "valid\n");

    let forged = scratch(
        "forged.json",
        r#"{"outcome":"INFINITE","n":4,"certificate":{"type":"family","kind":"half-graph","n":4},"bounds":null}"#,
    );
    let o = run(&["verify", "-f", claw.to_str().unwrap(), forged.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "invalid\n");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["decide"]).status.code(), Some(2));
    assert_eq!(run(&["launch"]).status.code(), Some(2));
    assert_eq!(run(&["decide", "-f", "/no/such/file.g6"]).status.code(), Some(2));
    let p4 = scratch("p4b.g6", "Ch\n");
    let o = run(&["census", "-f", p4.to_str().unwrap(), "--period-cap", "proof"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
}

#[test]
fn runtime_errors_exit_3() {
    let bad = scratch("bad.g6", "Ch\n!!\n");
    let o = run(&["decide", "-f", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn census_output_format() {
    let p4 = scratch("p4c.g6", "Ch\n");
    let o = run(&["census", "-f", p4.to_str().unwrap(), "--max-order", "8"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "# order 1 (count 1)\n@\n# order 2 (count 2)\nA?\nA_\n# order 3 (count 0)\n# order 4 (count 0)\n# halted after order 4\n"
    );
}

#[test]
fn small_subcommands() {
    assert!(stdout(&run(&["family", "thin-spider", "3"])).trim().len() > 1);
    assert_eq!(stdout(&run(&["chain-decode", "00"])), "Bg\n");
    assert_eq!(stdout(&run(&["chain-encode", "Bg"])), "00\n");
    assert_eq!(stdout(&run(&["chain-encode", "Bg", "--order", "1,0,2"])), "01\n");
    assert_eq!(run(&["chain-encode", "Bw"]).status.code(), Some(3));
    let reps = stdout(&run(&["reps", "A_"]));
    assert_eq!(reps, "0\n|1\n");
    assert_eq!(stdout(&run(&["contains", "Ch", "0000", "--route", "direct"])), "yes\n");
    assert_eq!(stdout(&run(&["contains", "Ch", "0000", "--route", "representations"])), "yes\n");
    let o = run(&["prime-check", "Ch", "Bw", "--json"]);
    assert_eq!(
        stdout(&o),
        "[{\"graph\":\"Ch\",\"homogeneous_set\":null,\"prime\":true},{\"graph\":\"Bw\",\"homogeneous_set\":[0,1],\"prime\":false}]\n"
    );
}
