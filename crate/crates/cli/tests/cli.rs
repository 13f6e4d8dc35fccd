use dqspec_core::enumerate::{enumerate, EnumerationFilter};
use dqspec_core::{from_graph6, is_isomorphic, to_graph6, Limits};
use serde_json::Value;
use std::io::Write;
use std::process::{Command, Output, Stdio};

fn dqspec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dqspec"))
        .args(args)
        .env_remove("DQSPEC_ENUM_CAP")
        .env_remove("DQSPEC_BUILD_CAP")
        .env_remove("DQSPEC_SPECTRAL_CAP")
        .output()
        .unwrap()
}

fn dqspec_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_dqspec"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn count_reports_nine_classes_at_6_11() {
    let o = dqspec(&["count", "-n", "6", "-m", "11"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["count"], 9);
    assert_eq!(v["filter"]["order"], 6);
    assert!(v.get("elapsed_ms").is_some());
    let o = dqspec(&["count", "-n", "6", "-m", "11", "--format", "table"]);
    assert_eq!(stdout(&o).trim(), "9");
}

#[test]
fn enumerate_streams_graph6() {
    let o = dqspec(&[
        "enumerate",
        "-n",
        "7",
        "-m",
        "9",
        "--bipartite",
        "--spectral",
        "gamma1 > 32/5",
        "--format",
        "graph6",
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().collect::<Vec<_>>(), ["F?@~o"]);
    let seq = dqspec(&["enumerate", "-n", "6", "--connected", "--jobs", "1"]);
    let par = dqspec(&["enumerate", "-n", "6", "--connected", "--jobs", "4"]);
    assert_eq!(stdout(&seq), stdout(&par));
    assert_eq!(stdout(&seq).lines().count(), 112);
}

#[test]
fn spectrum_of_the_join() {
    let o = dqspec(&["spectrum", "join(K4-e, 3*K1)", "--kind", "Q"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!((v["n"].as_u64(), v["m"].as_u64()), (Some(7), Some(17)));
    let mults: Vec<(f64, u64)> = v["roots"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| (r["approx"].as_f64().unwrap(), r["mult"].as_u64().unwrap()))
        .collect();
    assert!(mults.contains(&(5.0, 2)));
    assert!(mults.iter().any(|&(x, k)| x == 4.0 && k >= 2));
    assert_eq!(mults.iter().map(|m| m.1).sum::<u64>(), 7);
}

#[test]
fn spectrum_and_mates_read_stdin() {
    let o = dqspec_stdin(&["spectrum", "--kind", "L"], "DK{\nC~\n");
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 2);
    let o = dqspec_stdin(&["mates", "--kind", "Q"], "DK{\n");
    let v = json(&o);
    assert_eq!(v["target"], "DK{");
    let o = dqspec_stdin(
        &["mates", "--format", "graph6"],
        &format!("{}\n", to_graph6(&k3_k2_k1())),
    );
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines.len(), 1);
    let star = dqspec_core::parse_graph("K{1,3} + K2", &Limits::default()).unwrap();
    assert!(is_isomorphic(&from_graph6(&lines[0]).unwrap(), &star));
}

fn k3_k2_k1() -> dqspec_core::Graph {
    dqspec_core::parse_graph("K3 + K2 + K1", &Limits::default()).unwrap()
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(dqspec(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        dqspec(&["count", "-n", "6", "--bogus"]).status.code(),
        Some(2)
    );
    let bad = dqspec(&["spectrum", "g6:D??x"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("byte"));
    let cap = dqspec(&["count", "-n", "11"]);
    assert_eq!(cap.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&cap.stderr).contains("--cap"));
    let build = dqspec(&["spectrum", "K14"]);
    assert!(String::from_utf8_lossy(&build.stderr).contains("--build-cap"));
}

#[test]
fn environment_caps_yield_to_flags() {
    let run = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_dqspec"))
            .args(args)
            .env("DQSPEC_ENUM_CAP", "5")
            .output()
            .unwrap()
    };
    assert_eq!(run(&["count", "-n", "6"]).status.code(), Some(2));
    let o = run(&["count", "-n", "6", "--cap", "6"]);
    assert!(o.status.success());
    assert_eq!(json(&o)["count"], 156);
}

#[test]
fn convert_round_trips_every_graph_up_to_order_7() {
    let limits = Limits::default();
    let mut lines = String::new();
    for n in 1..=7 {
        for g in enumerate(&EnumerationFilter::new(n), &limits).unwrap() {
            lines.push_str(&to_graph6(&g));
            lines.push('\n');
        }
    }
    let adj = dqspec_stdin(&["convert", "--to", "adjacency"], &lines);
    assert!(adj.status.success());
    let back = dqspec_stdin(&["convert", "--to", "graph6"], &stdout(&adj));
    assert!(back.status.success());
    assert_eq!(stdout(&back), lines);
    let s6 = dqspec_stdin(&["convert", "--to", "sparse6"], &lines);
    let again = dqspec_stdin(&["convert", "--to", "graph6"], &stdout(&s6));
    assert_eq!(stdout(&again), lines);
}

#[test]
fn seeded_relabeling_is_reproducible_and_isomorphic() {
    let a = dqspec(&["convert", "G(2,2,1) + K3", "--to", "graph6", "--seed", "7"]);
    let b = dqspec(&["convert", "G(2,2,1) + K3", "--to", "graph6", "--seed", "7"]);
    assert_eq!(stdout(&a), stdout(&b));
    let orig = dqspec_core::parse_graph("G(2,2,1) + K3", &Limits::default()).unwrap();
    assert!(is_isomorphic(
        &from_graph6(stdout(&a).trim()).unwrap(),
        &orig
    ));
}

#[test]
fn verify_commands_emit_report_arrays() {
    let o = dqspec(&["verify", "counterexample"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v[0]["verdict"], "pass");
    assert_eq!(v[0]["details"]["pairs"].as_array().unwrap().len(), 1);

    let o = dqspec(&["verify", "closed-form", "DoubleStarQ"]);
    assert!(o.status.success());
    assert_eq!(json(&o).as_array().unwrap().len(), 15);

    let o = dqspec(&["verify", "lemma", "d4", "--max-order", "6"]);
    assert!(o.status.success());
    assert_eq!(json(&o)[0]["claim"], "D4_det_unicyclic");

    let o = dqspec(&["verify", "theorem", "join", "--n", "8"]);
    assert!(o.status.success());
    let o = dqspec(&["verify", "theorem", "kn-k2", "--n", "3", "--r", "1"]);
    assert!(o.status.success());
    assert_eq!(dqspec(&["verify", "lemma", "nope"]).status.code(), Some(2));
}

#[test]
fn verify_all_is_reproducible_modulo_timing() {
    let untimed = || {
        let o = dqspec(&["verify", "all", "--max-order", "7"]);
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
        let mut v = json(&o);
        for r in v.as_array_mut().unwrap() {
            r.as_object_mut().unwrap().remove("elapsed_ms");
        }
        v
    };
    let a = untimed();
    assert_eq!(a, untimed());
    assert!(a.as_array().unwrap().iter().all(|r| r["verdict"] != "fail"));
}
