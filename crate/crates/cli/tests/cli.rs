use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_toric-bricks")).args(args).output().expect("binary runs")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("toric-bricks-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

/// Splits concatenated JSON documents.
fn docs(out: &Output) -> Vec<Value> {
    serde_json::Deserializer::from_slice(&out.stdout).into_iter::<Value>().map(|v| v.unwrap()).collect()
}

fn write_fixture(name: &str) -> PathBuf {
    let out = bin(&["fixture", name]);
    assert!(out.status.success());
    let path = scratch(&format!("{name}.json"));
    std::fs::write(&path, &out.stdout).unwrap();
    path
}

#[test]
fn subdivide_reports_sub_cone_types() {
    let out = bin(&["subdivide", "1/20(1,3,4)", "--at", "1,3,4"]);
    assert_eq!(out.status.code(), Some(0));
    let d = &docs(&out)[0]["details"];
    let subs = d["sub_cones"].as_array().unwrap();
    assert_eq!(subs[0]["smooth"], true);
    assert_eq!(subs[1]["type"], "1/3(1,1,1)");
    assert_eq!(subs[2]["type"], "1/4(1,3,0)");
    assert_eq!(d["good"], true);
    assert_eq!(d["fan"]["kind"], "fan");
}

#[test]
fn group_info_lists_junior_points() {
    let out = bin(&["group", "info", "1/20(1,3,4)"]);
    assert!(out.status.success());
    let d = &docs(&out)[0]["details"];
    assert_eq!(d["order"], 20);
    assert_eq!(d["weight_map"].as_array().unwrap().len(), 20);
    assert!(d["junior_points"].as_array().unwrap().iter().any(|p| p["label"] == "v5" && p["point"] == serde_json::json!([5, 15, 0])));
}

#[test]
fn certify_figure_four() {
    let fan = write_fixture("fig4");
    let a = bin(&["certify", "1/20(1,3,4)", fan.to_str().unwrap()]);
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stdout));
    let cert = &docs(&a)[0];
    assert_eq!(cert["kind"], "certificate");
    let split = &cert["root"]["split"];
    assert_eq!(split["m"], 2);
    let margins = split["margins"].as_array().unwrap();
    assert_eq!(margins.len(), 8);
    assert!(margins.iter().all(|m| m["symbolic"]["const"].is_string() && m["symbolic"]["slope"].is_string()));
    let b = bin(&["certify", "1/20(1,3,4)", fan.to_str().unwrap()]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn certify_model_z_reports_rank() {
    let fan = write_fixture("model-z");
    let out = bin(&["certify", "1/39(1,5,11)", fan.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    let ds = docs(&out);
    assert_eq!(ds[0]["kind"], "report");
    assert!(ds[0]["details"]["rank"].as_u64().unwrap() < ds[0]["details"]["target_dim"].as_u64().unwrap());
    assert_eq!(ds[1]["kind"], "error");
    assert_eq!(ds[1]["code"], 3);
}

#[test]
fn render_star_subdivision() {
    let fan = write_fixture("fig3");
    let svg = scratch("fig3.svg");
    let out = bin(&["render", fan.to_str().unwrap(), "-o", svg.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(svg).unwrap();
    assert!(text.starts_with("<?xml"));
    assert_eq!(text.matches("<polygon").count(), 3);
    assert_eq!(text.matches("<circle").count(), 4);
    assert_eq!(text.matches("<g ").count(), text.matches("</g>").count());
}

#[test]
fn fan_check_and_hilb() {
    let fan = write_fixture("fig4");
    let out = bin(&["fan", "check", fan.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(docs(&out)[0]["details"]["minimal_model"], true);
    let (f, b) = (scratch("h.fan"), scratch("h.bricks"));
    let out = bin(&["hilb", "1/12(1,2,3)", "--fan-out", f.to_str().unwrap(), "--brickset-out", b.to_str().unwrap()]);
    assert!(out.status.success());
    let out = bin(&["brickset", "verify", b.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let out = bin(&["fan", "check", f.to_str().unwrap()]);
    assert_eq!(docs(&out)[0]["details"]["minimal_model"], false);
}

#[test]
fn brickset_build_and_theta_solve() {
    let fan = write_fixture("fig4");
    let out = bin(&[
        "brickset", "build", "1/20(1,3,4)", fan.to_str().unwrap(), "--center", "1,3,4", "--strategy", "1=trivial",
        "--strategy", "2=ghilb", "--strategy", "3=ghilb",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    assert_eq!(docs(&out)[0]["entries"].as_array().unwrap().len(), 8);
    let t: Vec<PathBuf> = [("t1", "[\"0\"]", 1), ("t2", "[\"-2\",\"1\",\"1\"]", 3), ("t3", "[\"-3\",\"1\",\"1\",\"1\"]", 4)]
        .iter()
        .map(|(n, v, r)| {
            let p = scratch(n);
            std::fs::write(&p, format!("{{\"kind\":\"theta\",\"r\":{r},\"values\":{v}}}")).unwrap();
            p
        })
        .collect();
    let out = bin(&[
        "theta", "solve", "1/20(1,3,4)", "--center", "1,3,4", "--targets", t[0].to_str().unwrap(),
        t[1].to_str().unwrap(), t[2].to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(docs(&out)[0]["kind"], "theta");
}

#[test]
fn stability_check_on_a_chain() {
    let brick = scratch("chain.brick");
    std::fs::write(&brick, r#"{"kind":"brick","group":{"r":3,"weights":[1,1,1]},"monomials":[[0,0,0],[0,0,1],[0,0,2]]}"#).unwrap();
    let theta = scratch("plus.theta");
    std::fs::write(&theta, r#"{"kind":"theta","r":3,"values":["-2","1","1"]}"#).unwrap();
    let out = bin(&["stability", "check", brick.to_str().unwrap(), theta.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let d = &docs(&out)[0]["details"];
    assert_eq!(d["value"], "1");
    let neg = scratch("minus.theta");
    std::fs::write(&neg, r#"{"kind":"theta","r":3,"values":["2","-1","-1"]}"#).unwrap();
    let out = bin(&[
        "stability", "check", brick.to_str().unwrap(), neg.to_str().unwrap(), "--symbolic-m", "--vartheta",
        theta.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let d = &docs(&out)[0]["details"];
    assert_eq!(d["m"], 2);
    assert_eq!(d["symbolic"]["slope"], "1");
}

#[test]
fn exit_codes() {
    let bad = scratch("bad.json");
    std::fs::write(&bad, "{\"kind\":\"fan\",\n \"group\": }").unwrap();
    let out = bin(&["fan", "check", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(4));
    let e = &docs(&out)[0];
    assert_eq!(e["kind"], "error");
    assert!(e["message"].as_str().unwrap().contains("line 2"));
    let out = bin(&["group", "info", "1/20(2,4,6)"]);
    assert_eq!(out.status.code(), Some(2));
    let out = bin(&["group", "info", "1/20[1,3,4]"]);
    assert_eq!(out.status.code(), Some(4));
    let out = bin(&["subdivide", "1/20(1,3,4)"]);
    assert_eq!(out.status.code(), Some(4));
}
