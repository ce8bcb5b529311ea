use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn algvor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_algvor")).args(args).env_remove("VORONOI_BUDGET").output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn cusp_components_at_smooth_point() {
    let cusp = data("cuspidal_cubic.json");
    let out = algvor(&["voronoi", cusp.to_str().unwrap(), "--point", "4,8"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v = json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["degree"], 4);
    let comps = v["components"].as_array().unwrap();
    assert_eq!(comps.len(), 3);
    let points: Vec<&Value> = comps.iter().map(|c| &c["point"]).filter(|p| !p.is_null()).collect();
    assert!(points.contains(&&serde_json::json!(["28", "0"])));
    assert!(points.contains(&&serde_json::json!(["-26", "18"])));
    let quad = comps.iter().find(|c| c["degree"] == 2).unwrap();
    assert_eq!(quad["real"], false);
    assert_eq!(quad["generators"][0], "u2^2 - 18*u2 + 2197/27");
}

#[test]
fn cusp_quartic_at_singular_point() {
    let cusp = data("cuspidal_cubic.json");
    let out = algvor(&["voronoi", cusp.to_str().unwrap(), "--point", "0,0", "--allow-singular"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v = json(&out);
    assert_eq!(v["singular"], true);
    assert_eq!(v["voronoi_ideal"][0], "u1^3 + 1/4*u1^2 + 9/16*u1*u2^2 + 1/64*u1 + 27/128*u2^4 + 1/128*u2^2");
}

#[test]
fn singular_point_needs_flag() {
    let cusp = data("cuspidal_cubic.json");
    let out = algvor(&["voronoi", cusp.to_str().unwrap(), "--point", "0,0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("singular"));
}

#[test]
fn point_off_variety_is_an_input_error() {
    let cusp = data("cuspidal_cubic.json");
    let out = algvor(&["voronoi", cusp.to_str().unwrap(), "--point", "1,0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("point not on variety"));
    assert!(out.stdout.is_empty());
}

#[test]
fn parse_errors_report_position() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, r#"{"vars": ["x"], "gens": ["x^^2"]}"#).unwrap();
    let out = algvor(&["voronoi", path.to_str().unwrap(), "--point", "0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("position 2"), "{}", stderr(&out));
}

#[test]
fn budget_exhaustion_exits_two() {
    let cusp = data("cuspidal_cubic.json");
    let out = algvor(&["voronoi", cusp.to_str().unwrap(), "--point", "4,8", "--budget", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_algvor"))
        .args(["voronoi", cusp.to_str().unwrap(), "--point", "4,8"])
        .env("VORONOI_BUDGET", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn voronoi_output_is_byte_identical() {
    let q = data("quadric_surface.json");
    let a = algvor(&["voronoi", q.to_str().unwrap(), "--point", "0,0,0"]);
    let b = algvor(&["voronoi", q.to_str().unwrap(), "--point", "0,0,0"]);
    assert_eq!(a.status.code(), Some(0), "{}", stderr(&a));
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["voronoi_ideal"], serde_json::json!(["u3^3 + 71/368*u3^2 - 3/184*u3 - 1/368", "u2 - u3", "u1 - u3"]));
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let out = algvor(&["formula", "curve", "--d", "3", "--g", "0", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(v["degree"], 6);
}

#[test]
fn degree_cells() {
    let out = algvor(&["degree", "--n", "2", "--d", "4", "--formula"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v = json(&out);
    assert_eq!(v["degree"], 16);
    assert_eq!(v["stable"], true);
    assert_eq!(v["formula"], 16);
    let out = algvor(&["degree", "--n", "3", "--d", "2", "--homogeneous"]);
    assert_eq!(json(&out)["degree"], 3);
}

#[test]
fn degree_is_deterministic() {
    let a = algvor(&["degree", "--n", "2", "--d", "2", "--seed", "5"]);
    let b = algvor(&["degree", "--n", "2", "--d", "2", "--seed", "5"]);
    assert_eq!(a.stdout, b.stdout);
    let c = algvor(&["degree", "--n", "2", "--d", "2", "--seed", "9"]);
    assert_eq!(json(&a)["degree"], 2);
    assert_eq!(json(&c)["degree"], 2);
    assert_eq!(json(&c)["stable"], true);
}

#[test]
fn large_degree_cells_need_force() {
    let out = algvor(&["degree", "--n", "5", "--d", "5"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("--force"));
}

#[test]
fn formulas() {
    let v = json(&algvor(&["formula", "surface-p3", "--d", "3"]));
    assert_eq!(v["degree"], 23);
    let v = json(&algvor(&["formula", "veronese", "--e", "2"]));
    assert_eq!(v["degree"], 16);
    let v = json(&algvor(&["formula", "hypersurface", "--n", "3", "--d", "3", "--homogeneous"]));
    assert_eq!(v["degree"], 13);
    let v = json(&algvor(&["formula", "lowrank", "--m", "3", "--n", "4", "--r", "1"]));
    assert_eq!(v["degree"], 4);
    assert_eq!(algvor(&["formula", "lowrank", "--m", "3", "--n", "4", "--r", "3"]).status.code(), Some(1));
}

#[test]
fn lowrank_exit_codes() {
    let v = "[[3,0,0],[0,0,0],[0,0,0]]";
    let inside = algvor(&["lowrank", "--u", "[[3,0,0],[0,0,0],[0,0,2]]", "--v", v, "--r", "1"]);
    assert_eq!(inside.status.code(), Some(0));
    assert_eq!(json(&inside)["membership"], "inside");
    let outside = algvor(&["lowrank", "--u", "[[3,0,0],[0,0,0],[0,0,4]]", "--v", v, "--r", "1"]);
    assert_eq!(outside.status.code(), Some(3));
    let boundary = algvor(&["lowrank", "--u", "[[3,0,0],[0,0,0],[0,0,3]]", "--v", v, "--r", "1"]);
    assert_eq!(boundary.status.code(), Some(4));
    let default_center = algvor(&["lowrank", "--u", "[[1,2],[3,4],[5,6]]", "--r", "1"]);
    assert_eq!(default_center.status.code(), Some(0));
}

#[test]
fn sdp_exit_codes() {
    let c = data("cardioid.json");
    let member = algvor(&["sdp-member", c.to_str().unwrap(), "--point", "0,1", "--u", "0.5,1.5", "--level", "2"]);
    assert_eq!(member.status.code(), Some(0), "{}", stderr(&member));
    assert_eq!(json(&member)["status"], "member");
    let non = algvor(&["sdp-member", c.to_str().unwrap(), "--point", "0,1", "--u", "-0.25,0.75", "--level", "2"]);
    assert_eq!(non.status.code(), Some(3));
    let t = data("twisted_cubic.json");
    let out = algvor(&["sdp-member", t.to_str().unwrap(), "--point", "0,0,0", "--u", "0,3/5,0"]);
    assert_eq!(out.status.code(), Some(3));
    let low = algvor(&["sdp-member", c.to_str().unwrap(), "--point", "0,1", "--u", "0.5,1.5", "--level", "1"]);
    assert_eq!(low.status.code(), Some(1));
}

fn csv_rows(out: &Output) -> Vec<(f64, f64, i8)> {
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("u_a,u_b,sign"));
    lines
        .map(|l| {
            let f: Vec<&str> = l.split(',').collect();
            (f[0].parse().unwrap(), f[1].parse().unwrap(), f[2].parse().unwrap())
        })
        .collect()
}

#[test]
fn contour_of_constant() {
    let out = algvor(&["contour", "--poly", "1", "--resolution", "20"]);
    let rows = csv_rows(&out);
    assert_eq!(rows.len(), 400);
    assert!(rows.iter().all(|r| r.2 == 1));
}

#[test]
fn contour_of_cusp_quartic() {
    let quartic = "27*u2^4 + 128*u1^3 + 72*u1*u2^2 + 32*u1^2 + u2^2 + 2*u1";
    let out = algvor(&["contour", "--poly", quartic, "--window", "-1,1,-1,1", "--resolution", "200"]);
    assert_eq!(out.status.code(), Some(0));
    let rows = csv_rows(&out);
    assert_eq!(rows.len(), 40_000);
    // the cell is bounded: negative inside near (-0.1, 0), positive far away
    let at = |a: f64, b: f64| rows.iter().min_by(|x, y| ((x.0 - a).hypot(x.1 - b)).total_cmp(&(y.0 - a).hypot(y.1 - b))).unwrap().2;
    assert_eq!(at(-0.1, 0.0), -1);
    assert_eq!(at(0.9, 0.9), 1);
    assert_eq!(at(-0.9, 0.0), -1);
}

#[test]
fn contour_circle_and_errors() {
    let out = algvor(&["contour", "--poly", "u1^2 + u2^2 + u1", "--window", "-2,1,-1,1", "--resolution", "61"]);
    for (a, b, s) in csv_rows(&out) {
        let r = (a + 0.5).hypot(b);
        if (r - 0.5).abs() > 0.05 {
            assert_eq!(s, if r < 0.5 { -1 } else { 1 }, "({a}, {b})");
        }
    }
    let out = algvor(&["contour", "--poly", "u1*u2*u3"]);
    assert_eq!(out.status.code(), Some(1));
    let out = algvor(&["contour", "--poly", "u1", "--vars", "u1"]);
    assert_eq!(out.status.code(), Some(1));
}
