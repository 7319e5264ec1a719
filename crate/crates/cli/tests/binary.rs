use std::path::PathBuf;
use std::process::{Command, Output};

fn corpus(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "corpus", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn logmod(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_logmod"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("logmod-binary-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn analyze_identity() {
    let o = logmod(&["analyze", &corpus("identity.hom")]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("result.exact = true\n"));
    assert!(s.contains("result.integral = true\n"));
}

#[test]
fn analyze_prints_a_kato_witness() {
    let o = logmod(&["analyze", &corpus("plane-into-space.hom")]);
    assert_eq!(o.status.code(), Some(1));
    let s = stdout(&o);
    assert!(s.contains("result.integral = false\n"));
    assert!(s.contains("result.integral_hom.witness.kind = \"kato\"\n"));
    assert!(s.contains("result.integral_hom.witness.a1 = "));
}

#[test]
fn integralize_then_verify() {
    let out = scratch("integralize.txt");
    let o = logmod(&["integralize", &corpus("plane-into-space.hom"), "-o", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v = logmod(&["verify", out.to_str().unwrap()]);
    assert_eq!(v.status.code(), Some(0), "{}", stdout(&v));
    assert!(stdout(&v).contains("result.verified = true\n"));
}

#[test]
fn verify_rejects_a_tampered_result() {
    let o = logmod(&["analyze", &corpus("identity.hom")]);
    let text = stdout(&o).replace("result.exact = true", "result.exact = false");
    let path = scratch("tampered.txt");
    std::fs::write(&path, text).unwrap();
    let v = logmod(&["verify", path.to_str().unwrap()]);
    assert_eq!(v.status.code(), Some(1));
    assert!(stdout(&v).contains("result.verified = false\n"));
}

#[test]
fn machine_format_verifies() {
    let o = logmod(&["--format", "machine", "blowup", &corpus("plane.monoid"), &corpus("maximal.ideal")]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.trim_start().starts_with('{'));
    let path = scratch("blowup.json");
    std::fs::write(&path, s).unwrap();
    let v = logmod(&["verify", "--format", "machine", path.to_str().unwrap()]);
    assert_eq!(v.status.code(), Some(0));
    assert!(stdout(&v).contains("\"verified\": true"));
}

#[test]
fn input_errors_exit_two_with_positions() {
    let path = scratch("broken.hom");
    std::fs::write(&path, "kind hom\n[source]\nrank 1\ngen one\n").unwrap();
    let o = logmod(&["analyze", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("broken.hom:4:"), "{err}");

    let o = logmod(&["analyze", "/no/such/file"]);
    assert_eq!(o.status.code(), Some(2));

    // not exact, so integralize refuses it
    let o = logmod(&["integralize", &corpus("open-chart.hom")]);
    assert_eq!(o.status.code(), Some(2));

    let o = logmod(&["fan", "subdivide", &corpus("quadrant.fan"), "1"]);
    assert_eq!(o.status.code(), Some(2));

    let o = logmod(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn negative_coordinates_for_subdivision() {
    let path = scratch("line.fan");
    std::fs::write(&path, "kind fan\nrank 1\n[cone]\nray 1\n[cone]\nray -1\n").unwrap();
    let o = logmod(&["fan", "check", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("result.smooth = true\n"));
    let o = logmod(&["fan", "subdivide", path.to_str().unwrap(), "-3"]);
    assert_eq!(o.status.code(), Some(0));
    // (2,-1) lies outside the support, so no cone is split
    let o = logmod(&["fan", "subdivide", &corpus("quadrant.fan"), "2", "-1"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("result.fan.cones.0.0 = [0 1]\nresult.fan.cones.0.1 = [1 0]\nresult.fan.rank = 2\n"), "{s}");
}

#[test]
fn exactify_reports_all_charts_exact() {
    let o = logmod(&["exactify", &corpus("open-chart.job")]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("result.all_exact = true\n"));
    assert!(s.contains("result.base_ideal.0 = [0 1]\n"));
    assert!(s.contains("result.base_ideal.1 = [1 0]\n"));
}

#[test]
fn bound_reaches_the_verdict() {
    let o = logmod(&["--bound", "0", "analyze", &corpus("plane-into-space.hom")]);
    assert!(stdout(&o).contains("options.bound = 0\n"));
}

#[test]
fn generate_is_seeded() {
    let a = stdout(&logmod(&["generate", "hom", "--seed", "11"]));
    let b = stdout(&logmod(&["generate", "hom", "--seed", "11"]));
    assert_eq!(a, b);
    assert!(a.starts_with("kind hom\n"));
    let path = scratch("generated.hom");
    std::fs::write(&path, &a).unwrap();
    let o = logmod(&["analyze", path.to_str().unwrap()]);
    assert!(matches!(o.status.code(), Some(0 | 1)));
    assert_eq!(logmod(&["generate", "sheaf"]).status.code(), Some(2));
}
