use std::process::{Command, Output};

use curvlab::connection::{CurvatureRecord, CurvatureTensor};
use curvlab::symmetry::KahlerLikeReport;
use curvlab::verify::Scoreboard;
use curvlab::{build_metric, evaluate, ConnectionSpec, FamilySpec, MetricClass, MetricParams};

fn curvlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_curvlab")).args(args).env("CURVLAB_THREADS", "1").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

const NP1: [&str; 6] = ["--family", "Np", "--set", "rho=1", "--metric", "r2=1,s2=1,t2=1"];

#[test]
fn chern_on_np_is_kahler_like() {
    let o = curvlab(&[&["check-kl"], &NP1[..], &["--spec", "chern"]].concat());
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("kahler-like: true"));
}

#[test]
fn bismut_on_np_has_b_witness() {
    let o = curvlab(&[&["check-kl"], &NP1[..], &["--spec", "bismut"]].concat());
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("kahler-like: false"));
    assert!(out.contains("B[1,1b,3,3b] = 1/2"), "{out}");
}

#[test]
fn h2_is_pluriclosed_not_balanced() {
    let o = curvlab(&["classify", "--family", "Ni", "--set", "rho=0,lambda=0,D=i", "--metric", "r2=1,s2=1,t2=1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("pluriclosed: true") && out.contains("balanced: false"), "{out}");

    let o = curvlab(&[
        "classify",
        "--family",
        "Ni",
        "--set",
        "rho=0,lambda=0,D=i",
        "--metric",
        "r2=1,s2=1,t2=1",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let class: MetricClass = serde_json::from_value(v["class"].clone()).unwrap();
    assert!(class.pluriclosed && !class.balanced && !class.kahler);
}

#[test]
fn json_reports_reparse() {
    let o = curvlab(&[&["check-kl"], &NP1[..], &["--spec", "bismut", "--format", "json"]].concat());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rep: KahlerLikeReport = serde_json::from_value(v["report"].clone()).unwrap();
    assert!(!rep.verdict && rep.bianchi_count > 0);
    let spec: ConnectionSpec = serde_json::from_value(v["spec"].clone()).unwrap();
    assert_eq!(spec, ConnectionSpec::bismut());

    let args = [
        "curvature",
        "--family",
        "Ni",
        "--set",
        "rho=1,lambda=1,D=1/2+i",
        "--metric",
        "r2=2,s2=1,t2=3/2,u=1/3*i",
        "--spec",
        "eps=1/4,rho=1/5",
        "--format",
        "json",
    ];
    let o = curvlab(&args);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let records: Vec<CurvatureRecord> = serde_json::from_value(v["components"].clone()).unwrap();
    let family: FamilySpec = serde_json::from_value(v["family"].clone()).unwrap();
    let metric: MetricParams = serde_json::from_value(v["metric"].clone()).unwrap();
    let spec: ConnectionSpec = serde_json::from_value(v["spec"].clone()).unwrap();
    let direct = evaluate(&spec, &build_metric(&metric).unwrap(), &family.instantiate());
    assert_eq!(CurvatureTensor::from_records(&records, spec), direct);
}

#[test]
fn csv_and_text_labels() {
    let o = curvlab(&[&["curvature"], &NP1[..], &["--spec", "bismut", "--format", "csv"]].concat());
    let out = stdout(&o);
    assert!(out.starts_with("component,value\n"));
    assert!(out.lines().skip(1).all(|l| l.starts_with("\"R[")));
    assert!(out.contains("\"R[1,1b,3,3b]\",1/2"));
}

#[test]
fn usage_errors_exit_two_and_name_the_constraint() {
    let cases: [(&[&str], &str); 6] = [
        (&["check-kl", "--family", "Si", "--set", "A=2", "--spec", "chern"], "|A| = 1"),
        (&["check-kl", "--family", "Np", "--set", "rho=1", "--metric", "u=2", "--spec", "chern"], "r2*s2 > |u|^2"),
        (&["check-kl", "--family", "Np", "--set", "rho=1", "--spec", "nonsense"], "nonsense"),
        (&["check-kl", "--family", "Nq", "--spec", "chern"], "Nq"),
        (&["classify", "--family", "Ni", "--set", "rho=0,lambda=0,D=i,mu=1"], "mu"),
        (&["check-kl", "--family", "Np", "--set", "rho=1"], "--spec"),
    ];
    for (args, needle) in cases {
        let o = curvlab(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(stderr(&o).contains(needle), "{args:?}: {}", stderr(&o));
    }
    assert_eq!(curvlab(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn bad_thread_count_is_a_usage_error() {
    let o = Command::new(env!("CARGO_BIN_EXE_curvlab"))
        .args(["catalog", "list"])
        .env("CURVLAB_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("CURVLAB_THREADS"));
}

#[test]
fn config_file_supplies_flags() {
    let path = std::env::temp_dir().join(format!("curvlab-cli-{}.conf", std::process::id()));
    std::fs::write(&path, "# np\nfamily = Np\nset = rho=1\nmetric = r2=1,s2=1,t2=1\nspec = bismut\n").unwrap();
    let o = curvlab(&["check-kl", "--config", path.to_str().unwrap(), "--spec", "chern"]);
    assert!(stdout(&o).contains("kahler-like: true"), "flags must override the file");
    std::fs::write(&path, "family = Np\nwidth = 3\n").unwrap();
    let o = curvlab(&["check-kl", "--config", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("width"));
    std::fs::remove_file(path).ok();
}

#[test]
fn catalog_lists_every_family() {
    let o = curvlab(&["catalog", "list", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 15);
    let text = stdout(&curvlab(&["catalog", "list"]));
    assert!(text.contains("sl2c"));
}

#[test]
fn theorems_are_byte_deterministic() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_curvlab"))
            .args(["verify", "theorems", "--seed", "5", "--points", "1", "--format", "json"])
            .env("CURVLAB_THREADS", threads)
            .output()
            .unwrap()
    };
    let a = run("1");
    let b = run("2");
    assert_eq!(a.status.code(), Some(0), "{}", stderr(&a));
    assert_eq!(a.stdout, b.stdout);
    let sb: Scoreboard = serde_json::from_slice(&a.stdout).unwrap();
    assert!(sb.pass());
}

#[test]
fn appendix_and_flow_commands() {
    let o = curvlab(&["verify", "appendix", "B", "--points", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS appendix B"));
    assert_eq!(curvlab(&["verify", "appendix", "Q"]).status.code(), Some(2));

    let o = curvlab(&[
        "flow",
        "run",
        "--family",
        "Np",
        "--set",
        "rho=0",
        "--metric",
        "r2=2,t2=1/2,u=1/3",
        "--step",
        "0.1",
        "--format",
        "csv",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next().unwrap().split(',').count(), 24);
    assert_eq!(lines.count(), 11);
    let o = curvlab(&["flow", "run", "--family", "Np", "--set", "rho=0", "--step", "-1"]);
    assert_eq!(o.status.code(), Some(2));
}
