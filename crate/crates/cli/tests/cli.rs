use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use proptest::prelude::*;

use cubepst::construct::example_graph;
use cubepst::{ColumnOrder, ConnectionSet};
use cubepst_cli::format::{parse, print, Format};

fn fixture() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/example.matrix")
}

fn cubepst(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cubepst"))
        .args(args)
        .env_remove("CUBEPST_TOL")
        .output()
        .expect("spawn cubepst")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

#[test]
fn analyze_example_report() {
    let f = fixture();
    let o = cubepst(&["analyze", f.to_str().unwrap(), "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["profile"]["divisor"], 2);
    assert_eq!(v["profile"]["center"]["bits"], "00001");
    assert_eq!(v["profile"]["center"]["int"], 16);
    assert_eq!(v["pst"]["occurs"], true);
    assert_eq!(v["pst"]["time"], "1/4·π");
    assert_eq!(v["pst"]["target"]["bits"], "00001");
    assert_eq!(v["period"]["period"], "1/2·π");
    assert_eq!(v["input"]["m"], 11);
    let spectrum: Vec<(i64, u64)> = v["spectrum"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| (e["eigenvalue"].as_i64().unwrap(), e["multiplicity"].as_u64().unwrap()))
        .collect();
    assert_eq!(spectrum, [(11, 1), (3, 10), (-1, 16), (-5, 5)]);
}

#[test]
fn report_is_byte_identical_with_ordered_keys() {
    let f = fixture();
    let a = cubepst(&["analyze", f.to_str().unwrap(), "--json"]);
    let b = cubepst(&["--json", "analyze", f.to_str().unwrap()]);
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    let keys = ["\"input\"", "\"profile\"", "\"spectrum\"", "\"pst\"", "\"period\"", "\"tolerances\""];
    let positions: Vec<usize> = keys.iter().map(|k| text.find(k).unwrap()).collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]));
    assert!(text.contains("\"re\": -7.0710678118654746e-1"), "{text}");
}

#[test]
fn exit_codes_separate_falsity_from_failure() {
    let f = fixture();
    let f = f.to_str().unwrap();
    let code = |args: &[&str]| cubepst(args).status.code();
    assert_eq!(code(&["pst-verify", f, "--time", "1/4", "--target", "00001"]), Some(0));
    assert_eq!(code(&["pst-verify", f, "--time", "1/2", "--target", "00001"]), Some(2));
    assert_eq!(code(&["pst-verify", f, "--time", "1/4", "--target", "10000"]), Some(2));
    assert_eq!(code(&["pst-verify", f, "--time", "1/0", "--target", "00001"]), Some(1));
    assert_eq!(code(&["pst-verify", f, "--time", "0.25", "--target", "00001"]), Some(1));
    assert_eq!(code(&["pst-verify", f, "--time", "1/4", "--target", "00000"]), Some(1));
    assert_eq!(code(&["pst-verify", f, "--time", "1/4", "--target", "0001"]), Some(1));
    assert_eq!(code(&["pst-verify", "/nonexistent", "--time", "1/4", "--target", "00001"]), Some(1));
    assert_eq!(code(&["pst-verify", f, "--time", "1/4"]), Some(1));
    assert_eq!(code(&["analyze", f, "--tol", "1.5"]), Some(1));
    assert_eq!(code(&["--help"]), Some(0));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("dup.matrix");
    std::fs::write(&bad, "2 2\n1 1\n0 0\n").unwrap();
    let o = cubepst(&["pst-verify", bad.to_str().unwrap(), "--time", "1/2", "--target", "10"]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 3") && err.contains("not projective"), "{err}");
}

#[test]
fn tolerance_from_environment() {
    let f = fixture();
    let run = |env: Option<&str>| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_cubepst"));
        cmd.args(["pst-verify", f.to_str().unwrap(), "--time", "1/5", "--target", "00001", "--json"]);
        match env {
            Some(v) => cmd.env("CUBEPST_TOL", v),
            None => cmd.env_remove("CUBEPST_TOL"),
        };
        cmd.output().unwrap()
    };
    assert_eq!(run(None).status.code(), Some(2));
    let loose = run(Some("0.5"));
    assert_eq!(loose.status.code(), Some(0));
    assert_eq!(json(&loose)["tolerance"].as_f64(), Some(0.5));
}

#[test]
fn constructions_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let f = fixture();
    let f = f.to_str().unwrap();

    let comp = cubepst(&["complement", f]);
    assert_eq!(comp.status.code(), Some(0));
    let comp_path = dir.path().join("comp.matrix");
    std::fs::write(&comp_path, &comp.stdout).unwrap();
    let v = json(&cubepst(&["analyze", comp_path.to_str().unwrap(), "--json"]));
    assert_eq!(v["input"]["valency"], 20);
    assert_eq!(v["pst"]["time"], "1/4·π");

    let sq = json(&cubepst(&["power", f, "--k", "2", "--json"]));
    assert_eq!(sq["pst"]["target"]["bits"], "0000100001");
    let prod = json(&cubepst(&["product", f, f, "--json"]));
    assert_eq!(prod["pst"]["target"], sq["pst"]["target"]);

    let built = cubepst(&["construct-target", "--target", "01100", "--format", "set"]);
    let built_path = dir.path().join("built.set");
    std::fs::write(&built_path, &built.stdout).unwrap();
    let code = cubepst(&["pst-verify", built_path.to_str().unwrap(), "--format", "set", "--time", "1/2", "--target", "01100"])
        .status
        .code();
    assert_eq!(code, Some(0));
}

#[test]
fn period_spectrum_and_curve() {
    let f = fixture();
    let f = f.to_str().unwrap();
    let p = json(&cubepst(&["period", f, "--json"]));
    assert_eq!(p["period"], "1/2·π");
    assert!((p["alpha"]["im"].as_f64().unwrap() + 1.0).abs() < 1e-12);
    let s = stdout(&cubepst(&["spectrum", f]));
    assert_eq!(s.trim(), "spectrum: 11^1 3^10 -1^16 -5^5");

    let curve = stdout(&cubepst(&["amplitude-curve", f]));
    let rows: Vec<(f64, f64)> = curve
        .lines()
        .skip(1)
        .map(|l| {
            let (t, h) = l.split_once(',').unwrap();
            (t.parse().unwrap(), h.parse().unwrap())
        })
        .collect();
    assert_eq!(rows.len(), 65);
    assert!((rows[32].0 - std::f64::consts::FRAC_PI_4).abs() < 1e-15);
    assert!((rows[32].1 - 1.0).abs() < 1e-9);
    assert!(rows[64].1 < 1e-9);
}

#[test]
fn census_prints_orbit_representatives() {
    let o = cubepst(&["census", "--dim", "4", "--constraint", "doubly-even", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let sizes: u64 = v["orbits"].as_array().unwrap().iter().map(|o| o["size"].as_u64().unwrap()).sum();
    assert_eq!(sizes, v["raw_survivors"].as_u64().unwrap());
    assert_eq!(cubepst(&["census", "--dim", "6"]).status.code(), Some(1));
    assert_eq!(cubepst(&["census", "--dim", "4", "--constraint", "odd"]).status.code(), Some(1));
}

#[test]
fn census_resumes_from_checkpoint() {
    let dir = tempfile::tempdir().unwrap();
    let ckpt = dir.path().join("scan.ckpt");
    let ckpt = ckpt.to_str().unwrap();
    let full = cubepst(&["census", "--dim", "4", "--chunks", "64"]);
    let partial = cubepst(&["census", "--dim", "4", "--chunks", "64", "--checkpoint", ckpt, "--max-batches", "1"]);
    assert_eq!(partial.status.code(), Some(1));
    let bytes = std::fs::read(ckpt).unwrap();
    assert_eq!(&bytes[..8], b"CUBEPSTK");
    let resumed = cubepst(&["census", "--dim", "4", "--chunks", "64", "--checkpoint", ckpt]);
    assert_eq!(resumed.status.code(), Some(0));
    assert_eq!(resumed.stdout, full.stdout);
}

fn arb_set() -> impl Strategy<Value = ConnectionSet> {
    (1usize..=7)
        .prop_flat_map(|dim| (Just(dim), proptest::collection::btree_set(1u32..1 << dim, 1..20)))
        .prop_flat_map(|(dim, set)| {
            let v: Vec<u32> = set.into_iter().collect();
            (Just(dim), Just(v.clone()).prop_shuffle())
        })
        .prop_map(|(dim, v)| ConnectionSet::with_order(dim, v, ColumnOrder::AsGiven).unwrap())
}

proptest! {
    #[test]
    fn print_then_parse_is_identity(c in arb_set()) {
        for format in [Format::Matrix, Format::Set] {
            let text = print(&c, format);
            let kept = parse(&text, format, true).unwrap();
            prop_assert_eq!(kept.elements(), c.elements());
            let sorted = parse(&text, format, false).unwrap();
            prop_assert!(sorted.same_set(&c));
            prop_assert!(sorted.elements().windows(2).all(|w| w[0] < w[1]));
        }
    }
}

#[test]
fn fixture_parses_to_example() {
    let text = std::fs::read_to_string(fixture()).unwrap();
    assert_eq!(parse(&text, Format::Matrix, true).unwrap().elements(), example_graph().elements());
}
