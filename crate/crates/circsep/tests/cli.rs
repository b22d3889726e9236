use std::path::Path;
use std::process::{Command, Output};

use circsep::cli::{answer_all, build_tree};
use circsep::instance::{InstanceFile, QuerySpec};
use circsep::record::{ResultRecord, Status};
use circsep::snapshot::{Snapshot, FORMAT};
use circsep_core::engine::{Engine, QueryShape};
use circsep_core::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn circsep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_circsep")).args(args).output().unwrap()
}

fn write_json(path: &Path, inst: &InstanceFile) {
    std::fs::write(path, serde_json::to_string(inst).unwrap()).unwrap();
}

fn records(out: &Output) -> Vec<ResultRecord> {
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

/// Random instance with a mix of all three query kinds.
fn random_instance(seed: u64, n: usize, queries: usize) -> InstanceFile {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points = sample::uniform_square(&mut rng, n, 1.0);
    let engine = Engine::build(&points).unwrap();
    let shapes: Vec<QueryShape> = (0..queries)
        .map(|i| match i % 3 {
            0 => {
                let m = rng.gen_range(3..=12);
                QueryShape::Polygon(sample::disjoint_polygon(&mut rng, engine.hull(), m, 2.5))
            }
            1 => QueryShape::Point(sample::disjoint_point(&mut rng, engine.hull(), 2.5)),
            _ => QueryShape::Circle(sample::disjoint_circle(&mut rng, engine.hull(), 2.5)),
        })
        .collect();
    InstanceFile {
        points: points.iter().map(|p| [p.x, p.y]).collect(),
        queries: shapes.iter().map(QuerySpec::from_shape).collect(),
    }
}

#[test]
fn two_point_instance_example() {
    let dir = tempfile::tempdir().unwrap();
    let (input, snap) = (dir.path().join("in.json"), dir.path().join("snap.json"));
    std::fs::write(
        &input,
        r#"{"points": [[0, 0], [2, 0]], "queries": [
            {"type": "point", "at": [1, 0.5]},
            {"type": "polygon", "vertices": [[0, 1], [2, 1], [2, 2], [0, 2]]},
            {"type": "polygon", "vertices": [[0.5, -0.5], [1.5, -0.5], [1.5, 0.5], [0.5, 0.5]]}]}"#,
    )
    .unwrap();
    let out = circsep(&["build", input.to_str().unwrap(), snap.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let stats: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(stats["h"], 2);
    assert_eq!(stats["nodes"], 1);
    let tree = Snapshot::parse(&std::fs::read_to_string(&snap).unwrap()).unwrap().tree;
    assert_eq!(tree.rays.len(), 2);

    let out = circsep(&["query", snap.to_str().unwrap(), input.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let recs = records(&out);
    assert_eq!(recs.len(), 3);
    let r = &recs[0];
    assert_eq!(r.status, Status::Separating);
    assert!((r.radius.unwrap() - 1.25).abs() < 1e-9);
    let c = r.center.unwrap();
    assert!((c[0] - 1.0).abs() < 1e-9 && (c[1] + 0.75).abs() < 1e-9);
    assert!(recs[1].trivial_mec);
    assert_eq!(recs[2].status, Status::NoSeparatingCircle);
    assert_eq!(recs.iter().map(|r| r.index).collect::<Vec<_>>(), vec![0, 1, 2]);
}

#[test]
fn snapshot_round_trip_is_bit_identical() {
    let dir = tempfile::tempdir().unwrap();
    for seed in 0..4 {
        let inst = random_instance(seed, 40, 30);
        let (input, snap) = (dir.path().join("in.json"), dir.path().join("snap.json"));
        write_json(&input, &inst);
        assert_eq!(circsep(&["build", input.to_str().unwrap(), snap.to_str().unwrap()]).status.code(), Some(0));
        let out = circsep(&["query", snap.to_str().unwrap(), input.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
        let from_file: Vec<ResultRecord> = records(&out).iter().map(ResultRecord::untimed).collect();

        let engine = Engine::new(build_tree(&inst, 42).unwrap());
        let in_memory: Vec<ResultRecord> = answer_all(&engine, &inst.shapes().unwrap(), false)
            .iter()
            .map(|(_, r)| r.untimed())
            .collect();
        assert_eq!(from_file.len(), in_memory.len());
        for (a, b) in from_file.iter().zip(&in_memory) {
            // Compare bit patterns, not just values.
            let bits = |r: &ResultRecord| {
                (
                    r.center.map(|c| [c[0].to_bits(), c[1].to_bits()]),
                    r.radius.map(f64::to_bits),
                    r.tangency.map(|c| [c[0].to_bits(), c[1].to_bits()]),
                )
            };
            assert_eq!(a, b);
            assert_eq!(bits(a), bits(b));
        }
        let reloaded = Snapshot::parse(&std::fs::read_to_string(&snap).unwrap()).unwrap();
        assert_eq!(reloaded.tree, *engine.tree());
    }
}

#[test]
fn oracle_flag_matches_on_random_queries() {
    let dir = tempfile::tempdir().unwrap();
    let inst = random_instance(7, 30, 100);
    let (input, snap) = (dir.path().join("in.json"), dir.path().join("snap.json"));
    write_json(&input, &inst);
    assert_eq!(circsep(&["build", input.to_str().unwrap(), snap.to_str().unwrap()]).status.code(), Some(0));
    let out = circsep(&["query", "--oracle", snap.to_str().unwrap(), input.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 100);
    for line in text.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["match"], true, "{line}");
        assert!(v.get("oracle_radius").is_some());
    }
}

#[test]
fn svg_figures_are_well_formed() {
    let dir = tempfile::tempdir().unwrap();
    let inst = random_instance(3, 25, 6);
    let (input, snap, figs) = (dir.path().join("in.json"), dir.path().join("snap.json"), dir.path().join("figs"));
    write_json(&input, &inst);
    assert_eq!(circsep(&["build", input.to_str().unwrap(), snap.to_str().unwrap()]).status.code(), Some(0));
    let out = circsep(&["query", "--svg", figs.to_str().unwrap(), snap.to_str().unwrap(), input.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let mut files: Vec<_> = std::fs::read_dir(&figs).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    assert_eq!(files.len(), 6);
    for f in files {
        let text = std::fs::read_to_string(&f).unwrap();
        let doc = roxmltree::Document::parse(&text).unwrap();
        let root = doc.root_element();
        assert_eq!(root.tag_name().name(), "svg");
        assert_eq!(root.attribute("width"), Some("800"));
        assert_eq!(root.attribute("viewBox"), Some("0 0 800 800"));
        // One dot per input point.
        let dots = root.children().filter(|n| n.attribute("r") == Some("2.5")).count();
        assert_eq!(dots, inst.points.len());
    }
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let p = |name: &str| dir.path().join(name);
    let s = |name: &str| p(name).to_str().unwrap().to_string();

    std::fs::write(p("bad.json"), "{ not json").unwrap();
    assert_eq!(circsep(&["build", &s("bad.json"), &s("x.json")]).status.code(), Some(2));
    assert_eq!(circsep(&["build", &s("missing.json"), &s("x.json")]).status.code(), Some(2));

    std::fs::write(p("one.json"), r#"{"points": [[1, 1], [1, 1]]}"#).unwrap();
    let out = circsep(&["build", &s("one.json"), &s("x.json")]);
    assert_eq!(out.status.code(), Some(3));
    assert!(!out.stderr.is_empty());

    std::fs::write(p("two.json"), r#"{"points": [[0, 0], [2, 0]], "queries": [{"type": "point", "at": [1, 1]}]}"#).unwrap();
    assert_eq!(circsep(&["build", &s("two.json"), &s("snap.json")]).status.code(), Some(0));
    let text = std::fs::read_to_string(p("snap.json")).unwrap();
    assert!(text.contains(FORMAT));
    std::fs::write(p("old.json"), text.replace(FORMAT, "fpvd-snapshot/0")).unwrap();
    assert_eq!(circsep(&["query", &s("old.json"), &s("two.json")]).status.code(), Some(4));
    assert_eq!(circsep(&["query", &s("bad.json"), &s("two.json")]).status.code(), Some(2));
    std::fs::write(p("badq.json"), r#"{"queries": [{"type": "triangle"}]}"#).unwrap();
    assert_eq!(circsep(&["query", &s("snap.json"), &s("badq.json")]).status.code(), Some(2));
    assert_eq!(circsep(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn bench_output() {
    let out = circsep(&["bench", "--n", "256,512", "--m", "8", "--queries", "50"]);
    assert_eq!(out.status.code(), Some(0));
    let cells: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(cells.as_array().unwrap().len(), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("ns/query"));
    let out = circsep(&["bench", "--queries", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let cells: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(cells.as_array().unwrap().is_empty());
}
