use std::path::PathBuf;
use std::process::{Command, Output};

use cremona::io::{from_json, ReportDoc};

fn cremona(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cremona"))
        .args(args)
        .env_remove("CREMONA_MAX_TERMS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn corpus(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/corpus").join(name)
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("cremona-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn commutator_of_twists() {
    let o = cremona(&["commutator", "(x, x*y)", "(2*x, x*y)"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "(x, 2*y)");
}

#[test]
fn degree_sequence_of_twist() {
    let o = cremona(&["degseq", "(x, x*y)", "--n", "10"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "2 3 4 5 6 7 8 9 10 11");
}

#[test]
fn claim_solver_output() {
    let o = cremona(&["claim-solve", "--mu", "3+2*x", "--lambda2", "2", "--max-deg", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "dimension: 1\nbasis: x + 3\n");
    let o = cremona(&["claim-solve", "--mu", "x+1", "--lambda2", "2", "--max-deg", "4"]);
    assert_eq!(stdout(&o).trim(), "dimension: 0");
}

#[test]
fn compose_and_invert() {
    let o = cremona(&["compose", "(x, x*y)", "(2*x, x*y)"]);
    assert_eq!(stdout(&o).trim(), "(2*x, 2*x^2*y)");
    let o = cremona(&["invert", "(-x, x*y)"]);
    assert_eq!(stdout(&o).trim(), "(-x, -y/x)");
    let o = cremona(&["invert", "(x + y^2, y)"]);
    assert_eq!(stdout(&o).trim(), "(x - y^2, y)");
    // general inversion is out of scope: only de Jonquières and linear maps
    let o = cremona(&["invert", "(y, y^2 + x)"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("inverse unavailable"));
}

#[test]
fn exit_codes_separate_negatives_from_usage_errors() {
    let negative = ["verify", "(x+y^2, y)", "(x, y+1)"];
    assert_eq!(cremona(&negative).status.code(), Some(0));
    let o = cremona(&[&negative[..], &["--strict"]].concat());
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("faithful: no"));
    assert_eq!(cremona(&["verify", "(x, x*y)", "(2*x, x*y)", "--strict"]).status.code(), Some(0));

    let o = cremona(&["commutator", "(x, x*", "(x, y)"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("column 7"), "{}", stderr(&o));
    assert_eq!(cremona(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(cremona(&["family", "torus1", "beta=1"]).status.code(), Some(2));
    assert_eq!(cremona(&["degseq", "(x, y)", "--n-max", "0"]).status.code(), Some(2));
    // a cap hit on the first iterate is a mathematical failure
    assert_eq!(cremona(&["degseq", "(y, y^2 + x)", "--max-degree", "1"]).status.code(), Some(1));
}

fn json_doc(args: &[&str]) -> ReportDoc {
    let o = cremona(&[&["--format", "json"], args].concat());
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
    let text = stdout(&o);
    from_json(&text).unwrap_or_else(|e| panic!("{args:?}: {e}\n{text}"))
}

#[test]
fn json_output_validates_for_every_subcommand() {
    let cases: &[(&[&str], &str)] = &[
        (&["compose", "(x, x*y)", "(2*x, x*y)"], "map"),
        (&["invert", "(x+y^2, y)"], "map"),
        (&["commutator", "(x, x*y)", "(2*x, x*y)"], "map"),
        (&["degseq", "(y, y^2+x)", "--n", "6"], "degrees"),
        (&["classify", "(y, y^2+x)", "--n", "8"], "growth"),
        (&["verify", "(x, x*y)", "(2*x, x*y)"], "embedding"),
        (&["family", "order2", "delta=1", "gamma=2", "s=+1", "b=x^2"], "family"),
        (&["family", "torusgen", "lambda=2", "delta=3", "c=x", "d=x", "--verify"], "embedding"),
        (&["claim-solve", "--mu", "3-2*x", "--lambda2", "4", "--max-deg", "6"], "claim"),
    ];
    for (args, kind) in cases {
        let doc = json_doc(args);
        let got = serde_json::to_value(&doc).unwrap()["kind"].as_str().unwrap().to_string();
        assert_eq!(&got, kind, "{args:?}");
    }
    match json_doc(&["classify", "(y, y^2+x)", "--n", "8"]) {
        ReportDoc::Growth(g) => {
            assert_eq!(g.map_type, "hyperbolic");
            let l = g.growth.dyn_degree_estimate.unwrap();
            assert!((1.99..=2.01).contains(&l));
        }
        other => panic!("{other:?}"),
    }
    match json_doc(&["family", "torusgen", "lambda=2", "delta=3", "c=x", "d=x"]) {
        ReportDoc::Family(f) => assert_eq!(f.commutator_constant.as_deref(), Some("3/2")),
        other => panic!("{other:?}"),
    }
}

#[test]
fn shipped_corpus_passes_in_batch() {
    let path = corpus("instances.batch");
    let o = cremona(&["batch", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let results: Vec<serde_json::Value> = serde_json::from_str(&stdout(&o)).unwrap();
    let text = std::fs::read_to_string(&path).unwrap();
    let (mut positives, mut negatives) = (0, 0);
    for r in &results {
        let line = text.lines().nth(r["line"].as_u64().unwrap() as usize - 1).unwrap();
        let faithful = r["report"]["faithful"].as_bool().unwrap();
        if line.contains("expect=faithful") {
            assert!(faithful, "{line}");
            positives += 1;
        } else if line.contains("expect=unfaithful") {
            assert!(!faithful, "{line}");
            negatives += 1;
        }
        assert_eq!(r["status"], "ok", "{line}");
    }
    assert!(positives >= 30 && negatives >= 15, "{positives} / {negatives}");
}

#[test]
fn batch_reports_in_input_order_and_flags_mismatches() {
    let lines = [
        r#"degseq "(y, y^2 + x)" --n 7 degrees="2 4 8 16 32 64 128""#,
        r#"commutator "(x, x*y)" "(2*x, x*y)" result="(x, 2*y)""#,
        r#"classify "(x, x*y)" growth=linear"#,
        "# comment",
        r#"verify "(x+y^2, y)" "(x, y+1)" expect=faithful"#,
        r#"claim-solve --mu 3+2*x --lambda2 2 --max-deg 4 dimension=1"#,
    ];
    let path = scratch("order.batch", &lines.join("\n"));
    let o = cremona(&["batch", path.to_str().unwrap(), "--jobs", "4"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    let numbers: Vec<&str> = out.lines().filter_map(|l| l.split(':').next()).filter(|n| n.parse::<u32>().is_ok()).collect();
    assert_eq!(numbers, ["1", "2", "3", "5", "6"]);
    assert!(out.contains("5: fail"), "{out}");
    assert!(out.contains("expected faithful, got unfaithful"), "{out}");

    let broken = scratch("broken.batch", "commutator \"(x, x*\" \"(x, y)\"\ninvert \"(x, y)\"\n");
    let o = cremona(&["batch", broken.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("2: ok (x, y)"));
}

#[test]
fn term_cap_from_environment_and_config_file() {
    let o = Command::new(env!("CARGO_BIN_EXE_cremona"))
        .args(["--format", "json", "degseq", "(y, y^2 + x)", "--n", "8"])
        .env("CREMONA_MAX_TERMS", "12")
        .output()
        .unwrap();
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["truncated"], true);
    assert!(doc["degrees"].as_array().unwrap().len() < 8);

    let cfg = scratch("cremona.toml", "format = \"json\"\nmax_terms = 12\n");
    let o = cremona(&["--config", cfg.to_str().unwrap(), "degseq", "(y, y^2 + x)", "--n", "8"]);
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["truncated"], true);
    // flags override the file
    let o = cremona(&["--config", cfg.to_str().unwrap(), "--max-terms", "200000", "--format", "human", "degseq", "(y, y^2 + x)", "--n", "4"]);
    assert_eq!(stdout(&o).trim(), "2 4 8 16");

    let bad = scratch("bad.toml", "colour = \"blue\"\n");
    assert_eq!(cremona(&["--config", bad.to_str().unwrap(), "invert", "(x, y)"]).status.code(), Some(2));
}

#[test]
fn config_file_finds_maps_beside_it() {
    let dir = scratch("shapes.maps", &std::fs::read_to_string(corpus("shapes.maps")).unwrap());
    let cfg = scratch("with-maps.toml", "maps = \"shapes.maps\"\n");
    assert_eq!(dir.parent(), cfg.parent());
    let o = cremona(&["--config", cfg.to_str().unwrap(), "invert", "twist"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
}

#[test]
fn named_maps_from_file() {
    let maps = corpus("shapes.maps");
    let o = cremona(&["--maps", maps.to_str().unwrap(), "commutator", "torusgen_f", "torusgen_g"]);
    assert_eq!(stdout(&o).trim(), "(x, 3/2*y)", "{}", stderr(&o));
    let o = cremona(&["--maps", maps.to_str().unwrap(), "degseq", "involution", "--n", "4"]);
    assert_eq!(stdout(&o).trim(), "2 1 2 1");
}
