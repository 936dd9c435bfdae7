//! End-to-end tests of the command-line interface: exit codes, golden
//! outputs, and the environment ceiling override.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pqtiling"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pqtiling"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

#[test]
fn counts_csv_golden_rows() {
    let out = run(&["counts", "-p", "7", "-q", "3", "-n", "3", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "n,u,utilde\n0,1,\n1,7,1\n2,21,3\n3,56,8\n");
}

#[test]
fn counts_json_mirrors_csv() {
    let out = run(&["counts", "-p", "7", "-q", "3", "-n", "2", "--format", "json"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "{\"p\":7,\"q\":3,\"n_max\":2,\"rows\":[\
         {\"n\":0,\"u\":\"1\",\"utilde\":null},\
         {\"n\":1,\"u\":\"7\",\"utilde\":\"1\"},\
         {\"n\":2,\"u\":\"21\",\"utilde\":\"3\"}]}\n"
    );
}

#[test]
fn unsupported_family_exits_2_and_names_the_rule() {
    let out = run(&["counts", "-p", "5", "-q", "4", "-n", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("q=4 with p>=5"), "stderr was: {err}");
    assert_eq!(run(&["verify", "-p", "5", "-q", "4"]).status.code(), Some(2));
    assert_eq!(run(&["spectrum", "-p", "3", "-q", "3"]).status.code(), Some(2));
}

#[test]
fn ceiling_exit_3_and_env_override() {
    let out = run(&["render", "-p", "4", "-q", "5", "-n", "10"]);
    assert_eq!(out.status.code(), Some(3));
    let out = run_env(&["render", "-p", "4", "-q", "5", "-n", "10"], "TESSEL_CEILING", "10");
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn render_draws_one_path_per_face() {
    let out = run(&["render", "-p", "7", "-q", "3", "-n", "4", "--color", "gen"]);
    assert!(out.status.success());
    let svg = stdout(&out);
    assert_eq!(svg.matches("<path").count(), 1 + 7 + 21 + 56 + 147);
    assert!(svg.contains("<circle"), "hyperbolic render has a boundary circle");
    assert!(svg.ends_with("</svg>\n"));
}

#[test]
fn tree_overlay_is_a_spanning_tree_of_the_drawn_ball() {
    let out = run(&["render", "-p", "4", "-q", "4", "-n", "5", "--color", "type", "--tree"]);
    assert!(out.status.success());
    let svg = stdout(&out);
    let faces = svg.matches("<path").count();
    let edges = svg.matches("<line").count();
    assert_eq!(faces, 61);
    // A spanning tree over the drawn faces: one production edge per
    // non-root face, acyclic by counting.
    assert_eq!(edges, faces - 1);
    assert!(!svg.contains("<circle"), "flat render has no boundary circle");
}

#[test]
fn dump_graph_shape_and_determinism() {
    // Depth 4 so at least one vertex is complete: with q = 8 (k = 4) the
    // gen-0 vertices close their 8-rings only once the ball reaches gen 4.
    let a = run(&["dump-graph", "-p", "3", "-q", "8", "-n", "4"]);
    let b = run(&["dump-graph", "-p", "3", "-q", "8", "-n", "4"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout, "dump-graph is byte-deterministic");
    let json = stdout(&a);
    assert!(json.starts_with("{\"params\":{\"p\":3,\"q\":8},\"max_gen\":4,\"vertices\":["));
    assert!(json.contains("\"z\":"), "hyperbolic dump carries z coordinates");
    assert!(json.contains("\"edges\":[[0,"));
    assert!(json.contains("\"faces\":[["));

    let flat = stdout(&run(&["dump-graph", "-p", "4", "-q", "4", "-n", "2"]));
    assert!(!flat.contains("\"z\":"), "flat dump has no z coordinate");
}

#[test]
fn verify_text_reports_all_six_claims() {
    let out = run(&["verify", "-p", "4", "-q", "6", "-n", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for claim in
        ["counts", "type_census", "successor_rules", "recurrence", "growth", "structure_lemmas"]
    {
        assert!(text.contains(claim), "missing {claim} in:\n{text}");
    }
    assert!(text.contains("6 checks: 6 pass, 0 fail, 0 skipped"), "{text}");
}

#[test]
fn help_documents_the_schemas() {
    let counts = stdout(&run(&["counts", "--help"]));
    assert!(counts.contains("n,u,utilde"));
    let dump = stdout(&run(&["dump-graph", "--help"]));
    assert!(dump.contains("17 significant digits"));
    let verify = stdout(&run(&["verify", "--help"]));
    assert!(verify.contains("byte-identical"));
    let top = stdout(&run(&["--help"]));
    assert!(top.contains("TESSEL_CEILING"));
}

#[test]
fn spectrum_rejects_csv_format() {
    let out = run(&["spectrum", "-p", "4", "-q", "6", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_flag_writes_the_file() {
    let dir = std::env::temp_dir().join("pqtiling-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("counts.csv");
    let out = run(&[
        "counts", "-p", "4", "-q", "5", "-n", "2", "--format", "csv", "-o",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "n,u,utilde\n0,1,\n1,4,1\n2,12,3\n");
}
