use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::{json, Value};
use tempfile::TempDir;

const EX1: &str = "# id: s1\n(S (NP (Det The) (NP (Adj quick) (NP (Adj brown) (N fox)))) \
    (VP (V jumps) (PP (P over) (NP (NP (Det the) (NP (Adj lazy) (N dog))) \
    (PP (P of) (NP (Det a) (NP (Adj passing) (N lady))))))))\n";

struct Run {
    json: Value,
    stdout: String,
    code: i32,
}

fn dsc(dir: &Path, args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_dsc"))
        .current_dir(dir)
        .args(args)
        .output()
        .unwrap();
    let stdout = String::from_utf8(out.stdout).unwrap();
    let json = serde_json::from_str(stdout.trim()).unwrap_or(Value::Null);
    Run {
        json,
        stdout,
        code: out.status.code().unwrap(),
    }
}

fn workspace(corpus: &str) -> (TempDir, PathBuf) {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("corpus.txt");
    std::fs::write(&path, corpus).unwrap();
    (dir, path)
}

fn built(semiring: &str) -> TempDir {
    let (dir, _) = workspace(EX1);
    let run = dsc(
        dir.path(),
        &["--semiring", semiring, "build", "corpus.txt", "--out", "model.json"],
    );
    assert_eq!(run.code, 0, "{}", run.stdout);
    assert_eq!(run.json["value"]["instances"], 3);
    dir
}

fn query(dir: &TempDir, args: &[&str]) -> Run {
    let mut full = vec!["query", "--model", "model.json"];
    full.extend_from_slice(args);
    dsc(dir.path(), &full)
}

#[test]
fn validate_reports_violations() {
    let (dir, _) = workspace(EX1);
    let ok = dsc(dir.path(), &["validate", "corpus.txt"]);
    assert_eq!(ok.code, 0);
    assert_eq!(ok.json["value"]["valid"], true);

    let (dir, _) = workspace("(S (N dog) (N cat) (N fox))\n");
    let bad = dsc(dir.path(), &["validate", "corpus.txt"]);
    assert_eq!(bad.code, 1);
    assert_eq!(bad.json["value"]["valid"], false);
    assert!(!bad.json["value"]["violations"].as_array().unwrap().is_empty());
}

#[test]
fn norm_and_cooccurrence() {
    let dir = built("naturals");
    assert_eq!(query(&dir, &["norm", "fox/N"]).json, json!({"value": "1"}));
    assert_eq!(
        query(&dir, &["cooccur", "-k", "1", "fox/N", "dog/N"]).json,
        json!({"value": "1"})
    );
    assert_eq!(
        query(&dir, &["cooccur", "-k", "0", "fox/N", "dog/N"]).json,
        json!({"value": "0"})
    );
}

#[test]
fn sentence_vector_matches_hidden_oracle() {
    let dir = built("naturals");
    let sparse = query(&dir, &["sentence-vec", "s1"]);
    assert_eq!(sparse.code, 0);
    assert_eq!(sparse.json["value"]["coeffs"], json!({"0": "2", "1": "1", "2": "1"}));
    let dense = dsc(dir.path(), &["oracle", "sentence-vec", "corpus.txt", "s1"]);
    assert_eq!(dense.json["value"]["coeffs"], sparse.json["value"]["coeffs"]);
}

#[test]
fn logic_queries() {
    let dir = built("naturals");
    let run = query(&dir, &["logic", "m(lazy/Adj) OR m(passing/Adj)"]);
    assert_eq!(run.code, 0);
    assert_eq!(run.json["value"]["support"], json!([1, 2]));

    let syntax = query(&dir, &["logic", "m(lazy/Adj) OR"]);
    assert_eq!(syntax.code, 2);
    assert_eq!(syntax.json["error"], "LogicSyntax");
}

#[test]
fn boolean_model_rejects_joins() {
    let dir = built("boolean");
    let run = query(&dir, &["logic", "m(lazy/Adj) OR m(passing/Adj)"]);
    assert_eq!(run.code, 1);
    assert_eq!(run.json["error"], "UnsupportedInstance");
    let meet = query(&dir, &["logic", "m(The/Det) AND m(quick/Adj)"]);
    assert_eq!(meet.json["value"]["support"], json!([0]));
}

#[test]
fn unknown_words_and_sentences() {
    let dir = built("naturals");
    assert_eq!(query(&dir, &["norm", "fox"]).code, 2);
    let missing = query(&dir, &["sentence-vec", "nope"]);
    assert_eq!(missing.code, 1);
    assert_eq!(missing.json["error"], "UnknownSentence");
}

#[test]
fn usage_errors_exit_two() {
    let dir = TempDir::new().unwrap();
    let run = dsc(dir.path(), &["frobnicate"]);
    assert_eq!(run.code, 2);
    assert_eq!(run.json["error"], "Usage");
    assert_eq!(dsc(dir.path(), &["--help"]).code, 0);
}

#[test]
fn output_is_byte_identical_across_runs() {
    let dir = built("naturals");
    let first = query(&dir, &["modify", "lazy/Adj", "dog/N"]).stdout;
    let second = query(&dir, &["modify", "lazy/Adj", "dog/N"]).stdout;
    assert_eq!(first, second);
    let analyze = |d: &TempDir| dsc(d.path(), &["analyze", "corpus.txt"]).stdout;
    assert_eq!(analyze(&dir), analyze(&dir));
}

#[test]
fn analyze_single_sentence() {
    let (dir, _) = workspace(EX1);
    let run = dsc(dir.path(), &["analyze", "corpus.txt", "--sentence", "s1"]);
    assert_eq!(run.code, 0);
    assert_eq!(run.json["value"]["sentence"], "s1");
    assert_eq!(run.json["value"]["class_tree"]["kind"], "join");
}

#[test]
fn tampered_model_is_rejected() {
    let dir = built("naturals");
    let path = dir.path().join("model.json");
    let mut model: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    model["objectRank"][0] = json!(3);
    std::fs::write(&path, model.to_string()).unwrap();
    let run = query(&dir, &["norm", "fox/N"]);
    assert_eq!(run.code, 1);
    assert_eq!(run.json["error"], "ModelMismatch");
}

#[test]
fn missing_explicit_config_is_an_io_error() {
    let (dir, _) = workspace(EX1);
    let run = dsc(dir.path(), &["--config", "absent.json", "validate", "corpus.txt"]);
    assert_eq!(run.code, 1);
    assert_eq!(run.json["error"], "Io");
}
