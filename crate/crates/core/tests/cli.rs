//! Criterion 9: the bundled corpus parses, runs and reports through the
//! real binary with the documented exit codes, and JSON reports conform
//! to the stated schema.

use std::path::{Path, PathBuf};
use std::process::Command;

fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

fn catlaw() -> Command {
    Command::new(env!("CARGO_BIN_EXE_catlaw"))
}

fn cat_files(dir: &Path) -> Vec<PathBuf> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .unwrap()
        .filter_map(|e| {
            let p = e.unwrap().path();
            (p.extension().and_then(|x| x.to_str()) == Some("cat")).then_some(p)
        })
        .collect();
    files.sort();
    files
}

fn validate_json_schema(text: &str) {
    let doc: serde_json::Value = serde_json::from_str(text).expect("report is valid JSON");
    let checks = doc["checks"].as_array().expect("checks is an array");
    for check in checks {
        assert!(check["name"].is_string(), "check.name is a string");
        assert!(check["op"].is_string(), "check.op is a string");
        let status = check["status"].as_str().expect("check.status is a string");
        assert!(
            matches!(status, "pass" | "fail" | "error"),
            "status in pass|fail|error"
        );
        assert!(check["witnesses"].is_array(), "check.witnesses is an array");
        assert!(check["counts"].is_object(), "check.counts is an object");
    }
    let summary = doc["summary"].as_object().expect("summary is an object");
    for key in ["total", "passed", "failed", "errors"] {
        assert!(summary[key].is_u64(), "summary.{key} is a number");
    }
}

#[test]
fn criterion_9_cli_corpus() {
    let valid = cat_files(&corpus_dir());
    assert!(
        valid.len() >= 10,
        "need at least 10 valid corpus documents, found {}",
        valid.len()
    );
    for file in &valid {
        let out = catlaw()
            .arg("check")
            .arg(file)
            .arg("--format")
            .arg("json")
            .output()
            .expect("binary runs");
        let stdout = String::from_utf8_lossy(&out.stdout).to_string();
        assert_eq!(
            out.status.code(),
            Some(0),
            "{} should pass, got:\n{stdout}",
            file.display()
        );
        validate_json_schema(&stdout);
    }

    let broken = cat_files(&corpus_dir().join("broken"));
    assert!(
        broken.len() >= 5,
        "need at least 5 broken corpus documents, found {}",
        broken.len()
    );
    for file in &broken {
        let out = catlaw().arg("check").arg(file).output().expect("binary runs");
        let code = out.status.code().unwrap_or(-1);
        assert!(
            code == 1 || code == 2,
            "{} should exit 1 or 2, got {code}",
            file.display()
        );
        // diagnostics carry line:column positions
        let all = format!(
            "{}{}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        );
        let positioned = all
            .lines()
            .any(|l| {
                (l.contains("error:") || l.contains("FAIL") || l.contains("ERR"))
                    && l.split(&[' ', ':'][..]).any(|w| w.parse::<usize>().is_ok())
            });
        assert!(
            positioned,
            "{}: expected a positioned diagnostic, got:\n{all}",
            file.display()
        );
    }

    // JSON reports also validate for a failing document
    let failing = corpus_dir().join("broken").join("failing_counts.cat");
    let out = catlaw()
        .arg("check")
        .arg(&failing)
        .arg("--format")
        .arg("json")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    validate_json_schema(&String::from_utf8_lossy(&out.stdout));

    // parse errors carry line:column on stderr
    let syntax = corpus_dir().join("broken").join("syntax_error.cat");
    let out = catlaw().arg("check").arg(&syntax).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(
        stderr.contains("3:"),
        "expected a positioned diagnostic, got: {stderr}"
    );

    println!(
        "criterion 9 (CLI corpus: {} valid, {} broken): PASS",
        valid.len(),
        broken.len()
    );
}

#[test]
fn emit_parse_fixpoint_on_corpus() {
    use catlaw::dsl::{emit_document, parse_document};
    for file in cat_files(&corpus_dir()) {
        let text = std::fs::read_to_string(&file).unwrap();
        let first = parse_document(&text).unwrap();
        let emitted = emit_document(&first);
        let second = parse_document(&emitted).expect("emitted text reparses");
        assert_eq!(first, second, "{}: AST fixpoint", file.display());
        assert_eq!(emitted, emit_document(&second));
    }
}

#[test]
fn environment_bound_is_honoured() {
    // CATLAW_BOUND below the category size makes enumeration refuse
    let file = corpus_dir().join("categories.cat");
    let out = catlaw()
        .arg("check")
        .arg(&file)
        .env("CATLAW_BOUND", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("enumeration bound exceeded"), "{stdout}");
}
