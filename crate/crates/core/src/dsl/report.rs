//! Rendering of run results as human-readable text or stable JSON.

use serde_json::json;

use super::run::{RunResult, Status};

/// Plain-text rendering, one line per check plus a summary.
pub fn render_text(result: &RunResult) -> String {
    let mut out = String::new();
    for check in &result.checks {
        let tag = match check.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Error => "ERR ",
        };
        out.push_str(&format!("[{tag}] {}", check.name));
        if check.status != Status::Pass {
            out.push_str(&format!(" at {}:{}", check.line, check.col));
        }
        if !check.counts.is_empty() {
            let counts: Vec<String> = check
                .counts
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            out.push_str(&format!(" ({})", counts.join(", ")));
        }
        out.push('\n');
        for w in &check.witnesses {
            out.push_str(&format!("       {w}\n"));
        }
    }
    for (line, col, message) in &result.diagnostics {
        out.push_str(&format!("error: {line}:{col}: {message}\n"));
    }
    out.push_str(&format!(
        "summary: {} checks, {} passed, {} failed, {} errored",
        result.checks.len(),
        result.passed(),
        result.failed(),
        result.errored()
    ));
    if !result.diagnostics.is_empty() {
        out.push_str(&format!(", {} diagnostics", result.diagnostics.len()));
    }
    out.push('\n');
    out
}

/// JSON rendering with stable field names:
/// `{checks: [{name, op, status, witnesses, counts}], summary}`.
pub fn render_json(result: &RunResult) -> String {
    let checks: Vec<serde_json::Value> = result
        .checks
        .iter()
        .map(|c| {
            json!({
                "name": c.name,
                "op": c.op,
                "status": match c.status {
                    Status::Pass => "pass",
                    Status::Fail => "fail",
                    Status::Error => "error",
                },
                "witnesses": c.witnesses,
                "counts": c.counts,
                "line": c.line,
                "col": c.col,
            })
        })
        .collect();
    let diagnostics: Vec<serde_json::Value> = result
        .diagnostics
        .iter()
        .map(|(line, col, message)| json!({"line": line, "col": col, "message": message}))
        .collect();
    let doc = json!({
        "checks": checks,
        "summary": {
            "total": result.checks.len(),
            "passed": result.passed(),
            "failed": result.failed(),
            "errors": result.errored(),
            "diagnostics": diagnostics,
            "exit_code": result.exit_code(),
        },
    });
    serde_json::to_string_pretty(&doc).expect("report serialization cannot fail")
}
