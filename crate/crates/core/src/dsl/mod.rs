//! A small declarative language for categories, monads, laws and check
//! suites, with a parser, an elaborator and a check runner.
//!
//! Documents are line-oriented: one declaration or check per line, `#`
//! comments. Parsing yields an AST with source positions, elaboration
//! validates every declared structure (failures poison their names and
//! abort dependent checks only), and the runner executes the checks in
//! document order with deterministic reports.

pub mod ast;
pub mod elab;
pub mod emit;
pub mod lexer;
pub mod parser;
pub mod report;
pub mod run;

pub use ast::{Document, FormatKind, Item, OptionDecl};
pub use elab::{elaborate, Env, Value};
pub use emit::emit_document;
pub use parser::{parse_document, ParseError};
pub use report::{render_json, render_text};
pub use run::{run_checks, RunResult, Status};

/// The bound declared in the document, when any.
pub fn document_bound(doc: &Document) -> Option<usize> {
    doc.items.iter().rev().find_map(|item| match item {
        Item::Option(OptionDecl::Bound(n)) => Some(*n),
        _ => None,
    })
}

/// The report format declared in the document, when any.
pub fn document_format(doc: &Document) -> Option<FormatKind> {
    doc.items.iter().rev().find_map(|item| match item {
        Item::Option(OptionDecl::Format(f)) => Some(*f),
        _ => None,
    })
}

/// Parses, elaborates and runs a document in one call.
pub fn run_document(text: &str, bound: usize) -> Result<RunResult, ParseError> {
    let doc = parse_document(text)?;
    let env = elaborate(&doc);
    let effective = document_bound(&doc).unwrap_or(bound);
    Ok(run_checks(&doc, &env, effective))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn runs_a_small_document() {
        let result = run_document(
            "category C3 = poset chain 3\nmonad T on C3 = closure [1, 1, 2]\ncheck validate_monad T\ncheck em_count T = 2\n",
            crate::oracle::DEFAULT_BOUND,
        )
        .unwrap();
        assert_eq!(result.exit_code(), 0, "{:?}", result.checks);
    }

    #[test]
    fn failing_check_exits_one() {
        let result = run_document(
            "category C3 = poset chain 3\nmonad T on C3 = closure [1, 1, 2]\ncheck em_count T = 3\n",
            crate::oracle::DEFAULT_BOUND,
        )
        .unwrap();
        assert_eq!(result.exit_code(), 1);
    }

    #[test]
    fn elaboration_failure_aborts_dependents_only() {
        let result = run_document(
            "category C3 = poset chain 3\nmonad T on C3 = closure [1, 1]\ncategory Z = monoid z2\ncheck em_count T = 2\ncheck count_functors Z = 2\n",
            crate::oracle::DEFAULT_BOUND,
        )
        .unwrap();
        assert_eq!(result.exit_code(), 2);
        assert_eq!(result.checks[0].status, Status::Error);
        assert_eq!(result.checks[1].status, Status::Pass);
        assert_eq!(result.diagnostics.len(), 1);
    }

    #[test]
    fn empty_document_reports_zero_checks() {
        let result = run_document("", crate::oracle::DEFAULT_BOUND).unwrap();
        assert_eq!(result.checks.len(), 0);
        assert_eq!(result.exit_code(), 0);
        let json: serde_json::Value = serde_json::from_str(&render_json(&result)).unwrap();
        assert_eq!(json["summary"]["total"], 0);
    }

    #[test]
    fn unresolved_name_lists_candidates() {
        let result = run_document(
            "category C3 = poset chain 3\nmonad T on C3 = closure [1, 1, 2]\ncheck em_count T2 = 2\n",
            crate::oracle::DEFAULT_BOUND,
        )
        .unwrap();
        assert_eq!(result.exit_code(), 2);
        assert!(result.checks[0].witnesses[0].contains("declared monads: T"));
    }
}
