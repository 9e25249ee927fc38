//! Rendering of command results and errors.

use std::io::Write;

use lefschetz::Error;
use serde_json::{json, Map, Value};

pub const SCHEMA: u64 = 1;

/// A command result: the JSON document and its text rendering.
pub struct Output {
    pub json: Value,
    pub text: String,
}

impl Output {
    /// Wraps `body` with the schema version and command name.
    pub fn new(command: &str, body: Value, text: String) -> Self {
        let mut doc = Map::new();
        doc.insert("schema".into(), json!(SCHEMA));
        doc.insert("command".into(), json!(command));
        if let Value::Object(m) = body {
            doc.extend(m);
        }
        Output { json: Value::Object(doc), text }
    }

    pub fn print(&self, json: bool) {
        let mut body = if json {
            // keys come out sorted, so identical runs print identical bytes
            serde_json::to_string_pretty(&self.json).unwrap_or_default()
        } else {
            self.text.clone()
        };
        if !body.ends_with('\n') {
            body.push('\n');
        }
        // a closed pipe (e.g. `| head`) is not an error
        let _ = std::io::stdout().lock().write_all(body.as_bytes());
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::InvalidInput(_) => "invalid_input",
        Error::NotHexagonal(_) => "not_hexagonal",
        Error::Precondition(_) => "precondition",
        Error::HilbertMismatch { .. } => "hilbert_mismatch",
        Error::NonIntegral { .. } => "non_integral",
        Error::BudgetExceeded { .. } => "budget_exceeded",
        Error::Invariant(_) => "invariant_violation",
    }
}

pub fn error_json(e: &Error) -> Value {
    let mut err = json!({
        "kind": error_kind(e),
        "message": e.to_string(),
        "exit_code": e.exit_code(),
    });
    if let Error::BudgetExceeded { nodes } = e {
        err["nodes"] = json!(nodes);
    }
    json!({ "schema": SCHEMA, "error": err })
}

/// Errors go to stderr; with `--json` they are a JSON document.
pub fn print_error(e: &Error, json: bool) {
    if json {
        eprintln!("{}", error_json(e));
    } else {
        eprintln!("error: {e}");
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn envelope() {
        let o = Output::new("formula", json!({"value": "6"}), "6".into());
        assert_eq!(o.json["schema"], 1);
        assert_eq!(o.json["command"], "formula");
        assert_eq!(o.json["value"], "6");
    }

    #[test]
    fn budget_error_document() {
        let v = error_json(&Error::BudgetExceeded { nodes: 7 });
        assert_eq!(v["error"]["kind"], "budget_exceeded");
        assert_eq!(v["error"]["exit_code"], 2);
        assert_eq!(v["error"]["nodes"], 7);
    }
}
