//! Verification reports as JSON with a stable key order.

use serde::{Deserialize, Serialize};
use unproj_core::unprojection::{CheckId, CheckStatus};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: String,
    pub status: String,
    pub detail: String,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub n: usize,
    pub field: String,
    pub checks: Vec<CheckRecord>,
    pub version: String,
}

impl ReportDocument {
    pub fn new(n: usize, field: String) -> Self {
        ReportDocument { n, field, checks: Vec::new(), version: env!("CARGO_PKG_VERSION").into() }
    }

    pub fn status_of(&self, id: CheckId) -> Option<CheckStatus> {
        self.checks.iter().find(|c| c.id == id.as_str()).and_then(|c| c.status.parse().ok())
    }

    /// 0 if every check passed, 1 if any failed, 3 if some timed out and
    /// none failed.
    pub fn exit_code(&self) -> i32 {
        let any = |s: &str| self.checks.iter().any(|c| c.status == s);
        if any("fail") {
            1
        } else if any("timeout") {
            3
        } else {
            0
        }
    }
}

pub fn emit_report(r: &ReportDocument) -> String {
    let mut s = serde_json::to_string_pretty(r).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn parse_report(text: &str) -> Result<ReportDocument, serde_json::Error> {
    let doc: ReportDocument = serde_json::from_str(text)?;
    for c in &doc.checks {
        if c.status.parse::<CheckStatus>().is_err() {
            return Err(serde::de::Error::custom(format!("invalid status '{}'", c.status)));
        }
    }
    Ok(doc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_and_timeout_reports() {
        let mut r = ReportDocument::new(1, "q".into());
        let text = emit_report(&r);
        assert!(text.contains("\"checks\": []"));
        assert_eq!(parse_report(&text).unwrap(), r);
        r.checks.push(CheckRecord { id: "theorem".into(), status: "timeout".into(), detail: "budget".into(), elapsed_ms: 7 });
        let text = emit_report(&r);
        let keys: Vec<usize> = ["\"n\"", "\"field\"", "\"checks\"", "\"version\""].iter().map(|k| text.find(k).unwrap()).collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
        let back = parse_report(&text).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.exit_code(), 3);
        assert!(parse_report(&text.replace("timeout", "maybe")).is_err());
    }
}
