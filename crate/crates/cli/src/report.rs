use serde::{Deserialize, Serialize};

use mcgverify_core::verifier::{CheckResult, Status, VerifyConfig};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportConfig {
    pub checks: Vec<String>,
    #[serde(flatten)]
    pub verify: VerifyConfig,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub discrepancy: usize,
}

impl Summary {
    pub fn tally(results: &[CheckResult]) -> Self {
        let mut s = Summary::default();
        for r in results {
            match r.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::DiscrepancyReported => s.discrepancy += 1,
            }
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<String>,
    pub config: ReportConfig,
    pub results: Vec<CheckResult>,
    pub summary: Summary,
}

impl Report {
    pub fn new(config: ReportConfig, results: Vec<CheckResult>, timing: bool) -> Self {
        let mut results = results;
        if !timing {
            results.iter_mut().for_each(|r| r.elapsed_ms = 0);
        }
        Report {
            version: env!("CARGO_PKG_VERSION").to_string(),
            timestamp: timing.then(|| chrono::Utc::now().to_rfc3339()),
            config,
            summary: Summary::tally(&results),
            results,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::from("# mcgverify report\n\n");
        out.push_str(&format!("version {}", self.version));
        if let Some(t) = &self.timestamp {
            out.push_str(&format!(", {t}"));
        }
        out.push_str("\n\n");
        if self.summary.discrepancy > 0 {
            out.push_str(&format!(
                "> **{} discrepancy-reported result(s).** These document a mismatch between a stated count and \
                 the literal enumeration; they do not fail the run.\n\n",
                self.summary.discrepancy
            ));
        }
        out.push_str(&format!(
            "pass: {}, fail: {}, discrepancy: {}\n\n",
            self.summary.pass, self.summary.fail, self.summary.discrepancy
        ));
        out.push_str("| check | genus | status | ms | note |\n|---|---|---|---|---|\n");
        for r in &self.results {
            let genus = r.genus.map(|g| g.to_string()).unwrap_or_else(|| "-".into());
            let status = serde_json::to_value(r.status).expect("status serializes");
            out.push_str(&format!(
                "| {} | {} | {} | {} | {} |\n",
                r.check_id,
                genus,
                status.as_str().unwrap_or_default(),
                r.elapsed_ms,
                note(r).replace('|', "\\|")
            ));
        }
        out
    }
}

/// Short per-row note: the witness of a failure, the two counts of a
/// discrepancy, or the group found by the homology checks.
fn note(r: &CheckResult) -> String {
    let d = &r.details;
    if let Some(w) = d.get("witness").or_else(|| d.get("error")) {
        let s = w.to_string();
        return if s.chars().count() > 120 { format!("{}...", s.chars().take(117).collect::<String>()) } else { s };
    }
    match r.status {
        Status::DiscrepancyReported => {
            format!("literal {} vs formula {}", d["literal_count"], d["formula"])
        }
        _ => d.get("h1_text").and_then(|v| v.as_str()).unwrap_or_default().to_string(),
    }
}
