//! Check reports: one named suite with per-case results, stable JSON, and
//! the exit-code contract (0 all pass, 1 any failure, 2 usage error).

use std::time::Instant;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckCase {
    pub id: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Counts {
    pub pass: usize,
    pub fail: usize,
    pub total: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub status: Status,
    pub counts: Counts,
    pub cases: Vec<CheckCase>,
    pub elapsed_ms: u64,
}

/// Collects cases for one suite and freezes them into a report with cases
/// sorted by id.
pub struct ReportBuilder {
    name: String,
    cases: Vec<CheckCase>,
    started: Instant,
}

impl ReportBuilder {
    pub fn new(name: &str) -> Self {
        ReportBuilder {
            name: name.to_string(),
            cases: Vec::new(),
            started: Instant::now(),
        }
    }

    pub fn case(&mut self, id: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.cases.push(CheckCase {
            id: id.into(),
            status: if pass { Status::Pass } else { Status::Fail },
            detail: detail.into(),
        });
    }

    pub fn finish(mut self) -> CheckReport {
        self.cases.sort_by(|a, b| a.id.cmp(&b.id));
        let pass = self
            .cases
            .iter()
            .filter(|c| c.status == Status::Pass)
            .count();
        let fail = self.cases.len() - pass;
        CheckReport {
            name: self.name,
            status: if fail == 0 { Status::Pass } else { Status::Fail },
            counts: Counts {
                pass,
                fail,
                total: pass + fail,
            },
            cases: self.cases,
            elapsed_ms: self.started.elapsed().as_millis() as u64,
        }
    }
}

/// A bundle of suite reports, as emitted by `verify all`.
#[derive(Debug, Clone, Serialize)]
pub struct ReportBundle {
    pub status: Status,
    pub suites: Vec<CheckReport>,
}

impl ReportBundle {
    pub fn new(suites: Vec<CheckReport>) -> Self {
        let status = if suites.iter().all(|s| s.status == Status::Pass) {
            Status::Pass
        } else {
            Status::Fail
        };
        ReportBundle { status, suites }
    }
}

/// Exit code for a set of reports: 0 when everything passed, 1 otherwise.
pub fn exit_code(reports: &[CheckReport]) -> i32 {
    if reports.iter().all(|r| r.status == Status::Pass) {
        0
    } else {
        1
    }
}

/// Human-readable rendering: one line per suite and one line per failing
/// case (passing cases are summarized by the counts).
pub fn render_text(report: &CheckReport) -> String {
    let mut out = String::new();
    let mark = match report.status {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
    };
    out.push_str(&format!(
        "[{}] {}: {} cases ({} pass, {} fail) in {} ms\n",
        mark,
        report.name,
        report.counts.total,
        report.counts.pass,
        report.counts.fail,
        report.elapsed_ms
    ));
    for case in &report.cases {
        if case.status == Status::Fail {
            out.push_str(&format!("  FAIL {}: {}\n", case.id, case.detail));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report_passes() {
        let r = ReportBuilder::new("empty").finish();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.counts.total, 0);
        assert_eq!(exit_code(&[r]), 0);
    }

    #[test]
    fn one_failure_flips_status_and_exit() {
        let mut b = ReportBuilder::new("x");
        b.case("b-ok", true, "");
        b.case("a-bad", false, "boom");
        let r = b.finish();
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.counts.fail, 1);
        // Sorted by id.
        assert_eq!(r.cases[0].id, "a-bad");
        assert_eq!(exit_code(std::slice::from_ref(&r)), 1);
        let text = render_text(&r);
        assert!(text.contains("FAIL a-bad: boom"));
    }
}
