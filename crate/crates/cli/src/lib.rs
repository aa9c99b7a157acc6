//! Library side of the command-line front end: report types, size caps,
//! verification suites, the matrix-table oracle, and the schema validator.

pub mod caps;
pub mod oracle;
pub mod report;
pub mod schema;
pub mod suites;

pub use caps::Caps;
pub use report::{exit_code, render_text, CheckReport, ReportBundle, Status};
pub use suites::{run_check, VerifyOptions, SUITE_NAMES};
