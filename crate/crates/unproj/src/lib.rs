//! File formats, verification reports and the `unproj` command line on top
//! of [`unproj_core`].

pub mod cli;
pub mod parse;
pub mod problem;
pub mod report;
pub mod runner;

pub use parse::{parse_polynomial, print_polynomial, ParseError};
pub use problem::{emit_problem_file, parse_problem_file, ProblemFile};
pub use report::{emit_report, parse_report, CheckRecord, ReportDocument};
pub use runner::{verify_all, Deadline, RunOptions};
