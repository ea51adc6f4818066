//! Library half of the `galjac` command-line tool: JSON descriptors,
//! deterministic reports, the per-kind commands and the verification suites.

pub mod commands;
pub mod descriptor;
pub mod report;
pub mod verify;

use galjac_core::Error;

/// Exit status for a finished command: 0 when every verdict passed or was
/// undetermined, 1 when some check failed.
pub fn status_of(report: &report::Report) -> i32 {
    if report.has_failure() {
        1
    } else {
        0
    }
}

/// Exit status for an error: 3 for internal-consistency failures, 2 for
/// everything caused by the input.
pub fn status_of_error(e: &Error) -> i32 {
    if e.is_internal() {
        3
    } else {
        2
    }
}
