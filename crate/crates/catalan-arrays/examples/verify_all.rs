//! Runs the whole identity suite and prints one line per check, the same
//! report the `verify all` subcommand produces.

use std::process::ExitCode;

use catalan_arrays::cli::output::report_text;
use catalan_arrays::identities::{all_passed, run_all};

fn main() -> ExitCode {
    let depth = 16;
    let reports = run_all(depth);
    for report in &reports {
        print!("{}", report_text(report));
    }
    let passed = reports.iter().filter(|r| r.passed()).count();
    println!("{passed}/{} checks passed", reports.len());
    if all_passed(&reports) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
