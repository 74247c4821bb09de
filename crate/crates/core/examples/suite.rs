//! Run every proved identity and print a summary. Identities that need
//! coefficient files are skipped unless MAHLER_COEFF_DIR points at them.
//!
//!     cargo run --release --example suite

use mahler::verify::{proved_all_pass, run_suite, Status, SuiteFilter, VerifyOptions};

fn main() {
    let f = SuiteFilter { status: Some(Status::Proved), ..Default::default() };
    let reports = run_suite(&f, &VerifyOptions::default());
    for r in &reports {
        println!("{}", r.text_line());
    }
    let skipped = reports.iter().filter(|r| r.skipped()).count();
    println!("{} identities, {skipped} skipped, all proved pass: {}", reports.len(), proved_all_pass(&reports));
}
