//! Runs every verification suite at its default bounds and prints the
//! reports; exits non-zero if any fails.
//!
//!     cargo run --release --example verify_identities

use supercat::verify::{run_all, Bounds};

fn main() {
    let reports = run_all(&Bounds::default(), false).unwrap();
    for report in &reports {
        print!("{}", report.to_text());
    }
    if reports.iter().any(|r| !r.passed) {
        std::process::exit(1);
    }
}
