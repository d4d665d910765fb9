//! Runs every exact identity check plus the seeded random properties and
//! prints one line per check.
//!
//!     cargo run --release --example verify_suite -- 42

use affine_chars::verify::{acceptance_suite, random_properties};

fn main() -> affine_chars::Result<()> {
    let seed = std::env::args()
        .nth(1)
        .map_or(0, |s| s.parse().expect("seed"));
    let mut failed = 0;
    for (criterion, checks) in acceptance_suite() {
        for check in checks {
            let report = check.run()?;
            failed += usize::from(!report.passed);
            println!("[{criterion}] {report}");
        }
    }
    for report in random_properties(seed, 1000)? {
        failed += usize::from(!report.passed);
        println!("[9] {report}");
    }
    println!("{failed} failed");
    std::process::exit(i32::from(failed > 0));
}
