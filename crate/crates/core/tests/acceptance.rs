//! The ten acceptance criteria, one PASS/FAIL line each. Runs without the
//! libtest harness so the lines always print; exits nonzero if any fails.

use std::time::Instant;

use affine_chars::formulas::{q_dimension_direct, CharacterRequest, FormulaId};
use affine_chars::lie::RootType;
use affine_chars::series::to_json;
use affine_chars::verify::{acceptance_suite, random_properties, CheckReport};

const SEED: u64 = 0x5eed;
const CASES: u32 = 1000;

/// Everything criteria 1 to 9 print, minus timings, plus a few serialized
/// series, evaluated on a pool of `threads` workers.
fn transcript(threads: usize) -> Vec<String> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .unwrap();
    pool.install(|| {
        let mut lines = Vec::new();
        for (_, checks) in acceptance_suite() {
            for c in checks {
                lines.push(
                    c.run()
                        .map_or_else(|e| format!("error {e}"), |r| r.summary()),
                );
            }
        }
        for r in random_properties(SEED, 100).unwrap() {
            lines.push(r.summary());
        }
        let d4 = |labels: Vec<i64>| {
            CharacterRequest::new(FormulaId::Deligne, RootType::D, 4).with_labels(labels)
        };
        for req in [
            d4(vec![-2, 0, 0, 0, 0]),
            d4(vec![-3, 1, 0, 1, 0]),
            CharacterRequest::new(FormulaId::SlHalfLast, RootType::A, 3).with_s(2),
        ] {
            lines.push(to_json(&req.character(3).unwrap()));
            lines.push(q_dimension_direct(&req, 3).unwrap().to_string());
        }
        lines
    })
}

fn main() {
    let mut all_passed = true;
    let mut line = |criterion: u32, passed: bool, detail: String| {
        all_passed &= passed;
        println!(
            "criterion {criterion:>2}: {} {detail}",
            if passed { "PASS" } else { "FAIL" }
        );
    };

    for (criterion, checks) in acceptance_suite() {
        let start = Instant::now();
        let reports: Vec<CheckReport> = checks.iter().map(|c| c.run().unwrap()).collect();
        let failed: Vec<String> = reports
            .iter()
            .filter(|r| !r.passed)
            .map(|r| r.summary())
            .collect();
        let detail = if failed.is_empty() {
            let names: Vec<String> = reports
                .iter()
                .map(|r| format!("{} [{}]", r.name, r.params))
                .collect();
            names.join(", ")
        } else {
            failed.join("; ")
        };
        line(
            criterion,
            failed.is_empty(),
            format!("({:.1?}) {detail}", start.elapsed()),
        );
    }

    let start = Instant::now();
    let reports = random_properties(SEED, CASES).unwrap();
    let failed: Vec<String> = reports
        .iter()
        .filter(|r| !r.passed)
        .map(|r| r.summary())
        .collect();
    let names: Vec<&str> = reports.iter().map(|r| r.name.as_str()).collect();
    line(
        9,
        failed.is_empty(),
        format!(
            "({:.1?}) {CASES} seeded cases each of {}{}",
            start.elapsed(),
            names.join(", "),
            failed.join("; ")
        ),
    );

    let start = Instant::now();
    let one = transcript(1);
    let many = transcript(4);
    let same = one == many;
    let detail = match one.iter().zip(&many).position(|(a, b)| a != b) {
        None if same => format!("{} lines identical with 1 and 4 workers", one.len()),
        Some(i) => format!("line {i} differs: {:?} vs {:?}", one[i], many[i]),
        None => format!("{} vs {} lines", one.len(), many.len()),
    };
    line(10, same, format!("({:.1?}) {detail}", start.elapsed()));

    if !all_passed {
        std::process::exit(1);
    }
}
