//! Runs the ten acceptance criteria, printing one line each.

use std::io::Write;

use symstoch::suite;

/// Written straight to stderr so the lines survive libtest's output capture.
fn report(line: &str) {
    let _ = writeln!(std::io::stderr().lock(), "{line}");
}

#[test]
fn acceptance() {
    let results: Vec<_> = suite::criteria()
        .iter()
        .map(|c| {
            let r = suite::run_criterion(c);
            report(&r.summary_line());
            r
        })
        .collect();
    let failed: Vec<u8> = results.iter().filter(|r| !r.passed).map(|r| r.id).collect();
    report(&format!(
        "acceptance: {}/{} criteria passed",
        results.len() - failed.len(),
        results.len()
    ));
    if !failed.is_empty() {
        for r in results.iter().filter(|r| !r.passed) {
            for c in r.checks.iter().filter(|c| !c.passed) {
                report(&format!("  criterion {} / {}: {}", r.id, c.name, c.detail));
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
