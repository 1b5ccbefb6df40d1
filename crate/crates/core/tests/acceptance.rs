//! One line per acceptance criterion; fails if any criterion fails.

use twistlab::selftest::run_criterion;

fn main() {
    let mut failed = Vec::new();
    for id in 1..=8 {
        let started = std::time::Instant::now();
        let r = run_criterion(id).expect("criterion id in range");
        println!("{} [{:.1}s]", r.line(), started.elapsed().as_secs_f64());
        for f in &r.findings {
            println!("    finding: {f}");
        }
        if !r.passed {
            failed.push(id);
        }
    }
    if !failed.is_empty() {
        println!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
