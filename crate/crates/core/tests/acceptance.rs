//! All acceptance criteria at the full profile, one line per criterion.
//! Runs without the libtest harness so the lines are never captured.

use std::time::Instant;

use calogero_core::verify::{criteria, run_criterion, Profile, Settings};

fn main() {
    let settings = Settings { profile: Profile::Full, seed: 20240601 };
    let mut failed = Vec::new();
    for c in criteria() {
        let start = Instant::now();
        let o = run_criterion(&c, &settings);
        let status = if o.passed { "PASS" } else { "FAIL" };
        println!(
            "[{status}] {:>2} {:<24} instances={:<6} failures={:<4} {:.1}s  ({})",
            c.id,
            c.name,
            o.instances,
            o.failures,
            start.elapsed().as_secs_f64(),
            c.anchor
        );
        for d in &o.details {
            println!("        {d}");
        }
        if !o.passed {
            failed.push(c.name);
        }
    }
    let total = criteria().len();
    println!("acceptance: {} of {total} criteria passed", total - failed.len());
    if total != 17 || !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
