//! One line per acceptance criterion. All comparisons are exact (tolerance
//! zero); each criterion also has a wall-clock bound.

use std::time::{Duration, Instant};

use twisted_n2::report::Status;
use twisted_n2_cli::criteria;

const TOLERANCE: i64 = 0;

fn bound(number: usize) -> Duration {
    let secs = match number {
        1 | 2 => 5,
        3 => 15,
        4 => 15,
        5 => 60,
        6 => 30,
        7 => 60,
        8 => 30,
        9 => 30,
        10 => 10,
        11 => 60,
        12 => 10,
        _ => 0,
    };
    Duration::from_secs(secs)
}

fn main() {
    let mut failed = Vec::new();
    let all = criteria();
    assert_eq!(all.len(), 12);
    for c in all {
        let start = Instant::now();
        let checks = (c.run)();
        let elapsed = start.elapsed();
        let bad: Vec<&str> = checks.iter().filter(|k| !k.status.ok()).map(|k| k.name.as_str()).collect();
        let resolved = checks.iter().filter(|k| k.status == Status::Resolved).count();
        let in_time = elapsed <= bound(c.number);
        let ok = !checks.is_empty() && bad.is_empty() && in_time;
        println!(
            "criterion {:>2} {}: {} ({} checks, {} resolved, tolerance {TOLERANCE}, {:.2}s of {}s)",
            c.number,
            c.title,
            if ok { "PASS" } else { "FAIL" },
            checks.len(),
            resolved,
            elapsed.as_secs_f64(),
            bound(c.number).as_secs(),
        );
        for b in &bad {
            println!("    failed: {b}");
        }
        if !ok {
            failed.push(c.number);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all 12 criteria pass");
    } else {
        println!("acceptance: failed criteria {failed:?}");
        std::process::exit(1);
    }
}
