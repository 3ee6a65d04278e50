//! Runs every acceptance criterion at full scale and prints one line each.
//!
//! `LAMPLIGHT_SUITE=quick` selects the reduced scale.

use std::process::ExitCode;
use std::time::Instant;

use lamplight::acceptance::{criteria, Level};

fn main() -> ExitCode {
    if std::env::args().any(|a| a == "--list") {
        for c in criteria() {
            println!("{}: test", c.id);
        }
        return ExitCode::SUCCESS;
    }
    let level = match std::env::var("LAMPLIGHT_SUITE").as_deref() {
        Ok("quick") => Level::Quick,
        _ => Level::Full,
    };
    println!("acceptance suite ({level:?})");
    let mut failed = Vec::new();
    for c in criteria() {
        let started = Instant::now();
        let outcome = c.run(level);
        println!("{outcome}  [{:.2}s]", started.elapsed().as_secs_f64());
        if !outcome.passed {
            failed.push(outcome.id);
        }
    }
    if failed.is_empty() {
        println!("all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("failed: {}", failed.join(", "));
        ExitCode::FAILURE
    }
}
