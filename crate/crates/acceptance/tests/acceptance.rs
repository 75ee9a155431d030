//! Runs every acceptance criterion and prints one line per criterion.

use std::process::ExitCode;

use abtqft_acceptance::{run_all, SEED};

fn main() -> ExitCode {
    let outcomes = run_all(SEED);
    for o in &outcomes {
        println!("{o} [{:.2}s]", o.seconds);
    }
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    println!("acceptance: {} passed, {failed} failed", outcomes.len() - failed);
    if failed == 0 && outcomes.len() == 11 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
