//! Runs every acceptance criterion in order, printing one line each, and
//! exits nonzero when any fails.

use autoseq::verify::run_criterion;

fn main() {
    let mut failed = Vec::new();
    for id in 1..=13u8 {
        let outcome = run_criterion(id).expect("criterion exists");
        println!("{outcome}");
        if !outcome.passed {
            failed.push(id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: 13/13 criteria passed");
    } else {
        println!("acceptance: failing criteria {failed:?}");
        std::process::exit(1);
    }
}
