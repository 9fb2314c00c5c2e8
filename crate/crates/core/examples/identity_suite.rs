// Runs every registered identity for orders up to 8 and prints the reports.

use cfkl::identities::{reports_json, run_all};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let reports = run_all(8);
    for r in &reports {
        println!("{:<28} {:?}", r.identity_id, r.status);
    }
    assert!(reports.iter().all(|r| r.passed()));
    let json = reports_json(&reports[..1]);
    println!("{json}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
