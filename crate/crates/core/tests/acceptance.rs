use std::process::ExitCode;

use kbideal_core::verify::run_all;

fn main() -> ExitCode {
    let reports = run_all();
    for r in &reports {
        let status = match (r.passed, r.known_issue) {
            (true, _) => "PASS",
            (false, Some(_)) => "FAIL (known)",
            (false, None) => "FAIL",
        };
        println!("[{status}] criterion {}: {} ({:.2?})", r.id, r.title, r.elapsed);
        for d in &r.details {
            println!("    {d}");
        }
        if let (false, Some(why)) = (r.passed, r.known_issue) {
            println!("    known issue: {why}");
        }
    }
    let passed = reports.iter().filter(|r| r.passed).count();
    println!("{passed}/{} criteria pass", reports.len());
    if reports.iter().all(|r| r.acceptable()) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
