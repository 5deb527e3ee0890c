//! Runs every acceptance criterion and prints one line per criterion.
//! Built without the libtest harness so the lines are never captured.

use antimagic_cli::acceptance::run_all;

fn main() {
    let reports = run_all();
    for r in &reports {
        println!("{r}");
    }
    let failed: Vec<u8> = reports.iter().filter(|r| !r.passed).map(|r| r.id).collect();
    if failed.is_empty() {
        println!("acceptance: all {} criteria passed", reports.len());
    } else {
        println!("acceptance: failed criteria {failed:?}");
        std::process::exit(1);
    }
}
