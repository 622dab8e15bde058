//! Cross-checks over every configuration with n <= 4, d <= 6, t <= 60.
//! Pass `--full` for the n <= 5, d <= 8, t <= 400 family.

use veronese::sweep::{run_sweep, SweepParams};

fn main() -> veronese::Result<()> {
    let params = if std::env::args().any(|a| a == "--full") {
        SweepParams::default()
    } else {
        SweepParams { max_n: 4, max_d: 6, max_t: 60, ..Default::default() }
    };
    let report = run_sweep(&params)?;
    println!("{} configurations", report.rows.len());
    for (check, failed) in report.failure_counts() {
        println!("  {check:<24} {failed} failing");
    }
    for row in report.rows.iter().filter(|r| !r.failures.is_empty()).take(5) {
        println!("  e.g. {}: {}", row.config, row.failures[0].detail);
    }
    Ok(())
}
