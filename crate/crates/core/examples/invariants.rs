//! Closed-form invariants, counting formulas and multiplicity bounds.

use veronese::invariants::InvariantReport;
use veronese::lattice::Config;

fn main() -> veronese::Result<()> {
    let report = InvariantReport::compute(&Config::new(5, 7, vec![1, 4, 4, 5, 7])?)?;
    println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
    if report.reg != report.pd_observed as i64 {
        println!(
            "note: closed-form regularity {} differs from the observed projective dimension {}",
            report.reg, report.pd_observed
        );
    }
    Ok(())
}
