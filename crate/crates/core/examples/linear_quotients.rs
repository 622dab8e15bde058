//! The clique order, its colon ideals and the top Betti number, under both
//! tie-break rules.

use veronese::lattice::{Config, Lattice};
use veronese::order::{verify_linear_quotients, CliqueOrder, TieBreak};

fn main() -> veronese::Result<()> {
    for config in [Config::new(5, 8, vec![2, 2, 2, 3, 3])?, Config::new(4, 6, vec![2, 3, 3, 3])?] {
        let lattice = Lattice::new(config);
        for rule in TieBreak::ALL {
            let order = CliqueOrder::build(&lattice, rule)?;
            let report = verify_linear_quotients(&order)?;
            let mut histogram = vec![0usize; lattice.n()];
            for r in &report.records {
                histogram[r.omega] += 1;
            }
            let (p, count) = report.top_betti();
            println!(
                "{} {rule:>9}: {} cliques, all linear: {}, omega histogram {histogram:?}, pd = {p}, beta_pd = {count}",
                lattice.config(),
                order.len(),
                report.all_linear()
            );
        }
    }
    Ok(())
}
