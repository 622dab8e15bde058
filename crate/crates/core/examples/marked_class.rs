//! One equivalence class in detail: obstruction poset, marked representative
//! and the within-class order by relative signature.

use veronese::cliques::{root, EquivalenceClass};
use veronese::lattice::{Config, Lattice, Point};

fn main() -> veronese::Result<()> {
    let lattice = Lattice::new(Config::new(5, 8, vec![2, 2, 2, 3, 3])?);
    let class = EquivalenceClass::new(&Point::from([1, 1, 1, 3, 2]), &lattice)?;
    println!("first {}  last {}  rank {}", class.first, class.last, class.rank);
    let covers: Vec<String> = class.poset.covers().iter().map(|(p, q)| format!("{p} < {q}")).collect();
    println!("obstructions: {{{}}}", covers.join(", "));
    println!("kappa = ({}, {}), sgn(L) = {}", class.kappa1, class.kappa2, class.marked_l);
    println!("{:>12}  {:>12}  root", "sgn", "sgn_tau");
    for clique in &class.members {
        let rel = class.relative_signature(clique)?;
        let has_root = root(clique, lattice.config()).is_some();
        println!(
            "{:>12}  {:>12}  {}",
            clique.signature.to_string(),
            rel.to_string(),
            if has_root { "yes" } else { "no" }
        );
    }
    Ok(())
}
