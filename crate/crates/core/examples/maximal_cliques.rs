//! Maximal cliques from start tuples and linear extensions, checked against
//! Bron–Kerbosch on the explicit sortedness graph.

use std::collections::BTreeSet;

use veronese::cliques::{brute_force_cliques, enumerate_maximal_cliques, start_tuples, Graph};
use veronese::lattice::{Config, Lattice};

fn main() -> veronese::Result<()> {
    let lattice = Lattice::new(Config::new(4, 5, vec![1, 2, 3, 4])?);
    let cliques = enumerate_maximal_cliques(&lattice)?;
    println!("{}: {} start tuples, {} maximal cliques", lattice.config(), start_tuples(&lattice).len(), cliques.len());
    for c in cliques.iter().take(5) {
        let chain: Vec<String> = c.chain.iter().map(ToString::to_string).collect();
        println!("  sgn {}  {}", c.signature, chain.join(" > "));
    }

    let graph = Graph::build(&lattice);
    let brute: BTreeSet<Vec<usize>> = brute_force_cliques(&graph).into_iter().collect();
    let ours: BTreeSet<Vec<usize>> = cliques
        .iter()
        .map(|c| {
            let mut ids = c.chain_ids(&lattice).expect("points of the lattice");
            ids.sort_unstable();
            ids
        })
        .collect();
    println!("graph: {} vertices, {} edges", graph.vertex_count(), graph.edge_count());
    println!("Bron–Kerbosch agrees: {}", brute == ours);
    Ok(())
}
