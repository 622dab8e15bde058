//! Lattice points, the minimal tuple eta, ranks and the Newton dual.
//!
//!     cargo run --example points -- 5 7 1,4,4,5,7

use veronese::lattice::{dual_point, newton_dual, Config, Lattice};

fn parse_args() -> Config {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if args.len() != 3 {
        return Config::new(5, 8, vec![2, 2, 2, 3, 3]).expect("valid");
    }
    let n = args[0].parse().expect("n");
    let d = args[1].parse().expect("d");
    let alpha = args[2].split(',').map(|a| a.parse().expect("alpha entry")).collect();
    Config::new(n, d, alpha).unwrap_or_else(|e| {
        eprintln!("{e}");
        std::process::exit(3);
    })
}

fn main() {
    let config = parse_args();
    let lattice = Lattice::new(config.clone());
    println!("{config}: t = {} points, eta = {}", lattice.len(), lattice.eta());
    for (id, p) in lattice.points().iter().enumerate().take(12) {
        println!("{id:>4}  {p}  rank {}", lattice.rank(p));
    }
    if lattice.len() > 12 {
        println!("   ... {} more", lattice.len() - 12);
    }

    let dual = newton_dual(&config);
    let first = &lattice.points()[0];
    println!("Newton dual {dual}; {first} maps to {}", dual_point(first, &config));
}
