//! Macaulay2-style scripts for the ideal, the Gröbner basis and the
//! Alexander dual.

use veronese::ideal::{export_cas, CasObject};
use veronese::lattice::{Config, Lattice};

fn main() -> veronese::Result<()> {
    let lattice = Lattice::new(Config::new(3, 2, vec![1, 2, 2])?);
    for what in [CasObject::Ideal, CasObject::Groebner, CasObject::Dual] {
        println!("{}", export_cas(&lattice, what)?);
    }
    Ok(())
}
