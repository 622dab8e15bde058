//! Sortable subsets of Veronese-type lattice points, the maximal cliques of
//! their sortedness graph, and the invariants of the associated toric ring.

pub mod cli;
pub mod cliques;
pub mod error;
pub mod ideal;
pub mod invariants;
pub mod lattice;
pub mod order;
pub mod sorting;
pub mod sweep;

pub use error::{ConfigError, Error, Result};
pub use lattice::{Config, Lattice, Point};
