//! Algebraic artifacts: the generators of `I_{d,alpha}`, the quadratic
//! Gröbner basis of the presentation ideal, the generators of the Alexander
//! dual of its initial ideal, and a plain-text export for computer algebra
//! systems.
//!
//! Variables of the presentation ring are `T_i`, indexed by the global
//! lex-descending point id.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cliques::{enumerate_maximal_cliques, Graph};
use crate::error::{Error, Result};
use crate::lattice::{Config, Lattice, Point};
use crate::sorting::sort_pair;

/// `T_{lead.0} T_{lead.1} - T_{trail.0} T_{trail.1}`; the first monomial is
/// the leading term. Pairs hold point ids with the smaller id first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BinomialPair {
    pub lead: (usize, usize),
    pub trail: (usize, usize),
}

/// A minimal generator of the Alexander dual: the product of `T_i` over
/// `support`, the complement of one maximal clique.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DualGenerator {
    pub support: Vec<usize>,
}

impl DualGenerator {
    pub fn degree(&self) -> usize {
        self.support.len()
    }
}

/// The minimal monomial generators of `I_{d,alpha}`, lex-descending.
pub fn generators_i(lattice: &Lattice) -> Vec<Point> {
    lattice.points().to_vec()
}

/// One binomial per unsorted pair of distinct points.
pub fn groebner_pairs(lattice: &Lattice) -> Result<Vec<BinomialPair>> {
    let points = lattice.points();
    let mut out = Vec::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let (hi, lo) = sort_pair(&points[i], &points[j])?;
            if hi == points[i] && lo == points[j] {
                continue;
            }
            let a = lattice.require_id(&hi)?;
            let b = lattice.require_id(&lo)?;
            out.push(BinomialPair { lead: (i, j), trail: (a.min(b), a.max(b)) });
        }
    }
    Ok(out)
}

/// One generator per maximal clique, in clique enumeration order.
pub fn alexander_dual_generators(lattice: &Lattice) -> Result<Vec<DualGenerator>> {
    let t = lattice.len();
    enumerate_maximal_cliques(lattice)?
        .iter()
        .map(|c| {
            let mut in_clique = vec![false; t];
            for id in c.chain_ids(lattice)? {
                in_clique[id] = true;
            }
            Ok(DualGenerator { support: (0..t).filter(|&v| !in_clique[v]).collect() })
        })
        .collect()
}

/// Whether `cover` meets every edge of the complement of `graph`, and stops
/// doing so when any single vertex is removed.
pub fn is_minimal_complement_cover(graph: &Graph, cover: &[usize]) -> bool {
    let t = graph.vertex_count();
    let mut inside = vec![false; t];
    for &v in cover {
        inside[v] = true;
    }
    let non_edges = graph.non_edges();
    if !non_edges.iter().all(|&(a, b)| inside[a] || inside[b]) {
        return false;
    }
    // v is removable iff all of its complement-neighbours are in the cover
    cover.iter().all(|&v| non_edges.iter().any(|&(a, b)| (a == v && !inside[b]) || (b == v && !inside[a])))
}

/// Which object [`export_cas`] writes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CasObject {
    Ideal,
    Groebner,
    Dual,
}

impl FromStr for CasObject {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ideal" => Ok(CasObject::Ideal),
            "groebner" => Ok(CasObject::Groebner),
            "dual" => Ok(CasObject::Dual),
            other => Err(Error::Argument(format!("unknown export object {other:?}"))),
        }
    }
}

fn monomial_x(p: &Point) -> String {
    let factors: Vec<String> = p
        .coords()
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(i, &c)| if c == 1 { format!("x_{}", i + 1) } else { format!("x_{}^{c}", i + 1) })
        .collect();
    if factors.is_empty() {
        "1".into()
    } else {
        factors.join("*")
    }
}

fn join_lines(items: &[String]) -> String {
    items.iter().map(|s| format!("    {s}")).collect::<Vec<_>>().join(",\n")
}

/// A Macaulay2-style script declaring the rings and the requested ideal.
pub fn export_cas(lattice: &Lattice, what: CasObject) -> Result<String> {
    let config: &Config = lattice.config();
    let n = config.n();
    let t = lattice.len();
    let mut out = String::new();
    let alpha: Vec<String> = config.alpha().iter().map(u32::to_string).collect();
    writeln!(out, "-- n = {n}, d = {}, alpha = ({})", config.d(), alpha.join(",")).expect("string write");
    writeln!(out, "S = QQ[x_1..x_{n}];").expect("string write");
    match what {
        CasObject::Ideal => {
            let gens: Vec<String> = lattice.points().iter().map(monomial_x).collect();
            writeln!(out, "I = ideal(\n{}\n);", join_lines(&gens)).expect("string write");
        }
        CasObject::Groebner | CasObject::Dual => {
            for (i, p) in lattice.points().iter().enumerate() {
                writeln!(out, "-- T_{i} = {}", monomial_x(p)).expect("string write");
            }
            writeln!(out, "R = QQ[T_0..T_{}];", t - 1).expect("string write");
            if what == CasObject::Groebner {
                let pairs = groebner_pairs(lattice)?;
                let binomials: Vec<String> = pairs
                    .iter()
                    .map(|b| format!("T_{}*T_{} - T_{}*T_{}", b.lead.0, b.lead.1, b.trail.0, b.trail.1))
                    .collect();
                let leads: Vec<String> = pairs.iter().map(|b| format!("T_{}*T_{}", b.lead.0, b.lead.1)).collect();
                writeln!(out, "J = ideal(\n{}\n);", join_lines(&binomials)).expect("string write");
                // leading terms under the sorting order, which need not match
                // the CAS's default monomial order
                writeln!(out, "inJ = monomialIdeal(\n{}\n);", join_lines(&leads)).expect("string write");
            } else {
                let gens: Vec<String> = alexander_dual_generators(lattice)?
                    .iter()
                    .map(|g| g.support.iter().map(|v| format!("T_{v}")).collect::<Vec<_>>().join("*"))
                    .map(|m| if m.is_empty() { "1".to_string() } else { m })
                    .collect();
                writeln!(out, "D = monomialIdeal(\n{}\n);", join_lines(&gens)).expect("string write");
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sorting::is_sorted_pair;

    fn lattice(n: usize, d: u32, alpha: &[u32]) -> Lattice {
        Lattice::new(Config::new(n, d, alpha.to_vec()).unwrap())
    }

    fn product(a: &Point, b: &Point) -> Vec<u32> {
        a.coords().iter().zip(b.coords()).map(|(x, y)| x + y).collect()
    }

    #[test]
    fn binomials_are_relations() {
        let lat = lattice(4, 4, &[2, 2, 3, 3]);
        for b in groebner_pairs(&lat).unwrap() {
            let (l0, l1) = (lat.point(b.lead.0), lat.point(b.lead.1));
            let (t0, t1) = (lat.point(b.trail.0), lat.point(b.trail.1));
            assert_eq!(product(l0, l1), product(t0, t1));
            assert!(!is_sorted_pair(l0, l1));
            assert!(is_sorted_pair(t0, t1));
        }
    }

    #[test]
    fn lead_terms_are_the_complement_edges() {
        let lat = lattice(4, 5, &[1, 2, 3, 4]);
        let graph = Graph::build(&lat);
        let leads: Vec<(usize, usize)> = groebner_pairs(&lat).unwrap().into_iter().map(|b| b.lead).collect();
        assert_eq!(leads, graph.non_edges());
        let t = lat.len();
        assert_eq!(leads.len() + graph.edge_count(), t * (t - 1) / 2);
    }

    #[test]
    fn dual_generators_are_minimal_covers() {
        let lat = lattice(4, 4, &[2, 2, 2, 2]);
        let graph = Graph::build(&lat);
        let gens = alexander_dual_generators(&lat).unwrap();
        assert!(!gens.is_empty());
        for g in &gens {
            assert_eq!(g.degree(), lat.len() - 4);
            assert!(is_minimal_complement_cover(&graph, &g.support));
        }
    }

    #[test]
    fn large_example_sizes() {
        let lat = lattice(5, 7, &[1, 4, 4, 5, 7]);
        assert_eq!(generators_i(&lat).len(), 171);
        let gens = alexander_dual_generators(&lat).unwrap();
        assert_eq!(gens.len(), 960);
        assert!(gens.iter().all(|g| g.degree() == 166));
    }

    #[test]
    fn json_round_trip() {
        let lat = lattice(3, 2, &[1, 2, 2]);
        let gens = generators_i(&lat);
        let text = serde_json::to_string(&gens).unwrap();
        let back: Vec<Point> = serde_json::from_str(&text).unwrap();
        assert_eq!(back, gens);
        let pairs = groebner_pairs(&lat).unwrap();
        let back: Vec<BinomialPair> = serde_json::from_str(&serde_json::to_string(&pairs).unwrap()).unwrap();
        assert_eq!(back, pairs);
    }

    #[test]
    fn export_shapes() {
        let lat = lattice(3, 2, &[2, 2, 2]);
        let ideal = export_cas(&lat, CasObject::Ideal).unwrap();
        assert!(ideal.contains("S = QQ[x_1..x_3];"));
        assert!(ideal.contains("    x_1^2,\n    x_1*x_2,"));
        let groebner = export_cas(&lat, CasObject::Groebner).unwrap();
        assert!(groebner.contains("-- T_0 = x_1^2"));
        // (2,0,0)(0,2,0) -> (1,1,0)(1,1,0)
        assert!(groebner.contains("T_0*T_3 - T_1*T_1"));
        let dual = export_cas(&lat, CasObject::Dual).unwrap();
        let body = &dual[dual.find("D = monomialIdeal(").unwrap()..];
        // four cliques, each complement has 6 - 3 variables
        assert_eq!(body.lines().count() - 2, 4);
        assert_eq!(body.matches("T_").count(), 4 * 3);
    }
}
