//! The linear-quotient order on maximal cliques and its verification.
//!
//! Cliques are ordered by class rank, equal-rank classes are kept contiguous
//! (ties broken by a declared [`TieBreak`]), and inside a class the order is
//! lexicographic in the relative signature with respect to the marked
//! representative `L`.
//!
//! For a clique `A` the colon ideal `<T_{B^c} : B < A> : T_{A^c}` is generated
//! by the monomials `prod_{v in A \ B} T_v`. Since every such monomial is
//! supported on `A`, it is recorded as a bitmask over chain positions, and the
//! minimal generators are found by plain subset comparison.

use std::cmp::Reverse;
use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::cliques::{equivalence_classes, EquivalenceClass, MaximalClique, Signature};
use crate::error::{Error, Result};
use crate::lattice::Lattice;

/// How equal-rank classes are arranged relative to each other.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TieBreak {
    /// Lex-descending first tuple.
    #[default]
    FirstLex,
    /// Lex-ascending last tuple.
    LastLex,
}

impl TieBreak {
    pub const ALL: [TieBreak; 2] = [TieBreak::FirstLex, TieBreak::LastLex];

    pub fn name(self) -> &'static str {
        match self {
            TieBreak::FirstLex => "first-lex",
            TieBreak::LastLex => "last-lex",
        }
    }
}

impl fmt::Display for TieBreak {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TieBreak {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "first-lex" => Ok(TieBreak::FirstLex),
            "last-lex" => Ok(TieBreak::LastLex),
            other => Err(Error::Argument(format!("unknown tie-break rule {other:?}"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct OrderEntry {
    /// Position in [`crate::cliques::enumerate_maximal_cliques`] output.
    pub id: usize,
    /// Index into [`CliqueOrder::classes`].
    pub class: usize,
    pub rank: u64,
    pub clique: MaximalClique,
    pub relative_signature: Signature,
    /// Vertex ids of the chain, in chain order.
    pub chain_ids: Vec<usize>,
}

/// A total order on all maximal cliques.
#[derive(Debug, Clone)]
pub struct CliqueOrder {
    tie_break: TieBreak,
    classes: Vec<EquivalenceClass>,
    entries: Vec<OrderEntry>,
}

impl CliqueOrder {
    pub fn build(lattice: &Lattice, tie_break: TieBreak) -> Result<Self> {
        Self::from_classes(lattice, equivalence_classes(lattice)?, tie_break)
    }

    /// Orders already-enumerated classes (as returned by
    /// [`equivalence_classes`]).
    pub fn from_classes(lattice: &Lattice, classes: Vec<EquivalenceClass>, tie_break: TieBreak) -> Result<Self> {
        let mut offsets = Vec::with_capacity(classes.len());
        let mut total = 0;
        for c in &classes {
            offsets.push(total);
            total += c.size();
        }
        let mut class_order: Vec<usize> = (0..classes.len()).collect();
        match tie_break {
            TieBreak::FirstLex => class_order.sort_by_key(|&i| (classes[i].rank, Reverse(classes[i].first.clone()))),
            TieBreak::LastLex => class_order.sort_by_key(|&i| (classes[i].rank, classes[i].last.clone())),
        }
        let mut entries = Vec::with_capacity(total);
        for ci in class_order {
            let class = &classes[ci];
            for (k, clique) in class.members.iter().enumerate() {
                entries.push(OrderEntry {
                    id: offsets[ci] + k,
                    class: ci,
                    rank: class.rank,
                    clique: clique.clone(),
                    relative_signature: class.relative_signature(clique)?,
                    chain_ids: clique.chain_ids(lattice)?,
                });
            }
        }
        Ok(CliqueOrder { tie_break, classes, entries })
    }

    pub fn tie_break(&self) -> TieBreak {
        self.tie_break
    }

    pub fn classes(&self) -> &[EquivalenceClass] {
        &self.classes
    }

    /// The cliques, first to last.
    pub fn entries(&self) -> &[OrderEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn position_of(&self, clique: &MaximalClique) -> Option<usize> {
        self.entries.iter().position(|e| &e.clique == clique)
    }

    /// `omega(A)` for the clique at position `pos`: the number of earlier
    /// cliques `B` with `A \ B` a single vertex.
    pub fn omega(&self, pos: usize) -> usize {
        let a = &self.entries[pos].chain_ids;
        self.entries[..pos].iter().filter(|b| difference_mask(a, &sorted(&b.chain_ids)).count_ones() == 1).count()
    }
}

fn sorted(ids: &[usize]) -> Vec<usize> {
    let mut v = ids.to_vec();
    v.sort_unstable();
    v
}

/// Bit `i` set iff chain member `i` of `a` is missing from `b_sorted`.
fn difference_mask(a: &[usize], b_sorted: &[usize]) -> u64 {
    a.iter().enumerate().filter(|(_, v)| b_sorted.binary_search(v).is_err()).fold(0u64, |m, (i, _)| m | 1 << i)
}

/// Colon-ideal data for one clique.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuotientRecord {
    #[serde(rename = "clique")]
    pub id: usize,
    pub omega: usize,
    /// 1-based chain positions `i` such that `T_{a^i}` is a minimal generator.
    #[serde(skip)]
    pub witness_vertices: Vec<usize>,
    pub linear: bool,
    /// Predecessor count from the direct scan, for cross-checking `omega`.
    #[serde(skip)]
    pub singleton_predecessors: usize,
}

/// Per-clique colon-ideal data in order, with the top Betti summary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientReport {
    pub tie_break: TieBreak,
    pub records: Vec<QuotientRecord>,
}

impl QuotientReport {
    pub fn projective_dimension(&self) -> usize {
        self.records.iter().map(|r| r.omega).max().unwrap_or(0)
    }

    /// `(p, #{A : omega(A) = p})`.
    pub fn top_betti(&self) -> (usize, usize) {
        let p = self.projective_dimension();
        (p, self.records.iter().filter(|r| r.omega == p).count())
    }

    pub fn all_linear(&self) -> bool {
        self.records.iter().all(|r| r.linear)
    }
}

/// Computes the minimal generators of every successive colon ideal directly
/// from the monomials `prod_{v in A \ B} T_v`, without assuming linearity.
///
/// Only earlier cliques sharing a vertex with `A` can give anything but the
/// full product `T_A`, so each step walks the vertex-to-clique incidence lists
/// instead of every predecessor.
pub fn colon_records(order: &CliqueOrder) -> Result<Vec<QuotientRecord>> {
    let entries = order.entries();
    let n = entries.first().map_or(0, |e| e.chain_ids.len());
    if n > 64 {
        return Err(Error::Argument(format!("colon oracle supports n <= 64, got {n}")));
    }
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let vertices = entries.iter().flat_map(|e| e.chain_ids.iter().copied()).max().map_or(0, |v| v + 1);
    let mut incidence: Vec<Vec<usize>> = vec![Vec::new(); vertices];
    for (pos, e) in entries.iter().enumerate() {
        for &v in &e.chain_ids {
            incidence[v].push(pos);
        }
    }
    let records = (0..entries.len())
        .into_par_iter()
        .map_init(
            || (vec![0u64; entries.len()], Vec::new()),
            |(shared, touched), pos| {
                let a = &entries[pos].chain_ids;
                for (i, &v) in a.iter().enumerate() {
                    for &b in incidence[v].iter().take_while(|&&b| b < pos) {
                        if shared[b] == 0 {
                            touched.push(b);
                        }
                        shared[b] |= 1 << i;
                    }
                }
                let mut masks = MaskSet::new(n);
                if touched.len() < pos {
                    masks.insert(full);
                }
                let mut singles = 0;
                for &b in touched.iter() {
                    let m = full & !shared[b];
                    if m.count_ones() == 1 {
                        singles += 1;
                    }
                    masks.insert(m);
                    shared[b] = 0;
                }
                touched.clear();
                let masks = masks.into_vec();
                let minimal: Vec<u64> =
                    masks.iter().copied().filter(|&m| !masks.iter().any(|&o| o != m && o & m == o)).collect();
                let linear = minimal.iter().all(|m| m.count_ones() == 1);
                let mut witness: Vec<usize> =
                    minimal.iter().filter(|m| m.count_ones() == 1).map(|m| m.trailing_zeros() as usize + 1).collect();
                witness.sort_unstable();
                QuotientRecord {
                    id: entries[pos].id,
                    omega: minimal.len(),
                    witness_vertices: witness,
                    linear,
                    singleton_predecessors: singles,
                }
            },
        )
        .collect();
    Ok(records)
}

struct MaskSet {
    dense: Option<Vec<bool>>,
    sparse: HashSet<u64>,
}

impl MaskSet {
    fn new(n: usize) -> Self {
        if n <= 16 {
            MaskSet { dense: Some(vec![false; 1 << n]), sparse: HashSet::new() }
        } else {
            MaskSet { dense: None, sparse: HashSet::new() }
        }
    }

    fn insert(&mut self, m: u64) {
        match &mut self.dense {
            Some(bits) => bits[m as usize] = true,
            None => {
                self.sparse.insert(m);
            }
        }
    }

    fn into_vec(self) -> Vec<u64> {
        match self.dense {
            Some(bits) => bits.iter().enumerate().filter(|(_, &b)| b).map(|(m, _)| m as u64).collect(),
            None => self.sparse.into_iter().collect(),
        }
    }
}

/// Checks that every successive colon ideal is generated by variables, and
/// that the two ways of computing `omega` agree.
pub fn verify_linear_quotients(order: &CliqueOrder) -> Result<QuotientReport> {
    let records = colon_records(order)?;
    let n = order.entries().first().map_or(0, |e| e.chain_ids.len());
    for r in &records {
        if !r.linear {
            return Err(Error::TheoremViolation(format!(
                "colon ideal of clique {} under {} order has a generator of degree > 1",
                r.id, order.tie_break
            )));
        }
        if r.omega != r.singleton_predecessors || r.omega != r.witness_vertices.len() {
            return Err(Error::TheoremViolation(format!(
                "clique {}: omega {} but {} singleton predecessors",
                r.id, r.omega, r.singleton_predecessors
            )));
        }
        if r.witness_vertices.contains(&n) || r.omega + 1 > n.max(1) {
            return Err(Error::TheoremViolation(format!("clique {}: omega {} exceeds n - 1", r.id, r.omega)));
        }
    }
    Ok(QuotientReport { tie_break: order.tie_break, records })
}

pub fn projective_dimension(lattice: &Lattice, tie_break: TieBreak) -> Result<usize> {
    Ok(top_betti(lattice, tie_break)?.0)
}

/// The top total Betti number `(p, count)` of the Alexander dual ideal.
pub fn top_betti(lattice: &Lattice, tie_break: TieBreak) -> Result<(usize, usize)> {
    let order = CliqueOrder::build(lattice, tie_break)?;
    Ok(verify_linear_quotients(&order)?.top_betti())
}
