//! Maximal cliques of the sortedness graph.
//!
//! Every maximal clique is a chain `a^1 >_lex ... >_lex a^n` in which
//! consecutive members differ by a single jump `a -> a - e_s + e_{s+1}`, and the
//! jump indices `(s_1, ..., s_{n-1})` form a permutation, the clique's
//! signature. Cliques sharing `a^1` form an equivalence class; within a class
//! the realizable signatures are exactly the linear extensions of the class's
//! obstruction poset. Enumeration therefore walks start tuples and linear
//! extensions instead of searching the graph; [`brute_force_cliques`] is the
//! independent check.

mod graph;
mod poset;

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lattice::{Config, Lattice, Point};

pub use graph::{brute_force_cliques, Graph, VertexSet};
pub use poset::{obstruction_poset, ObstructionPoset};

/// A permutation of `1..=n-1` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature(Vec<usize>);

impl Signature {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let m = values.len();
        let mut seen = vec![false; m];
        for &v in &values {
            if v == 0 || v > m || seen[v - 1] {
                return Err(Error::Argument(format!("{values:?} is not a permutation of 1..={m}")));
            }
            seen[v - 1] = true;
        }
        Ok(Signature(values))
    }

    pub fn identity(m: usize) -> Self {
        Signature((1..=m).collect())
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// 0-based position of `value`.
    pub fn position(&self, value: usize) -> Option<usize> {
        self.0.iter().position(|&v| v == value)
    }

    /// The signature with entries `k` and `k + 1` (0-based) exchanged.
    pub fn swapped(&self, k: usize) -> Signature {
        let mut v = self.0.clone();
        v.swap(k, k + 1);
        Signature(v)
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Signature {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// An ordered maximal clique `(a^1, ..., a^n)` with its signature.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MaximalClique {
    pub chain: Vec<Point>,
    pub signature: Signature,
}

impl MaximalClique {
    pub fn first(&self) -> &Point {
        &self.chain[0]
    }

    pub fn last(&self) -> &Point {
        self.chain.last().expect("cliques are non-empty")
    }

    /// Vertex ids of the chain members, in chain order.
    pub fn chain_ids(&self, lattice: &Lattice) -> Result<Vec<usize>> {
        self.chain.iter().map(|p| lattice.require_id(p)).collect()
    }
}

/// The `s`-jump `a - e_s + e_{s+1}` (1-based `s`), if it stays inside
/// `V_{n,d}^alpha`.
pub fn apply_jump(a: &Point, s: usize, config: &Config) -> Result<Option<Point>> {
    let n = config.n();
    if s == 0 || s >= n {
        return Err(Error::Argument(format!("jump index {s} outside 1..={}", n - 1)));
    }
    Ok(jump(a, s, config.alpha()))
}

fn jump(a: &Point, s: usize, alpha: &[u32]) -> Option<Point> {
    let c = a.coords();
    if c[s - 1] == 0 || c[s] >= alpha[s] {
        return None;
    }
    let mut next = c.to_vec();
    next[s - 1] -= 1;
    next[s] += 1;
    Some(Point(next))
}

/// Points with `a_1 >= 1` and `a_n <= alpha_n - 1`, lex-descending. These are
/// exactly the first members of maximal cliques.
pub fn start_tuples(lattice: &Lattice) -> Vec<Point> {
    let n = lattice.n();
    let alpha_n = lattice.config().alpha()[n - 1];
    lattice.points().iter().filter(|p| p.coords()[0] >= 1 && p.coords()[n - 1] < alpha_n).cloned().collect()
}

pub fn is_start_tuple(p: &Point, config: &Config) -> bool {
    let n = config.n();
    config.contains(p) && p.coords()[0] >= 1 && p.coords()[n - 1] < config.alpha()[n - 1]
}

pub fn is_legitimate_signature(sig: &Signature, poset: &ObstructionPoset) -> bool {
    poset.respects(sig.values())
}

/// Applies the jumps `s_1, ..., s_{n-1}` to `first`; `None` as soon as one of
/// them leaves `V_{n,d}^alpha`.
pub fn clique_from_signature(first: &Point, sig: &Signature, config: &Config) -> Option<MaximalClique> {
    if sig.len() + 1 != config.n() || !config.contains(first) {
        return None;
    }
    let mut chain = Vec::with_capacity(config.n());
    chain.push(first.clone());
    for &s in sig.values() {
        let next = jump(chain.last().expect("non-empty"), s, config.alpha())?;
        chain.push(next);
    }
    Some(MaximalClique { chain, signature: sig.clone() })
}

/// `sgn_tau(A)`: the 1-based positions in `tau` of the entries of `sgn(A)`.
pub fn relative_signature(sig: &Signature, tau: &Signature) -> Result<Signature> {
    let values = sig
        .values()
        .iter()
        .map(|&k| tau.position(k).map(|p| p + 1).ok_or_else(|| Error::Argument(format!("{k} does not occur in {tau}"))))
        .collect::<Result<Vec<_>>>()?;
    Signature::new(values)
}

/// The root `rA = (a^2, ..., a^n, a^{n+1})` with `a^{n+1} = a^2 - e_1 + e_n`,
/// when that point lies in `V_{n,d}^alpha`.
pub fn root(clique: &MaximalClique, config: &Config) -> Option<MaximalClique> {
    let n = config.n();
    let second = clique.chain.get(1)?;
    let c = second.coords();
    if c[0] == 0 || c[n - 1] >= config.alpha()[n - 1] {
        return None;
    }
    let mut next = c.to_vec();
    next[0] -= 1;
    next[n - 1] += 1;
    let mut chain: Vec<Point> = clique.chain[1..].to_vec();
    chain.push(Point(next));
    let mut sig = clique.signature.values()[1..].to_vec();
    sig.push(clique.signature.values()[0]);
    Some(MaximalClique { chain, signature: Signature(sig) })
}

/// The `kappa_1` / `kappa_2` indices of a first tuple, with the sentinels `0`
/// and `n + 1` when they are undefined.
pub fn kappas(first: &Point, config: &Config) -> (usize, usize) {
    let n = config.n();
    let a = first.coords();
    let alpha = config.alpha();
    let kappa1 = if a[0] == 1 {
        let mut k = 1;
        while k < n - 1 && a[k] == 0 {
            k += 1;
        }
        k
    } else {
        0
    };
    let kappa2 = if a[n - 1] + 1 == alpha[n - 1] {
        let mut k = n;
        while k > 2 && a[k - 2] == alpha[k - 2] {
            k -= 1;
        }
        k
    } else {
        n + 1
    };
    (kappa1, kappa2)
}

/// The signature of the marked representative `L` of a class: a prefix over
/// the window `kappa_1 + 1 ..= kappa_2 - 2`, then `n-1, n-2, ..., kappa_2 - 1`,
/// then `1, 2, ..., kappa_1`. The prefix is the greedy lex-smallest linear
/// extension of the poset restricted to the window.
pub fn marked_l(first: &Point, poset: &ObstructionPoset, config: &Config) -> Result<Signature> {
    let n = config.n();
    let (k1, k2) = kappas(first, config);
    if k1 >= k2 {
        return Err(Error::Internal(format!("kappa_1 = {k1} >= kappa_2 = {k2} for {first}")));
    }
    let mut values = Vec::with_capacity(n - 1);
    if k1 + 1 < k2 {
        let window: Vec<usize> = (k1 + 1..=k2.saturating_sub(2)).collect();
        values.extend(poset.greedy_extension(&window));
        values.extend((k2 - 1..n).rev());
    } else {
        values.extend((k2..n).rev());
    }
    values.extend(1..=k1);
    let sig = Signature::new(values)?;
    if !is_legitimate_signature(&sig, poset) {
        return Err(Error::Internal(format!("marked signature {sig} is not legitimate for {first}")));
    }
    Ok(sig)
}

/// All cliques starting at `first` sharing the same last member.
#[derive(Debug, Clone)]
pub struct EquivalenceClass {
    pub first: Point,
    pub last: Point,
    pub poset: ObstructionPoset,
    pub kappa1: usize,
    pub kappa2: usize,
    /// `tau = sgn(L)`
    pub marked_l: Signature,
    pub rank: u64,
    /// Members sorted by relative signature, i.e. in the within-class order.
    pub members: Vec<MaximalClique>,
}

impl EquivalenceClass {
    /// Builds the class of `first`, which must be a start tuple.
    pub fn new(first: &Point, lattice: &Lattice) -> Result<Self> {
        let config = lattice.config();
        if !is_start_tuple(first, config) {
            return Err(Error::Argument(format!("{first} is not a start tuple of {config}")));
        }
        let n = config.n();
        let poset = obstruction_poset(first, config)?;
        let (kappa1, kappa2) = kappas(first, config);
        let tau = marked_l(first, &poset, config)?;
        let mut last = first.coords().to_vec();
        last[0] -= 1;
        last[n - 1] += 1;
        let last = Point(last);
        let rank = lattice.rank(&last);

        let mut keyed = Vec::new();
        for word in poset.linear_extensions() {
            let sig = Signature(word);
            let clique = clique_from_signature(first, &sig, config)
                .ok_or_else(|| Error::Internal(format!("legitimate signature {sig} has no clique from {first}")))?;
            if clique.last() != &last {
                return Err(Error::Internal(format!("clique {sig} from {first} ends at {}", clique.last())));
            }
            keyed.push((relative_signature(&sig, &tau)?, clique));
        }
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        let members = keyed.into_iter().map(|(_, c)| c).collect();

        Ok(EquivalenceClass { first: first.clone(), last, poset, kappa1, kappa2, marked_l: tau, rank, members })
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn relative_signature(&self, clique: &MaximalClique) -> Result<Signature> {
        relative_signature(&clique.signature, &self.marked_l)
    }

    /// Whether the class has all `(n - 1)!` signatures.
    pub fn is_full(&self) -> bool {
        self.poset.is_trivial()
    }

    pub fn summary(&self) -> ClassSummary {
        ClassSummary {
            first: self.first.clone(),
            last: self.last.clone(),
            kappa: [self.kappa1, self.kappa2],
            l: self.marked_l.clone(),
            rank: self.rank,
            size: self.size(),
        }
    }
}

/// JSON view of an [`EquivalenceClass`].
#[derive(Debug, Clone, Serialize)]
pub struct ClassSummary {
    pub first: Point,
    pub last: Point,
    pub kappa: [usize; 2],
    #[serde(rename = "L")]
    pub l: Signature,
    pub rank: u64,
    pub size: usize,
}

/// One class per start tuple, in lex-descending order of the first tuple.
pub fn equivalence_classes(lattice: &Lattice) -> Result<Vec<EquivalenceClass>> {
    start_tuples(lattice).iter().map(|first| EquivalenceClass::new(first, lattice)).collect()
}

/// Every maximal clique: classes in lex-descending order of the first tuple,
/// members in within-class order.
pub fn enumerate_maximal_cliques(lattice: &Lattice) -> Result<Vec<MaximalClique>> {
    Ok(equivalence_classes(lattice)?.into_iter().flat_map(|c| c.members).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Config;
    use crate::sorting::{delta, sort_many};

    fn p(c: &[u32]) -> Point {
        Point::new(c.to_vec())
    }

    fn sig(v: &[usize]) -> Signature {
        Signature::new(v.to_vec()).unwrap()
    }

    fn example_lattice() -> Lattice {
        Lattice::new(Config::new(5, 8, vec![2, 2, 2, 3, 3]).unwrap())
    }

    #[test]
    fn jumps() {
        let cfg = Config::new(5, 8, vec![2, 2, 2, 3, 3]).unwrap();
        let a = p(&[1, 1, 1, 3, 2]);
        assert_eq!(apply_jump(&a, 1, &cfg).unwrap(), Some(p(&[0, 2, 1, 3, 2])));
        // a_4 = alpha_4 blocks the 3-jump
        assert_eq!(apply_jump(&a, 3, &cfg).unwrap(), None);
        assert_eq!(apply_jump(&p(&[0, 2, 1, 3, 2]), 1, &cfg).unwrap(), None);
        assert!(apply_jump(&a, 0, &cfg).is_err());
        assert!(apply_jump(&a, 5, &cfg).is_err());
        for s in 1..5 {
            if let Some(b) = apply_jump(&a, s, &cfg).unwrap() {
                assert_eq!(delta(&a, &b).unwrap().unwrap().intervals(), &[(s, s + 1)]);
            }
        }
    }

    #[test]
    fn start_tuples_with_unit_caps() {
        let lattice = Lattice::new(Config::new(4, 3, vec![1, 1, 1, 1]).unwrap());
        let starts = start_tuples(&lattice);
        let expected: Vec<Point> =
            lattice.points().iter().filter(|q| q.coords()[0] == 1 && q.coords()[3] == 0).cloned().collect();
        assert_eq!(starts, expected);
        assert_eq!(starts, vec![p(&[1, 1, 1, 0])]);
    }

    #[test]
    fn example_class_l_and_chain() {
        let lattice = example_lattice();
        let cfg = lattice.config();
        let first = p(&[1, 1, 1, 3, 2]);
        let b = clique_from_signature(&first, &sig(&[1, 4, 2, 3]), cfg).unwrap();
        assert_eq!(
            b.chain,
            vec![
                p(&[1, 1, 1, 3, 2]),
                p(&[0, 2, 1, 3, 2]),
                p(&[0, 2, 1, 2, 3]),
                p(&[0, 1, 2, 2, 3]),
                p(&[0, 1, 1, 3, 3])
            ]
        );
        let l = clique_from_signature(&first, &sig(&[2, 4, 3, 1]), cfg).unwrap();
        assert_eq!(
            l.chain,
            vec![
                p(&[1, 1, 1, 3, 2]),
                p(&[1, 0, 2, 3, 2]),
                p(&[1, 0, 2, 2, 3]),
                p(&[1, 0, 1, 3, 3]),
                p(&[0, 1, 1, 3, 3])
            ]
        );
        assert_eq!(kappas(&first, cfg), (1, 4));
        let class = EquivalenceClass::new(&first, &lattice).unwrap();
        assert_eq!(class.marked_l, sig(&[2, 4, 3, 1]));
        assert_eq!(class.size(), 12);
        assert_eq!(relative_signature(&sig(&[1, 4, 2, 3]), &class.marked_l).unwrap(), sig(&[4, 2, 1, 3]));
        assert_eq!(relative_signature(&class.marked_l, &class.marked_l).unwrap(), Signature::identity(4));
    }

    #[test]
    fn illegitimate_signature_fails_to_build() {
        let lattice = example_lattice();
        let first = p(&[1, 1, 1, 3, 2]);
        let poset = obstruction_poset(&first, lattice.config()).unwrap();
        assert!(!is_legitimate_signature(&sig(&[2, 1, 3, 4]), &poset));
        assert!(clique_from_signature(&first, &sig(&[2, 1, 3, 4]), lattice.config()).is_none());
    }

    #[test]
    fn builds_succeed_exactly_on_legitimate_signatures() {
        let lattice = example_lattice();
        let cfg = lattice.config();
        for first in start_tuples(&lattice) {
            let poset = obstruction_poset(&first, cfg).unwrap();
            let legit = poset.linear_extensions();
            let mut built = 0;
            for word in all_perms(4) {
                let s = sig(&word);
                let ok = clique_from_signature(&first, &s, cfg).is_some();
                assert_eq!(ok, is_legitimate_signature(&s, &poset), "{first} {s}");
                built += usize::from(ok);
            }
            assert_eq!(built, legit.len());
            assert_eq!(poset.count_linear_extensions() as usize, legit.len());
        }
    }

    fn all_perms(m: usize) -> Vec<Vec<usize>> {
        ObstructionPoset::trivial(m).linear_extensions()
    }

    #[test]
    fn kappa_sentinels() {
        let cfg = Config::new(5, 8, vec![2, 2, 2, 3, 3]).unwrap();
        // a_1 > 1 leaves kappa_1 undefined, a_n < alpha_n - 1 leaves kappa_2 undefined
        assert_eq!(kappas(&p(&[2, 2, 2, 2, 0]), &cfg), (0, 6));
        assert_eq!(kappas(&p(&[1, 0, 0, 3, 2]), &Config::new(5, 6, vec![1, 1, 2, 3, 3]).unwrap()), (3, 4));
        let lattice = example_lattice();
        for class in equivalence_classes(&lattice).unwrap() {
            assert!(is_legitimate_signature(&class.marked_l, &class.poset));
            if class.kappa1 == 0 {
                assert!(class.first.coords()[0] > 1);
            }
        }
    }

    #[test]
    fn example_class_members_are_cliques() {
        let lattice = example_lattice();
        let classes = equivalence_classes(&lattice).unwrap();
        for class in &classes {
            for c in &class.members {
                assert!(c.chain.windows(2).all(|w| w[0] > w[1]));
                assert_eq!(sort_many(&c.chain).unwrap(), c.chain);
                let d = delta(c.first(), c.last()).unwrap().unwrap();
                assert_eq!(d.intervals(), &[(1, 5)]);
                for (i, w) in c.chain.windows(2).enumerate() {
                    let s = c.signature.values()[i];
                    assert_eq!(delta(&w[0], &w[1]).unwrap().unwrap().intervals(), &[(s, s + 1)]);
                }
            }
        }
        assert_eq!(classes.iter().filter(|c| c.rank == 0).count(), 1);
        let zero = classes.iter().find(|c| c.rank == 0).unwrap();
        assert_eq!(&zero.last, lattice.eta());
    }

    #[test]
    fn root_of_example_clique_a_does_not_exist() {
        let lattice = example_lattice();
        let a = clique_from_signature(&p(&[1, 1, 1, 3, 2]), &sig(&[1, 2, 4, 3]), lattice.config()).unwrap();
        assert_eq!(a.chain[1], p(&[0, 2, 1, 3, 2]));
        assert!(root(&a, lattice.config()).is_none());
    }

    #[test]
    fn rejects_non_start_tuple() {
        let lattice = example_lattice();
        assert!(EquivalenceClass::new(&p(&[0, 2, 1, 3, 2]), &lattice).is_err());
        assert!(relative_signature(&sig(&[1, 2]), &sig(&[1, 2, 3])).is_ok());
        assert!(Signature::new(vec![1, 1, 2]).is_err());
    }
}
