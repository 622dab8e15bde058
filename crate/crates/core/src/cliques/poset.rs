use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{Config, Point};

/// Precedence constraints among jump indices `1..=n-1` forced by the zero and
/// full coordinates of a class's first tuple.
///
/// `p ◁ q` means the `p`-jump has to happen before the `q`-jump in every
/// clique of the class. Stored transitively closed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionPoset {
    m: usize,
    // below[p * m + q] == p ◁ q, 0-based
    below: Vec<bool>,
}

impl ObstructionPoset {
    /// Builds the poset from generating relations given 1-based.
    pub fn from_relations(m: usize, relations: &[(usize, usize)]) -> Result<Self> {
        let mut below = vec![false; m * m];
        for &(p, q) in relations {
            if p == 0 || q == 0 || p > m || q > m {
                return Err(Error::Argument(format!("relation {p} ◁ {q} outside 1..={m}")));
            }
            below[(p - 1) * m + (q - 1)] = true;
        }
        for k in 0..m {
            for i in 0..m {
                if below[i * m + k] {
                    for j in 0..m {
                        if below[k * m + j] {
                            below[i * m + j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..m {
            if below[i * m + i] {
                return Err(Error::Internal(format!("obstruction relations are cyclic through {}", i + 1)));
            }
        }
        Ok(ObstructionPoset { m, below })
    }

    pub fn trivial(m: usize) -> Self {
        ObstructionPoset { m, below: vec![false; m * m] }
    }

    /// Number of elements, `n - 1`.
    pub fn size(&self) -> usize {
        self.m
    }

    /// `p ◁ q`, 1-based.
    pub fn precedes(&self, p: usize, q: usize) -> bool {
        self.below[(p - 1) * self.m + (q - 1)]
    }

    pub fn is_trivial(&self) -> bool {
        !self.below.iter().any(|&b| b)
    }

    /// All pairs `(p, q)` with `p ◁ q`, 1-based, in lexicographic order.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        let m = self.m;
        (1..=m).flat_map(|p| (1..=m).map(move |q| (p, q))).filter(|&(p, q)| self.precedes(p, q)).collect()
    }

    /// Cover relations of the closure.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.relations()
            .into_iter()
            .filter(|&(p, q)| !(1..=self.m).any(|r| self.precedes(p, r) && self.precedes(r, q)))
            .collect()
    }

    /// Whether value `p` appears before value `q` whenever `p ◁ q`.
    pub fn respects(&self, perm: &[usize]) -> bool {
        let m = self.m;
        if perm.len() != m {
            return false;
        }
        let mut pos = vec![usize::MAX; m];
        for (i, &v) in perm.iter().enumerate() {
            if v == 0 || v > m || pos[v - 1] != usize::MAX {
                return false;
            }
            pos[v - 1] = i;
        }
        self.relations().into_iter().all(|(p, q)| pos[p - 1] < pos[q - 1])
    }

    /// Every linear extension, in lexicographic order of the one-line words.
    pub fn linear_extensions(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut word = Vec::with_capacity(self.m);
        let mut used = vec![false; self.m];
        self.extend(&mut word, &mut used, &mut out);
        out
    }

    fn extend(&self, word: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if word.len() == self.m {
            out.push(word.clone());
            return;
        }
        for v in 1..=self.m {
            if used[v - 1] || (1..=self.m).any(|p| !used[p - 1] && self.precedes(p, v)) {
                continue;
            }
            used[v - 1] = true;
            word.push(v);
            self.extend(word, used, out);
            word.pop();
            used[v - 1] = false;
        }
    }

    /// Number of linear extensions, by dynamic programming over down-sets.
    pub fn count_linear_extensions(&self) -> u64 {
        let m = self.m;
        assert!(m < 32, "poset too large for subset DP");
        let preds: Vec<u32> =
            (1..=m).map(|q| (1..=m).filter(|&p| self.precedes(p, q)).fold(0u32, |acc, p| acc | 1 << (p - 1))).collect();
        let mut ways = vec![0u64; 1 << m];
        ways[0] = 1;
        for set in 0..(1u32 << m) {
            let w = ways[set as usize];
            if w == 0 {
                continue;
            }
            for (q, &pq) in preds.iter().enumerate() {
                if set & (1 << q) == 0 && pq & !set == 0 {
                    ways[(set | 1 << q) as usize] += w;
                }
            }
        }
        ways[(1usize << m) - 1]
    }

    /// The lexicographically smallest linear extension of the restriction to
    /// `window`, built greedily.
    pub fn greedy_extension(&self, window: &[usize]) -> Vec<usize> {
        let mut remaining: Vec<usize> = window.to_vec();
        remaining.sort_unstable();
        let mut out = Vec::with_capacity(remaining.len());
        while !remaining.is_empty() {
            let pick = remaining
                .iter()
                .position(|&v| !remaining.iter().any(|&p| self.precedes(p, v)))
                .expect("restriction of a poset has a minimal element");
            out.push(remaining.remove(pick));
        }
        out
    }
}

impl Serialize for ObstructionPoset {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.covers().serialize(s)
    }
}

/// The poset of obstructions of the class whose cliques start at `first`:
/// `(i-1) ◁ i` when `first_i = 0` and `i > 1`, and `(i+1) ◁ i` when
/// `first_{i+1} = alpha_{i+1}` and `i + 1 < n`.
pub fn obstruction_poset(first: &Point, config: &Config) -> Result<ObstructionPoset> {
    let n = config.n();
    let a = first.coords();
    let alpha = config.alpha();
    let mut rel = Vec::new();
    for i in 1..n {
        if a[i - 1] == 0 && i > 1 {
            rel.push((i - 1, i));
        }
        if a[i] == alpha[i] && i + 1 < n {
            rel.push((i + 1, i));
        }
    }
    ObstructionPoset::from_relations(n - 1, &rel)
}
