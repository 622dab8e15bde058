use crate::lattice::{Lattice, Point};
use crate::sorting::is_sorted_pair;

/// Fixed-width bitset over vertex ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSet {
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(len: usize) -> Self {
        VertexSet { words: vec![0; len.div_ceil(64)] }
    }

    pub fn full(len: usize) -> Self {
        let mut s = Self::empty(len);
        for v in 0..len {
            s.insert(v);
        }
        s
    }

    pub fn insert(&mut self, v: usize) {
        self.words[v / 64] |= 1 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        self.words[v / 64] &= !(1 << (v % 64));
    }

    pub fn contains(&self, v: usize) -> bool {
        self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn intersection(&self, other: &Self) -> Self {
        VertexSet { words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect() }
    }

    pub fn difference(&self, other: &Self) -> Self {
        VertexSet { words: self.words.iter().zip(&other.words).map(|(a, b)| a & !b).collect() }
    }

    pub fn union(&self, other: &Self) -> Self {
        VertexSet { words: self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect() }
    }

    pub fn intersection_count(&self, other: &Self) -> usize {
        self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            })
        })
    }
}

/// The sortedness graph: vertices are the points of `V_{n,d}^alpha` (by
/// lex-descending id), `{a, b}` is an edge iff `a != b` and the pair is sorted.
#[derive(Debug, Clone)]
pub struct Graph {
    points: Vec<Point>,
    adjacency: Vec<VertexSet>,
}

impl Graph {
    pub fn build(lattice: &Lattice) -> Self {
        let points = lattice.points().to_vec();
        let t = points.len();
        let mut adjacency = vec![VertexSet::empty(t); t];
        for i in 0..t {
            for j in i + 1..t {
                if is_sorted_pair(&points[i], &points[j]) {
                    adjacency[i].insert(j);
                    adjacency[j].insert(i);
                }
            }
        }
        Graph { points, adjacency }
    }

    /// An abstract graph on `len` vertices; the points are left empty.
    pub fn from_edges(len: usize, edges: &[(usize, usize)]) -> Self {
        let mut adjacency = vec![VertexSet::empty(len); len];
        for &(a, b) in edges {
            if a != b {
                adjacency[a].insert(b);
                adjacency[b].insert(a);
            }
        }
        Graph { points: vec![Point::new(Vec::new()); len], adjacency }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn point(&self, v: usize) -> &Point {
        &self.points[v]
    }

    pub fn is_adjacent(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].contains(b)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adjacency[v]
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(VertexSet::count).sum::<usize>() / 2
    }

    /// Edges of the complement graph as `(i, j)` with `i < j`.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let t = self.vertex_count();
        (0..t).flat_map(|i| (i + 1..t).map(move |j| (i, j))).filter(|&(i, j)| !self.is_adjacent(i, j)).collect()
    }
}

/// Every inclusion-maximal clique of `graph`, found by Bron–Kerbosch with
/// Tomita pivoting. Knows nothing about the lattice structure; each clique is
/// returned as a sorted vertex list and the family is sorted.
pub fn brute_force_cliques(graph: &Graph) -> Vec<Vec<usize>> {
    let t = graph.vertex_count();
    let mut out = Vec::new();
    if t == 0 {
        return out;
    }
    let mut r = Vec::new();
    bron_kerbosch(graph, &mut r, VertexSet::full(t), VertexSet::empty(t), &mut out);
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    out
}

fn bron_kerbosch(graph: &Graph, r: &mut Vec<usize>, mut p: VertexSet, mut x: VertexSet, out: &mut Vec<Vec<usize>>) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r.clone());
        }
        return;
    }
    let pivot = p.union(&x).iter().max_by_key(|&u| p.intersection_count(graph.neighbors(u))).expect("P is non-empty");
    let candidates: Vec<usize> = p.difference(graph.neighbors(pivot)).iter().collect();
    for v in candidates {
        let nv = graph.neighbors(v);
        r.push(v);
        bron_kerbosch(graph, r, p.intersection(nv), x.intersection(nv), out);
        r.pop();
        p.remove(v);
        x.insert(v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Config;

    #[test]
    fn complete_graph_has_one_clique() {
        let edges: Vec<(usize, usize)> = (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect();
        assert_eq!(brute_force_cliques(&Graph::from_edges(5, &edges)), vec![vec![0, 1, 2, 3, 4]]);
    }

    #[test]
    fn small_abstract_graph() {
        // a 4-cycle plus a chord and an isolated vertex
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]);
        assert_eq!(brute_force_cliques(&g), vec![vec![0, 1, 2], vec![0, 2, 3], vec![4]]);
    }

    #[test]
    fn sortedness_graph_basics() {
        let lattice = Lattice::new(Config::new(5, 8, vec![2, 2, 2, 3, 3]).unwrap());
        let g = Graph::build(&lattice);
        for v in 0..g.vertex_count() {
            assert!(!g.is_adjacent(v, v));
        }
        let a = lattice.id_of(&Point::from([1, 1, 1, 3, 2])).unwrap();
        let b = lattice.id_of(&Point::from([0, 2, 1, 3, 2])).unwrap();
        assert!(g.is_adjacent(a, b));
        let t = g.vertex_count();
        assert_eq!(g.edge_count() + g.non_edges().len(), t * (t - 1) / 2);
    }

    #[test]
    fn vertex_set_ops() {
        let mut s = VertexSet::empty(130);
        s.insert(3);
        s.insert(64);
        s.insert(129);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![3, 64, 129]);
        assert_eq!(s.count(), 3);
        s.remove(64);
        assert!(!s.contains(64));
        assert_eq!(VertexSet::full(70).count(), 70);
    }
}
