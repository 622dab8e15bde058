//! The sorting operator on degree-`d` exponent vectors and sorting signature
//! sets.
//!
//! `sort(u_1, ..., u_p)` merges the index multisets of the `p` monomials into
//! `i_1 <= ... <= i_{pd}` and deals them round-robin: the `k`-th output gets
//! positions `k, p + k, ..., (d - 1)p + k`. Rather than materializing the
//! multiset we count, per variable, how many positions of each residue class
//! fall into that variable's block of the merged sequence.

use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lattice::{lex_compare, Point};

fn check_same_shape(points: &[&Point]) -> Result<()> {
    let first = points[0];
    for p in &points[1..] {
        if p.len() != first.len() {
            return Err(Error::Argument(format!("length mismatch: {first} vs {p}")));
        }
        if p.degree() != first.degree() {
            return Err(Error::Argument(format!("degree mismatch: {first} vs {p}")));
        }
    }
    Ok(())
}

/// Sorts `p >= 2` monomials of a common degree.
pub fn sort_many(points: &[Point]) -> Result<Vec<Point>> {
    let p = points.len();
    if p < 2 {
        return Err(Error::Argument(format!("sorting needs at least two factors, got {p}")));
    }
    let refs: Vec<&Point> = points.iter().collect();
    check_same_shape(&refs)?;
    let n = points[0].len();
    let p64 = p as u64;
    let mut out = vec![vec![0u32; n]; p];
    let mut prefix = 0u64;
    for i in 0..n {
        let block: u64 = points.iter().map(|pt| u64::from(pt.0[i])).sum();
        let next = prefix + block;
        for (k, slot) in out.iter_mut().enumerate() {
            // number of positions x in 1..=N with x = k+1 (mod p)
            let upto = |m: u64| (m + p64 - 1 - k as u64) / p64;
            slot[i] = (upto(next) - upto(prefix)) as u32;
        }
        prefix = next;
    }
    Ok(out.into_iter().map(Point).collect())
}

pub fn sort_pair(u: &Point, v: &Point) -> Result<(Point, Point)> {
    let mut out = sort_many(&[u.clone(), v.clone()])?;
    let second = out.pop().expect("two outputs");
    let first = out.pop().expect("two outputs");
    Ok((first, second))
}

/// Whether `{a, b}` is sorted once arranged lex-larger first. `(a, a)` counts
/// as sorted.
pub fn is_sorted_pair(a: &Point, b: &Point) -> bool {
    let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
    match sort_pair(hi, lo) {
        Ok((x, y)) => &x == hi && &y == lo,
        Err(_) => false,
    }
}

/// A union of disjoint half-open intervals `[lo, hi)` of `1..=n`, listed in
/// increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SortingSignature {
    intervals: Vec<(usize, usize)>,
}

impl SortingSignature {
    pub fn new(intervals: Vec<(usize, usize)>) -> Result<Self> {
        let ok = intervals.iter().all(|&(lo, hi)| lo >= 1 && lo < hi) && intervals.windows(2).all(|w| w[0].1 < w[1].0);
        if !ok {
            return Err(Error::Argument(format!("malformed interval list {intervals:?}")));
        }
        Ok(SortingSignature { intervals })
    }

    pub fn single(s: usize) -> Self {
        SortingSignature { intervals: vec![(s, s + 1)] }
    }

    pub fn intervals(&self) -> &[(usize, usize)] {
        &self.intervals
    }

    pub fn length(&self) -> usize {
        self.intervals.iter().map(|(lo, hi)| hi - lo).sum()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.intervals.iter().any(|&(lo, hi)| lo <= x && x < hi)
    }

    /// The unit cells `[x, x+1)` covered by the set.
    pub fn cells(&self) -> impl Iterator<Item = usize> + '_ {
        self.intervals.iter().flat_map(|&(lo, hi)| lo..hi)
    }

    /// Rebuilds the canonical interval list from a set of unit cells.
    pub fn from_cells(mut cells: Vec<usize>) -> Result<Self> {
        cells.sort_unstable();
        if cells.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Argument("cells overlap".into()));
        }
        let mut intervals: Vec<(usize, usize)> = Vec::new();
        for c in cells {
            match intervals.last_mut() {
                Some(last) if last.1 == c => last.1 = c + 1,
                _ => intervals.push((c, c + 1)),
            }
        }
        SortingSignature::new(intervals)
    }
}

impl fmt::Display for SortingSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.intervals.is_empty() {
            return write!(f, "{{}}");
        }
        for (i, (lo, hi)) in self.intervals.iter().enumerate() {
            if i > 0 {
                write!(f, " u ")?;
            }
            write!(f, "[{lo},{hi})")?;
        }
        Ok(())
    }
}

impl Serialize for SortingSignature {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.intervals.len()))?;
        for &(lo, hi) in &self.intervals {
            seq.serialize_element(&[lo, hi])?;
        }
        seq.end()
    }
}

/// `Delta(a, b)` for `a >_lex b`: present iff the nonzero entries of `b - a`
/// alternate `-1, +1, -1, +1, ...`, which is `None` exactly when `(a, b)` is
/// unsorted.
pub fn delta(a: &Point, b: &Point) -> Result<Option<SortingSignature>> {
    check_same_shape(&[a, b])?;
    if lex_compare(a, b) != std::cmp::Ordering::Greater {
        return Err(Error::Argument(format!("delta needs a >_lex b, got {a} and {b}")));
    }
    let mut intervals = Vec::new();
    let mut open: Option<usize> = None;
    for (i, (&x, &y)) in a.0.iter().zip(&b.0).enumerate() {
        let pos = i + 1;
        match (i64::from(y) - i64::from(x), open) {
            (0, _) => {}
            (-1, None) => open = Some(pos),
            (1, Some(lo)) => {
                intervals.push((lo, pos));
                open = None;
            }
            _ => return Ok(None),
        }
    }
    if open.is_some() {
        return Ok(None);
    }
    Ok(Some(SortingSignature { intervals }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{enumerate_points, Config};

    /// Literal implementation: build the merged index list and deal it out.
    fn sort_by_index_list(points: &[Point]) -> Vec<Point> {
        let p = points.len();
        let n = points[0].len();
        let mut indices: Vec<usize> = points
            .iter()
            .flat_map(|pt| pt.0.iter().enumerate().flat_map(|(i, &c)| std::iter::repeat_n(i, c as usize)))
            .collect();
        indices.sort_unstable();
        let mut out = vec![vec![0u32; n]; p];
        for (pos, &i) in indices.iter().enumerate() {
            out[pos % p][i] += 1;
        }
        out.into_iter().map(Point).collect()
    }

    fn all_points(n: usize, d: u32) -> Vec<Point> {
        enumerate_points(&Config::new(n, d, vec![d; n]).unwrap())
    }

    #[test]
    fn interleaving_example() {
        let (x, y) = sort_pair(&Point::from([2, 0]), &Point::from([0, 2])).unwrap();
        assert_eq!((x, y), (Point::from([1, 1]), Point::from([1, 1])));
    }

    #[test]
    fn degree_mismatch_is_an_error() {
        assert!(sort_pair(&Point::from([1, 0]), &Point::from([1, 1])).is_err());
        assert!(sort_many(&[Point::from([1, 0])]).is_err());
    }

    #[test]
    fn counting_matches_index_list_oracle() {
        let pts = all_points(4, 3);
        for u in &pts {
            for v in &pts {
                let (x, y) = sort_pair(u, v).unwrap();
                assert_eq!(vec![x, y], sort_by_index_list(&[u.clone(), v.clone()]));
            }
        }
        for triple in pts.windows(3).step_by(2) {
            assert_eq!(sort_many(triple).unwrap(), sort_by_index_list(triple));
        }
    }

    #[test]
    fn symmetric_and_idempotent() {
        let pts = all_points(3, 4);
        for u in &pts {
            for v in &pts {
                let s = sort_pair(u, v).unwrap();
                assert_eq!(s, sort_pair(v, u).unwrap());
                assert_eq!(sort_pair(&s.0, &s.1).unwrap(), s);
                // sorted pairs come lex-larger first
                assert!(s.0 >= s.1);
            }
        }
    }

    #[test]
    fn worked_example_pairs() {
        let a = Point::from([1, 1, 1, 3, 2]);
        let b = Point::from([0, 2, 1, 3, 2]);
        let c = Point::from([0, 1, 1, 3, 3]);
        assert!(is_sorted_pair(&a, &a));
        assert!(is_sorted_pair(&a, &b));
        assert!(is_sorted_pair(&b, &a));
        let d = delta(&a, &b).unwrap().unwrap();
        assert_eq!(d.intervals(), &[(1, 2)]);
        assert_eq!(d.length(), 1);
        let d = delta(&a, &c).unwrap().unwrap();
        assert_eq!(d.intervals(), &[(1, 5)]);
        assert_eq!(d.length(), 4);
        assert!(delta(&b, &a).is_err());
        assert!(delta(&a, &a).is_err());
    }

    #[test]
    fn delta_presence_matches_sortedness() {
        let cfg = Config::new(4, 4, vec![2, 2, 3, 3]).unwrap();
        let pts = enumerate_points(&cfg);
        for (i, a) in pts.iter().enumerate() {
            for b in &pts[i + 1..] {
                let sorted = sort_pair(a, b).unwrap() == (a.clone(), b.clone());
                assert_eq!(delta(a, b).unwrap().is_some(), sorted, "{a} {b}");
                assert_eq!(is_sorted_pair(a, b), sorted);
            }
        }
    }

    #[test]
    fn cells_round_trip() {
        let s = SortingSignature::new(vec![(1, 3), (4, 5)]).unwrap();
        assert_eq!(s.cells().collect::<Vec<_>>(), vec![1, 2, 4]);
        assert_eq!(SortingSignature::from_cells(vec![4, 1, 2]).unwrap(), s);
        assert!(SortingSignature::new(vec![(1, 3), (3, 4)]).is_err());
        assert_eq!(serde_json::to_string(&s).unwrap(), "[[1,3],[4,5]]");
    }
}
