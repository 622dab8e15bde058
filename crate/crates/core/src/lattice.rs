//! Configurations `(n, d, alpha)` and the exponent set `V_{n,d}^alpha`.
//!
//! A [`Config`] fixes the number of variables `n >= 3`, the degree `d` and the
//! caps `1 <= alpha_1 <= ... <= alpha_n <= d` with `d < |alpha|`. Its lattice
//! points are the exponent vectors of the minimal generators of the
//! Veronese-type ideal, i.e. all `c` with `|c| = d` and `c_i <= alpha_i`.
//!
//! Every module addresses points through a [`Lattice`], which materializes the
//! point set once in lex-descending order and keeps an index table so that
//! graph algorithms can work on plain `usize` vertex ids.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{ConfigError, Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawConfig")]
pub struct Config {
    n: usize,
    d: u32,
    alpha: Vec<u32>,
}

#[derive(Deserialize)]
struct RawConfig {
    n: usize,
    d: u32,
    alpha: Vec<u32>,
}

impl TryFrom<RawConfig> for Config {
    type Error = ConfigError;

    fn try_from(raw: RawConfig) -> Result<Self, ConfigError> {
        Config::new(raw.n, raw.d, raw.alpha)
    }
}

impl Config {
    pub fn new(n: usize, d: u32, alpha: Vec<u32>) -> Result<Self, ConfigError> {
        if n < 3 {
            return Err(ConfigError::TooFewVariables(n));
        }
        if alpha.len() != n {
            return Err(ConfigError::AlphaLength { n, got: alpha.len() });
        }
        if d == 0 {
            return Err(ConfigError::ZeroDegree);
        }
        if alpha.windows(2).any(|w| w[0] > w[1]) {
            return Err(ConfigError::AlphaNotSorted);
        }
        if let Some(&value) = alpha.iter().find(|&&a| a < 1 || a > d) {
            return Err(ConfigError::AlphaOutOfRange { d, value });
        }
        let sum: u64 = alpha.iter().map(|&a| u64::from(a)).sum();
        if u64::from(d) >= sum {
            return Err(ConfigError::DegreeTooLarge { d, sum });
        }
        Ok(Config { n, d, alpha })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn alpha(&self) -> &[u32] {
        &self.alpha
    }

    /// `|alpha|`
    pub fn alpha_sum(&self) -> u32 {
        self.alpha.iter().sum()
    }

    /// `d' = min(d, |alpha| - d)`, the degree after the optional dual reduction.
    pub fn d_prime(&self) -> u32 {
        self.d.min(self.alpha_sum() - self.d)
    }

    /// Whether `p` lies in `V_{n,d}^alpha`.
    pub fn contains(&self, p: &Point) -> bool {
        p.len() == self.n && p.degree() == u64::from(self.d) && p.0.iter().zip(&self.alpha).all(|(c, a)| c <= a)
    }
}

impl fmt::Display for Config {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={}, d={}, alpha=(", self.n, self.d)?;
        for (i, a) in self.alpha.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "))")
    }
}

/// An exponent tuple. The derived `Ord` is the lexicographic order, which for
/// tuples of equal length and degree is exactly `>_lex`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point(pub Vec<u32>);

impl Point {
    pub fn new(coords: impl Into<Vec<u32>>) -> Self {
        Point(coords.into())
    }

    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&c| u64::from(c)).sum()
    }
}

impl From<Vec<u32>> for Point {
    fn from(v: Vec<u32>) -> Self {
        Point(v)
    }
}

impl<const N: usize> From<[u32; N]> for Point {
    fn from(v: [u32; N]) -> Self {
        Point(v.to_vec())
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// `a` vs `b` under `>_lex`: `Greater` iff the leftmost nonzero entry of
/// `a - b` is positive.
pub fn lex_compare(a: &Point, b: &Point) -> Ordering {
    debug_assert_eq!(a.len(), b.len());
    a.0.iter()
        .zip(&b.0)
        .find_map(|(x, y)| match x.cmp(y) {
            Ordering::Equal => None,
            ord => Some(ord),
        })
        .unwrap_or(Ordering::Equal)
}

/// All of `V_{n,d}^alpha`, strictly lex-descending.
pub fn enumerate_points(config: &Config) -> Vec<Point> {
    let n = config.n;
    // suffix[i] = alpha_i + ... + alpha_n (0-based), the most the tail can absorb
    let mut suffix = vec![0u32; n + 1];
    for i in (0..n).rev() {
        suffix[i] = suffix[i + 1] + config.alpha[i];
    }
    let mut out = Vec::new();
    let mut current = vec![0u32; n];
    fill(config, &suffix, 0, config.d, &mut current, &mut out);
    out
}

fn fill(config: &Config, suffix: &[u32], i: usize, remaining: u32, current: &mut Vec<u32>, out: &mut Vec<Point>) {
    let n = config.n;
    if i == n - 1 {
        if remaining <= config.alpha[i] {
            current[i] = remaining;
            out.push(Point(current.clone()));
        }
        return;
    }
    let hi = remaining.min(config.alpha[i]);
    let lo = remaining.saturating_sub(suffix[i + 1]);
    for c in (lo..=hi).rev() {
        current[i] = c;
        fill(config, suffix, i + 1, remaining - c, current, out);
    }
}

/// The lex-smallest point `eta`: `eta_n = alpha_n` and
/// `eta_i = min(alpha_i, d - eta_n - ... - eta_{i+1})`.
pub fn eta(config: &Config) -> Point {
    let n = config.n;
    let mut coords = vec![0u32; n];
    let mut left = config.d;
    for i in (0..n).rev() {
        let c = config.alpha[i].min(left);
        coords[i] = c;
        left -= c;
    }
    debug_assert_eq!(left, 0);
    Point(coords)
}

/// `rank(a) = sum_{j<n} (a_j - eta_j)(n - j)` with 1-based `j`.
pub fn rank(a: &Point, config: &Config) -> u64 {
    rank_against(a, &eta(config))
}

fn rank_against(a: &Point, eta: &Point) -> u64 {
    let n = a.len();
    let r: i64 = (0..n - 1).map(|j| (i64::from(a.0[j]) - i64::from(eta.0[j])) * (n - 1 - j) as i64).sum();
    assert!(r >= 0, "negative rank for {a} against eta {eta}");
    r as u64
}

/// The generalized Newton dual `(n, |alpha| - d, alpha)`.
///
/// Caps larger than the new degree `|alpha| - d` are clamped to it; the point
/// set is unchanged by the clamp and the clamped triple satisfies the
/// [`Config`] invariants. Without clamping the map is an involution.
pub fn newton_dual(config: &Config) -> Config {
    let d2 = config.alpha_sum() - config.d;
    let alpha = config.alpha.iter().map(|&a| a.min(d2)).collect();
    Config::new(config.n, d2, alpha).expect("newton dual of a valid config is valid")
}

/// `c -> alpha - c`, mapping `V_{n,d}^alpha` onto the points of [`newton_dual`].
pub fn dual_point(c: &Point, config: &Config) -> Point {
    Point(c.0.iter().zip(&config.alpha).map(|(x, a)| a - x).collect())
}

/// A configuration together with its materialized point set.
#[derive(Debug, Clone)]
pub struct Lattice {
    config: Config,
    points: Vec<Point>,
    index: HashMap<Point, usize>,
    eta: Point,
}

impl Lattice {
    pub fn new(config: Config) -> Self {
        let points = enumerate_points(&config);
        let index = points.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let eta = eta(&config);
        Lattice { config, points, index, eta }
    }

    pub fn config(&self) -> &Config {
        &self.config
    }

    pub fn n(&self) -> usize {
        self.config.n
    }

    /// Points in lex-descending order; the position is the vertex id.
    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, id: usize) -> &Point {
        &self.points[id]
    }

    pub fn id_of(&self, p: &Point) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn eta(&self) -> &Point {
        &self.eta
    }

    pub fn rank(&self, p: &Point) -> u64 {
        rank_against(p, &self.eta)
    }

    pub fn require_id(&self, p: &Point) -> Result<usize> {
        self.id_of(p).ok_or_else(|| Error::Argument(format!("{p} is not a point of {}", self.config)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(n: usize, d: u32, alpha: &[u32]) -> Config {
        Config::new(n, d, alpha.to_vec()).unwrap()
    }

    // Independent count of bounded compositions by plain recursion.
    fn count_compositions(d: u32, caps: &[u32]) -> u64 {
        match caps.split_first() {
            None => u64::from(d == 0),
            Some((&c, rest)) => (0..=c.min(d)).map(|x| count_compositions(d - x, rest)).sum(),
        }
    }

    #[test]
    fn rejects_invalid_configs() {
        assert_eq!(Config::new(2, 2, vec![1, 2]), Err(ConfigError::TooFewVariables(2)));
        assert_eq!(Config::new(3, 3, vec![1, 1, 1]), Err(ConfigError::DegreeTooLarge { d: 3, sum: 3 }));
        assert_eq!(Config::new(3, 2, vec![2, 1, 2]), Err(ConfigError::AlphaNotSorted));
        assert_eq!(Config::new(3, 2, vec![1, 2, 3]), Err(ConfigError::AlphaOutOfRange { d: 2, value: 3 }));
        assert_eq!(Config::new(3, 0, vec![1, 1, 1]), Err(ConfigError::ZeroDegree));
        assert!(matches!(Config::new(3, 2, vec![1, 2]), Err(ConfigError::AlphaLength { .. })));
        assert!(matches!(Config::new(3, 2, vec![0, 1, 2]), Err(ConfigError::AlphaOutOfRange { .. })));
    }

    #[test]
    fn point_counts() {
        assert_eq!(enumerate_points(&cfg(5, 7, &[1, 4, 4, 5, 7])).len(), 171);
        assert_eq!(enumerate_points(&cfg(3, 3, &[3, 3, 3])).len(), 10);
        let c = cfg(5, 8, &[2, 2, 2, 3, 3]);
        assert_eq!(enumerate_points(&c).len() as u64, count_compositions(8, c.alpha()));
        assert_eq!(enumerate_points(&cfg(3, 1, &[1, 1, 1])).len(), 3);
    }

    #[test]
    fn points_are_strictly_descending_and_valid() {
        let c = cfg(5, 8, &[2, 2, 2, 3, 3]);
        let pts = enumerate_points(&c);
        assert!(pts.windows(2).all(|w| lex_compare(&w[0], &w[1]) == Ordering::Greater));
        assert!(pts.iter().all(|p| c.contains(p)));
    }

    #[test]
    fn lex_examples() {
        let a = Point::from([1, 1, 1, 3, 2]);
        let b = Point::from([0, 2, 1, 3, 2]);
        assert_eq!(lex_compare(&a, &b), Ordering::Greater);
        assert_eq!(lex_compare(&b, &a), Ordering::Less);
        assert_eq!(lex_compare(&a, &a), Ordering::Equal);
        assert_eq!(lex_compare(&a, &b), a.cmp(&b));
    }

    #[test]
    fn eta_examples() {
        assert_eq!(eta(&cfg(5, 8, &[2, 2, 2, 3, 3])), Point::from([0, 0, 2, 3, 3]));
        assert_eq!(eta(&cfg(4, 5, &[5, 5, 5, 5])), Point::from([0, 0, 0, 5]));
        for c in [cfg(5, 8, &[2, 2, 2, 3, 3]), cfg(5, 7, &[1, 4, 4, 5, 7]), cfg(4, 3, &[1, 1, 2, 2])] {
            let min = enumerate_points(&c).into_iter().min().unwrap();
            assert_eq!(eta(&c), min);
        }
    }

    #[test]
    fn rank_examples() {
        let c = cfg(5, 8, &[2, 2, 2, 3, 3]);
        assert_eq!(rank(&eta(&c), &c), 0);
        assert_eq!(rank(&Point::from([0, 1, 1, 3, 3]), &c), 1);
        let lattice = Lattice::new(c.clone());
        assert!(lattice.points().iter().all(|p| lattice.rank(p) == rank(p, &c)));
    }

    #[test]
    fn newton_dual_examples() {
        let c = cfg(5, 7, &[1, 4, 4, 5, 7]);
        let dual = newton_dual(&c);
        assert_eq!(dual, cfg(5, 14, &[1, 4, 4, 5, 7]));
        assert_eq!(newton_dual(&dual), c);
        assert_eq!(enumerate_points(&c).len(), enumerate_points(&dual).len());
    }

    #[test]
    fn newton_dual_clamps_large_caps() {
        // |alpha| - d = 2 is below alpha_3 = 3
        let c = cfg(3, 3, &[1, 1, 3]);
        let dual = newton_dual(&c);
        assert_eq!(dual, cfg(3, 2, &[1, 1, 2]));
        let mapped: Vec<Point> = enumerate_points(&c).iter().map(|p| dual_point(p, &c)).collect();
        assert!(mapped.iter().all(|p| dual.contains(p)));
        assert_eq!(mapped.len(), enumerate_points(&dual).len());
    }

    #[test]
    fn config_json_shape() {
        let c = cfg(5, 7, &[1, 4, 4, 5, 7]);
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(s, r#"{"n":5,"d":7,"alpha":[1,4,4,5,7]}"#);
        assert_eq!(serde_json::from_str::<Config>(&s).unwrap(), c);
        assert!(serde_json::from_str::<Config>(r#"{"n":2,"d":1,"alpha":[1,1]}"#).is_err());
        assert_eq!(serde_json::to_string(&Point::from([1, 0, 2])).unwrap(), "[1,0,2]");
    }
}
