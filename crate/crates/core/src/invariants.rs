//! Closed-form invariants of the algebra and the counting formulas behind the
//! multiplicity bounds.
//!
//! Everything here is exact: counts and bounds are arbitrary-precision
//! integers, and binomials follow the convention `C(m, k) = 0` whenever
//! `m < k` or `m < 0`, which the inclusion–exclusion sums rely on.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::cliques::{equivalence_classes, start_tuples};
use crate::error::{Error, Result};
use crate::lattice::{newton_dual, Config, Lattice};
use crate::order::{projective_dimension, TieBreak};

/// `C(m, k)` with `C(m, k) = 0` for `m < 0` or `m < k`.
pub fn binomial(m: &BigInt, k: u64) -> BigInt {
    if m.is_negative() || *m < BigInt::from(k) {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (m - BigInt::from(i)) / BigInt::from(i + 1);
    }
    acc
}

fn factorial(k: u64) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

fn pow(base: u64, exp: u64) -> BigInt {
    num_traits::pow(BigInt::from(base), exp as usize)
}

/// `sum_{P subset of S} (-1)^{|P|} f(P)`.
fn signed_subset_sum(set: &[usize], mut f: impl FnMut(&[usize]) -> BigInt) -> BigInt {
    let mut total = BigInt::zero();
    let mut chosen = Vec::with_capacity(set.len());
    for mask in 0u64..(1 << set.len()) {
        chosen.clear();
        chosen.extend(set.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v));
        let term = f(&chosen);
        if chosen.len() % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// `t = #V_{n,d}^alpha`, the number of variables of the presentation ring.
pub fn count_t(config: &Config) -> BigInt {
    let n = config.n();
    let alpha = config.alpha();
    let all: Vec<usize> = (0..n).collect();
    signed_subset_sum(&all, |p| {
        let cut: i64 = p.iter().map(|&i| i64::from(alpha[i]) + 1).sum();
        binomial(&BigInt::from(i64::from(config.d()) - cut + n as i64 - 1), n as u64 - 1)
    })
}

/// The two-level sum over `P subset {2..n-1}` and `Q subset {1, n}` shared by
/// `G` and `H`; `middle` is the weight of an index in `P`, `offset` the
/// constant shift of the top argument.
fn class_sum(config: &Config, middle: impl Fn(u32) -> i64, offset: i64) -> BigInt {
    let n = config.n();
    let alpha = config.alpha();
    let inner: Vec<usize> = (1..n - 1).collect();
    let ends = [0, n - 1];
    signed_subset_sum(&inner, |p| {
        let cut_p: i64 = p.iter().map(|&i| middle(alpha[i])).sum();
        signed_subset_sum(&ends, |q| {
            let cut_q: i64 = q.iter().map(|&i| i64::from(alpha[i])).sum();
            binomial(&BigInt::from(i64::from(config.d()) - cut_p - cut_q + offset), n as u64 - 1)
        })
    })
}

/// `G`, the number of equivalence classes of maximal cliques.
#[allow(non_snake_case)]
pub fn count_G(config: &Config) -> BigInt {
    class_sum(config, |a| i64::from(a) + 1, config.n() as i64 - 2)
}

/// `H`, the number of classes containing all `(n - 1)!` signatures.
#[allow(non_snake_case)]
pub fn count_H(config: &Config) -> BigInt {
    class_sum(config, |a| i64::from(a) - 1, 0)
}

pub fn dimension(config: &Config) -> u64 {
    config.n() as u64
}

/// `floor(n - n/d') = n - ceil(n/d')`.
pub fn regularity(config: &Config) -> i64 {
    let n = config.n() as i64;
    let dp = i64::from(config.d_prime());
    n - (n + dp - 1) / dp
}

/// `reg - dim = -ceil(n/d')`.
pub fn a_invariant(config: &Config) -> i64 {
    regularity(config) - dimension(config) as i64
}

/// Reduction number of `I_{d,alpha}`, valid over an infinite field.
pub fn reduction_number(config: &Config) -> i64 {
    regularity(config)
}

/// The number of maximal cliques of the sortedness graph.
pub fn multiplicity(lattice: &Lattice) -> Result<BigInt> {
    let classes = equivalence_classes(lattice)?;
    Ok(BigInt::from(classes.iter().map(|c| c.size() as u64).sum::<u64>()))
}

/// The four candidates for the upper bound, kept separately so that callers
/// can see which one is attained.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundTerms {
    #[serde(serialize_with = "big")]
    pub class_term: BigInt,
    #[serde(serialize_with = "big")]
    pub d1_pow: BigInt,
    #[serde(serialize_with = "big")]
    pub d2_pow: BigInt,
    #[serde(serialize_with = "big")]
    pub binomial_term: BigInt,
}

impl BoundTerms {
    pub fn min(&self) -> &BigInt {
        [&self.class_term, &self.d1_pow, &self.d2_pow, &self.binomial_term].into_iter().min().expect("four terms")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityBounds {
    pub lower: BigInt,
    pub upper: BigInt,
    pub terms: BoundTerms,
}

/// `r + t - n <= e <= min{H (n-1)! + (G-H)(n-1)!/2, d^{n-1}, (|alpha|-d)^{n-1},
/// C(r+t-n, t-n) - C(r-2+t-n, t-n)}`, with `r` the closed-form regularity.
pub fn multiplicity_bounds(config: &Config) -> Result<MultiplicityBounds> {
    multiplicity_bounds_with(config, regularity(config))
}

/// The same bounds evaluated at a caller-supplied regularity `r`, e.g. the
/// projective dimension observed from the clique order.
pub fn multiplicity_bounds_with(config: &Config, r: i64) -> Result<MultiplicityBounds> {
    let n = config.n() as u64;
    let t = count_t(config);
    if t <= BigInt::from(n) {
        return Err(Error::Degenerate(format!("{config} has t = {t} <= n, so the presentation ideal is zero")));
    }
    let r = BigInt::from(r);
    let g = count_G(config);
    let h = count_H(config);
    let fact = factorial(n - 1);
    let tn = (&t - BigInt::from(n)).to_u64().ok_or_else(|| Error::Internal("t - n out of range".into()))?;
    let terms = BoundTerms {
        class_term: &h * &fact + (&g - &h) * &fact / 2,
        d1_pow: pow(u64::from(config.d()), n - 1),
        d2_pow: pow(u64::from(config.alpha_sum() - config.d()), n - 1),
        binomial_term: binomial(&(&r + &t - BigInt::from(n)), tn) - binomial(&(&r - 2 + &t - BigInt::from(n)), tn),
    };
    Ok(MultiplicityBounds { lower: &r + &t - BigInt::from(n), upper: terms.min().clone(), terms })
}

/// Whether `n <= d' <= sum(alpha_i - 1)` holds for the degree-reduced
/// configuration (the Newton dual when `|alpha| - d < d`).
pub fn middle_range(config: &Config) -> bool {
    let reduced = if config.d_prime() == config.d() { config.clone() } else { newton_dual(config) };
    let slack: u32 = reduced.alpha().iter().map(|a| a - 1).sum();
    reduced.n() as u32 <= reduced.d() && reduced.d() <= slack
}

/// Whether some start tuple has `a_1 >= 2`, `1 <= a_j <= alpha_j - 1` in the
/// middle and `a_n <= alpha_n - 2`.
pub fn has_full_interior_start(lattice: &Lattice) -> bool {
    let alpha = lattice.config().alpha();
    let n = lattice.n();
    start_tuples(lattice).iter().any(|p| {
        let a = p.coords();
        a[0] >= 2 && (1..n - 1).all(|j| a[j] >= 1 && a[j] < alpha[j]) && a[n - 1] + 2 <= alpha[n - 1]
    })
}

fn big<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    let number: serde_json::Number = v.to_string().parse().map_err(serde::ser::Error::custom)?;
    number.serialize(s)
}

fn big_opt<S: Serializer>(v: &Option<BigInt>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(v) => big(v, s),
        None => s.serialize_none(),
    }
}

/// Every invariant of one configuration. The counting formulas are checked
/// against direct enumeration while the report is built.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub n: usize,
    pub d: u32,
    pub alpha: Vec<u32>,
    #[serde(rename = "dim_A")]
    pub dim: u64,
    #[serde(rename = "t_dimKT", serialize_with = "big")]
    pub t: BigInt,
    pub reg: i64,
    pub a_inv: i64,
    pub red_num: i64,
    pub field_assumption: &'static str,
    #[serde(serialize_with = "big")]
    pub mult: BigInt,
    #[serde(rename = "G_count", serialize_with = "big")]
    pub g: BigInt,
    #[serde(rename = "H_count", serialize_with = "big")]
    pub h: BigInt,
    /// `None` when `t <= n`.
    #[serde(serialize_with = "big_opt")]
    pub lower_bound: Option<BigInt>,
    #[serde(serialize_with = "big_opt")]
    pub upper_bound: Option<BigInt>,
    #[serde(flatten)]
    pub bound_terms: Option<BoundTerms>,
    pub d_prime: u32,
    /// `max omega` over the linear-quotient order, computed from the cliques.
    pub pd_observed: usize,
}

impl InvariantReport {
    pub fn compute(config: &Config) -> Result<Self> {
        let lattice = Lattice::new(config.clone());
        let t = count_t(config);
        let g = count_G(config);
        let h = count_H(config);

        let classes = equivalence_classes(&lattice)?;
        let mult = BigInt::from(classes.iter().map(|c| c.size() as u64).sum::<u64>());
        let full = classes.iter().filter(|c| c.is_full()).count();
        check("t", &t, lattice.len())?;
        check("G", &g, classes.len())?;
        check("H", &h, full)?;

        let bounds = match multiplicity_bounds(config) {
            Ok(b) => Some(b),
            Err(Error::Degenerate(_)) => None,
            Err(e) => return Err(e),
        };
        let pd_observed = projective_dimension(&lattice, TieBreak::default())?;
        Ok(InvariantReport {
            n: config.n(),
            d: config.d(),
            alpha: config.alpha().to_vec(),
            dim: dimension(config),
            t,
            reg: regularity(config),
            a_inv: a_invariant(config),
            red_num: reduction_number(config),
            field_assumption: "infinite",
            mult,
            g,
            h,
            lower_bound: bounds.as_ref().map(|b| b.lower.clone()),
            upper_bound: bounds.as_ref().map(|b| b.upper.clone()),
            bound_terms: bounds.map(|b| b.terms),
            d_prime: config.d_prime(),
            pd_observed,
        })
    }
}

fn check(name: &str, formula: &BigInt, enumerated: usize) -> Result<()> {
    if *formula != BigInt::from(enumerated) {
        return Err(Error::Internal(format!("{name}: formula gives {formula}, enumeration gives {enumerated}")));
    }
    Ok(())
}
