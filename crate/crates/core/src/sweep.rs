//! Batch cross-checks over a bounded family of configurations.
//!
//! Each configuration is pushed through every module and the results are
//! compared against the independent oracles: Bron–Kerbosch for the cliques,
//! the monomial colon computation for linear quotients, enumeration for the
//! counting formulas, and the Newton dual for invariance.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::cliques::{brute_force_cliques, equivalence_classes, start_tuples, EquivalenceClass, Graph};
use crate::error::Result;
use crate::invariants::{
    count_G, count_H, count_t, has_full_interior_start, middle_range, multiplicity_bounds, multiplicity_bounds_with,
    regularity,
};
use crate::lattice::{newton_dual, Config, Lattice};
use crate::order::{verify_linear_quotients, CliqueOrder, TieBreak};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SweepParams {
    pub max_n: usize,
    pub max_d: u32,
    pub max_t: usize,
    /// With `sample`, keep a seeded random subset of that size.
    pub seed: Option<u64>,
    pub sample: Option<usize>,
}

impl Default for SweepParams {
    fn default() -> Self {
        SweepParams { max_n: 5, max_d: 8, max_t: 400, seed: None, sample: None }
    }
}

fn alphas(n: usize, d: u32) -> Vec<Vec<u32>> {
    fn go(n: usize, lo: u32, d: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for a in lo..=d {
            cur.push(a);
            go(n, a, d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, 1, d, &mut Vec::new(), &mut out);
    out
}

/// All valid `(n, d, alpha)` with `3 <= n <= max_n`, `d <= max_d` and
/// `t <= max_t`, ordered by `n`, then `d`, then `alpha`.
pub fn sweep_configs(params: &SweepParams) -> Vec<Config> {
    let mut out = Vec::new();
    for n in 3..=params.max_n {
        for d in 1..=params.max_d {
            for alpha in alphas(n, d) {
                let Ok(config) = Config::new(n, d, alpha) else { continue };
                if count_t(&config) <= BigInt::from(params.max_t) {
                    out.push(config);
                }
            }
        }
    }
    if let Some(k) = params.sample {
        let mut rng = ChaCha8Rng::seed_from_u64(params.seed.unwrap_or(0));
        let mut picked: Vec<usize> = (0..out.len()).collect::<Vec<_>>().choose_multiple(&mut rng, k).copied().collect();
        picked.sort_unstable();
        out = picked.into_iter().map(|i| out[i].clone()).collect();
    }
    out
}

/// The individual cross-checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    /// Signature enumeration equals Bron–Kerbosch; every clique has `n` points.
    CliqueOracle,
    /// Every colon ideal is generated by variables, `omega <= n - 1`.
    LinearQuotients,
    /// `max omega = floor(n - n/d')` under both tie-break rules.
    RegularityFormula,
    /// `#{A : omega(A) = max}` agrees between tie-break rules.
    TopBetti,
    /// `t`, `G`, `H` formulas equal their enumerations; class sizes equal
    /// linear-extension counts.
    CountingFormulas,
    /// `t`, multiplicity and regularity agree with the Newton dual.
    NewtonDual,
    /// `lower <= multiplicity <= upper` with the closed-form regularity.
    BoundSandwich,
    /// The same sandwich with the observed `max omega` as regularity.
    BoundSandwichObserved,
    /// `max omega = n - 1` iff the middle-range predicate holds iff a
    /// full-interior start tuple exists.
    MiddleRange,
}

impl Check {
    pub const ALL: [Check; 9] = [
        Check::CliqueOracle,
        Check::LinearQuotients,
        Check::RegularityFormula,
        Check::TopBetti,
        Check::CountingFormulas,
        Check::NewtonDual,
        Check::BoundSandwich,
        Check::BoundSandwichObserved,
        Check::MiddleRange,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::CliqueOracle => "clique-oracle",
            Check::LinearQuotients => "linear-quotients",
            Check::RegularityFormula => "regularity-formula",
            Check::TopBetti => "top-betti",
            Check::CountingFormulas => "counting-formulas",
            Check::NewtonDual => "newton-dual",
            Check::BoundSandwich => "bound-sandwich",
            Check::BoundSandwichObserved => "bound-sandwich-observed",
            Check::MiddleRange => "middle-range",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub check: Check,
    pub detail: String,
}

/// Results of all checks for one configuration.
#[derive(Debug, Clone, Serialize)]
pub struct ConfigCheck {
    pub config: Config,
    pub t: usize,
    pub g: usize,
    pub h: usize,
    pub mult: usize,
    pub reg_formula: i64,
    /// `max omega` under first-lex and last-lex.
    pub pd: [usize; 2],
    pub top_count: [usize; 2],
    pub middle_range: bool,
    pub full_interior_start: bool,
    pub lower_bound: Option<String>,
    pub upper_bound: Option<String>,
    pub failures: Vec<Failure>,
}

impl ConfigCheck {
    pub fn passed(&self, check: Check) -> bool {
        !self.failures.iter().any(|f| f.check == check)
    }
}

struct Observed {
    classes: Vec<EquivalenceClass>,
    t: usize,
    mult: usize,
    pd: [usize; 2],
    top: [usize; 2],
}

fn observe(lattice: &Lattice, failures: &mut Vec<Failure>) -> Result<Observed> {
    let n = lattice.n();
    let classes = equivalence_classes(lattice)?;
    let mult = classes.iter().map(|c| c.size()).sum();

    let mut enumerated = BTreeSet::new();
    for class in &classes {
        for clique in &class.members {
            let mut ids = clique.chain_ids(lattice)?;
            ids.sort_unstable();
            ids.dedup();
            if ids.len() != n {
                failures.push(Failure { check: Check::CliqueOracle, detail: format!("clique of size {}", ids.len()) });
            }
            enumerated.insert(ids);
        }
    }
    let brute: BTreeSet<Vec<usize>> = brute_force_cliques(&Graph::build(lattice)).into_iter().collect();
    if brute != enumerated || enumerated.len() != mult {
        failures.push(Failure {
            check: Check::CliqueOracle,
            detail: format!("{} enumerated vs {} Bron–Kerbosch", enumerated.len(), brute.len()),
        });
    }
    if let Some(bad) = brute.iter().find(|c| c.len() != n) {
        failures.push(Failure {
            check: Check::CliqueOracle,
            detail: format!("Bron–Kerbosch clique of size {}", bad.len()),
        });
    }

    let mut pd = [0; 2];
    let mut top = [0; 2];
    for (k, rule) in TieBreak::ALL.into_iter().enumerate() {
        let order = CliqueOrder::from_classes(lattice, classes.clone(), rule)?;
        match verify_linear_quotients(&order) {
            Ok(report) => (pd[k], top[k]) = report.top_betti(),
            Err(e) => failures.push(Failure { check: Check::LinearQuotients, detail: e.to_string() }),
        }
    }
    Ok(Observed { classes, t: lattice.len(), mult, pd, top })
}

/// Runs every check on one configuration. Only enumeration errors that make
/// the remaining checks meaningless are returned as `Err`.
pub fn check_config(config: &Config) -> Result<ConfigCheck> {
    let n = config.n();
    let lattice = Lattice::new(config.clone());
    let mut failures = Vec::new();
    let seen = observe(&lattice, &mut failures)?;

    let reg_formula = regularity(config);
    for (rule, &p) in TieBreak::ALL.iter().zip(&seen.pd) {
        if p as i64 != reg_formula {
            failures.push(Failure {
                check: Check::RegularityFormula,
                detail: format!("max omega {p} under {rule}, formula gives {reg_formula}"),
            });
        }
    }
    if seen.top[0] != seen.top[1] {
        failures.push(Failure {
            check: Check::TopBetti,
            detail: format!("top Betti count {} vs {}", seen.top[0], seen.top[1]),
        });
    }

    let classes = &seen.classes;
    let g = start_tuples(&lattice).len();
    let h = classes.iter().filter(|c| c.poset.is_trivial()).count();
    for (name, formula, direct) in
        [("t", count_t(config), seen.t), ("G", count_G(config), g), ("H", count_H(config), h)]
    {
        if formula != BigInt::from(direct) {
            failures.push(Failure { check: Check::CountingFormulas, detail: format!("{name}: {formula} vs {direct}") });
        }
    }
    let extensions: u64 = classes.iter().map(|c| c.poset.count_linear_extensions()).sum();
    if extensions != seen.mult as u64 {
        failures.push(Failure {
            check: Check::CountingFormulas,
            detail: format!("linear extensions {extensions} vs {} cliques", seen.mult),
        });
    }

    let dual = newton_dual(config);
    let mut dual_failures = Vec::new();
    let dual_seen = observe(&Lattice::new(dual.clone()), &mut dual_failures)?;
    if dual_seen.t != seen.t
        || dual_seen.mult != seen.mult
        || dual_seen.pd != seen.pd
        || regularity(&dual) != reg_formula
    {
        failures.push(Failure {
            check: Check::NewtonDual,
            detail: format!(
                "{dual}: t {} mult {} pd {:?} reg {} vs t {} mult {} pd {:?} reg {}",
                dual_seen.t,
                dual_seen.mult,
                dual_seen.pd,
                regularity(&dual),
                seen.t,
                seen.mult,
                seen.pd,
                reg_formula
            ),
        });
    }

    let (lower_bound, upper_bound) = match multiplicity_bounds(config) {
        Ok(b) => {
            let e = BigInt::from(seen.mult);
            if b.lower > e || e > b.upper {
                failures.push(Failure {
                    check: Check::BoundSandwich,
                    detail: format!("{} <= {e} <= {} fails", b.lower, b.upper),
                });
            }
            (Some(b.lower.to_string()), Some(b.upper.to_string()))
        }
        Err(_) => (None, None),
    };
    if let Ok(b) = multiplicity_bounds_with(config, seen.pd[0] as i64) {
        let e = BigInt::from(seen.mult);
        if b.lower > e || e > b.upper {
            failures.push(Failure {
                check: Check::BoundSandwichObserved,
                detail: format!("{} <= {e} <= {} fails with r = {}", b.lower, b.upper, seen.pd[0]),
            });
        }
    }

    let top = seen.pd[0] == n - 1;
    let arithmetic = middle_range(config);
    let interior =
        has_full_interior_start(&Lattice::new(if config.d_prime() == config.d() { config.clone() } else { dual }));
    if top != arithmetic || top != interior {
        failures.push(Failure {
            check: Check::MiddleRange,
            detail: format!("max omega = n-1: {top}, arithmetic predicate: {arithmetic}, interior start: {interior}"),
        });
    }

    Ok(ConfigCheck {
        config: config.clone(),
        t: seen.t,
        g,
        h,
        mult: seen.mult,
        reg_formula,
        pd: seen.pd,
        top_count: seen.top,
        middle_range: arithmetic,
        full_interior_start: interior,
        lower_bound,
        upper_bound,
        failures,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub params: SweepParams,
    pub rows: Vec<ConfigCheck>,
}

impl SweepReport {
    /// Number of configurations failing each check.
    pub fn failure_counts(&self) -> Vec<(Check, usize)> {
        Check::ALL.iter().map(|&c| (c, self.rows.iter().filter(|r| !r.passed(c)).count())).collect()
    }

    pub fn is_clean(&self) -> bool {
        self.rows.iter().all(|r| r.failures.is_empty())
    }
}

pub fn run_sweep(params: &SweepParams) -> Result<SweepReport> {
    let rows = sweep_configs(params).par_iter().map(check_config).collect::<Result<Vec<_>>>()?;
    Ok(SweepReport { params: *params, rows })
}

/// Flat view of a [`ConfigCheck`] for CSV output.
#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    pub n: usize,
    pub d: u32,
    pub alpha: String,
    pub t: usize,
    #[serde(rename = "G")]
    pub g: usize,
    #[serde(rename = "H")]
    pub h: usize,
    pub mult: usize,
    pub reg_formula: i64,
    pub pd_first_lex: usize,
    pub pd_last_lex: usize,
    pub top_first_lex: usize,
    pub top_last_lex: usize,
    pub lower_bound: String,
    pub upper_bound: String,
    pub middle_range: bool,
    pub failures: String,
}

impl From<&ConfigCheck> for SweepRow {
    fn from(c: &ConfigCheck) -> Self {
        let mut kinds: Vec<&str> = c.failures.iter().map(|f| f.check.name()).collect();
        kinds.dedup();
        SweepRow {
            n: c.config.n(),
            d: c.config.d(),
            alpha: c.config.alpha().iter().map(u32::to_string).collect::<Vec<_>>().join(" "),
            t: c.t,
            g: c.g,
            h: c.h,
            mult: c.mult,
            reg_formula: c.reg_formula,
            pd_first_lex: c.pd[0],
            pd_last_lex: c.pd[1],
            top_first_lex: c.top_count[0],
            top_last_lex: c.top_count[1],
            lower_bound: c.lower_bound.clone().unwrap_or_default(),
            upper_bound: c.upper_bound.clone().unwrap_or_default(),
            middle_range: c.middle_range,
            failures: kinds.join(" "),
        }
    }
}
