//! Command-line front end.
//!
//! Every subcommand takes a configuration through `--n/--d/--alpha` (or the
//! `VERONESE_N`, `VERONESE_D`, `VERONESE_ALPHA` environment variables) and
//! writes one document to stdout. Exit codes: 2 for usage errors, 3 for
//! invalid configurations, 4 when a checked statement fails.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::cliques::{enumerate_maximal_cliques, equivalence_classes, ClassSummary, MaximalClique, Signature};
use crate::error::{Error, Result};
use crate::ideal::{alexander_dual_generators, export_cas, groebner_pairs, CasObject};
use crate::invariants::{multiplicity_bounds, BoundTerms, InvariantReport};
use crate::lattice::{Config, Lattice, Point};
use crate::order::{verify_linear_quotients, CliqueOrder, TieBreak};
use crate::sweep::{run_sweep, SweepParams, SweepRow};

pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VALIDATION: i32 = 3;
pub const EXIT_VIOLATION: i32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "veronese", version, about = "Sortedness graphs and invariants of Veronese-type algebras")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value = "json", env = "VERONESE_OUTPUT")]
    pub output: OutputFormat,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct ConfigArgs {
    /// Number of variables; defaults to the length of --alpha.
    #[arg(long, env = "VERONESE_N")]
    pub n: Option<usize>,
    #[arg(long, env = "VERONESE_D")]
    pub d: u32,
    /// Comma-separated caps; sorted ascending if needed.
    #[arg(long, env = "VERONESE_ALPHA", value_delimiter = ',', required = true)]
    pub alpha: Vec<u32>,
}

#[derive(Debug, Clone, Args)]
pub struct OrderArgs {
    #[command(flatten)]
    pub config: ConfigArgs,
    #[arg(long, default_value = "first-lex", env = "VERONESE_TIE_BREAK")]
    pub tie_break: TieBreak,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[arg(long, default_value_t = 5, env = "VERONESE_MAX_N")]
    pub max_n: usize,
    #[arg(long, default_value_t = 8, env = "VERONESE_MAX_D")]
    pub max_d: u32,
    #[arg(long, default_value_t = 400, env = "VERONESE_MAX_T")]
    pub max_t: usize,
    /// Seed for --sample.
    #[arg(long, env = "VERONESE_SEED")]
    pub seed: Option<u64>,
    /// Check a random subset of this many configurations.
    #[arg(long, env = "VERONESE_SAMPLE")]
    pub sample: Option<usize>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// The points of V_{n,d}^alpha, lex-descending.
    Points(ConfigArgs),
    /// Every maximal clique of the sortedness graph.
    Cliques(ConfigArgs),
    /// Equivalence classes with their marked representatives.
    Classes(ConfigArgs),
    /// The linear-quotient order on cliques.
    Order(OrderArgs),
    /// Recompute every colon ideal and check it is linear.
    Verify(OrderArgs),
    /// Closed-form invariants and counts.
    Invariants(ConfigArgs),
    /// Multiplicity bounds.
    Bounds(ConfigArgs),
    /// Quadratic Gröbner basis of the presentation ideal.
    Groebner(ConfigArgs),
    /// Generators of the Alexander dual of the initial ideal.
    Dual(ConfigArgs),
    /// Cross-check all modules over a family of configurations.
    Sweep(SweepArgs),
}

/// A parsed and validated invocation.
#[derive(Debug, Clone)]
pub struct RunRequest {
    pub command: Command,
    pub config: Option<Config>,
    pub output: OutputFormat,
    pub warnings: Vec<String>,
}

impl ConfigArgs {
    /// Validates the flags, sorting `alpha` first if necessary.
    pub fn to_config(&self, warnings: &mut Vec<String>) -> Result<Config> {
        let mut alpha = self.alpha.clone();
        if alpha.windows(2).any(|w| w[0] > w[1]) {
            alpha.sort_unstable();
            warnings.push(format!("alpha was not non-decreasing; using {alpha:?}"));
        }
        let n = self.n.unwrap_or(alpha.len());
        Ok(Config::new(n, self.d, alpha)?)
    }
}

impl RunRequest {
    pub fn from_cli(cli: Cli) -> Result<Self> {
        let mut warnings = Vec::new();
        let config = match &cli.command {
            Command::Points(c)
            | Command::Cliques(c)
            | Command::Classes(c)
            | Command::Invariants(c)
            | Command::Bounds(c)
            | Command::Groebner(c)
            | Command::Dual(c) => Some(c.to_config(&mut warnings)?),
            Command::Order(o) | Command::Verify(o) => Some(o.config.to_config(&mut warnings)?),
            Command::Sweep(_) => None,
        };
        Ok(RunRequest { command: cli.command, config, output: cli.output, warnings })
    }
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Argument(_) => EXIT_USAGE,
        Error::Config(_) | Error::Degenerate(_) => EXIT_VALIDATION,
        Error::TheoremViolation(_) => EXIT_VIOLATION,
        Error::Internal(_) => 1,
    }
}

#[derive(Serialize)]
struct OrderRow<'a> {
    position: usize,
    clique: usize,
    class: usize,
    rank: u64,
    signature: &'a Signature,
    relative_signature: &'a Signature,
    chain: &'a [Point],
}

#[derive(Serialize)]
struct BoundsDoc {
    #[serde(serialize_with = "big")]
    lower: num_bigint::BigInt,
    #[serde(serialize_with = "big")]
    upper: num_bigint::BigInt,
    #[serde(flatten)]
    terms: BoundTerms,
}

fn big<S: serde::Serializer>(v: &num_bigint::BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    let number: serde_json::Number = v.to_string().parse().map_err(serde::ser::Error::custom)?;
    number.serialize(s)
}

fn json<T: Serialize + ?Sized>(out: &mut dyn Write, value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Error::Internal(e.to_string()))?;
    writeln!(out, "{text}").map_err(io)
}

fn io(e: std::io::Error) -> Error {
    Error::Internal(format!("write failed: {e}"))
}

fn only_json(format: OutputFormat, what: &str) -> Result<()> {
    match format {
        OutputFormat::Json => Ok(()),
        other => Err(Error::Argument(format!(
            "{what} supports only JSON output, not {}",
            other.to_possible_value().map(|v| v.get_name().to_owned()).unwrap_or_default()
        ))),
    }
}

/// Executes a request, writing the document to `out` and diagnostics to
/// `err`.
pub fn run(req: &RunRequest, out: &mut dyn Write, err: &mut dyn Write) -> Result<()> {
    for w in &req.warnings {
        writeln!(err, "warning: {w}").map_err(io)?;
    }
    let lattice = req.config.clone().map(Lattice::new);
    let lattice = || lattice.as_ref().expect("config-taking command");
    match &req.command {
        Command::Points(_) => {
            let lat = lattice();
            match req.output {
                OutputFormat::Json => json(out, lat.points()),
                OutputFormat::Text => write!(out, "{}", export_cas(lat, CasObject::Ideal)?).map_err(io),
                OutputFormat::Csv => {
                    let mut w = csv::Writer::from_writer(out);
                    let n = lat.n();
                    let mut header = vec!["id".to_string(), "rank".to_string()];
                    header.extend((1..=n).map(|i| format!("a{i}")));
                    w.write_record(&header).map_err(csv_err)?;
                    for (id, p) in lat.points().iter().enumerate() {
                        let mut rec = vec![id.to_string(), lat.rank(p).to_string()];
                        rec.extend(p.coords().iter().map(u32::to_string));
                        w.write_record(&rec).map_err(csv_err)?;
                    }
                    w.flush().map_err(io)
                }
            }
        }
        Command::Cliques(_) => {
            only_json(req.output, "cliques")?;
            let cliques: Vec<MaximalClique> = enumerate_maximal_cliques(lattice())?;
            json(out, &cliques)
        }
        Command::Classes(_) => {
            only_json(req.output, "classes")?;
            let summaries: Vec<ClassSummary> = equivalence_classes(lattice())?.iter().map(|c| c.summary()).collect();
            json(out, &summaries)
        }
        Command::Order(o) => {
            only_json(req.output, "order")?;
            let order = CliqueOrder::build(lattice(), o.tie_break)?;
            let rows: Vec<OrderRow> = order
                .entries()
                .iter()
                .enumerate()
                .map(|(position, e)| OrderRow {
                    position,
                    clique: e.id,
                    class: e.class,
                    rank: e.rank,
                    signature: &e.clique.signature,
                    relative_signature: &e.relative_signature,
                    chain: &e.clique.chain,
                })
                .collect();
            json(out, &rows)
        }
        Command::Verify(o) => {
            only_json(req.output, "verify")?;
            let order = CliqueOrder::build(lattice(), o.tie_break)?;
            let report = verify_linear_quotients(&order)?;
            json(out, &report.records)?;
            let (p, count) = report.top_betti();
            writeln!(
                err,
                "linear quotients: {} cliques, p = {p}, beta_p = {count} ({})",
                report.records.len(),
                o.tie_break
            )
            .map_err(io)
        }
        Command::Invariants(_) => {
            only_json(req.output, "invariants")?;
            json(out, &InvariantReport::compute(lattice().config())?)
        }
        Command::Bounds(_) => {
            only_json(req.output, "bounds")?;
            let b = multiplicity_bounds(lattice().config())?;
            json(out, &BoundsDoc { lower: b.lower, upper: b.upper, terms: b.terms })
        }
        Command::Groebner(_) => match req.output {
            OutputFormat::Json => json(out, &groebner_pairs(lattice())?),
            OutputFormat::Text => write!(out, "{}", export_cas(lattice(), CasObject::Groebner)?).map_err(io),
            OutputFormat::Csv => only_json(req.output, "groebner"),
        },
        Command::Dual(_) => match req.output {
            OutputFormat::Json => json(out, &alexander_dual_generators(lattice())?),
            OutputFormat::Text => write!(out, "{}", export_cas(lattice(), CasObject::Dual)?).map_err(io),
            OutputFormat::Csv => only_json(req.output, "dual"),
        },
        Command::Sweep(s) => {
            if req.output == OutputFormat::Text {
                return Err(Error::Argument("sweep supports JSON and CSV output".into()));
            }
            let params = SweepParams { max_n: s.max_n, max_d: s.max_d, max_t: s.max_t, seed: s.seed, sample: s.sample };
            let report = run_sweep(&params)?;
            match req.output {
                OutputFormat::Csv => {
                    let mut w = csv::Writer::from_writer(&mut *out);
                    for row in &report.rows {
                        w.serialize(SweepRow::from(row)).map_err(csv_err)?;
                    }
                    w.flush().map_err(io)?;
                }
                _ => json(out, &report)?,
            }
            writeln!(err, "sweep: {} configurations", report.rows.len()).map_err(io)?;
            for (check, failed) in report.failure_counts() {
                writeln!(err, "  {check}: {failed} failing").map_err(io)?;
            }
            if report.is_clean() {
                Ok(())
            } else {
                Err(Error::TheoremViolation("some sweep checks failed".into()))
            }
        }
    }
}

fn csv_err(e: csv::Error) -> Error {
    Error::Internal(format!("csv: {e}"))
}

/// Parses `args`, runs, and returns the process exit code.
pub fn main_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { EXIT_USAGE } else { 0 };
        }
    };
    let result = RunRequest::from_cli(cli).and_then(|req| run(&req, out, err));
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
