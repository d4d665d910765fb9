use std::process::ExitCode;

use affine_chars::formulas::{
    deligne_window, list_deligne, q_dimension_direct, q_dimension_graded, q_dimension_specialized,
    CharacterRequest, FormulaId, Side,
};
use affine_chars::lie::{RootSystem, RootType};
use affine_chars::linalg::Q;
use affine_chars::series::{to_json, to_pretty, to_tsv, AffineWeight};
use affine_chars::verify::{acceptance_suite, random_properties, Check, CheckReport};
use affine_chars::Error;
use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "affine-chars",
    version,
    about = "Exact truncated characters of negative-level affine modules"
)]
struct Cli {
    /// Worker threads; defaults to the JOBS environment variable, then to all cores.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a numerator or character to a given height.
    Compute(ComputeArgs),
    /// Compute the q-dimension along one or more paths.
    Qdim(QdimArgs),
    /// Run a named identity check, `random`, or `all`.
    Verify(VerifyArgs),
    /// List the weights of level k satisfying the Deligne-series conditions.
    ListDeligne(ListArgs),
}

#[derive(Args, Clone)]
struct Algebra {
    #[arg(long = "type", value_parser = parse_type)]
    kind: RootType,
    #[arg(long)]
    rank: usize,
}

#[derive(Args, Clone)]
struct RequestArgs {
    #[command(flatten)]
    algebra: Algebra,
    #[arg(long, value_parser = parse_formula)]
    formula: FormulaId,
    #[arg(long, default_value_t = 0)]
    s: u32,
    /// Affine labels m_0,...,m_l.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    weight: Option<Vec<i64>>,
    #[arg(long)]
    allow_large_weyl: bool,
}

impl RequestArgs {
    fn request(&self) -> CharacterRequest {
        let mut req = CharacterRequest::new(self.formula, self.algebra.kind, self.algebra.rank)
            .with_s(self.s);
        if let Some(w) = &self.weight {
            req = req.with_labels(w.clone());
        }
        req.allow_large_weyl = self.allow_large_weyl;
        req
    }
}

#[derive(Copy, Clone, ValueEnum)]
enum Format {
    Json,
    Tsv,
    Pretty,
}

#[derive(Args)]
struct ComputeArgs {
    #[command(flatten)]
    req: RequestArgs,
    /// Coefficient of delta added to the highest weight.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    delta: String,
    #[arg(long)]
    order: u32,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Output the numerator R_hat ch instead of the character.
    #[arg(long, conflicts_with = "character")]
    numerator: bool,
    #[arg(long)]
    character: bool,
}

#[derive(Copy, Clone, PartialEq, ValueEnum)]
enum Path {
    Direct,
    Specialized,
    Graded,
    All,
}

#[derive(Args)]
struct QdimArgs {
    #[command(flatten)]
    req: RequestArgs,
    #[arg(long)]
    order: u32,
    #[arg(long, value_enum, default_value = "all")]
    path: Path,
}

#[derive(Args)]
struct VerifyArgs {
    /// Check name, `random` for the seeded property checks, or `all`.
    check: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 0)]
    s: u32,
    #[arg(long, value_parser = parse_side, default_value = "first")]
    side: Side,
    #[arg(long)]
    order: Option<u32>,
    #[arg(long = "type", value_parser = parse_type, default_value = "D")]
    kind: RootType,
    #[arg(long, default_value_t = 4)]
    rank: usize,
    #[arg(long, allow_hyphen_values = true, default_value_t = -1)]
    k: i64,
    #[arg(long, default_value_t = 3)]
    qdim_order: u32,
    /// Affine labels m_0,...,m_l for the single-weight checks.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    weight: Option<Vec<i64>>,
    /// Rows of the omega matrix, e.g. `1,0;0,1`.
    #[arg(long)]
    omega: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1000)]
    cases: u32,
}

#[derive(Args)]
struct ListArgs {
    #[command(flatten)]
    algebra: Algebra,
    #[arg(long, allow_hyphen_values = true)]
    k: i64,
    /// Largest (Lambda_bar | theta) scanned; defaults to the series window.
    #[arg(long)]
    max_theta: Option<i64>,
}

fn parse_type(s: &str) -> Result<RootType, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_formula(s: &str) -> Result<FormulaId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_side(s: &str) -> Result<Side, String> {
    match s {
        "first" => Ok(Side::First),
        "last" => Ok(Side::Last),
        _ => Err(format!("expected first or last, got {s:?}")),
    }
}

/// A failed precondition or usage error, reported with exit code 2.
struct Usage(anyhow::Error);

impl<E: Into<anyhow::Error>> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.into())
    }
}

fn compute(a: &ComputeArgs) -> Result<bool, Usage> {
    let req = a.req.request();
    let series = if a.numerator {
        req.numerator(a.order)?
    } else {
        req.character(a.order)?
    };
    let delta: Q = a
        .delta
        .parse()
        .map_err(|e| anyhow!("bad --delta {:?}: {e}", a.delta))?;
    let base = series.base().clone();
    let series = series.with_base(AffineWeight::new(
        base.fin.clone(),
        base.level,
        base.delta + delta,
    ));
    match a.format {
        Format::Json => println!("{}", to_json(&series)),
        Format::Tsv => print!("{}", to_tsv(&series)),
        Format::Pretty => print!("{}", to_pretty(&series)),
    }
    Ok(true)
}

fn qdim(a: &QdimArgs) -> Result<bool, Usage> {
    let req = a.req.request();
    let mut results = Vec::new();
    if matches!(a.path, Path::Direct | Path::All) {
        results.push(("direct", q_dimension_direct(&req, a.order)?));
    }
    if matches!(a.path, Path::Specialized | Path::All) {
        results.push(("specialized", q_dimension_specialized(&req, a.order)?));
    }
    if matches!(a.path, Path::Graded | Path::All) {
        results.push(("graded", q_dimension_graded(&req, a.order)?));
    }
    for (name, q) in &results {
        println!("{name}\t{q}");
    }
    Ok(results.windows(2).all(|w| w[0].1 == w[1].1))
}

fn parse_omega(text: &str) -> anyhow::Result<Vec<Vec<i64>>> {
    text.split(';')
        .map(|row| {
            row.split(',')
                .map(|x| {
                    x.trim()
                        .parse::<i64>()
                        .with_context(|| format!("bad omega entry {x:?}"))
                })
                .collect()
        })
        .collect()
}

fn checks_for(a: &VerifyArgs) -> Result<Vec<Check>, Usage> {
    let need_n = || a.n.ok_or_else(|| anyhow!("check {} needs --n", a.check));
    let order = |default: u32| a.order.unwrap_or(default);
    // The spo and twisted checks are indexed by n' = n/2.
    let n_prime = || match need_n()? {
        n if n % 2 == 0 => Ok(n / 2),
        n => Err(anyhow!("check {} needs an even --n, got {n}", a.check)),
    };
    Ok(vec![match a.check.as_str() {
        "superdenominator-sl" => Check::SuperdenominatorSl {
            n: need_n()?,
            order: order(5),
        },
        "superdenominator-spo" => Check::SuperdenominatorSpo {
            n_prime: n_prime()?,
            order: order(4),
        },
        "superdenominator-assembly" => Check::SuperdenominatorAssembly {
            n: need_n()?,
            order: order(4),
        },
        "sl-fock" => Check::SlFock {
            n: need_n()?,
            s: a.s,
            side: a.side,
            order: order(4),
        },
        "sl2-two-term" => Check::Sl2TwoTerm { s: a.s },
        "sp-restriction" => Check::SpRestriction {
            n: need_n()?,
            s: a.s,
            order: order(3),
        },
        "sp-sigma" => Check::SpSigma {
            n: need_n()?,
            order: order(3),
        },
        "sp-parity-rewriting" => Check::SpParityRewriting {
            n: need_n()?,
            order: order(4),
        },
        "twisted-denominator" => Check::TwistedDenominator {
            n_prime: n_prime()?,
            order: order(4),
        },
        "bracket-complement" => Check::BracketComplement {
            n_prime: n_prime()?,
            order: order(4),
        },
        "omega-reflection" => {
            let omega = parse_omega(
                a.omega
                    .as_deref()
                    .ok_or_else(|| anyhow!("omega-reflection needs --omega"))?,
            )?;
            Check::OmegaReflection {
                n_prime: n_prime()?,
                omega,
                order: order(3),
            }
        }
        "deligne" => Check::Deligne {
            kind: a.kind,
            rank: a.rank,
            k: a.k,
            order: order(3),
            qdim_order: a.qdim_order,
        },
        "deligne-weight" => Check::DeligneWeight {
            kind: a.kind,
            rank: a.rank,
            labels: a
                .weight
                .clone()
                .ok_or_else(|| anyhow!("deligne-weight needs --weight"))?,
            order: order(3),
            qdim_order: a.qdim_order,
        },
        "deligne-derivative" => Check::DeligneDerivative {
            kind: a.kind,
            rank: a.rank,
            labels: a
                .weight
                .clone()
                .ok_or_else(|| anyhow!("deligne-derivative needs --weight"))?,
            order: order(3),
        },
        "all" => {
            return Ok(acceptance_suite()
                .into_iter()
                .flat_map(|(_, c)| c)
                .collect())
        }
        other => return Err(anyhow!("unknown check {other:?}").into()),
    }])
}

fn verify(a: &VerifyArgs) -> Result<bool, Usage> {
    let mut reports: Vec<CheckReport> = Vec::new();
    if a.check != "random" {
        for check in checks_for(a)? {
            let r = check.run()?;
            println!("{r}");
            reports.push(r);
        }
    }
    if a.check == "random" || a.check == "all" {
        for r in random_properties(a.seed, a.cases)? {
            println!("{r}");
            reports.push(r);
        }
    }
    Ok(reports.iter().all(|r| r.passed))
}

fn list(a: &ListArgs) -> Result<bool, Usage> {
    let rs = RootSystem::new(a.algebra.kind, a.algebra.rank)?;
    let cap = match a.max_theta.or_else(|| deligne_window(&rs)) {
        Some(c) => c,
        None => {
            return Err(anyhow!(
                "{} is not in the Deligne series; pass --max-theta",
                rs.label()
            )
            .into())
        }
    };
    for w in list_deligne(&rs, a.k, cap)? {
        let labels: Vec<String> = w.lambda.labels(&rs).iter().map(|m| m.to_string()).collect();
        println!("{}\talpha={}", labels.join(","), w.alpha);
    }
    Ok(true)
}

fn run(cli: &Cli) -> Result<bool, Usage> {
    match &cli.command {
        Command::Compute(a) => compute(a),
        Command::Qdim(a) => qdim(a),
        Command::Verify(a) => verify(a),
        Command::ListDeligne(a) => list(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let jobs = cli
        .jobs
        .or_else(|| std::env::var("JOBS").ok().and_then(|j| j.parse().ok()));
    if let Some(j) = jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
