//! The `hedgecut` command line.
//!
//! Exit codes: 0 success (including refutations of claims expected to be
//! refutable), 1 input or runtime error, 2 usage error, 3 an audit check
//! expected to hold was violated.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::adjacency::{adjacency_graph, greedy_relabel};
use crate::audit::{
    audit_stream, audit_theorem, search_counterexample, AuditConfig, AuditMode, AuditVerdict,
    GeneratorParams, SearchOutcome, TheoremId,
};
use crate::connectivity::{hedge_connectivity, Method, Policy, DEFAULT_CAP, DEFAULT_SEED};
use crate::contraction::{cleanup, contract_hedge};
use crate::error::HedgeError;
use crate::format::{emit, parse, parse_multigraph};
use crate::graph::{HedgeDegreeMode, HedgeGraph, LoopConvention};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VIOLATION: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "hedgecut",
    version,
    about = "Hedge-graph connectivity, contraction, relabeling and audits"
)]
struct Cli {
    /// Accept loops and parallel edges in input files.
    #[arg(long, global = true)]
    multigraph: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Sizes, per-hedge span/rank/nullity and degree summaries.
    Stats { file: PathBuf },
    /// Global hedge connectivity with a cut certificate.
    Connectivity {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        /// Randomized trials; defaults to |L|^2 (floor(log2 |L|) + 1).
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Contracts every edge of one hedge and prints the result.
    Contract {
        file: PathBuf,
        #[arg(long)]
        hedge: String,
        /// Merge same-label parallel edges and loops afterwards.
        #[arg(long)]
        cleanup: bool,
    },
    /// Greedy relabeling so that adjacent hedges get distinct labels.
    Relabel { file: PathBuf },
    /// Prints one verdict record per audited check.
    Audit(AuditArgs),
    /// Prints a random connected instance.
    Generate {
        /// e.g. `n=4..8,extra=0..5,L=2..4`
        #[arg(long, default_value = "")]
        params: String,
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Args, Debug)]
struct AuditArgs {
    #[arg(required_unless_present = "random", conflicts_with = "random")]
    file: Option<PathBuf>,
    /// Audit random instances instead of a file.
    #[arg(long)]
    random: bool,
    /// A theorem id such as `T1_MIN_DEG_BOUND`, or `all`.
    #[arg(long, default_value = "all")]
    theorem: String,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long)]
    seed: Option<u64>,
    /// Generator ranges, e.g. `n=3..7,extra=0..4,L=1..5`.
    #[arg(long, default_value = "")]
    params: String,
    /// Stop at the first failing check per theorem instead of printing all.
    #[arg(long, requires = "random")]
    search: bool,
    #[arg(long, value_enum, default_value_t = DegreesArg::Global)]
    degrees: DegreesArg,
    #[arg(long, value_enum, default_value_t = LoopsArg::Once)]
    loops: LoopsArg,
    /// Random contraction orders per instance for the sequential sums.
    #[arg(long, default_value_t = 5)]
    orders: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum MethodArg {
    Auto,
    Brute,
    Random,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum DegreesArg {
    Global,
    Induced,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum LoopsArg {
    Once,
    Ignore,
}

enum Failure {
    Usage(String),
    Error(String),
}

impl From<HedgeError> for Failure {
    fn from(e: HedgeError) -> Self {
        match e {
            HedgeError::InfeasibleParams(_) | HedgeError::UnknownLabel(_) => Failure::Usage(e.to_string()),
            other => Failure::Error(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Error(e.to_string())
    }
}

type Outcome = std::result::Result<i32, Failure>;

/// Runs the command line `args` (including the program name), writing
/// results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let outcome = dispatch(cli, out, err);
    let _ = out.flush();
    match outcome {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "usage error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Error(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_ERROR
        }
    }
}

fn default_seed(flag: Option<u64>) -> std::result::Result<u64, Failure> {
    if let Some(seed) = flag {
        return Ok(seed);
    }
    match std::env::var("HEDGECUT_SEED") {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("HEDGECUT_SEED is not an integer: {s:?}"))),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

fn load(path: &PathBuf, multigraph: bool) -> std::result::Result<HedgeGraph, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Error(format!("{}: {e}", path.display())))?;
    let g = if multigraph {
        parse_multigraph(&text)
    } else {
        parse(&text)
    };
    g.map_err(|e| Failure::Error(format!("{}: {e}", path.display())))
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let multi = cli.multigraph;
    match cli.command {
        Command::Stats { file } => stats(&load(&file, multi)?, out),
        Command::Connectivity {
            file,
            method,
            trials,
            seed,
            cap,
        } => {
            let g = load(&file, multi)?;
            let policy = Policy {
                method: match method {
                    MethodArg::Auto => Method::Auto,
                    MethodArg::Brute => Method::Brute,
                    MethodArg::Random => Method::Random,
                },
                cap,
                trials,
                seed: default_seed(seed)?,
            };
            let cert = hedge_connectivity(&g, &policy)?;
            let join = |vs: &[usize]| vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
            writeln!(out, "lambda_h={}", cert.size())?;
            writeln!(out, "exact={}", cert.exact)?;
            writeln!(out, "method={}", cert.method)?;
            writeln!(out, "cut={}", cert.label_names(&g).join(","))?;
            writeln!(out, "sides={}|{}", join(&cert.side_a), join(&cert.side_b))?;
            Ok(EXIT_OK)
        }
        Command::Contract {
            file,
            hedge,
            cleanup: tidy,
        } => {
            let g = load(&file, multi)?;
            let mut h = contract_hedge(&g, g.require_label(&hedge)?)?;
            if tidy {
                h = cleanup(&h).0;
            }
            write!(out, "{}", emit(&h))?;
            Ok(EXIT_OK)
        }
        Command::Relabel { file } => {
            let g = load(&file, multi)?;
            let adj = adjacency_graph(&g);
            let r = greedy_relabel(&g);
            writeln!(out, "q={}", r.q())?;
            writeln!(out, "max_d_a={}", adj.max_degree())?;
            for l in g.labels() {
                writeln!(
                    out,
                    "hedge {} color={} d_a={}",
                    g.label_name(l),
                    r.color(l),
                    adj.degree(l)
                )?;
            }
            Ok(EXIT_OK)
        }
        Command::Audit(args) => audit(args, multi, out, err),
        Command::Generate { params, seed } => {
            let base = GeneratorParams::default().with_seed(default_seed(seed)?);
            let params = GeneratorParams::parse_spec(&params, &base)?;
            let g = crate::audit::random_instance(&params)?;
            write!(out, "{}", emit(&g))?;
            Ok(EXIT_OK)
        }
    }
}

fn stats(g: &HedgeGraph, out: &mut dyn Write) -> Outcome {
    let adj = adjacency_graph(g);
    let views = g.hedge_views();
    let deg = g.degree_summary();
    let (rank, nullity) = g.rank_nullity();
    writeln!(out, "n={}", g.vertex_count())?;
    writeln!(out, "m={}", g.edge_count())?;
    writeln!(out, "labels={}", g.label_count())?;
    for h in &views {
        writeln!(
            out,
            "hedge {} size={} span={} rank={} nullity={} d_a={}",
            g.label_name(h.label),
            h.size(),
            h.span(),
            h.rank(),
            h.nullity(),
            adj.degree(h.label)
        )?;
    }
    writeln!(out, "delta_l={}", deg.min)?;
    writeln!(out, "Delta_l={}", deg.max)?;
    writeln!(out, "max_d_a={}", adj.max_degree())?;
    writeln!(out, "rank={rank}")?;
    writeln!(out, "nullity={nullity}")?;
    let covered: usize = views.iter().map(|h| h.vertices.len()).sum();
    let spans: usize = views.iter().map(|h| h.span()).sum();
    writeln!(out, "sum_hedge_vertices={covered}")?;
    writeln!(out, "sum_label_degree={}", deg.total)?;
    writeln!(out, "sum_span={spans}")?;
    writeln!(
        out,
        "span_upper={}",
        2 * g.edge_count() as i64 - g.vertex_count() as i64 + 1
    )?;
    writeln!(
        out,
        "sum_static_rank={}",
        views.iter().map(|h| h.rank()).sum::<usize>()
    )?;
    writeln!(
        out,
        "sum_static_nullity={}",
        views.iter().map(|h| h.nullity()).sum::<usize>()
    )?;
    Ok(EXIT_OK)
}

fn audit(args: AuditArgs, multi: bool, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let ids: Vec<TheoremId> = if args.theorem.eq_ignore_ascii_case("all") {
        TheoremId::ALL.to_vec()
    } else {
        vec![args
            .theorem
            .parse()
            .map_err(|e: HedgeError| Failure::Usage(e.to_string()))?]
    };
    let seed = default_seed(args.seed)?;
    let config = AuditConfig {
        mode: AuditMode {
            degrees: match args.degrees {
                DegreesArg::Global => HedgeDegreeMode::Global,
                DegreesArg::Induced => HedgeDegreeMode::Induced,
            },
            loops: match args.loops {
                LoopsArg::Once => LoopConvention::CountOnce,
                LoopsArg::Ignore => LoopConvention::Ignore,
            },
        },
        orders: args.orders,
        seed,
    };

    let mut tally = Tally::default();
    if let Some(file) = &args.file {
        let g = load(file, multi)?;
        for &id in &ids {
            for v in audit_theorem(id, &g, &config)? {
                tally.emit(&v, out)?;
            }
        }
    } else {
        let params = GeneratorParams::parse_spec(&args.params, &GeneratorParams::default().with_seed(seed))?;
        if args.trials == 0 {
            return Err(Failure::Usage("--trials must be at least 1".into()));
        }
        if args.search {
            for &id in &ids {
                match search_counterexample(id, &params, args.trials, &config)? {
                    SearchOutcome::Violation { trial, verdict } => {
                        writeln!(out, "# {id}: first violation at trial {trial}")?;
                        tally.emit(&verdict, out)?;
                    }
                    SearchOutcome::Exhausted { trials, checks } => {
                        tally.checks += checks;
                        writeln!(out, "# {id}: exhausted trials={trials} checks={checks}")?;
                    }
                }
            }
        } else {
            for (_, verdicts) in audit_stream(&ids, &params, args.trials, &config)? {
                for v in &verdicts {
                    tally.emit(v, out)?;
                }
            }
        }
    }
    writeln!(
        err,
        "checks={} violated={} violated_provable={}",
        tally.checks, tally.violated, tally.anomalies
    )?;
    Ok(if tally.anomalies > 0 {
        EXIT_VIOLATION
    } else {
        EXIT_OK
    })
}

#[derive(Default)]
struct Tally {
    checks: usize,
    violated: usize,
    anomalies: usize,
}

impl Tally {
    fn emit(&mut self, v: &AuditVerdict, out: &mut dyn Write) -> std::io::Result<()> {
        self.checks += 1;
        self.violated += usize::from(!v.holds);
        self.anomalies += usize::from(v.is_anomaly());
        writeln!(out, "{v}")
    }
}
